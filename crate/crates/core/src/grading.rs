//! Grading matrices, parameters and Euler operators.
//!
//! A grading matrix is a `d × n` integer matrix whose columns span `ℤ^d`, lie in
//! an open half-space (pointed cone) and are in general position (every `d`
//! columns are independent).

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{det_bigint, rat, smith_invariant_factors};
use crate::simplicial::VertexSet;

pub const MAX_GENERATION_ATTEMPTS: usize = 1000;

/// One failed condition reported by [`validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum Violation {
    Shape { message: String },
    /// Columns span a proper sublattice (or a lower-rank lattice).
    Lattice { invariant_factors: Vec<String> },
    /// No `w` with `w·a_j ≥ 1` for all columns.
    Pointedness,
    /// 1-based column sets with vanishing maximal minor.
    Genericity { singular_columns: Vec<Vec<usize>> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Shape { message } => write!(f, "shape: {message}"),
            Violation::Lattice { invariant_factors } => write!(
                f,
                "lattice: columns do not generate Z^d (invariant factors [{}])",
                invariant_factors.join(",")
            ),
            Violation::Pointedness => write!(f, "pointedness: no w with w·a_j >= 1 for every column"),
            Violation::Genericity { singular_columns } => {
                let cols: Vec<String> = singular_columns
                    .iter()
                    .map(|c| format!("{{{}}}", c.iter().join(",")))
                    .collect();
                write!(f, "genericity: singular maximal minors on columns {}", cols.join(" "))
            }
        }
    }
}

/// Exact feasibility of `{w : c·w ≥ r}` by Fourier–Motzkin elimination.
fn fm_feasible(mut rows: Vec<(Vec<BigRational>, BigRational)>, vars: usize) -> bool {
    for k in 0..vars {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for (c, r) in rows {
            if c[k].is_positive() {
                pos.push((c, r));
            } else if c[k].is_negative() {
                neg.push((c, r));
            } else {
                rest.push((c, r));
            }
        }
        for (pc, pr) in &pos {
            for (nc, nr) in &neg {
                let (sp, sn) = (pc[k].recip(), -nc[k].recip());
                let c: Vec<BigRational> =
                    pc.iter().zip(nc).map(|(a, b)| a * &sp + b * &sn).collect();
                let r = pr * &sp + nr * &sn;
                rest.push((c, r));
            }
        }
        rest.sort();
        rest.dedup();
        rows = rest;
    }
    rows.iter().all(|(_, r)| !r.is_positive())
}

/// Check the three grading conditions, reporting each failure separately.
pub fn validate(rows: &[Vec<i64>]) -> std::result::Result<(), Vec<Violation>> {
    let d = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    let shape = |message: String| Err(vec![Violation::Shape { message }]);
    if d == 0 || n == 0 {
        return shape("matrix must have at least one row and one column".into());
    }
    if let Some(i) = rows.iter().position(|r| r.len() != n) {
        return shape(format!("row {} has {} entries, expected {n}", i + 1, rows[i].len()));
    }
    if n < d {
        return shape(format!("need n >= d, got d={d}, n={n}"));
    }
    let big: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut out = Vec::new();

    let inv = smith_invariant_factors(&big);
    if inv.len() != d || inv.iter().any(|x| !x.is_one()) {
        out.push(Violation::Lattice { invariant_factors: inv.iter().map(|x| x.to_string()).collect() });
    }

    let cons = (0..n)
        .map(|j| ((0..d).map(|i| rat(rows[i][j])).collect(), BigRational::one()))
        .collect();
    if !fm_feasible(cons, d) {
        out.push(Violation::Pointedness);
    }

    let singular: Vec<Vec<usize>> = (0..n)
        .combinations(d)
        .filter(|cols| {
            let minor: Vec<Vec<BigInt>> =
                big.iter().map(|r| cols.iter().map(|&j| r[j].clone()).collect()).collect();
            det_bigint(&minor).is_zero()
        })
        .map(|cols| cols.into_iter().map(|j| j + 1).collect())
        .collect();
    if !singular.is_empty() {
        out.push(Violation::Genericity { singular_columns: singular });
    }

    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

/// A validated `d × n` grading matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GradingMatrix {
    rows: Vec<Vec<i64>>,
}

impl GradingMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        validate(&rows).map_err(|v| {
            Error::validation(format!(
                "invalid grading matrix: {}",
                v.iter().map(|x| x.to_string()).join("; ")
            ))
        })?;
        Ok(GradingMatrix { rows })
    }

    /// Parse the matrix file format: `d n` on the first line, then `d` rows of
    /// `n` integers.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let ints = |k: usize, l: &str| -> Result<Vec<i64>> {
            l.split_whitespace()
                .map(|t| t.parse::<i64>().map_err(|_| Error::validation(format!("line {k}: bad integer '{t}'"))))
                .collect()
        };
        let (k, header) = lines.next().ok_or_else(|| Error::validation("empty matrix file"))?;
        let dims = ints(k, header)?;
        let [d, n] = dims[..] else {
            return Err(Error::validation(format!("line {k}: expected 'd n'")));
        };
        if d < 1 || n < 1 {
            return Err(Error::validation(format!("line {k}: d and n must be positive")));
        }
        let mut rows = Vec::new();
        for (k, l) in lines {
            let r = ints(k, l)?;
            if r.len() != n as usize {
                return Err(Error::validation(format!("line {k}: expected {n} entries, found {}", r.len())));
            }
            rows.push(r);
        }
        if rows.len() != d as usize {
            return Err(Error::validation(format!("expected {d} rows, found {}", rows.len())));
        }
        Self::new(rows)
    }

    pub fn to_file_string(&self) -> String {
        let mut s = format!("{} {}\n", self.d(), self.n());
        for r in &self.rows {
            s.push_str(&r.iter().join(" "));
            s.push('\n');
        }
        s
    }

    pub fn d(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.rows[0].len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Rational `d × |σ|` submatrix on the columns in `sigma`.
    pub fn columns_rational(&self, sigma: VertexSet) -> Vec<Vec<BigRational>> {
        self.rows.iter().map(|r| sigma.indices().map(|j| rat(r[j])).collect()).collect()
    }
}

impl fmt::Display for GradingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| r.iter().join(" ")).collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// Deterministic random grading matrix with first row all ones.
pub fn generate_generic(n: usize, d: usize, seed: u64) -> Result<GradingMatrix> {
    if d < 1 || d > n {
        return Err(Error::validation(format!("need 1 <= d <= n, got d={d}, n={n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hi = 4 * n as i64;
    for _ in 0..MAX_GENERATION_ATTEMPTS {
        let mut rows = vec![vec![1i64; n]];
        for _ in 1..d {
            rows.push((0..n).map(|_| rng.gen_range(1..=hi)).collect());
        }
        if validate(&rows).is_ok() {
            return Ok(GradingMatrix { rows });
        }
    }
    Err(Error::Internal(format!(
        "no valid {d}x{n} grading matrix after {MAX_GENERATION_ATTEMPTS} attempts (seed {seed})"
    )))
}

/// A rational parameter vector `β`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Parameter(pub Vec<BigRational>);

impl Parameter {
    pub fn from_ints(v: &[i64]) -> Self {
        Parameter(v.iter().map(|&x| rat(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Random rational vector with large numerators and a shared denominator.
    pub fn random_generic<R: Rng>(d: usize, rng: &mut R) -> Self {
        let den = BigInt::from(rng.gen_range(1_000_003i64..2_000_000));
        Parameter(
            (0..d)
                .map(|_| BigRational::new(BigInt::from(rng.gen_range(-1_000_000_000i64..1_000_000_000)), den.clone()))
                .collect(),
        )
    }

    pub fn strings(&self) -> Vec<String> {
        self.0.iter().map(|x| x.to_string()).collect()
    }
}

impl FromStr for Parameter {
    type Err = Error;

    /// Comma-separated rationals, e.g. `3` or `1/2,0`.
    fn from_str(s: &str) -> Result<Self> {
        let v = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<BigRational>()
                    .ok()
                    .filter(|_| !t.is_empty())
                    .ok_or_else(|| Error::validation(format!("bad rational '{t}' in parameter")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Parameter(v))
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.strings().join(","))
    }
}

impl Serialize for Parameter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.strings().serialize(s)
    }
}

/// The Euler operators `E_i − β_i`, `E_i = Σ_j a_ij θ_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerSystem {
    pub a: GradingMatrix,
    pub beta: Parameter,
}

impl EulerSystem {
    /// Each operator as (integer coefficients on θ, constant term `−β_i`).
    pub fn forms(&self) -> Vec<(Vec<i64>, BigRational)> {
        self.a.rows().iter().zip(&self.beta.0).map(|(r, b)| (r.clone(), -b.clone())).collect()
    }
}

impl fmt::Display for EulerSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: Vec<String> = self
            .forms()
            .iter()
            .map(|(c, k)| {
                let mut s = String::new();
                for (j, &x) in c.iter().enumerate().filter(|(_, x)| **x != 0) {
                    let sign = if x < 0 { "-" } else if s.is_empty() { "" } else { "+" };
                    let mag = if x.abs() == 1 { String::new() } else { x.abs().to_string() };
                    s.push_str(&format!("{sign}{mag}θ{}", j + 1));
                }
                if k.is_positive() {
                    s.push_str(&format!("+{k}"));
                } else if k.is_negative() {
                    s.push_str(&k.to_string());
                }
                s
            })
            .collect();
        write!(f, "{{{}}}", shown.join(", "))
    }
}

pub fn euler_operators(a: &GradingMatrix, beta: &Parameter) -> Result<EulerSystem> {
    if beta.len() != a.d() {
        return Err(Error::validation(format!(
            "parameter has {} entries but the grading matrix has {} rows",
            beta.len(),
            a.d()
        )));
    }
    Ok(EulerSystem { a: a.clone(), beta: beta.clone() })
}

/// `β = A·b`.
pub fn degree_of_point(a: &GradingMatrix, b: &[BigRational]) -> Parameter {
    Parameter(
        a.rows()
            .iter()
            .map(|r| r.iter().zip(b).fold(BigRational::zero(), |acc, (&x, y)| acc + rat(x) * y))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn validate_examples() {
        assert!(validate(&[vec![1, 1]]).is_ok());
        assert_eq!(validate(&[vec![1, -1]]), Err(vec![Violation::Pointedness]));
        let err = validate(&[vec![1, 1, 2], vec![1, 1, 3]]).unwrap_err();
        assert_eq!(err, vec![Violation::Genericity { singular_columns: vec![vec![1, 2]] }]);
        let err = validate(&[vec![2, 4]]).unwrap_err();
        assert!(matches!(err[..], [Violation::Lattice { .. }]));
        assert!(matches!(validate(&[vec![1], vec![1]]).unwrap_err()[..], [Violation::Shape { .. }]));
    }

    #[test]
    fn violations_reported_separately() {
        // [2 -2]: index-2 lattice, not pointed, minors fine
        let err = validate(&[vec![2, -2]]).unwrap_err();
        assert_eq!(err.len(), 2);
        assert!(matches!(err[0], Violation::Lattice { .. }));
        assert_eq!(err[1], Violation::Pointedness);
    }

    #[test]
    fn pointedness_in_two_dimensions() {
        assert!(validate(&[vec![1, 0, 1], vec![0, 1, 1]]).is_ok());
        // a1 + a2 + a3 = 0
        let err = validate(&[vec![1, 0, -1], vec![0, 1, -1]]).unwrap_err();
        assert_eq!(err, vec![Violation::Pointedness]);
    }

    #[test]
    fn generation() {
        for seed in 0..5 {
            assert_eq!(generate_generic(2, 1, seed).unwrap().rows(), &[vec![1, 1]]);
        }
        let a = generate_generic(5, 2, 7).unwrap();
        assert!(validate(a.rows()).is_ok());
        let a = generate_generic(4, 3, 1).unwrap();
        for cols in (0..4).combinations(3) {
            let m: Vec<Vec<BigInt>> =
                a.rows().iter().map(|r| cols.iter().map(|&j| BigInt::from(r[j])).collect()).collect();
            assert!(!det_bigint(&m).is_zero());
        }
        assert_eq!(generate_generic(6, 3, 11).unwrap(), generate_generic(6, 3, 11).unwrap());
    }

    #[test]
    fn euler_and_degree() {
        let a = GradingMatrix::new(vec![vec![1, 1]]).unwrap();
        let e = euler_operators(&a, &"3".parse().unwrap()).unwrap();
        assert_eq!(e.to_string(), "{θ1+θ2-3}");
        assert_eq!(euler_operators(&a, &"0".parse().unwrap()).unwrap().to_string(), "{θ1+θ2}");
        let id = GradingMatrix::new(vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(euler_operators(&id, &"1/2,2".parse().unwrap()).unwrap().to_string(), "{θ1-1/2, θ2-2}");
        assert!(euler_operators(&a, &"1,2".parse().unwrap()).is_err());
        assert_eq!(degree_of_point(&a, &q(&[2, 1])), Parameter::from_ints(&[3]));
        assert_eq!(degree_of_point(&a, &q(&[0, 0])), Parameter::from_ints(&[0]));
        assert_eq!(degree_of_point(&a, &q(&[1, 2])), Parameter::from_ints(&[3]));
    }

    #[test]
    fn parse_matrix_file() {
        let a = GradingMatrix::parse("2 3\n1 1 1\n0 1 2\n").unwrap();
        assert_eq!(a.d(), 2);
        assert_eq!(GradingMatrix::parse(&a.to_file_string()).unwrap(), a);
        assert!(GradingMatrix::parse("1 2\n1 x\n").unwrap_err().to_string().contains("line 2"));
        assert!(GradingMatrix::parse("2 2\n1 1\n").is_err());
        assert!(GradingMatrix::parse("1 2\n1 -1\n").is_err());
    }

    #[test]
    fn parameter_parsing() {
        let p: Parameter = "1/2, 0".parse().unwrap();
        assert_eq!(p.strings(), vec!["1/2", "0"]);
        assert!("1/0".parse::<Parameter>().is_err());
        assert!("a".parse::<Parameter>().is_err());
        assert!("".parse::<Parameter>().is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn generated_matrices_validate(n in 2usize..=6, d in 1usize..=3, seed in any::<u64>()) {
                prop_assume!(d <= n);
                let a = generate_generic(n, d, seed).unwrap();
                prop_assert!(validate(a.rows()).is_ok());
                // every σ with |σ| ≤ d has full column rank
                for mask in 1u64..(1 << n) {
                    let s = VertexSet(mask);
                    if s.len() <= d {
                        prop_assert_eq!(crate::linalg::rank(&a.columns_rational(s)), s.len());
                    }
                }
            }

            #[test]
            fn degree_of_point_is_linear(b in prop::collection::vec(-20i64..20, 4), c in prop::collection::vec(-20i64..20, 4), seed in 0u64..50) {
                let a = generate_generic(4, 2, seed).unwrap();
                let sum: Vec<i64> = b.iter().zip(&c).map(|(x, y)| x + y).collect();
                let lhs = degree_of_point(&a, &q(&sum));
                let (pb, pc) = (degree_of_point(&a, &q(&b)), degree_of_point(&a, &q(&c)));
                let rhs: Vec<BigRational> = pb.0.iter().zip(&pc.0).map(|(x, y)| x + y).collect();
                prop_assert_eq!(lhs.0, rhs);
            }
        }
    }
}
