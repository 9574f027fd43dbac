//! Brute-force reference computations.
//!
//! Nothing here uses the combinatorial rank formula: ranks come from Gröbner
//! bases of the expanded distraction plus Euler operators, or from graded
//! Hilbert functions of face rings.

mod buchberger;
mod hilbert;
mod poly;

use std::collections::BTreeSet;

use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub use buchberger::{buchberger_dimension, groebner_basis, standard_monomial_count};
pub use hilbert::{graded_artinian_dimension, hilbert_function};
pub use poly::{Mono, RationalPolynomial};

use crate::distraction::{catalog_box, components, degree_with, exponent_complex_lattice};
use crate::error::Result;
use crate::grading::{degree_of_point, euler_operators, GradingMatrix, Parameter};
use crate::ideal::MonomialIdeal;
use crate::linalg::rat;
use crate::par;
use crate::simplicial::SimplicialComplex;

/// Each `[θ]_u` multiplied out.
pub fn expand_distraction(ideal: &MonomialIdeal) -> Vec<RationalPolynomial> {
    let n = ideal.n_vars();
    ideal
        .generators()
        .iter()
        .map(|u| {
            let mut p = RationalPolynomial::constant(n, rat(1));
            for (i, &e) in u.entries().iter().enumerate() {
                for j in 0..e {
                    let mut c = vec![rat(0); n];
                    c[i] = rat(1);
                    p = p.mul(&RationalPolynomial::linear(&c, rat(-i64::from(j))));
                }
            }
            p
        })
        .collect()
}

/// The Euler operators `E_i − β_i` as polynomials.
pub fn euler_polynomials(a: &GradingMatrix, beta: &Parameter) -> Result<Vec<RationalPolynomial>> {
    Ok(euler_operators(a, beta)?
        .forms()
        .into_iter()
        .map(|(c, k)| RationalPolynomial::linear(&c.iter().map(|&x| rat(x)).collect::<Vec<_>>(), k))
        .collect())
}

/// `dim ℚ[θ]/(Ĩ + ⟨E − β⟩)` by Buchberger.
pub fn rank_oracle(ideal: &MonomialIdeal, a: &GradingMatrix, beta: &Parameter) -> Result<usize> {
    let mut gens = expand_distraction(ideal);
    gens.extend(euler_polynomials(a, beta)?);
    buchberger_dimension(&gens)
}

/// `dim ℚ[θ]/(I_Δ + ⟨E⟩)` for the face ring of `Δ` and homogeneous forms `E`.
pub fn complex_artinian_dimension(cx: &SimplicialComplex, forms: &[Vec<i64>]) -> Result<usize> {
    match cx.stanley_reisner_ideal() {
        Some(j) => graded_artinian_dimension(&j, forms),
        None => Ok(hilbert_function(cx.n_vertices(), &[], forms)?.iter().sum()),
    }
}

/// The rank as a sum of graded face-ring dimensions over the exponents.
pub fn rank_oracle_graded(ideal: &MonomialIdeal, a: &GradingMatrix, beta: &Parameter) -> Result<usize> {
    let comps = components(ideal);
    let forms = a.rows().to_vec();
    let mut total = 0;
    for b in crate::rank::exponents_of_with(&comps, a, beta)? {
        let cx = crate::distraction::exponent_complex_with(ideal.n_vars(), &comps, &b)?;
        total += complex_artinian_dimension(&cx, &forms)?;
    }
    Ok(total)
}

/// One parameter with a rank jump.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExceptionalEntry {
    pub beta: Parameter,
    pub rank: usize,
    pub jump: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub degree: usize,
    /// Distinct candidate parameters `A·b` tested (excluding the generic one).
    pub candidates: usize,
    pub generic_beta: Parameter,
    pub generic_rank: usize,
    pub exceptional: Vec<ExceptionalEntry>,
}

/// Oracle ranks at `β = A·b` for every lattice point `b` of the catalog box on
/// the distraction variety, plus one random rational `β`. Reports the
/// parameters whose rank exceeds the degree.
///
/// This probes the exceptional set only at finitely many parameters.
pub fn exceptional_scan(ideal: &MonomialIdeal, a: &GradingMatrix, seed: u64) -> Result<ScanReport> {
    let n = ideal.n_vars();
    let comps = components(ideal);
    let deg = degree_with(ideal.krull_dimension(), &comps);
    let betas: BTreeSet<Parameter> = catalog_box(ideal)?
        .into_iter()
        .filter(|b| exponent_complex_lattice(n, &comps, b).is_some())
        .map(|b| degree_of_point(a, &b.iter().map(|&x| rat(x)).collect::<Vec<BigRational>>()))
        .collect();
    let betas: Vec<Parameter> = betas.into_iter().collect();
    let ranks = par::map(&betas, |beta| rank_oracle(ideal, a, beta));
    let mut exceptional = Vec::new();
    for (beta, r) in betas.iter().zip(ranks) {
        let r = r?;
        if r > deg {
            exceptional.push(ExceptionalEntry { beta: beta.clone(), rank: r, jump: r - deg });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let generic_beta = Parameter::random_generic(a.d(), &mut rng);
    let generic_rank = rank_oracle(ideal, a, &generic_beta)?;
    if generic_rank > deg {
        exceptional.push(ExceptionalEntry { beta: generic_beta.clone(), rank: generic_rank, jump: generic_rank - deg });
    }
    Ok(ScanReport { degree: deg, candidates: betas.len(), generic_beta, generic_rank, exceptional })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_rows(rows).unwrap()
    }

    fn small() -> MonomialIdeal {
        ideal(&[&[3, 1], &[2, 2]])
    }

    #[test]
    fn expansion() {
        let shown = |i: MonomialIdeal| expand_distraction(&i)[0].to_string();
        assert_eq!(shown(ideal(&[&[2]])), "θ1^2 - θ1");
        assert_eq!(shown(ideal(&[&[3, 1]])), "θ1^3*θ2 - 3*θ1^2*θ2 + 2*θ1*θ2");
        assert_eq!(shown(ideal(&[&[1, 1, 0]])), "θ1*θ2");
    }

    #[test]
    fn small_example_ranks() {
        let a = GradingMatrix::new(vec![vec![1, 1]]).unwrap();
        assert_eq!(rank_oracle(&small(), &a, &"3".parse().unwrap()).unwrap(), 4);
        assert_eq!(rank_oracle(&small(), &a, &"1/2".parse().unwrap()).unwrap(), 3);
        assert_eq!(rank_oracle_graded(&small(), &a, &"3".parse().unwrap()).unwrap(), 4);
    }

    #[test]
    fn small_example_scan() {
        let a = GradingMatrix::new(vec![vec![1, 1]]).unwrap();
        let scan = exceptional_scan(&small(), &a, 1).unwrap();
        assert_eq!(scan.degree, 3);
        assert_eq!(scan.generic_rank, 3);
        assert!(scan.exceptional.contains(&ExceptionalEntry { beta: Parameter::from_ints(&[3]), rank: 4, jump: 1 }));
    }

    #[test]
    fn main_example_generic_rank_is_degree() {
        let i = ideal(&[&[2, 2, 1], &[1, 2, 2]]);
        let a = crate::grading::generate_generic(3, 2, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..2 {
            let beta = Parameter::random_generic(2, &mut rng);
            assert_eq!(rank_oracle(&i, &a, &beta).unwrap(), 4);
        }
    }
}
