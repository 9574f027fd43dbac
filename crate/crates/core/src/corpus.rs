//! Seeded random corpora for cross-checking the rank formula against the
//! oracle.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::distraction::exponent_catalog;
use crate::error::{Error, Result};
use crate::grading::{degree_of_point, generate_generic, GradingMatrix, Parameter};
use crate::ideal::{ExponentVector, MonomialIdeal};
use crate::linalg::rat;
use crate::oracle::rank_oracle;
use crate::par;
use crate::rank::{rank_general, rank_general_spectral};

/// Bounds for random ideals: `2 ≤ n ≤ max_vars`, exponents `≤ max_exponent`,
/// `1..=max_gens` generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusSpec {
    pub max_vars: usize,
    pub max_exponent: u32,
    pub max_gens: usize,
    pub count: usize,
}

impl std::str::FromStr for CorpusSpec {
    type Err = Error;

    /// `"n,maxdeg,maxgens,count"`.
    fn from_str(s: &str) -> Result<Self> {
        let v: Vec<usize> = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::validation(format!("bad corpus spec '{s}', expected n,maxdeg,maxgens,count")))?;
        let [max_vars, max_exponent, max_gens, count] = v[..] else {
            return Err(Error::validation(format!("corpus spec '{s}' needs four fields")));
        };
        if !(2..=64).contains(&max_vars) || max_exponent == 0 || max_gens == 0 {
            return Err(Error::validation("corpus spec needs 2 <= n <= 64, maxdeg >= 1, maxgens >= 1"));
        }
        Ok(CorpusSpec { max_vars, max_exponent: max_exponent as u32, max_gens, count })
    }
}

/// Random ideals of positive Krull dimension (Artinian draws are resampled).
pub fn random_ideals(spec: &CorpusSpec, rng: &mut ChaCha8Rng) -> Vec<MonomialIdeal> {
    let mut out = Vec::with_capacity(spec.count);
    while out.len() < spec.count {
        let n = rng.gen_range(2..=spec.max_vars);
        let g = rng.gen_range(1..=spec.max_gens);
        let raw: Vec<ExponentVector> = (0..g)
            .map(|_| (0..n).map(|_| rng.gen_range(0..=spec.max_exponent)).collect::<Vec<u32>>())
            .filter(|r| r.iter().any(|&e| e > 0))
            .map(|r| ExponentVector::new(r).expect("n ≥ 2"))
            .collect();
        if let Ok(i) = MonomialIdeal::minimalize(raw, n) {
            if i.krull_dimension() > 0 {
                out.push(i);
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct CorpusCase {
    pub ideal: MonomialIdeal,
    pub a: GradingMatrix,
    pub betas: Vec<Parameter>,
}

/// Each ideal with a generated grading matrix, two parameters `A·b` at catalog
/// witness points and one random rational parameter.
pub fn random_cases(spec: &CorpusSpec, seed: u64) -> Result<Vec<CorpusCase>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let one = CorpusSpec { count: 1, ..*spec };
    let mut cases = Vec::with_capacity(spec.count);
    // drawn case by case, so a shorter corpus is a prefix of a longer one
    for _ in 0..spec.count {
        let ideal = random_ideals(&one, &mut rng).pop().expect("count is 1");
        let d = ideal.krull_dimension();
        let a = generate_generic(ideal.n_vars(), d, rng.gen())?;
        let catalog = exponent_catalog(&ideal)?;
        let mut betas = Vec::new();
        for _ in 0..2 {
            let w = &catalog[rng.gen_range(0..catalog.len())].witness;
            let b: Vec<BigRational> = w.iter().map(|&x| rat(x)).collect();
            betas.push(degree_of_point(&a, &b));
        }
        betas.push(Parameter::random_generic(d, &mut rng));
        cases.push(CorpusCase { ideal, a, betas });
    }
    Ok(cases)
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub case: usize,
    pub ideal: String,
    pub a: String,
    pub beta: Parameter,
    pub formula: i64,
    pub spectral: i64,
    pub oracle: i64,
}

impl CheckOutcome {
    pub fn formula_matches_oracle(&self) -> bool {
        self.formula == self.oracle
    }

    pub fn closed_matches_spectral(&self) -> bool {
        self.formula == self.spectral
    }

    pub fn ok(&self) -> bool {
        self.formula_matches_oracle() && self.closed_matches_spectral()
    }
}

pub fn check_case(index: usize, case: &CorpusCase) -> Result<Vec<CheckOutcome>> {
    case.betas
        .iter()
        .map(|beta| {
            Ok(CheckOutcome {
                case: index,
                ideal: case.ideal.to_string(),
                a: case.a.to_string(),
                beta: beta.clone(),
                formula: rank_general(&case.ideal, &case.a, beta)?,
                spectral: rank_general_spectral(&case.ideal, &case.a, beta)?,
                oracle: rank_oracle(&case.ideal, &case.a, beta)? as i64,
            })
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusReport {
    pub spec: CorpusSpec,
    pub seed: u64,
    pub instances: usize,
    pub checks: usize,
    pub mismatches: Vec<CheckOutcome>,
}

impl CorpusReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Run every case (in parallel) and collect the disagreements.
pub fn verify_corpus(spec: &CorpusSpec, seed: u64) -> Result<CorpusReport> {
    let cases = random_cases(spec, seed)?;
    let indexed: Vec<(usize, &CorpusCase)> = cases.iter().enumerate().collect();
    let results = par::map(&indexed, |(k, c)| check_case(*k, c));
    let mut checks = 0;
    let mut mismatches = Vec::new();
    for r in results {
        for o in r? {
            checks += 1;
            if !o.ok() {
                mismatches.push(o);
            }
        }
    }
    Ok(CorpusReport { spec: *spec, seed, instances: cases.len(), checks, mismatches })
}
