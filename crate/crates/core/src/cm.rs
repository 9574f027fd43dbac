//! Cohen–Macaulay decision for monomial ideals via exponent complexes, and the
//! polarization route used to cross-check it.
//!
//! `ℂ[∂]/I` is Cohen–Macaulay iff every exponent complex of `I` is a
//! Cohen–Macaulay complex of dimension `d − 1`.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::distraction::exponent_catalog;
use crate::error::Result;
use crate::ideal::{ExponentVector, MonomialIdeal};
use crate::par;
use crate::simplicial::{SimplicialComplex, VertexSet};

/// Why one exponent complex fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CmFailure {
    /// `H̃_degree(lk face) ≠ 0` below the link dimension.
    Reisner { face: VertexSet, degree: i32 },
    /// The complex has the wrong dimension.
    Dimension { found: i32, expected: i32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CmWitness {
    pub point: Vec<i64>,
    pub complex: SimplicialComplex,
    pub failure: CmFailure,
}

#[derive(Clone, Debug, Serialize)]
pub struct CmReport {
    pub verdict: bool,
    pub d: usize,
    pub catalog_size: usize,
    /// Empty iff the verdict is true. Without `full`, a single witness:
    /// Reisner failures take precedence over dimension mismatches.
    pub witnesses: Vec<CmWitness>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CmReport {
    pub fn witness(&self) -> Option<&CmWitness> {
        self.witnesses.first()
    }
}

fn failure_of(cx: &SimplicialComplex, expected: i32) -> Option<CmFailure> {
    // a non-pure complex always yields a Reisner witness, so test Reisner first
    if let Some(w) = cx.reisner_witness() {
        return Some(CmFailure::Reisner { face: w.face, degree: w.degree });
    }
    (cx.dimension() != expected).then(|| CmFailure::Dimension { found: cx.dimension(), expected })
}

/// Check every catalog complex. With `full`, report every failing complex;
/// otherwise only the highest-priority one.
pub fn cm_report(ideal: &MonomialIdeal, full: bool) -> Result<CmReport> {
    let start = Instant::now();
    let d = ideal.krull_dimension();
    let expected = d as i32 - 1;
    let catalog = exponent_catalog(ideal)?;
    let mut witnesses: Vec<CmWitness> = par::filter_map(&catalog, |e| {
        failure_of(&e.complex, expected).map(|failure| CmWitness {
            point: e.witness.clone(),
            complex: e.complex.clone(),
            failure,
        })
    });
    // stable: Reisner before dimension, then catalog order
    witnesses.sort_by_key(|w| matches!(w.failure, CmFailure::Dimension { .. }));
    if !full {
        witnesses.truncate(1);
    }
    Ok(CmReport {
        verdict: witnesses.is_empty(),
        d,
        catalog_size: catalog.len(),
        witnesses,
        elapsed: start.elapsed(),
    })
}

pub fn is_cohen_macaulay_ideal(ideal: &MonomialIdeal) -> Result<CmReport> {
    cm_report(ideal, false)
}

/// `(radical is CM, ideal is CM)`. The ideal being CM forces the radical to be.
pub fn radical_comparison(ideal: &MonomialIdeal) -> Result<(bool, bool)> {
    let radical_cm = is_cohen_macaulay_ideal(&ideal.radical())?.verdict;
    let ideal_cm = is_cohen_macaulay_ideal(ideal)?.verdict;
    assert!(!ideal_cm || radical_cm, "Cohen–Macaulayness must pass to the radical for {ideal}");
    Ok((radical_cm, ideal_cm))
}

/// Polarized ideal with its variable map: new variable `k` (0-based) is the
/// `occurrence`-th copy of original variable `var` (both 1-based).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Polarization {
    pub ideal: MonomialIdeal,
    pub names: Vec<PolarVar>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PolarVar {
    pub var: usize,
    pub occurrence: u32,
}

impl Polarization {
    /// Stanley–Reisner complex of the polarized ideal.
    pub fn complex(&self) -> SimplicialComplex {
        let supports: Vec<VertexSet> = self.ideal.support_masks().into_iter().map(VertexSet).collect();
        SimplicialComplex::from_nonfaces(self.ideal.n_vars(), &supports).expect("supports are nonempty")
    }

    pub fn name(&self, k: usize) -> String {
        let v = self.names[k];
        format!("y{}_{}", v.var, v.occurrence)
    }
}

/// Classical polarization: `x_i^e` becomes `y_{i,1} ⋯ y_{i,e}`, with new
/// variables ordered by `(i, occurrence)`. Variables absent from every
/// generator are dropped.
pub fn polarize(ideal: &MonomialIdeal) -> Result<Polarization> {
    let join = ideal.join();
    let mut names = Vec::new();
    let mut offset = Vec::with_capacity(ideal.n_vars());
    for (i, &e) in join.entries().iter().enumerate() {
        offset.push(names.len());
        names.extend((1..=e).map(|occurrence| PolarVar { var: i + 1, occurrence }));
    }
    let raw = ideal
        .generators()
        .iter()
        .map(|u| {
            let mut v = vec![0u32; names.len()];
            for (i, &e) in u.entries().iter().enumerate() {
                for j in 0..e as usize {
                    v[offset[i] + j] = 1;
                }
            }
            ExponentVector::new(v)
        })
        .collect::<Result<Vec<_>>>()?;
    let n = names.len();
    Ok(Polarization { ideal: MonomialIdeal::minimalize(raw, n)?, names })
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchmarkReport {
    pub catalog_verdict: bool,
    pub catalog_size: usize,
    pub catalog_seconds: f64,
    pub polarization_vars: usize,
    pub polarization_verdict: bool,
    pub polarization_seconds: f64,
    pub polarization_f_vector: Vec<u64>,
    pub agree: bool,
}

impl BenchmarkReport {
    pub fn table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{:<24} {:>8} {:>12} {:>10}", "method", "verdict", "seconds", "size");
        let _ = writeln!(
            s,
            "{:<24} {:>8} {:>12.6} {:>10}",
            "exponent catalog", self.catalog_verdict, self.catalog_seconds, self.catalog_size
        );
        let _ = writeln!(
            s,
            "{:<24} {:>8} {:>12.6} {:>10}",
            "polarization Reisner",
            self.polarization_verdict,
            self.polarization_seconds,
            self.polarization_f_vector.iter().sum::<u64>()
        );
        let _ = writeln!(s, "f-vector: ({})", self.polarization_f_vector.iter().map(u64::to_string).collect::<Vec<_>>().join(","));
        let _ = writeln!(s, "verdicts agree: {}", self.agree);
        s
    }
}

/// Time the catalog decision against Reisner's test on the polarization.
/// The two runs are sequential so that their timings do not interfere.
pub fn benchmark_cm(ideal: &MonomialIdeal) -> Result<BenchmarkReport> {
    let report = is_cohen_macaulay_ideal(ideal)?;
    let pol = polarize(ideal)?;
    let start = Instant::now();
    let cx = pol.complex();
    let verdict = cx.is_cohen_macaulay();
    let polarization_seconds = start.elapsed().as_secs_f64();
    Ok(BenchmarkReport {
        catalog_verdict: report.verdict,
        catalog_size: report.catalog_size,
        catalog_seconds: report.elapsed.as_secs_f64(),
        polarization_vars: pol.ideal.n_vars(),
        polarization_verdict: verdict,
        polarization_seconds,
        polarization_f_vector: cx.f_vector(),
        agree: verdict == report.verdict,
    })
}
