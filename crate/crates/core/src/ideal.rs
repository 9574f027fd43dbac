//! Exponent vectors and monomial ideals.
//!
//! Variables are indexed `0..n` internally; everything user-facing (reports,
//! display strings) uses `1..=n`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent of a monomial `∂^u` (or `θ^u`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::validation("exponent vector must have at least one entry"));
        }
        Ok(ExponentVector(entries))
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `self` divides `other` as monomials: coordinatewise `≤`.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Indicator vector of the support.
    pub fn support(&self) -> ExponentVector {
        ExponentVector(self.0.iter().map(|&e| u32::from(e > 0)).collect())
    }

    /// Support as a bitmask over internal (0-based) indices.
    pub fn support_mask(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |m, (i, _)| m | (1u64 << i))
    }

    /// Coordinatewise maximum.
    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }
}

impl std::ops::Index<usize> for ExponentVector {
    type Output = u32;

    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// A proper, nonzero monomial ideal given by its minimal generators.
///
/// Generators are kept in sorted order so that two ideals with the same
/// generating set compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Build the ideal generated by `raw`, keeping only divisibility-minimal
    /// generators.
    pub fn minimalize(raw: Vec<ExponentVector>, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::validation("variable count must be at least 1"));
        }
        if n > 64 {
            return Err(Error::validation("at most 64 variables are supported"));
        }
        if raw.is_empty() {
            return Err(Error::validation("generator list is empty (zero ideal)"));
        }
        for (i, u) in raw.iter().enumerate() {
            if u.len() != n {
                return Err(Error::validation(format!(
                    "generator {} has length {}, expected {n}",
                    i + 1,
                    u.len()
                )));
            }
            if u.is_zero() {
                return Err(Error::validation(format!(
                    "generator {} is the zero vector (unit ideal)",
                    i + 1
                )));
            }
        }
        let mut gens = raw;
        gens.sort();
        gens.dedup();
        let minimal: Vec<ExponentVector> = gens
            .iter()
            .filter(|u| !gens.iter().any(|v| v != *u && v.divides(u)))
            .cloned()
            .collect();
        Ok(MonomialIdeal { n, generators: minimal })
    }

    /// Convenience constructor from plain integer rows.
    pub fn from_rows(rows: &[&[u32]]) -> Result<Self> {
        let n = rows.first().map_or(0, |r| r.len());
        let raw = rows
            .iter()
            .map(|r| ExponentVector::new(r.to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Self::minimalize(raw, n)
    }

    pub fn n_vars(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    pub fn radical(&self) -> MonomialIdeal {
        let raw = self.generators.iter().map(ExponentVector::support).collect();
        Self::minimalize(raw, self.n).expect("supports of nonzero generators are nonzero")
    }

    /// Coordinatewise maximum of the generators (exponent of their lcm).
    pub fn join(&self) -> ExponentVector {
        self.generators
            .iter()
            .skip(1)
            .fold(self.generators[0].clone(), |acc, u| acc.lcm(u))
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(|u| u.entries().iter().all(|&e| e <= 1))
    }

    /// Generator supports as bitmasks.
    pub fn support_masks(&self) -> Vec<u64> {
        self.generators.iter().map(ExponentVector::support_mask).collect()
    }

    /// Largest `|σ|` such that every generator has a nonzero entry outside `σ`.
    ///
    /// Equivalently `n` minus the size of a minimum hitting set of the
    /// generator supports, found by branching on the first unhit support.
    pub fn krull_dimension(&self) -> usize {
        fn min_hitting(supports: &[u64], chosen: u64, best: &mut u32) {
            let size = chosen.count_ones();
            if size >= *best {
                return;
            }
            match supports.iter().find(|&&s| s & chosen == 0) {
                None => *best = size,
                Some(&s) => {
                    let mut rest = s;
                    while rest != 0 {
                        let bit = rest & rest.wrapping_neg();
                        rest &= rest - 1;
                        min_hitting(supports, chosen | bit, best);
                    }
                }
            }
        }
        let supports = self.support_masks();
        let mut best = self.n as u32;
        min_hitting(&supports, 0, &mut best);
        self.n - best as usize
    }

    /// Monomial string in `x1..xn`, e.g. `x1^2*x3`.
    pub fn monomial_string(u: &ExponentVector, var: &str) -> String {
        let parts: Vec<String> = u
            .entries()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("{var}{}", i + 1)
                } else {
                    format!("{var}{}^{e}", i + 1)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|u| Self::monomial_string(u, "x"))
            .collect();
        write!(f, "<{}>", gens.join(", "))
    }
}
