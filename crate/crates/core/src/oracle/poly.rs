//! Sparse polynomials over ℚ in degree-reverse-lexicographic order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A monomial `θ^e`, ordered by degrevlex with `θ1 > θ2 > ⋯`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mono {
    deg: u32,
    exps: Vec<u32>,
}

impl Mono {
    pub fn new(exps: Vec<u32>) -> Self {
        Mono { deg: exps.iter().sum(), exps }
    }

    pub fn one(n: usize) -> Self {
        Mono { deg: 0, exps: vec![0; n] }
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Mono { deg: 1, exps: e }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        Mono { deg: self.deg + o.deg, exps: self.exps.iter().zip(&o.exps).map(|(a, b)| a + b).collect() }
    }

    pub fn divides(&self, o: &Mono) -> bool {
        self.deg <= o.deg && self.exps.iter().zip(&o.exps).all(|(a, b)| a <= b)
    }

    /// `o / self`; caller guarantees divisibility.
    pub fn quotient_of(&self, o: &Mono) -> Mono {
        Mono { deg: o.deg - self.deg, exps: o.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect() }
    }

    pub fn lcm(&self, o: &Mono) -> Mono {
        Mono::new(self.exps.iter().zip(&o.exps).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, o: &Mono) -> bool {
        self.exps.iter().zip(&o.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `Some(i)` if this is a pure power of variable `i`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut nz = self.exps.iter().enumerate().filter(|(_, e)| **e > 0);
        match (nz.next(), nz.next()) {
            (Some((i, _)), None) => Some(i),
            _ => None,
        }
    }
}

impl Ord for Mono {
    fn cmp(&self, o: &Self) -> Ordering {
        self.deg.cmp(&o.deg).then_with(|| {
            for (a, b) in self.exps.iter().zip(&o.exps).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Polynomial with exact rational coefficients; no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPolynomial {
    n: usize,
    terms: BTreeMap<Mono, BigRational>,
}

impl RationalPolynomial {
    pub fn zero(n: usize) -> Self {
        RationalPolynomial { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: BigRational) -> Self {
        let mut p = Self::zero(n);
        p.add_term(Mono::one(n), c);
        p
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Mono, BigRational)>) -> Self {
        let mut p = Self::zero(n);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Linear form `Σ c_j θ_j + k`.
    pub fn linear(coeffs: &[BigRational], k: BigRational) -> Self {
        let n = coeffs.len();
        let mut p = Self::constant(n, k);
        for (j, c) in coeffs.iter().enumerate() {
            p.add_term(Mono::var(n, j), c.clone());
        }
        p
    }

    pub fn n_vars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(&Mono, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.leading().map_or(0, |(m, _)| m.degree())
    }

    pub fn add_term(&mut self, m: Mono, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c·m·g`.
    pub fn add_scaled(&mut self, c: &BigRational, m: &Mono, g: &RationalPolynomial) {
        for (gm, gc) in &g.terms {
            self.add_term(m.mul(gm), c * gc);
        }
    }

    pub fn mul(&self, o: &RationalPolynomial) -> RationalPolynomial {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            out.add_scaled(c, m, o);
        }
        out
    }

    pub fn scale(&mut self, c: &BigRational) {
        if c.is_zero() {
            self.terms.clear();
        } else {
            for v in self.terms.values_mut() {
                *v *= c;
            }
        }
    }

    /// Divide by the leading coefficient.
    pub fn make_monic(&mut self) {
        if let Some((_, lc)) = self.leading() {
            let inv = lc.recip();
            self.scale(&inv);
        }
    }

    pub fn pop_leading(&mut self) -> Option<(Mono, BigRational)> {
        self.terms.pop_last()
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let vars: Vec<String> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(i, &e)| if e == 1 { format!("θ{}", i + 1) } else { format!("θ{}^{e}", i + 1) })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn degrevlex_order() {
        let m = |v: &[u32]| Mono::new(v.to_vec());
        // degree first
        assert!(m(&[0, 0, 2]) > m(&[1, 0, 0]));
        // x1 > x2 > x3
        assert!(m(&[1, 0, 0]) > m(&[0, 1, 0]));
        assert!(m(&[0, 1, 0]) > m(&[0, 0, 1]));
        // x1 x3 < x2^2 in degrevlex
        assert!(m(&[1, 0, 1]) < m(&[0, 2, 0]));
        assert!(m(&[2, 0, 0]) > m(&[1, 1, 0]));
    }

    #[test]
    fn arithmetic_and_display() {
        let x = RationalPolynomial::linear(&[rat(1), rat(0)], rat(0));
        let y = RationalPolynomial::linear(&[rat(0), rat(1)], rat(-1));
        let p = x.mul(&y);
        assert_eq!(p.to_string(), "θ1*θ2 - θ1");
        let mut q = p.clone();
        q.add_scaled(&rat(-1), &Mono::one(2), &p);
        assert!(q.is_zero());
        assert_eq!(p.leading().unwrap().0, &Mono::new(vec![1, 1]));
    }
}
