//! Buchberger's algorithm over ℚ (degrevlex) and standard-monomial counting.

use std::collections::HashSet;

use crate::error::{Error, Result};

use super::poly::{Mono, RationalPolynomial};

/// A monic basis element with its leading monomial cached.
#[derive(Clone, Debug)]
struct Elem {
    lm: Mono,
    poly: RationalPolynomial,
}

impl Elem {
    fn new(mut p: RationalPolynomial) -> Self {
        p.make_monic();
        Elem { lm: p.leading().expect("nonzero").0.clone(), poly: p }
    }
}

/// Full reduction of `f` modulo `basis`.
fn reduce(f: &RationalPolynomial, basis: &[Elem]) -> RationalPolynomial {
    let mut p = f.clone();
    let mut rem = RationalPolynomial::zero(f.n_vars());
    while let Some((m, c)) = p.pop_leading() {
        match basis.iter().find(|g| g.lm.divides(&m)) {
            Some(g) => {
                let q = g.lm.quotient_of(&m);
                for (gm, gc) in g.poly.terms().rev().skip(1) {
                    p.add_term(q.mul(gm), -(&c * gc));
                }
            }
            None => rem.add_term(m, c),
        }
    }
    rem
}

fn s_polynomial(a: &Elem, b: &Elem) -> RationalPolynomial {
    let l = a.lm.lcm(&b.lm);
    let mut s = RationalPolynomial::zero(a.poly.n_vars());
    let one = crate::linalg::rat(1);
    s.add_scaled(&one, &a.lm.quotient_of(&l), &a.poly);
    s.add_scaled(&-one, &b.lm.quotient_of(&l), &b.poly);
    s
}

/// Linear generators in reduced echelon form, so that reducing any polynomial
/// by them substitutes away their leading variables.
fn echelon_linear(lin: Vec<RationalPolynomial>) -> Vec<Elem> {
    let mut basis: Vec<Elem> = Vec::new();
    for f in lin {
        let r = reduce(&f, &basis);
        if r.is_zero() {
            continue;
        }
        let e = Elem::new(r);
        if e.lm.degree() == 0 {
            return vec![e];
        }
        let single = [e.clone()];
        for b in basis.iter_mut() {
            *b = Elem::new(reduce(&b.poly, &single));
        }
        basis.push(e);
    }
    basis
}

/// Gröbner basis under degrevlex: normal pair selection with the product and
/// chain criteria. Returned elements are monic; the basis is not reduced.
pub fn groebner_basis(gens: &[RationalPolynomial]) -> Vec<RationalPolynomial> {
    let (lin, rest): (Vec<_>, Vec<_>) =
        gens.iter().filter(|g| !g.is_zero()).cloned().partition(|g| g.total_degree() <= 1);
    let mut basis = echelon_linear(lin);
    if basis.iter().any(|e| e.lm.degree() == 0) {
        return basis.into_iter().map(|e| e.poly).collect();
    }
    for f in rest {
        let r = reduce(&f, &basis);
        if !r.is_zero() {
            basis.push(Elem::new(r));
        }
    }

    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }
    while let Some(&(i, j)) = pending
        .iter()
        .min_by(|a, b| {
            let la = basis[a.0].lm.lcm(&basis[a.1].lm);
            let lb = basis[b.0].lm.lcm(&basis[b.1].lm);
            la.cmp(&lb).then(a.cmp(b))
        })
    {
        pending.remove(&(i, j));
        let (a, b) = (&basis[i], &basis[j]);
        if a.lm.coprime(&b.lm) {
            continue;
        }
        let l = a.lm.lcm(&b.lm);
        let key = |x: usize, y: usize| (x.min(y), x.max(y));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lm.divides(&l)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let r = reduce(&s_polynomial(a, b), &basis);
        if r.is_zero() {
            continue;
        }
        let e = Elem::new(r);
        if e.lm.degree() == 0 {
            return vec![e.poly];
        }
        let k = basis.len();
        basis.push(e);
        for i in 0..k {
            pending.insert((i, k));
        }
    }
    basis.into_iter().map(|e| e.poly).collect()
}

/// Number of monomials outside the monomial ideal generated by `lms`.
///
/// Fails with a domain error when some variable has no pure power among the
/// leading monomials (the quotient is infinite-dimensional).
pub fn standard_monomial_count(n: usize, lms: &[Mono]) -> Result<usize> {
    if lms.iter().any(|m| m.degree() == 0) {
        return Ok(0);
    }
    let missing: Vec<usize> = (0..n)
        .filter(|&i| !lms.iter().any(|m| m.pure_power_var() == Some(i)))
        .map(|i| i + 1)
        .collect();
    if !missing.is_empty() {
        return Err(Error::domain(format!(
            "quotient is not zero-dimensional (no pure power of θ{:?} among leading terms); \
             the grading matrix or parameter is not admissible for this ideal",
            missing
        )));
    }
    // order ideal DFS, raising variables in nondecreasing index order
    fn walk(m: &mut Vec<u32>, from: usize, lms: &[Mono], count: &mut usize) {
        *count += 1;
        for i in from..m.len() {
            m[i] += 1;
            let mono = Mono::new(m.clone());
            if !lms.iter().any(|l| l.divides(&mono)) {
                walk(m, i, lms, count);
            }
            m[i] -= 1;
        }
    }
    let mut count = 0;
    walk(&mut vec![0; n], 0, lms, &mut count);
    Ok(count)
}

/// `dim_ℚ ℚ[θ]/⟨gens⟩` for a zero-dimensional ideal.
pub fn buchberger_dimension(gens: &[RationalPolynomial]) -> Result<usize> {
    let n = gens
        .first()
        .map(RationalPolynomial::n_vars)
        .ok_or_else(|| Error::validation("no generators"))?;
    let gb = groebner_basis(gens);
    let lms: Vec<Mono> = gb.iter().filter_map(|g| g.leading().map(|(m, _)| m.clone())).collect();
    standard_monomial_count(n, &lms)
}
