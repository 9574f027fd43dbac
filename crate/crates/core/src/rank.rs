//! The combinatorial rank formula for face rings and its extension to
//! arbitrary monomial ideals by summing over exponents.
//!
//! Let `F⁰` be the facets of `Δ` and `Fᵖ` the `(p+1)`-subsets of `F⁰` (the
//! `p`-faces of the simplex `Ω` on vertex set `F⁰`). An element `s ∈ Fᵖ` meets in
//! the face `σ(s) = ⋂ s`, and `κ(S) = max(0, d − |⋃_{s∈S} σ(s)|)`. The
//! elements with `κ(s) ≥ p+1` form `Gᵖ`.
//!
//! Elements of `Fᵖ` are bitmasks over facet indices.

use std::collections::{BTreeSet, HashMap};

use itertools::Itertools;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::distraction::{components, exponent_complex_with, Component};
use crate::error::{Error, Result};
use crate::grading::{GradingMatrix, Parameter};
use crate::ideal::MonomialIdeal;
use crate::linalg::{kernel, rat, solve_full_column_rank};
use crate::par;
use crate::simplicial::{SimplicialComplex, VertexSet};

/// `C(m, k)` with `C(m, k) = 0` for `m < 0` or `k > m`.
pub fn binom(m: i64, k: i64) -> i64 {
    if m < 0 || k < 0 || k > m {
        return 0;
    }
    let k = k.min(m - k);
    (0..k).fold(1i64, |acc, i| acc * (m - i) / (i + 1))
}

/// Which vectors of `Ω` define the matroid whose circuits enter `ψᵖ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CircuitReading {
    /// Reduced boundaries `∂s ∈ C_{p−1}(Ω)`.
    Boundary,
    /// Coboundaries `δs ∈ C^{p+1}(Ω)`, the images of the differential of the
    /// primary resolution in degree zero.
    Coboundary,
}

/// The reading used by [`rank_squarefree_closed`] and friends.
pub const DEFAULT_READING: CircuitReading = CircuitReading::Coboundary;

/// Signed incidence vector of a `p`-face of the simplex on `m` vertices under
/// the given reading, keyed by face bitmask.
fn incidence(reading: CircuitReading, s: u64, m: usize) -> Vec<(u64, i64)> {
    let mut v = Vec::new();
    match reading {
        CircuitReading::Boundary => {
            // ∂s = Σ_k (−1)^k (s − v_k); a vertex maps to the empty face
            for (k, i) in VertexSet(s).indices().enumerate() {
                v.push((s & !(1u64 << i), if k % 2 == 0 { 1 } else { -1 }));
            }
        }
        CircuitReading::Coboundary => {
            for f in (0..m).filter(|&f| s & (1 << f) == 0) {
                let pos = (s & ((1u64 << f) - 1)).count_ones();
                v.push((s | (1 << f), if pos.is_multiple_of(2) { 1 } else { -1 }));
            }
        }
    }
    v.sort_unstable();
    v
}

/// Minimal dependency among `members`, all coefficients nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CircuitCertificate {
    /// Members as facet-index bitmasks, in input order.
    pub members: Vec<u64>,
    /// Index into `members` of the distinguished element.
    pub target: usize,
    pub coefficients: Vec<String>,
}

fn circuit_with(
    reading: CircuitReading,
    members: &[u64],
    target: usize,
    m: usize,
) -> Result<Option<CircuitCertificate>> {
    if target >= members.len() {
        return Err(Error::domain("target is not among the members"));
    }
    if members.iter().map(|s| s.count_ones()).dedup().count() != 1 {
        return Err(Error::domain("members must be faces of one dimension"));
    }
    if members.iter().collect::<BTreeSet<_>>().len() != members.len() {
        return Err(Error::domain("members must be distinct"));
    }
    let vecs: Vec<Vec<(u64, i64)>> = members.iter().map(|&s| incidence(reading, s, m)).collect();
    let coords: Vec<u64> = vecs.iter().flatten().map(|(c, _)| *c).collect::<BTreeSet<_>>().into_iter().collect();
    let rows: Vec<Vec<BigRational>> = coords
        .iter()
        .map(|c| {
            vecs.iter()
                .map(|v| v.iter().find(|(k, _)| k == c).map_or_else(BigRational::zero, |(_, x)| rat(*x)))
                .collect()
        })
        .collect();
    let ker = kernel(&rows, members.len());
    if ker.len() != 1 || ker[0].iter().any(Zero::is_zero) {
        return Ok(None);
    }
    let mut coeffs = ker[0].clone();
    let lead = coeffs[0].clone();
    for c in coeffs.iter_mut() {
        *c /= &lead;
    }
    Ok(Some(CircuitCertificate {
        members: members.to_vec(),
        target,
        coefficients: coeffs.iter().map(|c| c.to_string()).collect(),
    }))
}

/// Circuit test in the simplicial matroid of `Ω`: the reduced boundary vectors
/// of `members` are minimally dependent with every coefficient nonzero.
pub fn is_circuit(members: &[u64], target: usize) -> Result<Option<CircuitCertificate>> {
    let m = members.iter().fold(0u64, |a, s| a | s);
    let m = 64 - m.leading_zeros() as usize;
    circuit_with(CircuitReading::Boundary, members, target, m)
}

/// Circuit test for the coboundary vectors of `members` in the simplex on `m`
/// vertices.
pub fn is_coboundary_circuit(members: &[u64], target: usize, m: usize) -> Result<Option<CircuitCertificate>> {
    circuit_with(CircuitReading::Coboundary, members, target, m)
}

/// Facets of a complex together with the target dimension `d`.
#[derive(Clone, Debug)]
pub struct FacetLattice {
    facets: Vec<VertexSet>,
    d: usize,
}

impl FacetLattice {
    pub fn new(cx: &SimplicialComplex, d: usize) -> Self {
        FacetLattice { facets: cx.facets().to_vec(), d }
    }

    pub fn from_facets(facets: Vec<VertexSet>, d: usize) -> Self {
        FacetLattice { facets, d }
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// `σ(s)`, the intersection of the facets in `s`.
    pub fn sigma(&self, s: u64) -> VertexSet {
        VertexSet(s).indices().map(|i| self.facets[i]).fold(VertexSet(u64::MAX), VertexSet::intersection)
    }

    fn kappa_of_union(&self, u: VertexSet) -> usize {
        self.d.saturating_sub(u.len())
    }

    /// `κ(S) = max(0, d − |⋃ σ(s)|)`.
    pub fn kappa(&self, set: &[u64]) -> usize {
        self.kappa_of_union(set.iter().fold(VertexSet::EMPTY, |u, &s| u.union(self.sigma(s))))
    }

    /// `Fᵖ` in lexicographic order of facet indices.
    pub fn f(&self, p: usize) -> Vec<u64> {
        (0..self.facets.len())
            .combinations(p + 1)
            .map(|c| c.into_iter().fold(0u64, |a, i| a | (1 << i)))
            .collect()
    }

    /// `Gᵖ = {s ∈ Fᵖ : κ(s) ≥ p+1}`, in the order of [`FacetLattice::f`].
    pub fn g(&self, p: usize) -> Vec<u64> {
        self.f(p).into_iter().filter(|&s| self.kappa(&[s]) > p).collect()
    }
}

/// Incremental row echelon form over ℚ that remembers how each basis row is
/// combined from the inserted vectors.
#[derive(Clone)]
struct Echelon {
    rows: Vec<(usize, Vec<BigRational>, Vec<BigRational>)>,
    width: usize,
    slots: usize,
}

impl Echelon {
    fn new(width: usize, slots: usize) -> Self {
        Echelon { rows: Vec::new(), width, slots }
    }

    /// Residual of `v` against the basis, plus the combination subtracted.
    fn reduce(&self, v: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let mut r = v.to_vec();
        let mut comb = vec![BigRational::zero(); self.slots];
        for (piv, row, rc) in &self.rows {
            if r[*piv].is_zero() {
                continue;
            }
            let f = r[*piv].clone();
            for k in 0..self.width {
                if !row[k].is_zero() {
                    r[k] -= &f * &row[k];
                }
            }
            for k in 0..self.slots {
                if !rc[k].is_zero() {
                    comb[k] += &f * &rc[k];
                }
            }
        }
        (r, comb)
    }

    /// Insert `v` as slot `slot`; false if dependent.
    fn insert(&mut self, v: &[BigRational], slot: usize) -> bool {
        let (mut r, comb) = self.reduce(v);
        let Some(piv) = r.iter().position(|x| !x.is_zero()) else { return false };
        let inv = r[piv].recip();
        for x in r.iter_mut() {
            *x *= &inv;
        }
        // r = v − Σ comb·(earlier slots), scaled
        let mut rc: Vec<BigRational> = comb.into_iter().map(|c| -c * &inv).collect();
        rc[slot] = inv;
        self.rows.push((piv, r, rc));
        true
    }
}

/// The circuits for the last element of `prefix` inside `prefix`, as lists of
/// indices into `prefix`.
fn circuits_for_last(vecs: &[Vec<BigRational>]) -> Vec<Vec<usize>> {
    let t = vecs.len() - 1;
    let width = vecs[0].len();
    let mut out = Vec::new();

    fn dfs(
        vecs: &[Vec<BigRational>],
        t: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        ech: &Echelon,
        out: &mut Vec<Vec<usize>>,
    ) {
        for k in start..t {
            let mut next = ech.clone();
            if !next.insert(&vecs[k], k) {
                continue;
            }
            chosen.push(k);
            let (res, comb) = next.reduce(&vecs[t]);
            if res.iter().all(Zero::is_zero) {
                // t ∈ span(chosen): a circuit iff every chosen element is used
                if chosen.iter().all(|&c| !comb[c].is_zero()) {
                    let mut c = chosen.clone();
                    c.push(t);
                    out.push(c);
                }
            } else {
                dfs(vecs, t, k + 1, chosen, &next, out);
            }
            chosen.pop();
        }
    }

    if vecs[t].iter().all(Zero::is_zero) {
        // a loop is a circuit by itself
        return vec![vec![t]];
    }
    dfs(vecs, t, 0, &mut Vec::new(), &Echelon::new(width, vecs.len()), &mut out);
    out
}

fn dense_vectors(reading: CircuitReading, elems: &[u64], m: usize) -> Vec<Vec<BigRational>> {
    let sparse: Vec<Vec<(u64, i64)>> = elems.iter().map(|&s| incidence(reading, s, m)).collect();
    let index: HashMap<u64, usize> = sparse
        .iter()
        .flatten()
        .map(|(c, _)| *c)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .enumerate()
        .map(|(k, c)| (c, k))
        .collect();
    sparse
        .iter()
        .map(|v| {
            let mut d = vec![BigRational::zero(); index.len().max(1)];
            for (c, x) in v {
                d[index[c]] = rat(*x);
            }
            d
        })
        .collect()
}

/// `ψᵖ` for a given order on `Gᵖ`.
pub fn psi_ordered(p: usize, lat: &FacetLattice, order: &[u64], reading: CircuitReading) -> i64 {
    if order.len() < 2 {
        return 0;
    }
    let vecs = dense_vectors(reading, order, lat.facet_count());
    let sigmas: Vec<VertexSet> = order.iter().map(|&s| lat.sigma(s)).collect();
    let mut total = 0i64;
    for j in 1..order.len() {
        let circuits = circuits_for_last(&vecs[..=j]);
        // inclusion–exclusion over sets of circuits, keyed by the union of σ's
        let mut signed: HashMap<VertexSet, i64> = HashMap::new();
        for c in &circuits {
            let u = c.iter().fold(VertexSet::EMPTY, |acc, &i| acc.union(sigmas[i]));
            let mut next = signed.clone();
            for (&mask, &cnt) in &signed {
                *next.entry(mask.union(u)).or_insert(0) -= cnt;
            }
            *next.entry(u).or_insert(0) += 1;
            next.retain(|_, c| *c != 0);
            signed = next;
        }
        for (u, cnt) in signed {
            total += cnt * binom(lat.kappa_of_union(u) as i64, p as i64 + 1);
        }
    }
    total
}

/// `ψᵖ` with `Gᵖ` in canonical order. Debug builds re-evaluate under a fixed
/// pseudo-random permutation and assert the value is unchanged.
pub fn psi_with(p: usize, lat: &FacetLattice, reading: CircuitReading) -> i64 {
    let g = lat.g(p);
    let v = psi_ordered(p, lat, &g, reading);
    #[cfg(debug_assertions)]
    if g.len() > 2 && g.len() <= 12 {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut shuffled = g.clone();
        shuffled.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(g.len() as u64 + p as u64));
        let w = psi_ordered(p, lat, &shuffled, reading);
        debug_assert_eq!(v, w, "ψ^{p} depends on the order of G^{p} for facets {:?}", lat.facets);
    }
    v
}

pub fn psi(p: usize, lat: &FacetLattice) -> i64 {
    psi_with(p, lat, DEFAULT_READING)
}

/// Closed-form rank of `ℚ[θ]/(I_Δ + ⟨E⟩)` under a given circuit reading.
pub fn closed_with(cx: &SimplicialComplex, d: usize, reading: CircuitReading) -> i64 {
    let lat = FacetLattice::new(cx, d);
    let m = lat.facet_count();
    if m == 1 {
        return 1;
    }
    let g0 = lat.g(0);
    let deg = (m - g0.len()) as i64;
    let all = (1u64 << m) - 1;
    let mut total = deg + binom(lat.kappa(&[all]) as i64 - 1, m as i64 - 1);
    for p in 0..=m - 2 {
        let g = if p == 0 { g0.clone() } else { lat.g(p) };
        total -= g.iter().map(|&s| binom(lat.kappa(&[s]) as i64 - 1, p as i64 + 1)).sum::<i64>();
        total += psi_with(p, &lat, reading);
    }
    total
}

/// Alternating sum of first-page dimensions minus image dimensions.
pub fn spectral_with(cx: &SimplicialComplex, d: usize, reading: CircuitReading) -> i64 {
    let lat = FacetLattice::new(cx, d);
    let m = lat.facet_count();
    let mut total = 0i64;
    for p in 0..m {
        let kappas: Vec<i64> = lat.f(p).iter().map(|&s| lat.kappa(&[s]) as i64).collect();
        for q in 0..=p.min(d) {
            let dim: i64 = kappas.iter().map(|&k| binom(k, q as i64)).sum();
            total += if (p - q) % 2 == 0 { dim } else { -dim };
        }
    }
    for p in 0..m.saturating_sub(1) {
        let g = lat.g(p);
        let image: i64 = g.iter().map(|&s| binom(lat.kappa(&[s]) as i64, p as i64 + 1)).sum::<i64>()
            - psi_with(p, &lat, reading);
        total -= image;
    }
    total
}

/// The closed rank formula for the face ring of `Δ` modulo `d` generic linear
/// forms. Debug builds assert agreement with [`rank_squarefree_spectral`].
pub fn rank_squarefree_closed(cx: &SimplicialComplex, d: usize) -> i64 {
    let v = closed_with(cx, d, DEFAULT_READING);
    debug_assert_eq!(v, spectral_with(cx, d, DEFAULT_READING), "closed and spectral forms disagree on {cx}");
    v
}

pub fn rank_squarefree_spectral(cx: &SimplicialComplex, d: usize) -> i64 {
    spectral_with(cx, d, DEFAULT_READING)
}

/// Points of `V(Ĩ)` with `A·b = β`.
pub fn exponents_of(ideal: &MonomialIdeal, a: &GradingMatrix, beta: &Parameter) -> Result<Vec<Vec<BigRational>>> {
    check_dims(ideal, a, beta)?;
    exponents_of_with(&components(ideal), a, beta)
}

fn check_dims(ideal: &MonomialIdeal, a: &GradingMatrix, beta: &Parameter) -> Result<()> {
    if a.n() != ideal.n_vars() {
        return Err(Error::validation(format!(
            "grading matrix has {} columns but the ideal has {} variables",
            a.n(),
            ideal.n_vars()
        )));
    }
    let d = ideal.krull_dimension();
    if a.d() != d {
        return Err(Error::validation(format!(
            "grading matrix has {} rows but the ideal has Krull dimension {d}",
            a.d()
        )));
    }
    if beta.len() != d {
        return Err(Error::validation(format!("parameter has {} entries, expected {d}", beta.len())));
    }
    Ok(())
}

/// [`exponents_of`] against precomputed components. Points are sorted.
pub fn exponents_of_with(comps: &[Component], a: &GradingMatrix, beta: &Parameter) -> Result<Vec<Vec<BigRational>>> {
    let mut out = BTreeSet::new();
    for c in comps {
        let rhs: Vec<BigRational> = a
            .rows()
            .iter()
            .zip(&beta.0)
            .map(|(r, b)| b - r.iter().zip(&c.base).fold(BigRational::zero(), |acc, (&x, &y)| acc + rat(x * i64::from(y))))
            .collect();
        let sub = a.columns_rational(c.sigma);
        let t = if c.sigma.is_empty() {
            rhs.iter().all(Zero::is_zero).then(Vec::new)
        } else {
            solve_full_column_rank(&sub, &rhs)
        };
        if let Some(t) = t {
            let mut b: Vec<BigRational> = c.base.iter().map(|&x| rat(i64::from(x))).collect();
            for (k, i) in c.sigma.indices().enumerate() {
                b[i] = t[k].clone();
            }
            out.insert(b);
        }
    }
    Ok(out.into_iter().collect())
}

/// One exponent with its complex and the formula value there.
#[derive(Clone, Debug, Serialize)]
pub struct ExponentTerm {
    #[serde(serialize_with = "ser_rationals")]
    pub exponent: Vec<BigRational>,
    pub complex: SimplicialComplex,
    pub rank: i64,
}

fn ser_rationals<S: serde::Serializer>(v: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

/// Per-exponent contributions to [`rank_general`], sorted by exponent.
pub fn rank_terms(ideal: &MonomialIdeal, a: &GradingMatrix, beta: &Parameter) -> Result<Vec<ExponentTerm>> {
    check_dims(ideal, a, beta)?;
    let d = a.d();
    let comps = components(ideal);
    let pts = exponents_of_with(&comps, a, beta)?;
    let terms = par::map_owned(pts, |b| {
        let complex = exponent_complex_with(ideal.n_vars(), &comps, &b)?;
        let rank = rank_squarefree_closed(&complex, d);
        Ok(ExponentTerm { exponent: b, complex, rank })
    });
    terms.into_iter().collect()
}

/// Rank of the hypergeometric system at `β`: the sum of the closed formula
/// over the exponent complexes.
pub fn rank_general(ideal: &MonomialIdeal, a: &GradingMatrix, beta: &Parameter) -> Result<i64> {
    Ok(rank_terms(ideal, a, beta)?.iter().map(|t| t.rank).sum())
}

/// `rank_general` computed with the spectral form at each exponent.
pub fn rank_general_spectral(ideal: &MonomialIdeal, a: &GradingMatrix, beta: &Parameter) -> Result<i64> {
    check_dims(ideal, a, beta)?;
    let comps = components(ideal);
    let mut total = 0;
    for b in exponents_of_with(&comps, a, beta)? {
        total += rank_squarefree_spectral(&exponent_complex_with(ideal.n_vars(), &comps, &b)?, a.d());
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(n: usize, f: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_labels(n, f).unwrap()
    }

    fn mask(idx: &[usize]) -> u64 {
        idx.iter().fold(0, |a, i| a | (1 << i))
    }

    #[test]
    fn binomial_convention() {
        assert_eq!(binom(-1, 0), 0);
        assert_eq!(binom(0, 0), 1);
        assert_eq!(binom(1, 2), 0);
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(3, -1), 0);
    }

    #[test]
    fn kappa_examples() {
        let lat = FacetLattice::new(&cx(5, &[&[1, 2], &[3, 4]]), 2);
        assert_eq!(lat.kappa(&[mask(&[0])]), 0);
        assert_eq!(lat.kappa(&[mask(&[0, 1])]), 2);
        let single = FacetLattice::new(&cx(3, &[&[1, 2]]), 2);
        assert_eq!(single.kappa(&[1]), 0);
        assert!(lat.g(0).is_empty());
        assert_eq!(lat.g(1), vec![mask(&[0, 1])]);
        assert!(lat.f(2).is_empty());
    }

    #[test]
    fn boundary_circuits() {
        let c = is_circuit(&[mask(&[0]), mask(&[1])], 1).unwrap().unwrap();
        assert_eq!(c.coefficients, vec!["1", "-1"]);
        assert!(is_circuit(&[mask(&[0, 1]), mask(&[1, 2]), mask(&[0, 2])], 2).unwrap().is_some());
        assert!(is_circuit(&[mask(&[0, 1]), mask(&[2, 3])], 1).unwrap().is_none());
        assert!(is_circuit(&[mask(&[0]), mask(&[1])], 2).is_err());
    }

    #[test]
    fn coboundary_circuits() {
        // on three vertices every edge has coboundary ± the triangle
        assert!(is_coboundary_circuit(&[mask(&[0, 1]), mask(&[1, 2])], 1, 3).unwrap().is_some());
        // vertex coboundaries: only all vertices together are dependent
        assert!(is_coboundary_circuit(&[mask(&[0]), mask(&[1])], 1, 3).unwrap().is_none());
        assert!(is_coboundary_circuit(&[mask(&[0]), mask(&[1]), mask(&[2])], 2, 3).unwrap().is_some());
    }

    #[test]
    fn closed_form_examples() {
        let two_segments = cx(5, &[&[1, 2], &[3, 4]]);
        assert_eq!(rank_squarefree_closed(&two_segments, 2), 3);
        assert_eq!(rank_squarefree_spectral(&two_segments, 2), 3);
        let empty = SimplicialComplex::empty_face_only(2);
        assert_eq!(rank_squarefree_closed(&empty, 1), 1);
        assert_eq!(rank_squarefree_spectral(&empty, 1), 1);
        for k in 0..=3usize {
            let labels: Vec<usize> = (1..=k).collect();
            let single = SimplicialComplex::from_labels(4, &[&labels]).unwrap();
            assert_eq!(rank_squarefree_closed(&single, 3), 1);
        }
    }

    #[test]
    fn psi_vanishes_on_small_g() {
        let lat = FacetLattice::new(&cx(5, &[&[1, 2], &[3, 4]]), 2);
        assert_eq!(psi(0, &lat), 0);
        let lat = FacetLattice::new(&SimplicialComplex::empty_face_only(2), 1);
        assert_eq!(lat.g(0).len(), 1);
        assert_eq!(psi(0, &lat), 0);
    }

    #[test]
    fn three_isolated_vertices() {
        // face ring of three points modulo two generic forms has dimension 2
        let three = cx(3, &[&[1], &[2], &[3]]);
        assert_eq!(closed_with(&three, 2, CircuitReading::Coboundary), 2);
        assert_eq!(closed_with(&three, 2, CircuitReading::Boundary), 1);
    }

    #[test]
    fn exponents_of_small_example() {
        let i = MonomialIdeal::from_rows(&[&[3, 1], &[2, 2]]).unwrap();
        let a = GradingMatrix::new(vec![vec![1, 1]]).unwrap();
        let q = |v: &[i64]| v.iter().map(|&x| rat(x)).collect::<Vec<_>>();
        let pts = exponents_of(&i, &a, &"3".parse().unwrap()).unwrap();
        assert_eq!(pts, vec![q(&[0, 3]), q(&[1, 2]), q(&[2, 1]), q(&[3, 0])]);
        let half = "1/2".parse::<BigRational>().unwrap();
        let pts = exponents_of(&i, &a, &"1/2".parse().unwrap()).unwrap();
        assert_eq!(pts, vec![vec![rat(0), half.clone()], vec![half.clone(), rat(0)], vec![rat(1), -half]]);
        assert_eq!(rank_general(&i, &a, &"3".parse().unwrap()).unwrap(), 4);
        assert_eq!(rank_general(&i, &a, &"1/2".parse().unwrap()).unwrap(), 3);
        assert!(rank_general(&i, &a, &"1,2".parse().unwrap()).is_err());
    }
}
