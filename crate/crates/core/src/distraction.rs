//! The distraction of a monomial ideal and its zero set.
//!
//! For a generator `∂^u` the distraction generator is the falling factorial
//! `[θ]_u = ∏_i θ_i(θ_i − 1)⋯(θ_i − u_i + 1)`. Its zero set is a finite union of
//! translated coordinate subspaces `base + ℂ^σ`; a pair `(σ, base)` lies in the
//! zero set exactly when every generator `u` has some coordinate `i ∉ σ` with
//! `base_i < u_i` (the covering condition). The irreducible components are the
//! maximal such pairs.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::par;
use crate::simplicial::{SimplicialComplex, VertexSet};

/// Upper bound on the number of lattice points scanned by [`exponent_catalog`].
pub const MAX_CATALOG_POINTS: u64 = 20_000_000;

/// One linear factor `θ_var − shift` of a distraction generator (0-based `var`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DistractionFactor {
    pub var: usize,
    pub shift: u32,
}

/// A distraction generator kept in factored form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactoredGenerator {
    pub factors: Vec<DistractionFactor>,
}

impl fmt::Display for FactoredGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for fac in &self.factors {
            if fac.shift == 0 {
                write!(f, "θ{}", fac.var + 1)?;
            } else {
                write!(f, "(θ{}-{})", fac.var + 1, fac.shift)?;
            }
        }
        Ok(())
    }
}

pub fn distraction_generators(ideal: &MonomialIdeal) -> Vec<FactoredGenerator> {
    ideal
        .generators()
        .iter()
        .map(|u| FactoredGenerator {
            factors: u
                .entries()
                .iter()
                .enumerate()
                .flat_map(|(var, &e)| (0..e).map(move |shift| DistractionFactor { var, shift }))
                .collect(),
        })
        .collect()
}

/// An irreducible component `base + ℂ^σ` of the distraction variety.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Component {
    /// Free coordinates.
    pub sigma: VertexSet,
    /// Fixed coordinates; zero on `sigma`.
    pub base: Vec<u32>,
}

impl Component {
    pub fn new(sigma: VertexSet, base: Vec<u32>) -> Self {
        debug_assert!(sigma.indices().all(|i| base[i] == 0));
        Component { sigma, base }
    }

    /// From a 1-based free set and the base vector.
    pub fn from_labels(sigma: &[usize], base: &[u32]) -> Self {
        Self::new(VertexSet::from_labels(sigma), base.to_vec())
    }

    pub fn dim(&self) -> usize {
        self.sigma.len()
    }

    /// Every generator has a fixed coordinate where `base` is below it.
    pub fn covers(&self, ideal: &MonomialIdeal) -> bool {
        covers(ideal, self.sigma, &self.base)
    }

    /// `b` agrees with `base` off `sigma`.
    pub fn contains_point(&self, b: &[BigRational]) -> bool {
        b.len() == self.base.len()
            && (0..b.len())
                .filter(|&i| !self.sigma.contains(i))
                .all(|i| b[i] == BigRational::from_integer(BigInt::from(self.base[i])))
    }

    /// Lattice version of [`Component::contains_point`]; a coordinate of −1 never
    /// matches a fixed coordinate.
    pub fn contains_lattice_point(&self, b: &[i64]) -> bool {
        b.len() == self.base.len()
            && (0..b.len())
                .filter(|&i| !self.sigma.contains(i))
                .all(|i| b[i] == i64::from(self.base[i]))
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.base.iter().any(|&x| x != 0) {
            let b: Vec<String> = self.base.iter().map(|x| x.to_string()).collect();
            write!(f, "({})+", b.join(","))?;
        }
        write!(f, "C^{}", self.sigma)
    }
}

fn covers(ideal: &MonomialIdeal, sigma: VertexSet, base: &[u32]) -> bool {
    ideal.generators().iter().all(|u| {
        u.entries()
            .iter()
            .enumerate()
            .any(|(i, &ui)| !sigma.contains(i) && base[i] < ui)
    })
}

/// All bases with `0 ≤ base_i < join_i` off `sigma` and zero on it.
fn bases_for(join: &[u32], sigma: VertexSet) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0u32; join.len()]];
    for i in 0..join.len() {
        if sigma.contains(i) {
            continue;
        }
        out = out
            .into_iter()
            .flat_map(|b| {
                (0..join[i]).map(move |v| {
                    let mut c = b.clone();
                    c[i] = v;
                    c
                })
            })
            .collect();
    }
    out
}

/// The irreducible components of the distraction variety, sorted by
/// `(sigma, base)`.
///
/// Candidate free sets are the faces of the radical's Stanley–Reisner complex
/// (any covering pair needs every generator supported off `σ`). A covering pair
/// is maximal iff freeing any single further coordinate breaks the covering
/// condition: if a strictly larger pair covers, so does every intermediate one.
pub fn components(ideal: &MonomialIdeal) -> Vec<Component> {
    let n = ideal.n_vars();
    let join = ideal.join();
    let supports: Vec<VertexSet> = ideal.support_masks().into_iter().map(VertexSet).collect();
    let radical_complex =
        SimplicialComplex::from_nonfaces(n, &supports).expect("generator supports are nonempty");
    let sigmas = radical_complex.faces();
    let per_sigma: Vec<Vec<Component>> = par::map(&sigmas, |&sigma| {
        bases_for(join.entries(), sigma)
            .into_iter()
            .filter(|base| covers(ideal, sigma, base))
            .filter(|base| {
                (0..n).filter(|&i| !sigma.contains(i)).all(|i| {
                    let mut wider = base.clone();
                    wider[i] = 0;
                    !covers(ideal, sigma.union(VertexSet(1 << i)), &wider)
                })
            })
            .map(|base| Component::new(sigma, base))
            .collect()
    });
    let mut all: Vec<Component> = per_sigma.into_iter().flatten().collect();
    all.sort();
    all
}

fn complex_from_sigmas(n: usize, sigmas: Vec<VertexSet>) -> Option<SimplicialComplex> {
    if sigmas.is_empty() {
        None
    } else {
        Some(SimplicialComplex::new(n, sigmas).expect("component free sets are valid faces"))
    }
}

/// `Δ_b(I)`: the complex whose facets are the free sets of the components
/// through `b`.
pub fn exponent_complex_at(ideal: &MonomialIdeal, b: &[BigRational]) -> Result<SimplicialComplex> {
    exponent_complex_with(ideal.n_vars(), &components(ideal), b)
}

/// [`exponent_complex_at`] against a precomputed component list.
pub fn exponent_complex_with(
    n: usize,
    comps: &[Component],
    b: &[BigRational],
) -> Result<SimplicialComplex> {
    if b.len() != n {
        return Err(Error::validation(format!("point has length {}, expected {n}", b.len())));
    }
    let sigmas = comps.iter().filter(|c| c.contains_point(b)).map(|c| c.sigma).collect();
    complex_from_sigmas(n, sigmas).ok_or_else(|| {
        let shown: Vec<String> = b.iter().map(|x| x.to_string()).collect();
        Error::domain(format!("b = ({}) is not in V(Ĩ)", shown.join(",")))
    })
}

/// Lattice-point version of [`exponent_complex_with`]; `None` off the variety.
pub fn exponent_complex_lattice(n: usize, comps: &[Component], b: &[i64]) -> Option<SimplicialComplex> {
    let sigmas = comps.iter().filter(|c| c.contains_lattice_point(b)).map(|c| c.sigma).collect();
    complex_from_sigmas(n, sigmas)
}

/// A distinct exponent complex with the lexicographically first lattice point
/// of the scan box at which it occurs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub complex: SimplicialComplex,
    pub witness: Vec<i64>,
}

/// Points of the box `−1 ≤ b_i ≤ join_i`, in lexicographic order.
pub fn catalog_box(ideal: &MonomialIdeal) -> Result<Vec<Vec<i64>>> {
    let join = ideal.join();
    let count = join
        .entries()
        .iter()
        .try_fold(1u64, |acc, &j| acc.checked_mul(u64::from(j) + 2))
        .filter(|&c| c <= MAX_CATALOG_POINTS)
        .ok_or_else(|| Error::Internal("exponent catalog box is too large".into()))?;
    let mut pts = Vec::with_capacity(count as usize);
    let mut cur: Vec<i64> = vec![-1; join.len()];
    loop {
        pts.push(cur.clone());
        let mut i = join.len();
        loop {
            if i == 0 {
                return Ok(pts);
            }
            i -= 1;
            if cur[i] < i64::from(join[i]) {
                cur[i] += 1;
                break;
            }
            cur[i] = -1;
        }
    }
}

/// Every distinct exponent complex of `I`, keyed by facet set, each with one
/// witness point.
///
/// Scans the box from `(−1,…,−1)` to the join. A coordinate −1 stands for a
/// generic value and only matches free coordinates.
pub fn exponent_catalog(ideal: &MonomialIdeal) -> Result<Vec<CatalogEntry>> {
    let n = ideal.n_vars();
    let comps = components(ideal);
    let pts = catalog_box(ideal)?;
    let found: Vec<(SimplicialComplex, usize)> = par::filter_map_range(pts.len(), |k| {
        exponent_complex_lattice(n, &comps, &pts[k]).map(|c| (c, k))
    });
    let mut first: BTreeMap<SimplicialComplex, usize> = BTreeMap::new();
    for (c, k) in found {
        first.entry(c).or_insert(k);
    }
    Ok(first
        .into_iter()
        .map(|(complex, k)| CatalogEntry { complex, witness: pts[k].clone() })
        .collect())
}

/// Number of components of top dimension `krull_dimension(I)`.
pub fn degree(ideal: &MonomialIdeal) -> usize {
    degree_with(ideal.krull_dimension(), &components(ideal))
}

pub fn degree_with(d: usize, comps: &[Component]) -> usize {
    comps.iter().filter(|c| c.dim() == d).count()
}

pub fn is_unmixed(ideal: &MonomialIdeal) -> bool {
    let d = ideal.krull_dimension();
    components(ideal).iter().all(|c| c.dim() == d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn ideal(rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_rows(rows).unwrap()
    }

    fn small() -> MonomialIdeal {
        ideal(&[&[3, 1], &[2, 2]])
    }

    fn main_example() -> MonomialIdeal {
        ideal(&[&[2, 2, 1], &[1, 2, 2]])
    }

    fn rad_cm() -> MonomialIdeal {
        ideal(&[
            &[1, 0, 0, 1, 0],
            &[0, 1, 0, 1, 0],
            &[0, 1, 1, 0, 0],
            &[1, 0, 1, 0, 1],
            &[0, 0, 0, 0, 2],
        ])
    }

    fn sorted(mut v: Vec<Component>) -> Vec<Component> {
        v.sort();
        v
    }

    fn q(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn distraction_generator_factors() {
        let g = distraction_generators(&small());
        let shown: Vec<String> = g.iter().map(|x| x.to_string()).collect();
        assert_eq!(shown, vec!["θ1(θ1-1)θ2(θ2-1)", "θ1(θ1-1)(θ1-2)θ2"]);
        assert_eq!(distraction_generators(&ideal(&[&[1, 1]]))[0].to_string(), "θ1θ2");
        assert_eq!(distraction_generators(&ideal(&[&[2]]))[0].to_string(), "θ1(θ1-1)");
    }

    #[test]
    fn components_of_main_example() {
        let expect = sorted(vec![
            Component::from_labels(&[1, 2], &[0, 0, 0]),
            Component::from_labels(&[2, 3], &[0, 0, 0]),
            Component::from_labels(&[1, 3], &[0, 0, 0]),
            Component::from_labels(&[1, 3], &[0, 1, 0]),
            Component::from_labels(&[2], &[1, 0, 1]),
        ]);
        assert_eq!(components(&main_example()), expect);
    }

    #[test]
    fn components_of_radical_cm_example() {
        let expect = sorted(vec![
            Component::from_labels(&[1, 2], &[0, 0, 0, 0, 0]),
            Component::from_labels(&[1, 3], &[0, 0, 0, 0, 0]),
            Component::from_labels(&[3, 4], &[0, 0, 0, 0, 0]),
            Component::from_labels(&[1, 2], &[0, 0, 0, 0, 1]),
            Component::from_labels(&[3, 4], &[0, 0, 0, 0, 1]),
        ]);
        assert_eq!(components(&rad_cm()), expect);
    }

    #[test]
    fn components_of_small_example() {
        let expect = sorted(vec![
            Component::from_labels(&[1], &[0, 0]),
            Component::from_labels(&[2], &[0, 0]),
            Component::from_labels(&[2], &[1, 0]),
            Component::from_labels(&[], &[2, 1]),
        ]);
        assert_eq!(components(&small()), expect);
    }

    #[test]
    fn containment() {
        let b = q(&[1, 0]);
        assert!(Component::from_labels(&[1], &[0, 0]).contains_point(&b));
        assert!(Component::from_labels(&[2], &[1, 0]).contains_point(&b));
        assert!(!Component::from_labels(&[], &[2, 1]).contains_point(&b));
    }

    #[test]
    fn exponent_complexes() {
        let i = small();
        let c = exponent_complex_at(&i, &q(&[1, 0])).unwrap();
        assert_eq!(c, SimplicialComplex::from_labels(2, &[&[1], &[2]]).unwrap());
        let c = exponent_complex_at(&i, &q(&[2, 1])).unwrap();
        assert_eq!(c, SimplicialComplex::empty_face_only(2));
        assert!(matches!(exponent_complex_at(&i, &q(&[5, 5])), Err(Error::Domain(_))));
        let c = exponent_complex_at(&rad_cm(), &q(&[0, 0, 0, 0, 1])).unwrap();
        assert_eq!(c, SimplicialComplex::from_labels(5, &[&[1, 2], &[3, 4]]).unwrap());
    }

    #[test]
    fn catalog_of_squarefree_pair() {
        let cat = exponent_catalog(&ideal(&[&[1, 1]])).unwrap();
        let complexes: Vec<SimplicialComplex> = cat.iter().map(|e| e.complex.clone()).collect();
        let mut expect = vec![
            SimplicialComplex::from_labels(2, &[&[1], &[2]]).unwrap(),
            SimplicialComplex::from_labels(2, &[&[1]]).unwrap(),
            SimplicialComplex::from_labels(2, &[&[2]]).unwrap(),
        ];
        expect.sort();
        assert_eq!(complexes, expect);
        let both = cat.iter().find(|e| e.complex.facets().len() == 2).unwrap();
        assert_eq!(both.witness, vec![0, 0]);
    }

    #[test]
    fn catalog_of_main_example_has_disconnected_complex() {
        // the plane {1,3} and the line {2} through (1,0,1) and (1,1,1)
        let cat = exponent_catalog(&main_example()).unwrap();
        let target = SimplicialComplex::from_labels(3, &[&[1, 3], &[2]]).unwrap();
        let entry = cat.iter().find(|e| e.complex == target).unwrap();
        assert_eq!(entry.witness, vec![1, 0, 1]);
        assert_eq!(entry.complex.reduced_homology().rank(0), 1);
        assert_eq!(cat.len(), 9);
    }

    #[test]
    fn catalog_is_stable_across_powers() {
        let ik = |k: u32| {
            let rows: Vec<Vec<u32>> =
                (0..4).map(|i| (0..4).map(|j| if i == j { 0 } else { k }).collect()).collect();
            let refs: Vec<&[u32]> = rows.iter().map(|r| r.as_slice()).collect();
            ideal(&refs)
        };
        let base: Vec<SimplicialComplex> =
            exponent_catalog(&ik(1)).unwrap().into_iter().map(|e| e.complex).collect();
        for k in 2..=3 {
            let other: Vec<SimplicialComplex> =
                exponent_catalog(&ik(k)).unwrap().into_iter().map(|e| e.complex).collect();
            assert_eq!(other, base, "k={k}");
        }
    }

    #[test]
    fn degree_and_unmixedness() {
        assert_eq!(degree(&small()), 3);
        assert_eq!(degree(&main_example()), 4);
        assert_eq!(degree(&rad_cm()), 5);
        assert!(is_unmixed(&rad_cm()));
        assert!(!is_unmixed(&small()));
        assert!(is_unmixed(&ideal(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]])));
    }

    #[test]
    fn complex_at_zero_is_radical_complex() {
        for i in [small(), main_example(), rad_cm()] {
            let at_zero = exponent_complex_at(&i, &q(&vec![0; i.n_vars()])).unwrap();
            let supports: Vec<VertexSet> = i.radical().support_masks().into_iter().map(VertexSet).collect();
            let rad = SimplicialComplex::from_nonfaces(i.n_vars(), &supports).unwrap();
            assert_eq!(at_zero, rad);
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;
        use rand::{Rng, SeedableRng};

        fn ideals() -> impl Strategy<Value = MonomialIdeal> {
            (2usize..=4).prop_flat_map(|n| {
                prop::collection::vec(prop::collection::vec(0u32..=3, n), 1..=5).prop_filter_map(
                    "nonzero generators",
                    move |rows| {
                        let raw: Vec<_> = rows
                            .into_iter()
                            .filter(|r| r.iter().any(|&e| e > 0))
                            .map(|r| crate::ideal::ExponentVector::new(r).unwrap())
                            .collect();
                        MonomialIdeal::minimalize(raw, n).ok()
                    },
                )
            })
        }

        /// Evaluate `[θ]_u` at an integer point.
        fn eval_distraction(u: &[u32], pt: &[i64]) -> i64 {
            u.iter()
                .zip(pt)
                .map(|(&e, &x)| (0..e as i64).map(|j| x - j).product::<i64>())
                .product()
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn components_vanish_and_are_maximal(i in ideals(), seed in any::<u64>()) {
                let comps = components(&i);
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
                for c in &comps {
                    prop_assert!(c.covers(&i));
                    for _ in 0..5 {
                        let pt: Vec<i64> = (0..i.n_vars())
                            .map(|k| if c.sigma.contains(k) { rng.gen_range(-5..9) } else { c.base[k] as i64 })
                            .collect();
                        for u in i.generators() {
                            prop_assert_eq!(eval_distraction(u.entries(), &pt), 0);
                        }
                    }
                    for other in &comps {
                        if other != c {
                            let inside = c.sigma.is_subset(other.sigma)
                                && (0..i.n_vars()).filter(|&k| !other.sigma.contains(k)).all(|k| c.base[k] == other.base[k]);
                            prop_assert!(!inside, "{} inside {}", c, other);
                        }
                    }
                }
                prop_assert!(comps.iter().all(|c| c.dim() <= i.krull_dimension()));
            }

            #[test]
            fn squarefree_degree_counts_top_facets(i in ideals()) {
                let r = i.radical();
                let supports: Vec<VertexSet> = r.support_masks().into_iter().map(VertexSet).collect();
                let cx = SimplicialComplex::from_nonfaces(r.n_vars(), &supports).unwrap();
                let top = cx.facets().iter().filter(|f| f.len() as i32 == cx.dimension() + 1).count();
                prop_assert_eq!(degree(&r), top);
            }

            #[test]
            fn catalog_is_complete(i in ideals(), seed in any::<u64>()) {
                let comps = components(&i);
                let cat: Vec<SimplicialComplex> = exponent_catalog(&i).unwrap().into_iter().map(|e| e.complex).collect();
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
                for _ in 0..12 {
                    let c = &comps[rng.gen_range(0..comps.len())];
                    // free coordinates: integers near the box or a non-integer rational
                    let pt: Vec<BigRational> = (0..i.n_vars()).map(|k| {
                        if !c.sigma.contains(k) {
                            rat(c.base[k] as i64)
                        } else if rng.gen_bool(0.5) {
                            rat(rng.gen_range(-2..6))
                        } else {
                            BigRational::new(BigInt::from(rng.gen_range(-50..50)), BigInt::from(7))
                        }
                    }).collect();
                    let cx = exponent_complex_with(i.n_vars(), &comps, &pt).unwrap();
                    prop_assert!(cat.contains(&cx), "missing {}", cx);
                }
            }
        }
    }
}
