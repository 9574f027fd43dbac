//! Finite simplicial complexes on labeled vertices.
//!
//! Faces are bitmasks over `0..n` (at most 64 vertices). The complex stores its
//! facets; the full face table is built lazily and cached.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ideal::{ExponentVector, MonomialIdeal};
use crate::linalg::{sparse_rank_with_pivots, SparseVec};
use crate::par;

/// A set of vertices, stored as a bitmask over 0-based labels.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// From 1-based labels.
    pub fn from_labels(labels: &[usize]) -> Self {
        VertexSet(labels.iter().fold(0, |m, &l| m | (1u64 << (l - 1))))
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(idx: I) -> Self {
        VertexSet(idx.into_iter().fold(0, |m, i| m | (1u64 << i)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    /// 0-based indices in increasing order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    /// 1-based labels in increasing order.
    pub fn labels(self) -> Vec<usize> {
        self.indices().map(|i| i + 1).collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l: Vec<String> = self.labels().iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", l.join(","))
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.labels().serialize(s)
    }
}

/// Faces grouped by dimension: `by_dim[k + 1]` holds the k-dimensional faces,
/// sorted by mask, so `by_dim[0] == [∅]`.
#[derive(Debug)]
struct FaceTable {
    by_dim: Vec<Vec<u64>>,
}

/// A simplicial complex given by its facets.
///
/// The complex `{∅}` is represented by the single facet `∅`; the void complex
/// has no representation.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
    faces: OnceLock<Arc<FaceTable>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl Hash for SimplicialComplex {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.facets.hash(state);
    }
}

impl PartialOrd for SimplicialComplex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SimplicialComplex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, &self.facets).cmp(&(other.n, &other.facets))
    }
}

/// Ranks of reduced homology over ℚ, indexed from degree −1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    ranks: Vec<usize>,
}

impl HomologyProfile {
    /// Rank of `H̃_i`; zero outside the stored range.
    pub fn rank(&self, i: i32) -> usize {
        usize::try_from(i + 1)
            .ok()
            .and_then(|k| self.ranks.get(k).copied())
            .unwrap_or(0)
    }

    /// `(degree, rank)` pairs starting at degree −1.
    pub fn iter(&self) -> impl Iterator<Item = (i32, usize)> + '_ {
        self.ranks.iter().enumerate().map(|(k, &r)| (k as i32 - 1, r))
    }

    pub fn is_zero(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }

    /// `Σ (−1)^i rank H̃_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.iter()
            .map(|(i, r)| if i.rem_euclid(2) == 0 { r as i64 } else { -(r as i64) })
            .sum()
    }
}

/// A Reisner failure: `H̃_degree(lk face) ≠ 0` with `degree < dim lk face`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ReisnerWitness {
    pub face: VertexSet,
    pub degree: i32,
}

fn keep_maximal(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort();
    sets.dedup();
    let maximal: Vec<VertexSet> = sets
        .iter()
        .filter(|s| !sets.iter().any(|t| t != *s && s.is_subset(*t)))
        .copied()
        .collect();
    maximal
}

impl SimplicialComplex {
    /// The complex generated by `faces` (non-maximal entries are dropped).
    pub fn new(n_vertices: usize, faces: Vec<VertexSet>) -> Result<Self> {
        if n_vertices > 64 {
            return Err(Error::validation("at most 64 vertices are supported"));
        }
        if faces.is_empty() {
            return Err(Error::validation("the void complex has no faces and is not representable"));
        }
        let bound = if n_vertices == 64 { u64::MAX } else { (1u64 << n_vertices) - 1 };
        if let Some(f) = faces.iter().find(|f| f.0 & !bound != 0) {
            return Err(Error::validation(format!(
                "face {f} uses a vertex outside 1..={n_vertices}"
            )));
        }
        Ok(SimplicialComplex {
            n: n_vertices,
            facets: keep_maximal(faces),
            faces: OnceLock::new(),
        })
    }

    /// From facets written with 1-based labels.
    pub fn from_labels(n_vertices: usize, facets: &[&[usize]]) -> Result<Self> {
        Self::new(n_vertices, facets.iter().map(|f| VertexSet::from_labels(f)).collect())
    }

    /// The complex `{∅}` on `n` vertex labels.
    pub fn empty_face_only(n_vertices: usize) -> Self {
        Self::new(n_vertices, vec![VertexSet::EMPTY]).expect("empty face is always valid")
    }

    /// All subsets of `0..n` of size at most `k + 1` (the k-skeleton of the simplex).
    pub fn simplex_skeleton(n_vertices: usize, k: i32) -> Result<Self> {
        let size = (k + 1).max(0) as usize;
        let facets = (0..n_vertices)
            .combinations(size.min(n_vertices))
            .map(VertexSet::from_indices)
            .collect();
        Self::new(n_vertices, facets)
    }

    /// Complex whose faces are the vertex sets containing none of `nonfaces`.
    ///
    /// Faces are enumerated by depth-first extension in increasing vertex order;
    /// a face is a facet when no vertex can be added.
    pub fn from_nonfaces(n_vertices: usize, nonfaces: &[VertexSet]) -> Result<Self> {
        if nonfaces.iter().any(|s| s.is_empty()) {
            return Err(Error::validation("the empty set cannot be a non-face"));
        }
        let is_face = |s: u64| nonfaces.iter().all(|nf| nf.0 & !s != 0);
        let mut facets = Vec::new();
        let mut stack = vec![(0u64, 0usize)];
        while let Some((face, next)) = stack.pop() {
            let maximal = (0..n_vertices).all(|v| face >> v & 1 == 1 || !is_face(face | 1 << v));
            if maximal {
                facets.push(VertexSet(face));
            }
            for v in next..n_vertices {
                let bigger = face | 1 << v;
                if is_face(bigger) {
                    stack.push((bigger, v + 1));
                }
            }
        }
        Self::new(n_vertices, facets)
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// Max facet size minus one; −1 for `{∅}`.
    pub fn dimension(&self) -> i32 {
        self.facets.iter().map(|f| f.len() as i32).max().unwrap_or(0) - 1
    }

    pub fn is_pure(&self) -> bool {
        self.facets.iter().all(|f| f.len() == self.facets[0].len())
    }

    pub fn contains_face(&self, face: VertexSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    fn face_table(&self) -> &FaceTable {
        self.faces.get_or_init(|| {
            let top = (self.dimension() + 1) as usize;
            let mut levels: Vec<HashSet<u64>> = vec![HashSet::new(); top + 1];
            for f in &self.facets {
                levels[f.len()].insert(f.0);
            }
            for size in (1..=top).rev() {
                let current: Vec<u64> = levels[size].iter().copied().collect();
                for face in current {
                    let mut rest = face;
                    while rest != 0 {
                        let bit = rest & rest.wrapping_neg();
                        rest &= rest - 1;
                        levels[size - 1].insert(face & !bit);
                    }
                }
            }
            let by_dim = levels
                .into_iter()
                .map(|set| {
                    let mut v: Vec<u64> = set.into_iter().collect();
                    v.sort_unstable();
                    v
                })
                .collect();
            Arc::new(FaceTable { by_dim })
        })
    }

    /// All faces, ordered by size and then by mask. The empty face comes first.
    pub fn faces(&self) -> Vec<VertexSet> {
        self.face_table()
            .by_dim
            .iter()
            .flat_map(|level| level.iter().map(|&m| VertexSet(m)))
            .collect()
    }

    /// `(f_{−1}, f_0, …, f_dim)`.
    pub fn f_vector(&self) -> Vec<u64> {
        self.face_table().by_dim.iter().map(|l| l.len() as u64).collect()
    }

    /// `lk σ = {τ : σ ∪ τ ∈ Δ, σ ∩ τ = ∅}` on the same vertex labels.
    pub fn link(&self, sigma: VertexSet) -> Result<SimplicialComplex> {
        let facets: Vec<VertexSet> = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset(**f))
            .map(|f| f.difference(sigma))
            .collect();
        if facets.is_empty() {
            return Err(Error::domain(format!("{sigma} is not a face of the complex")));
        }
        // facets of Δ containing σ stay pairwise incomparable after removing σ
        Ok(SimplicialComplex { n: self.n, facets, faces: OnceLock::new() })
    }

    /// Ranks of the boundary maps `∂_k : C_k → C_{k−1}` for `k = 0..=dim` of the
    /// augmented chain complex, computed top-down with pivot clearing.
    fn boundary_ranks(&self) -> Vec<usize> {
        let table = self.face_table();
        let levels = &table.by_dim;
        let top = levels.len() - 1; // number of nonempty-face levels
        let index: Vec<HashMap<u64, u32>> = levels
            .iter()
            .map(|l| l.iter().enumerate().map(|(i, &m)| (m, i as u32)).collect())
            .collect();
        // ranks[k] = rank ∂_k for k in 0..=dim, stored at position k
        let mut ranks = vec![0usize; top];
        let mut cleared: Vec<bool> = Vec::new();
        for size in (1..=top).rev() {
            let faces = &levels[size];
            let rows = &index[size - 1];
            let columns: Vec<SparseVec> = faces
                .iter()
                .map(|&face| {
                    let mut col: SparseVec = Vec::with_capacity(size);
                    let mut rest = face;
                    let mut pos = 0;
                    while rest != 0 {
                        let bit = rest & rest.wrapping_neg();
                        rest &= rest - 1;
                        let sign = if pos % 2 == 0 { 1 } else { -1 };
                        col.push((rows[&(face & !bit)], sign));
                        pos += 1;
                    }
                    col.sort_unstable_by_key(|e| e.0);
                    col
                })
                .collect();
            let skip = if cleared.len() == columns.len() { cleared.clone() } else { vec![false; columns.len()] };
            let (rank, pivots) = sparse_rank_with_pivots(&columns, &skip);
            ranks[size - 1] = rank;
            cleared = vec![false; levels[size - 1].len()];
            for p in pivots {
                cleared[p as usize] = true;
            }
        }
        ranks
    }

    /// Exact ranks of reduced homology over ℚ, degrees −1..=dim.
    pub fn reduced_homology(&self) -> HomologyProfile {
        let f = self.f_vector();
        let ranks = self.boundary_ranks();
        // f[k + 1] = f_k, ranks[k] = rank ∂_k
        let dim_plus_two = f.len();
        let homology = (0..dim_plus_two)
            .map(|pos| {
                // degree i = pos − 1
                let into = if pos >= 1 { ranks[pos - 1] } else { 0 };
                let out = ranks.get(pos).copied().unwrap_or(0);
                f[pos] as usize - into - out
            })
            .collect();
        HomologyProfile { ranks: homology }
    }

    /// First failing `(face, degree)` of Reisner's criterion, faces ordered by
    /// size and then mask; `None` when the complex is Cohen–Macaulay.
    pub fn reisner_witness(&self) -> Option<ReisnerWitness> {
        let faces = self.faces();
        let witness = par::find_map_first(&faces, |&sigma| {
            let lk = self.link(sigma).expect("faces have links");
            let dim = lk.dimension();
            if dim <= 0 {
                return None;
            }
            let h = lk.reduced_homology();
            (-1..dim)
                .find(|&i| h.rank(i) != 0)
                .map(|degree| ReisnerWitness { face: sigma, degree })
        });
        debug_assert!(witness.is_some() || self.is_pure(), "Cohen–Macaulay complexes are pure");
        witness
    }

    pub fn is_cohen_macaulay(&self) -> bool {
        self.reisner_witness().is_none()
    }

    /// Minimal non-faces, as vertex sets.
    pub fn minimal_nonfaces(&self) -> Vec<VertexSet> {
        let faces: HashSet<u64> = self.faces().into_iter().map(|f| f.0).collect();
        let mut out: HashSet<u64> = HashSet::new();
        for &face in &faces {
            for v in 0..self.n {
                if face >> v & 1 == 1 {
                    continue;
                }
                let cand = face | 1 << v;
                if faces.contains(&cand) {
                    continue;
                }
                let mut rest = cand;
                let mut minimal = true;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    rest &= rest - 1;
                    if !faces.contains(&(cand & !bit)) {
                        minimal = false;
                        break;
                    }
                }
                if minimal {
                    out.insert(cand);
                }
            }
        }
        let mut v: Vec<VertexSet> = out.into_iter().map(VertexSet).collect();
        v.sort();
        v
    }

    /// Stanley–Reisner ideal, generated by the minimal non-faces. `None` when
    /// the complex is the full simplex (its face ideal is zero).
    pub fn stanley_reisner_ideal(&self) -> Option<MonomialIdeal> {
        let gens: Vec<ExponentVector> = self
            .minimal_nonfaces()
            .into_iter()
            .map(|s| {
                ExponentVector::new((0..self.n).map(|i| u32::from(s.contains(i))).collect())
                    .expect("n ≥ 1")
            })
            .collect();
        if gens.is_empty() {
            return None;
        }
        Some(MonomialIdeal::minimalize(gens, self.n).expect("non-faces are nonempty"))
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.facets.iter().map(|s| s.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

impl Serialize for SimplicialComplex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.facets.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_labels(n, facets).unwrap()
    }

    fn two_segments() -> SimplicialComplex {
        cx(4, &[&[1, 2], &[3, 4]])
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(two_segments().dimension(), 1);
        assert_eq!(SimplicialComplex::empty_face_only(3).dimension(), -1);
        assert_eq!(cx(4, &[&[1, 2, 3, 4]]).dimension(), 3);
    }

    #[test]
    fn void_complex_rejected() {
        assert!(SimplicialComplex::new(3, vec![]).is_err());
        assert!(SimplicialComplex::from_labels(2, &[&[3]]).is_err());
    }

    #[test]
    fn f_vectors() {
        assert_eq!(SimplicialComplex::empty_face_only(2).f_vector(), vec![1]);
        assert_eq!(two_segments().f_vector(), vec![1, 4, 2]);
        assert_eq!(cx(3, &[&[1, 2, 3]]).f_vector(), vec![1, 3, 3, 1]);
    }

    #[test]
    fn links() {
        let d = two_segments();
        assert_eq!(d.link(VertexSet::EMPTY).unwrap(), d);
        assert_eq!(d.link(VertexSet::from_labels(&[1])).unwrap(), cx(4, &[&[2]]));
        assert!(d.link(VertexSet::from_labels(&[1, 3])).is_err());
        // skeleton: link of σ is the (n−3−|σ|)-skeleton on the complement
        let n = 5;
        let skel = SimplicialComplex::simplex_skeleton(n, n as i32 - 3).unwrap();
        let sigma = VertexSet::from_labels(&[2]);
        let lk = skel.link(sigma).unwrap();
        assert_eq!(lk.dimension(), n as i32 - 4);
        for f in lk.facets() {
            assert!(!f.contains(1));
            assert_eq!(f.len(), n - 3);
        }
        assert_eq!(lk.facets().len(), 6);
    }

    #[test]
    fn homology_examples() {
        let h = two_segments().reduced_homology();
        assert_eq!(h.rank(0), 1);
        assert_eq!(h.rank(1), 0);
        let circle = cx(3, &[&[1, 2], &[1, 3], &[2, 3]]).reduced_homology();
        assert_eq!(circle.rank(1), 1);
        assert_eq!(circle.rank(0), 0);
        let empty = SimplicialComplex::empty_face_only(2).reduced_homology();
        assert_eq!(empty.rank(-1), 1);
        assert!(cx(4, &[&[1, 2, 3, 4]]).reduced_homology().is_zero());
    }

    #[test]
    fn skeleton_is_wedge_of_spheres() {
        // (n−3)-skeleton of the (n−1)-simplex has H̃_{n−3} of rank C(n−1, n−2) = n−1
        for n in 4..=6usize {
            let skel = SimplicialComplex::simplex_skeleton(n, n as i32 - 3).unwrap();
            let h = skel.reduced_homology();
            for i in -1..(n as i32 - 3) {
                assert_eq!(h.rank(i), 0, "n={n} i={i}");
            }
            assert_eq!(h.rank(n as i32 - 3), n - 1);
        }
    }

    #[test]
    fn reisner_examples() {
        let w = two_segments().reisner_witness().unwrap();
        assert_eq!(w, ReisnerWitness { face: VertexSet::EMPTY, degree: 0 });
        for n in 4..=6usize {
            assert!(SimplicialComplex::simplex_skeleton(n, n as i32 - 3).unwrap().is_cohen_macaulay());
        }
        assert!(cx(4, &[&[1, 2, 3, 4]]).is_cohen_macaulay());
        assert!(SimplicialComplex::empty_face_only(3).is_cohen_macaulay());
        // non-pure complex fails somewhere
        assert!(!cx(3, &[&[1, 2], &[3]]).is_cohen_macaulay());
    }

    #[test]
    fn stanley_reisner_ideals() {
        let i = cx(2, &[&[1], &[2]]).stanley_reisner_ideal().unwrap();
        assert_eq!(i, MonomialIdeal::from_rows(&[&[1, 1]]).unwrap());
        let i = SimplicialComplex::empty_face_only(2).stanley_reisner_ideal().unwrap();
        assert_eq!(i, MonomialIdeal::from_rows(&[&[1, 0], &[0, 1]]).unwrap());
        let i = cx(5, &[&[1, 2], &[3, 4]]).stanley_reisner_ideal().unwrap();
        let expect = MonomialIdeal::from_rows(&[
            &[1, 0, 1, 0, 0],
            &[1, 0, 0, 1, 0],
            &[0, 1, 1, 0, 0],
            &[0, 1, 0, 1, 0],
            &[0, 0, 0, 0, 1],
        ])
        .unwrap();
        assert_eq!(i, expect);
        assert!(cx(2, &[&[1, 2]]).stanley_reisner_ideal().is_none());
    }

    #[test]
    fn nonfaces_round_trip() {
        let d = cx(5, &[&[1, 2], &[3, 4]]);
        let back = SimplicialComplex::from_nonfaces(5, &d.minimal_nonfaces()).unwrap();
        assert_eq!(back, d);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn complex() -> impl Strategy<Value = SimplicialComplex> {
            (1usize..=7).prop_flat_map(|n| {
                prop::collection::vec(0u64..(1u64 << n), 1..=6)
                    .prop_map(move |fs| SimplicialComplex::new(n, fs.into_iter().map(VertexSet).collect()).unwrap())
            })
        }

        proptest! {
            #[test]
            fn euler_characteristic_two_ways(d in complex()) {
                let f = d.f_vector();
                let chi_f: i64 = f.iter().enumerate()
                    .map(|(pos, &c)| if pos % 2 == 1 { c as i64 } else { -(c as i64) })
                    .sum();
                prop_assert_eq!(chi_f, d.reduced_homology().euler_characteristic());
            }

            #[test]
            fn cones_are_acyclic(d in complex()) {
                prop_assume!(d.n_vertices() < 64);
                let apex = d.n_vertices();
                let cone = SimplicialComplex::new(
                    apex + 1,
                    d.facets().iter().map(|f| f.union(VertexSet(1 << apex))).collect(),
                ).unwrap();
                prop_assert!(cone.reduced_homology().is_zero());
            }

            #[test]
            fn cohen_macaulay_implies_pure(d in complex()) {
                if d.is_cohen_macaulay() {
                    prop_assert!(d.is_pure());
                }
            }
        }
    }
}
