//! Complexes on which the closed rank formula is below the true rank. The true
//! value is computed two independent ways (graded Hilbert function of the face
//! ring, Buchberger on the full system).

use mondist::oracle::{complex_artinian_dimension, rank_oracle};
use mondist::rank::{closed_with, rank_squarefree_spectral, CircuitReading};
use mondist::*;

fn forms(n: usize, d: usize) -> Vec<Vec<i64>> {
    generate_generic(n, d, 11).unwrap().rows().to_vec()
}

#[test]
fn four_cycle_in_three_forms() {
    let cx = SimplicialComplex::from_labels(4, &[&[1, 3], &[2, 3], &[1, 4], &[2, 4]]).unwrap();
    assert_eq!(complex_artinian_dimension(&cx, &forms(4, 3)).unwrap(), 2);
    assert_eq!(rank_squarefree_closed(&cx, 3), 1);
    assert_eq!(rank_squarefree_spectral(&cx, 3), 1);
}

#[test]
fn cone_over_four_cycle_in_four_forms() {
    let cx = SimplicialComplex::from_labels(5, &[&[1, 2, 4], &[1, 3, 4], &[1, 2, 5], &[1, 3, 5]]).unwrap();
    assert_eq!(complex_artinian_dimension(&cx, &forms(5, 4)).unwrap(), 2);
    assert_eq!(closed_with(&cx, 4, CircuitReading::Coboundary), 1);
    assert_eq!(closed_with(&cx, 4, CircuitReading::Boundary), -1);
}

#[test]
fn full_system_at_a_lattice_parameter() {
    let i = MonomialIdeal::from_rows(&[&[0, 0, 2, 1], &[1, 1, 2, 0], &[3, 1, 1, 0]]).unwrap();
    let a = GradingMatrix::new(vec![vec![1, 1, 1, 1], vec![3, 7, 6, 14], vec![12, 16, 2, 15]]).unwrap();
    let beta: Parameter = "1,6,2".parse().unwrap();
    assert_eq!(rank_oracle(&i, &a, &beta).unwrap(), 3);
    assert_eq!(mondist::oracle::rank_oracle_graded(&i, &a, &beta).unwrap(), 3);
    assert_eq!(rank_general(&i, &a, &beta).unwrap(), 2);
}

#[test]
fn pure_complexes_of_the_right_dimension_agree() {
    for facets in [&[&[1, 2][..], &[2, 3], &[3, 4]][..], &[&[1, 2], &[3, 4]], &[&[1, 2, 3], &[2, 3, 4]]] {
        let cx = SimplicialComplex::from_labels(4, facets).unwrap();
        let d = cx.dimension() as usize + 1;
        let g = complex_artinian_dimension(&cx, &forms(4, d)).unwrap() as i64;
        assert_eq!(rank_squarefree_closed(&cx, d), g, "{cx}");
    }
}
