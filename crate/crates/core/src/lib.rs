//! Monomial ideals studied through their distractions.
//!
//! The crate computes the irreducible components of the distraction variety of a
//! monomial ideal, its exponent complexes, a Cohen–Macaulay decision procedure
//! built on those complexes, and the parameter-dependent rank of the associated
//! Euler-operator system via a closed combinatorial formula. Every formula has
//! a brute-force counterpart in [`oracle`] (exact Buchberger and graded Hilbert
//! function computations) so that the two can be checked against each other.
//!
//! Data-parallel loops (component enumeration, catalog scans, link homology,
//! corpus verification) run on rayon when the `parallel` feature is enabled and
//! fall back to sequential iteration otherwise.

pub mod cli;
pub mod cm;
pub mod corpus;
pub mod distraction;
pub mod error;
pub mod grading;
pub mod ideal;
pub mod linalg;
pub mod oracle;
pub mod par;
pub mod rank;
pub mod simplicial;

pub use cm::{is_cohen_macaulay_ideal, polarize, radical_comparison, CmReport};
pub use distraction::{components, degree, exponent_catalog, exponent_complex_at, Component};
pub use error::{Error, Result};
pub use grading::{generate_generic, GradingMatrix, Parameter};
pub use ideal::{ExponentVector, MonomialIdeal};
pub use rank::{rank_general, rank_squarefree_closed, rank_squarefree_spectral};
pub use simplicial::{SimplicialComplex, VertexSet};
