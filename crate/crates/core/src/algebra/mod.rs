//! Exact integer linear algebra: Smith normal form, chain complexes and
//! homology with explicit generators.

pub mod chain;
pub mod homology;
pub mod matrix;
pub(crate) mod scalar;
pub mod snf;

pub use chain::{Cell, ChainComplex};
pub use homology::{
    cohomology_from_homology, homology, homology_basis, pair_homology, reduced_cohomology,
    reduced_homology, simplicial_homology, AbelianGroup, ClassCoordinates, GradedAbelianGroup,
    HomologyBasis,
};
pub use matrix::{IntegerMatrix, SparseMatrix};
pub use snf::{invariant_factors, smith_normal_form, sparse_invariant_factors, SmithNormalForm};
