//! Dense complex linear algebra for operators and states of at most 9×9.

mod density;
mod eigen;
mod matrix;

pub use density::{
    is_valid_density, partial_transpose, partial_transpose_matrix, DensityMatrix, Subsystem,
    ToleranceConfig, ValidityReport,
};
pub use eigen::{hermitian_eigenvalues, hermitian_eigs, HermitianEigen};
pub use matrix::{frobenius_distance, kron, ComplexMatrix, C64};
