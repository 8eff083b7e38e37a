//! Collective decay of two qubits or two qutrits in a common reservoir.
//!
//! The crate is organised bottom-up:
//!
//! * [`linalg`] dense complex matrices (≤ 9×9), Kronecker products, a Jacobi
//!   Hermitian eigensolver, partial transposes and density-matrix validation.
//! * [`operators`] local Pauli and ladder operators in the crate's basis order.
//! * [`states`] Bell, Werner and maximally mixed states plus the closed-form
//!   stationary states of the collective master equation.
//! * [`dynamics`] the Lindblad generators, an RK4 integrator and relaxation to
//!   stationarity.
//! * [`measures`] concurrence, negativity, maximal CHSH violation, linear
//!   entropy and singlet fraction, each with its closed-form counterpart.
//! * [`distillation`] the local projection of two qutrits onto a qubit pair.
//! * [`verify`] the invariant suite shared by the CLI and the tests.

pub mod distillation;
pub mod dynamics;
mod error;
pub mod linalg;
pub mod measures;
pub mod operators;
pub mod states;
pub mod verify;

pub use distillation::{is_npt, project_to_qubit_subspace, ProjectionOutcome};
pub use dynamics::{
    evolve, evolve_to_stationary, lindblad_rhs, relax_to_stationary, CollectiveModel, Integrator,
    IntegratorConfig, Sample, Trajectory,
};
pub use error::{Error, Result};
pub use linalg::{
    frobenius_distance, hermitian_eigs, is_valid_density, kron, partial_transpose, ComplexMatrix,
    DensityMatrix, HermitianEigen, Subsystem, ToleranceConfig, ValidityReport, C64,
};
pub use measures::MeasureReport;
pub use states::{Eta, Family, StationarySpec};
