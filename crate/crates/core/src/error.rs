use thiserror::Error;

use crate::linalg::ValidityReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("matrix contains a non-finite entry")]
    NonFinite,

    #[error("not Hermitian (defect {defect:.3e})")]
    NotHermitian { defect: f64 },

    #[error("eigs failed: no convergence after {sweeps} Jacobi sweeps")]
    EigsFailed { sweeps: usize },

    #[error("invalid density matrix: {0}")]
    InvalidDensity(ValidityReport),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("unsupported dimensions {0}x{1}")]
    UnsupportedDims(usize, usize),

    #[error(
        "integration unstable at t = {t}: drift correction {correction:.3e} exceeds {limit:.0e}; use a smaller dt"
    )]
    Unstable { t: f64, correction: f64, limit: f64 },

    #[error("no convergence before t_max = {t_max} (generator residual {residual:.3e})")]
    NotConverged { t_max: f64, residual: f64 },

    #[error("projection annihilates state (probability {0:.3e})")]
    ProjectionAnnihilates(f64),

    #[error("cubic has no negative root")]
    NoNegativeRoot,
}
