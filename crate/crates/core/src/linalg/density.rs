use std::fmt;
use std::ops::Deref;

use super::eigen::hermitian_eigenvalues;
use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

/// Numerical slack used when deciding whether a matrix is a valid state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceConfig {
    /// Bound on ‖M − M†‖_F.
    pub hermiticity: f64,
    /// Bound on |Tr M − 1|.
    pub trace: f64,
    /// Smallest eigenvalue accepted is `-psd_slack`.
    pub psd_slack: f64,
    /// A partial transpose is negative when its smallest eigenvalue is below `-npt`.
    pub npt: f64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self {
            hermiticity: 1e-10,
            trace: 1e-10,
            psd_slack: 1e-9,
            npt: 1e-10,
        }
    }
}

impl ToleranceConfig {
    /// Looser bounds for states sampled along an integrated trajectory.
    pub fn trajectory() -> Self {
        Self {
            hermiticity: 1e-9,
            trace: 1e-9,
            psd_slack: 1e-8,
            ..Self::default()
        }
    }

    /// Same bound for every field.
    pub fn uniform(tol: f64) -> Self {
        Self {
            hermiticity: tol,
            trace: tol,
            psd_slack: tol,
            npt: tol,
        }
    }
}

/// Diagnostics from [`is_valid_density`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidityReport {
    pub hermiticity_defect: f64,
    pub trace_defect: f64,
    pub min_eigenvalue: f64,
    pub valid: bool,
}

impl fmt::Display for ValidityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "hermiticity defect {:.3e}, trace defect {:.3e}, min eigenvalue {:.3e}",
            self.hermiticity_defect, self.trace_defect, self.min_eigenvalue
        )
    }
}

/// Checks Hermiticity, unit trace and positivity of a square matrix.
///
/// The spectrum is taken from the Hermitian part, so a non-Hermitian input
/// still gets a meaningful `min_eigenvalue`. Non-square input reports
/// infinite defects.
pub fn is_valid_density(m: &ComplexMatrix, tol: &ToleranceConfig) -> ValidityReport {
    if !m.is_square() {
        return ValidityReport {
            hermiticity_defect: f64::INFINITY,
            trace_defect: f64::INFINITY,
            min_eigenvalue: f64::NEG_INFINITY,
            valid: false,
        };
    }
    let hermiticity_defect = m.hermiticity_defect();
    let tr = m.trace();
    let trace_defect = ((tr.re - 1.0).powi(2) + tr.im.powi(2)).sqrt();
    let min_eigenvalue = hermitian_eigenvalues(&m.hermitian_part())
        .map(|v| v[0])
        .unwrap_or(f64::NAN);
    let valid = hermiticity_defect <= tol.hermiticity
        && trace_defect <= tol.trace
        && min_eigenvalue >= -tol.psd_slack;
    ValidityReport {
        hermiticity_defect,
        trace_defect,
        min_eigenvalue,
        valid,
    }
}

/// A validated bipartite state with local dimensions (dA, dB).
#[derive(Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    dims: (usize, usize),
}

impl DensityMatrix {
    /// Validates with [`ToleranceConfig::default`].
    pub fn new(matrix: ComplexMatrix, dims: (usize, usize)) -> Result<Self> {
        Self::with_tolerance(matrix, dims, &ToleranceConfig::default())
    }

    pub fn with_tolerance(
        matrix: ComplexMatrix,
        dims: (usize, usize),
        tol: &ToleranceConfig,
    ) -> Result<Self> {
        let n = dims.0 * dims.1;
        if dims.0 == 0 || dims.1 == 0 || matrix.rows() != n || matrix.cols() != n {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} matrix for dims {:?}",
                matrix.rows(),
                matrix.cols(),
                dims
            )));
        }
        let report = is_valid_density(&matrix, tol);
        if !report.valid {
            return Err(Error::InvalidDensity(report));
        }
        Ok(Self { matrix, dims })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn dims(&self) -> (usize, usize) {
        self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.0 * self.dims.1
    }

    /// Tr(ρ²).
    pub fn purity(&self) -> f64 {
        self.matrix.trace_product(&self.matrix).re
    }
}

impl Deref for DensityMatrix {
    type Target = ComplexMatrix;

    fn deref(&self) -> &ComplexMatrix {
        &self.matrix
    }
}

impl fmt::Debug for DensityMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DensityMatrix {:?} ", self.dims)?;
        self.matrix.fmt(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Partial transpose of a raw matrix on C^dA ⊗ C^dB.
///
/// With composite indices (i, j) for rows and (k, l) for columns, transposing
/// A maps entry (i,j; k,l) to (k,j; i,l); transposing B maps it to (i,l; k,j).
pub fn partial_transpose_matrix(
    m: &ComplexMatrix,
    dims: (usize, usize),
    subsystem: Subsystem,
) -> Result<ComplexMatrix> {
    let (da, db) = dims;
    let n = da * db;
    if m.rows() != n || m.cols() != n {
        return Err(Error::ShapeMismatch(format!(
            "{}x{} matrix for dims {:?}",
            m.rows(),
            m.cols(),
            dims
        )));
    }
    let mut out = ComplexMatrix::zeros(n, n);
    for i in 0..da {
        for j in 0..db {
            for k in 0..da {
                for l in 0..db {
                    let (row, col) = match subsystem {
                        Subsystem::A => (k * db + j, i * db + l),
                        Subsystem::B => (i * db + l, k * db + j),
                    };
                    out[(row, col)] = m[(i * db + j, k * db + l)];
                }
            }
        }
    }
    Ok(out)
}

/// ρ^Γ with respect to `subsystem`.
pub fn partial_transpose(rho: &DensityMatrix, subsystem: Subsystem) -> Result<ComplexMatrix> {
    partial_transpose_matrix(rho.matrix(), rho.dims(), subsystem)
}
