//! Local filtering of a two-qutrit state onto the qubit pair spanned by
//! levels {1, 2}, followed by the NPT test that certifies distillability of
//! the filtered 2×2 state.

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, DensityMatrix, ToleranceConfig};
use crate::measures::has_negative_partial_transpose;
use crate::operators::qutrit_index;

const MIN_PROBABILITY: f64 = 1e-12;

#[derive(Debug, Clone)]
pub struct ProjectionOutcome {
    /// Renormalised two-qubit state; qutrit level 1 maps to the first qubit
    /// basis vector and level 2 to the second.
    pub state: DensityMatrix,
    /// Tr(Π ρ Π).
    pub probability: f64,
}

/// Applies Π⊗Π with Π = |1⟩⟨1| + |2⟩⟨2| and renormalises.
pub fn project_to_qubit_subspace(rho: &DensityMatrix) -> Result<ProjectionOutcome> {
    if rho.dims() != (3, 3) {
        return Err(Error::UnsupportedDims(rho.dims().0, rho.dims().1));
    }
    // Surviving labels in qubit order: |1,1⟩, |1,2⟩, |2,1⟩, |2,2⟩.
    let kept = [
        qutrit_index(1, 1),
        qutrit_index(1, 2),
        qutrit_index(2, 1),
        qutrit_index(2, 2),
    ];
    let block = ComplexMatrix::from_fn(4, 4, |i, j| rho[(kept[i], kept[j])]);
    let probability = block.trace().re;
    if probability.is_nan() || probability < MIN_PROBABILITY {
        return Err(Error::ProjectionAnnihilates(probability));
    }
    let state = DensityMatrix::new(block.scale(1.0 / probability), (2, 2))?;
    Ok(ProjectionOutcome { state, probability })
}

/// True when the partial transpose has an eigenvalue below −1e-10.
pub fn is_npt(rho: &DensityMatrix) -> Result<bool> {
    has_negative_partial_transpose(rho, &ToleranceConfig::default())
}
