//! Fixtures shared by the criterion benches.

use coldecay::states::{qutrit_stationary_werner, stationary_qubit, werner_qubit};
use coldecay::{DensityMatrix, Family};

/// Werner-input stationary state at r = 0.7, N = 0.5.
pub fn qubit_stationary() -> DensityMatrix {
    stationary_qubit(Family::Werner, 0.7, 0.5).expect("valid parameters")
}

pub fn qubit_initial() -> DensityMatrix {
    werner_qubit(0.7, Family::Werner).expect("valid parameters")
}

/// Qutrit stationary state at η = 2.
pub fn qutrit_stationary() -> DensityMatrix {
    qutrit_stationary_werner(2.0).expect("valid parameters")
}
