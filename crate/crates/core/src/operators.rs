//! Local operators and basis kets.
//!
//! Qubit local basis is ordered (|1⟩, |0⟩), upper level first, so that the
//! two-qubit product basis reads |11⟩, |10⟩, |01⟩, |00⟩ at indices 0..3.
//! Qutrit levels |1⟩, |2⟩, |3⟩ sit at indices 0..2 and the pair |i,j⟩ at
//! 3(i−1)+(j−1).

use crate::linalg::{kron, ComplexMatrix, C64};

fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

pub fn pauli_x() -> ComplexMatrix {
    ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]])
}

pub fn pauli_y() -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(2, 2);
    m[(0, 1)] = C64::new(0.0, -1.0);
    m[(1, 0)] = C64::new(0.0, 1.0);
    m
}

pub fn pauli_z() -> ComplexMatrix {
    ComplexMatrix::from_real_diagonal(&[1.0, -1.0])
}

pub fn paulis() -> [ComplexMatrix; 3] {
    [pauli_x(), pauli_y(), pauli_z()]
}

/// σ+ = |1⟩⟨0|.
pub fn sigma_plus() -> ComplexMatrix {
    ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]])
}

/// σ− = |0⟩⟨1|.
pub fn sigma_minus() -> ComplexMatrix {
    ComplexMatrix::from_real_rows(&[&[0.0, 0.0], &[1.0, 0.0]])
}

/// J− = √2|1⟩⟨2| + √2|2⟩⟨3| on a single qutrit.
pub fn qutrit_lowering() -> ComplexMatrix {
    let s = std::f64::consts::SQRT_2;
    ComplexMatrix::from_real_rows(&[&[0.0, s, 0.0], &[0.0, 0.0, s], &[0.0, 0.0, 0.0]])
}

/// op ⊗ I + I ⊗ op.
pub fn collective(op: &ComplexMatrix) -> ComplexMatrix {
    let id = ComplexMatrix::identity(op.rows());
    &kron(op, &id) + &kron(&id, op)
}

/// Index of |a b⟩ for qubit labels a, b ∈ {0, 1}.
pub fn qubit_index(a: u8, b: u8) -> usize {
    assert!(a <= 1 && b <= 1, "qubit labels are 0 or 1");
    2 * (1 - a as usize) + (1 - b as usize)
}

/// Index of |i, j⟩ for qutrit labels i, j ∈ {1, 2, 3}.
pub fn qutrit_index(i: u8, j: u8) -> usize {
    assert!(
        (1..=3).contains(&i) && (1..=3).contains(&j),
        "qutrit labels are 1..=3"
    );
    3 * (i as usize - 1) + (j as usize - 1)
}

/// Amplitude vector from (index, amplitude) pairs.
pub fn ket(dim: usize, terms: &[(usize, f64)]) -> Vec<C64> {
    let mut v = vec![c(0.0); dim];
    for &(i, a) in terms {
        v[i] += c(a);
    }
    v
}
