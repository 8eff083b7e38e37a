//! Entanglement and nonlocality functionals.
//!
//! Every quantity has a generic route working on an arbitrary state through
//! eigendecompositions, and where a closed form exists for the stationary
//! states it is implemented separately from the state coefficients so the two
//! can be compared.

mod cubic;

use crate::error::{Error, Result};
use crate::linalg::{
    hermitian_eigenvalues, hermitian_eigs, kron, partial_transpose, DensityMatrix, Subsystem,
    ToleranceConfig,
};
use crate::operators::{pauli_y, paulis};
use crate::states::{check_n_mean, check_r, singlet_ket, stationary_coefficients, Eta, Family};

pub use cubic::real_roots as cubic_real_roots;

const SQRT_2: f64 = std::f64::consts::SQRT_2;

fn require_qubits(rho: &DensityMatrix) -> Result<()> {
    if rho.dims() == (2, 2) {
        Ok(())
    } else {
        Err(Error::UnsupportedDims(rho.dims().0, rho.dims().1))
    }
}

/// Wootters concurrence.
///
/// The λᵢ are square roots of the eigenvalues of the Hermitian matrix
/// √ρ ρ̃ √ρ with ρ̃ = (σy⊗σy) ρ* (σy⊗σy); it is similar to ρρ̃ and so shares
/// its spectrum.
pub fn concurrence(rho: &DensityMatrix) -> Result<f64> {
    require_qubits(rho)?;
    let eig = hermitian_eigs(rho)?;
    let sqrt_rho = eig.reconstruct(|x| x.max(0.0).sqrt());
    let yy = kron(&pauli_y(), &pauli_y());
    let flipped = &(&yy * &rho.conj()) * &yy;
    let m = &(&sqrt_rho * &flipped) * &sqrt_rho;
    let mut lambdas: Vec<f64> = hermitian_eigenvalues(&m.hermitian_part())?
        .into_iter()
        .map(|mu| mu.max(0.0).sqrt())
        .collect();
    lambdas.sort_by(|a, b| b.total_cmp(a));
    Ok((lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]).max(0.0))
}

/// Concurrence of the initial Werner or Werner-like state, max(0, (3r−1)/2).
pub fn werner_concurrence(r: f64) -> f64 {
    ((3.0 * r - 1.0) / 2.0).max(0.0)
}

/// Stationary concurrence from the printed closed forms.
pub fn analytic_concurrence(family: Family, r: f64, n: f64) -> Result<f64> {
    check_r(r)?;
    check_n_mean(n)?;
    let m = n * n + n;
    let denom = 4.0 * (3.0 * n * n + 3.0 * n + 1.0);
    let num = match family {
        Family::Werner => 1.0 + 3.0 * r + (18.0 * r - 6.0) * m,
        Family::WernerLike => 1.0 - r - (6.0 + 6.0 * r) * m,
    };
    Ok((num / denom).max(0.0))
}

/// r above which the Werner-family stationary state is entangled.
pub fn entanglement_threshold_werner(n: f64) -> f64 {
    let m = n * n + n;
    (6.0 * m - 1.0) / (18.0 * m + 3.0)
}

/// For the Werner-like family the stationary state is entangled iff
/// r < (1−6M)/(1+6M) with M = N(N+1), which requires N < (√15−3)/6.
/// Returns `None` outside that window.
pub fn entanglement_bound_werner_like(n: f64) -> Option<f64> {
    let m = n * n + n;
    if n < (15f64.sqrt() - 3.0) / 6.0 {
        Some((1.0 - 6.0 * m) / (1.0 + 6.0 * m))
    } else {
        None
    }
}

/// True when a reservoir at occupation `n` raises the concurrence of an
/// initial state with singlet fraction `f`.
pub fn enhancement_predicate(f: f64, n: f64) -> bool {
    let m = n * n + n;
    let upper_branch = 1.0 > f && f > (1.0 / 6.0f64).max(3.0 * m / (6.0 * m + 1.0));
    let lower_branch = f <= 1.0 / 6.0 && f > (9.0 * m + 2.0) / (36.0 * m + 14.0);
    upper_branch || lower_branch
}

/// ΔC = max(0, C_stationary − C_initial).
pub fn concurrence_increment(family: Family, r: f64, n: f64) -> Result<f64> {
    Ok((analytic_concurrence(family, r, n)? - werner_concurrence(r)).max(0.0))
}

/// Correlation matrix T_nm = Tr(ρ σn⊗σm).
pub fn correlation_matrix(rho: &DensityMatrix) -> Result<[[f64; 3]; 3]> {
    require_qubits(rho)?;
    let s = paulis();
    let mut t = [[0.0; 3]; 3];
    for (n, sn) in s.iter().enumerate() {
        for (m, sm) in s.iter().enumerate() {
            t[n][m] = rho.trace_product(&kron(sn, sm)).re;
        }
    }
    Ok(t)
}

/// Maximal CHSH expectation 2√(λ₁ + λ₂) over the two largest eigenvalues of TᵀT.
pub fn chsh_max(rho: &DensityMatrix) -> Result<f64> {
    let t = correlation_matrix(rho)?;
    let mut tt = crate::linalg::ComplexMatrix::zeros(3, 3);
    for i in 0..3 {
        for j in 0..3 {
            let v: f64 = (0..3).map(|k| t[k][i] * t[k][j]).sum();
            tt[(i, j)] = crate::linalg::C64::new(v, 0.0);
        }
    }
    let ev = hermitian_eigenvalues(&tt)?;
    Ok(2.0 * (ev[1] + ev[2]).max(0.0).sqrt())
}

/// Closed-form maximal CHSH value of the stationary state:
/// 2√(4c² + max(4c², (1 − 4p)²)) with c the |10⟩⟨01| coherence and p the
/// |10⟩ population.
pub fn analytic_chsh(family: Family, r: f64, n: f64) -> Result<f64> {
    let x = stationary_coefficients(family, r, n)?;
    let c2 = 4.0 * x.coherence * x.coherence;
    let z = (1.0 - 4.0 * x.pop_10).powi(2);
    Ok(2.0 * (c2 + c2.max(z)).sqrt())
}

/// r above which the Werner-family stationary state violates CHSH.
pub fn bell_violation_threshold(n: f64) -> Result<f64> {
    check_n_mean(n)?;
    let m = n * (n + 1.0);
    Ok((2.0 * SQRT_2 - 1.0 + 6.0 * SQRT_2 * m) / (3.0 + 12.0 * m))
}

/// M = 4/3 (1 − Tr ρ²).
pub fn linear_entropy(rho: &DensityMatrix) -> Result<f64> {
    require_qubits(rho)?;
    Ok(4.0 / 3.0 * (1.0 - rho.purity()))
}

/// 2 Σ|μᵢ| over the negative eigenvalues μᵢ of the partial transpose.
pub fn negativity(rho: &DensityMatrix) -> Result<f64> {
    let pt = partial_transpose(rho, Subsystem::A)?;
    let ev = hermitian_eigenvalues(&pt)?;
    Ok(2.0 * ev.iter().filter(|&&x| x < 0.0).map(|x| -x).sum::<f64>())
}

/// Smallest eigenvalue of the partial transpose.
pub fn min_partial_transpose_eigenvalue(rho: &DensityMatrix) -> Result<f64> {
    let pt = partial_transpose(rho, Subsystem::A)?;
    Ok(hermitian_eigenvalues(&pt)?[0])
}

/// Closed-form negativity of the stationary X-state.
pub fn analytic_negativity(family: Family, r: f64, n: f64) -> Result<f64> {
    let x = stationary_coefficients(family, r, n)?;
    let s = x.pop_11 + x.pop_00
        - ((x.pop_11 - x.pop_00).powi(2) + 4.0 * x.coherence * x.coherence).sqrt();
    Ok(0.5 * s.abs() - 0.5 * s)
}

/// Coefficients of the qutrit stationary negativity formula.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaCoefficients {
    pub zeta1: f64,
    pub zeta2: f64,
    pub zeta3: f64,
}

impl ZetaCoefficients {
    pub fn new(eta: Eta) -> Result<Self> {
        Ok(match eta.validate()? {
            Eta::Finite(eta) => Self {
                zeta1: (10.0 * eta - 5.0) / (24.0 * eta - 3.0),
                zeta2: (2.0 * eta - 1.0) / (72.0 * eta - 9.0),
                zeta3: (4.0 * eta + 1.0) / (16.0 * eta - 2.0),
            },
            Eta::Infinite => Self {
                zeta1: 10.0 / 24.0,
                zeta2: 2.0 / 72.0,
                zeta3: 4.0 / 16.0,
            },
        })
    }

    /// Coefficients (b, c, d) of x³ + b x² + c x + d.
    pub fn cubic(&self) -> (f64, f64, f64) {
        let (z1, z2, z3) = (self.zeta1, self.zeta2, self.zeta3);
        (-(z1 + z2), z1 * z2 - z2 * z2 - z3 * z3, z2 * z2 * z2)
    }
}

fn closed_form_negativity(eta: Eta) -> Result<f64> {
    let z = ZetaCoefficients::new(eta)?;
    let (b, c, d) = z.cubic();
    let kappa = cubic::real_roots(b, c, d)
        .into_iter()
        .next()
        .filter(|&x| x < 0.0)
        .ok_or(Error::NoNegativeRoot)?;
    Ok(2.0 * ((z.zeta3 * z.zeta3 + 4.0 * z.zeta2 * z.zeta2).sqrt() - z.zeta3) + 2.0 * kappa.abs())
}

/// Negativity of the stationary state of the qutrit Werner family from the
/// cubic-root formula.
pub fn qutrit_negativity_closed_form(eta: f64) -> Result<f64> {
    closed_form_negativity(Eta::Finite(eta))
}

/// η → ∞ limit of [`qutrit_negativity_closed_form`].
pub fn qutrit_negativity_closed_form_limit() -> f64 {
    closed_form_negativity(Eta::Infinite).expect("limit cubic has a negative root")
}

/// Tr(|Φ−⟩⟨Φ−| ρ).
pub fn singlet_fraction(rho: &DensityMatrix) -> Result<f64> {
    require_qubits(rho)?;
    Ok(rho.expectation(&singlet_ket()).re)
}

/// One row of measurements. Qubit-only quantities are `None` for qutrits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureReport {
    pub concurrence: Option<f64>,
    pub negativity: f64,
    pub chsh_max: Option<f64>,
    pub linear_entropy: Option<f64>,
    pub singlet_fraction: Option<f64>,
}

impl MeasureReport {
    pub fn of(rho: &DensityMatrix) -> Result<Self> {
        let negativity = negativity(rho)?;
        if rho.dims() != (2, 2) {
            return Ok(Self {
                concurrence: None,
                negativity,
                chsh_max: None,
                linear_entropy: None,
                singlet_fraction: None,
            });
        }
        Ok(Self {
            concurrence: Some(concurrence(rho)?),
            negativity,
            chsh_max: Some(chsh_max(rho)?),
            linear_entropy: Some(linear_entropy(rho)?),
            singlet_fraction: Some(singlet_fraction(rho)?),
        })
    }
}

/// NPT test with the default tolerance.
pub(crate) fn has_negative_partial_transpose(
    rho: &DensityMatrix,
    tol: &ToleranceConfig,
) -> Result<bool> {
    Ok(min_partial_transpose_eigenvalue(rho)? < -tol.npt)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{
        bell_state, maximally_mixed, qutrit_stationary_mixed, stationary_qubit, werner_qubit,
        BellSign,
    };

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn concurrence_examples() {
        assert!(concurrence(&maximally_mixed(2, 2).unwrap()).unwrap() < 1e-12);
        assert!(close(
            concurrence(&bell_state(BellSign::Minus)).unwrap(),
            1.0,
            1e-12
        ));
        assert!(close(
            concurrence(&bell_state(BellSign::Plus)).unwrap(),
            1.0,
            1e-12
        ));
        let w = werner_qubit(0.8, Family::Werner).unwrap();
        assert!(close(concurrence(&w).unwrap(), 0.7, 1e-12));
        assert!(concurrence(&maximally_mixed(3, 3).unwrap()).is_err());
    }

    #[test]
    fn analytic_concurrence_examples() {
        assert!(close(
            analytic_concurrence(Family::Werner, 0.0, 0.0).unwrap(),
            0.25,
            1e-15
        ));
        for n in [0.0, 0.4, 2.5] {
            assert!(close(
                analytic_concurrence(Family::Werner, 1.0, n).unwrap(),
                1.0,
                1e-14
            ));
        }
        // 1 - 6·0.24 < 0 at N = 0.2, r = 0
        assert_eq!(
            analytic_concurrence(Family::WernerLike, 0.0, 0.2).unwrap(),
            0.0
        );
        assert!(0.2 > (15f64.sqrt() - 3.0) / 6.0);
        assert!(analytic_concurrence(Family::Werner, 1.5, 0.0).is_err());
    }

    #[test]
    fn enhancement_examples() {
        assert!(enhancement_predicate(0.6, 5.0));
        for n in [0.0, 1.0, 10.0] {
            assert!(!enhancement_predicate(1.0, n));
        }
        // lower branch at N = 0: 1/6 > 2/14
        assert!(enhancement_predicate(1.0 / 6.0, 0.0));
    }

    #[test]
    fn increment_examples() {
        assert!(close(
            concurrence_increment(Family::Werner, 0.0, 0.0).unwrap(),
            0.25,
            1e-15
        ));
        assert_eq!(
            concurrence_increment(Family::Werner, 1.0, 0.0).unwrap(),
            0.0
        );
        assert_eq!(
            concurrence_increment(Family::WernerLike, 1.0, 0.0).unwrap(),
            0.0
        );
    }

    #[test]
    fn chsh_examples() {
        assert!(close(
            chsh_max(&bell_state(BellSign::Minus)).unwrap(),
            2.0 * SQRT_2,
            1e-12
        ));
        assert!(chsh_max(&maximally_mixed(2, 2).unwrap()).unwrap() < 1e-12);
        for r in [0.2, 0.5, 0.9] {
            let w = werner_qubit(r, Family::Werner).unwrap();
            assert!(close(chsh_max(&w).unwrap(), 2.0 * SQRT_2 * r, 1e-12));
        }
        assert!(close(
            analytic_chsh(Family::Werner, 1.0, 0.0).unwrap(),
            2.0 * SQRT_2,
            1e-14
        ));
        assert!(analytic_chsh(Family::Werner, 0.65, 0.0).unwrap() > 2.0);
    }

    #[test]
    fn bell_threshold_values() {
        let t0 = bell_violation_threshold(0.0).unwrap();
        assert!(close(t0, (2.0 * SQRT_2 - 1.0) / 3.0, 1e-15));
        assert!(close(t0, 0.60948, 1e-5));
        assert!(close(
            bell_violation_threshold(1e6).unwrap(),
            SQRT_2 / 2.0,
            1e-9
        ));
        let mut prev = t0;
        for k in 1..50 {
            let t = bell_violation_threshold(k as f64 * 0.1).unwrap();
            assert!(t >= prev);
            prev = t;
        }
    }

    #[test]
    fn linear_entropy_examples() {
        assert!(linear_entropy(&bell_state(BellSign::Plus)).unwrap().abs() < 1e-14);
        assert!(close(
            linear_entropy(&maximally_mixed(2, 2).unwrap()).unwrap(),
            1.0,
            1e-14
        ));
        for r in [0.0, 0.3, 0.8] {
            let c = (1.0 + 3.0 * r) / 4.0;
            let rho = stationary_qubit(Family::Werner, r, 0.0).unwrap();
            assert!(close(
                linear_entropy(&rho).unwrap(),
                8.0 / 3.0 * c * (1.0 - c),
                1e-14
            ));
        }
    }

    #[test]
    fn negativity_examples() {
        assert!(close(
            negativity(&bell_state(BellSign::Minus)).unwrap(),
            1.0,
            1e-12
        ));
        let want = (97f64.sqrt() - 8.0) / 27.0;
        assert!(close(
            negativity(&qutrit_stationary_mixed()).unwrap(),
            want,
            1e-12
        ));
        assert!(negativity(&maximally_mixed(3, 3).unwrap()).unwrap() < 1e-14);
        assert!(close(
            analytic_negativity(Family::Werner, 1.0, 0.0).unwrap(),
            1.0,
            1e-14
        ));
        let rho = stationary_qubit(Family::Werner, 0.5, 0.5).unwrap();
        assert!(close(
            analytic_negativity(Family::Werner, 0.5, 0.5).unwrap(),
            negativity(&rho).unwrap(),
            1e-10
        ));
        assert_eq!(
            analytic_negativity(Family::WernerLike, 0.0, 1.0).unwrap(),
            0.0
        );
    }

    #[test]
    fn qutrit_closed_form_endpoints() {
        assert!(close(
            qutrit_negativity_closed_form(0.5).unwrap(),
            1.0,
            1e-12
        ));
        let lim = qutrit_negativity_closed_form_limit();
        assert!(close(lim, 0.2043, 1e-3), "{lim}");
        assert!(qutrit_negativity_closed_form(0.3).is_err());
    }

    #[test]
    fn singlet_fraction_examples() {
        for r in [0.0, 0.4, 1.0] {
            let f1 = singlet_fraction(&werner_qubit(r, Family::Werner).unwrap()).unwrap();
            let f2 = singlet_fraction(&werner_qubit(r, Family::WernerLike).unwrap()).unwrap();
            assert!(close(f1, (1.0 + 3.0 * r) / 4.0, 1e-15));
            assert!(close(f2, (1.0 - r) / 4.0, 1e-15));
        }
        let mut ground = crate::linalg::ComplexMatrix::zeros(4, 4);
        ground[(3, 3)] = crate::linalg::C64::new(1.0, 0.0);
        let ground = DensityMatrix::new(ground, (2, 2)).unwrap();
        assert_eq!(singlet_fraction(&ground).unwrap(), 0.0);
    }

    #[test]
    fn report_shapes() {
        let q = MeasureReport::of(&bell_state(BellSign::Minus)).unwrap();
        assert!(q.concurrence.is_some() && q.singlet_fraction.is_some());
        let t = MeasureReport::of(&qutrit_stationary_mixed()).unwrap();
        assert!(t.concurrence.is_none() && t.chsh_max.is_none());
        assert!(t.negativity > 0.0);
    }

    #[test]
    fn entanglement_thresholds() {
        assert!(close(entanglement_threshold_werner(0.0), -1.0 / 3.0, 1e-15));
        assert!(entanglement_bound_werner_like(0.0).unwrap() == 1.0);
        assert!(entanglement_bound_werner_like(0.2).is_none());
    }
}
