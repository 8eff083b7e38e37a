//! Lindblad generators for collective decay and their time integration.
//!
//! Two qubits couple to a thermal reservoir with mean occupation N through
//! J± = σ±⊗I + I⊗σ±:
//!
//! ```text
//! dρ/dt = (N+1)γ/2 (2J−ρJ+ − J+J−ρ − ρJ+J−) + Nγ/2 (2J+ρJ− − J−J+ρ − ρJ−J+)
//! ```
//!
//! Two qutrits decay at zero temperature through L± = J±⊗I + I⊗J±:
//!
//! ```text
//! dρ/dt = γ (2L−ρL+ − L+L−ρ − ρL+L−)
//! ```
//!
//! Integration is fixed-step classical RK4. After every step the state is
//! re-Hermitized and its trace renormalised; the size of that correction is
//! tracked and a step whose correction exceeds [`MAX_DRIFT_CORRECTION`] is
//! reported as unstable.

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, DensityMatrix, ToleranceConfig};
use crate::operators::{collective, qutrit_lowering, sigma_minus};
use crate::states::check_n_mean;

pub const MAX_DRIFT_CORRECTION: f64 = 1e-6;

/// Two identical sites sharing one reservoir.
#[derive(Debug, Clone)]
pub struct CollectiveModel {
    local_dim: usize,
    gamma: f64,
    n_mean: f64,
    j_minus: ComplexMatrix,
    j_plus: ComplexMatrix,
    // J+J− and J−J+
    raise_lower: ComplexMatrix,
    lower_raise: ComplexMatrix,
    decay_rate: f64,
    pump_rate: f64,
}

impl CollectiveModel {
    pub fn new(local_dim: usize, gamma: f64, n_mean: f64) -> Result<Self> {
        if !(gamma.is_finite() && gamma > 0.0) {
            return Err(Error::OutOfRange(format!(
                "gamma must be positive, got {gamma}"
            )));
        }
        check_n_mean(n_mean)?;
        let (local_lower, decay_rate, pump_rate) = match local_dim {
            2 => (
                sigma_minus(),
                (n_mean + 1.0) * gamma / 2.0,
                n_mean * gamma / 2.0,
            ),
            3 if n_mean == 0.0 => (qutrit_lowering(), gamma, 0.0),
            3 => {
                return Err(Error::OutOfRange(format!(
                    "qutrit decay is defined at zero temperature only, got n_mean = {n_mean}"
                )))
            }
            d => return Err(Error::UnsupportedDims(d, d)),
        };
        let j_minus = collective(&local_lower);
        let j_plus = j_minus.dagger();
        Ok(Self {
            local_dim,
            gamma,
            n_mean,
            raise_lower: &j_plus * &j_minus,
            lower_raise: &j_minus * &j_plus,
            j_minus,
            j_plus,
            decay_rate,
            pump_rate,
        })
    }

    pub fn qubits(gamma: f64, n_mean: f64) -> Result<Self> {
        Self::new(2, gamma, n_mean)
    }

    pub fn qutrits(gamma: f64) -> Result<Self> {
        Self::new(3, gamma, 0.0)
    }

    pub fn local_dim(&self) -> usize {
        self.local_dim
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.local_dim, self.local_dim)
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn n_mean(&self) -> f64 {
        self.n_mean
    }

    pub fn j_minus(&self) -> &ComplexMatrix {
        &self.j_minus
    }

    pub fn j_plus(&self) -> &ComplexMatrix {
        &self.j_plus
    }

    /// Generator applied to an arbitrary operator of the right size.
    pub fn apply(&self, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
        let n = self.local_dim * self.local_dim;
        if rho.rows() != n || rho.cols() != n {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} operator for a {n}-dimensional model",
                rho.rows(),
                rho.cols()
            )));
        }
        Ok(self.apply_unchecked(rho))
    }

    fn apply_unchecked(&self, rho: &ComplexMatrix) -> ComplexMatrix {
        let jump = &(&self.j_minus * rho) * &self.j_plus;
        let anti = &(&self.raise_lower * rho) + &(rho * &self.raise_lower);
        let mut out = (&jump.scale(2.0) - &anti).scale(self.decay_rate);
        if self.pump_rate != 0.0 {
            let jump = &(&self.j_plus * rho) * &self.j_minus;
            let anti = &(&self.lower_raise * rho) + &(rho * &self.lower_raise);
            out = out.add_scaled(&(&jump.scale(2.0) - &anti), self.pump_rate);
        }
        out
    }
}

/// dρ/dt for a state of the model.
pub fn lindblad_rhs(model: &CollectiveModel, rho: &DensityMatrix) -> Result<ComplexMatrix> {
    if rho.dims() != model.dims() {
        return Err(Error::ShapeMismatch(format!(
            "state dims {:?} vs model dims {:?}",
            rho.dims(),
            model.dims()
        )));
    }
    model.apply(rho.matrix())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegratorConfig {
    /// Step size in units of 1/γ.
    pub dt: f64,
    pub t_max: f64,
    /// Relaxation stops once ‖dρ/dt‖_F < convergence_tol · γ.
    pub convergence_tol: f64,
    /// Steps between residual checks and trajectory samples.
    pub check_interval: usize,
}

impl IntegratorConfig {
    /// dt = 0.005/(γ(N+1)), t_max = 500/γ.
    pub fn for_model(model: &CollectiveModel) -> Self {
        Self {
            dt: 0.005 / (model.gamma * (model.n_mean + 1.0)),
            t_max: 500.0 / model.gamma,
            convergence_tol: 1e-10,
            check_interval: 20,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.dt.is_finite() && self.dt > 0.0) {
            return Err(Error::OutOfRange(format!(
                "dt must be positive, got {}",
                self.dt
            )));
        }
        if !(self.t_max.is_finite() && self.t_max >= 0.0) {
            return Err(Error::OutOfRange(format!(
                "t_max must be >= 0, got {}",
                self.t_max
            )));
        }
        if self.convergence_tol.is_nan() || self.convergence_tol <= 0.0 {
            return Err(Error::OutOfRange("convergence_tol must be positive".into()));
        }
        if self.check_interval == 0 {
            return Err(Error::OutOfRange("check_interval must be >= 1".into()));
        }
        Ok(())
    }
}

/// Step-by-step RK4 integration of one trajectory.
#[derive(Debug, Clone)]
pub struct Integrator<'a> {
    model: &'a CollectiveModel,
    state: ComplexMatrix,
    dt: f64,
    steps: u64,
    max_correction: f64,
}

impl<'a> Integrator<'a> {
    pub fn new(model: &'a CollectiveModel, rho0: &DensityMatrix, dt: f64) -> Result<Self> {
        if rho0.dims() != model.dims() {
            return Err(Error::ShapeMismatch(format!(
                "initial state dims {:?} vs model dims {:?}",
                rho0.dims(),
                model.dims()
            )));
        }
        if !(dt.is_finite() && dt > 0.0) {
            return Err(Error::OutOfRange(format!("dt must be positive, got {dt}")));
        }
        Ok(Self {
            model,
            state: rho0.matrix().clone(),
            dt,
            steps: 0,
            max_correction: 0.0,
        })
    }

    pub fn time(&self) -> f64 {
        self.steps as f64 * self.dt
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn state(&self) -> &ComplexMatrix {
        &self.state
    }

    /// Largest drift correction applied so far.
    pub fn max_correction(&self) -> f64 {
        self.max_correction
    }

    /// ‖dρ/dt‖_F at the current state.
    pub fn residual(&self) -> f64 {
        self.model.apply_unchecked(&self.state).frobenius_norm()
    }

    pub fn density(&self, tol: &ToleranceConfig) -> Result<DensityMatrix> {
        DensityMatrix::with_tolerance(self.state.clone(), self.model.dims(), tol)
    }

    pub fn step(&mut self) -> Result<()> {
        let f = |m: &ComplexMatrix| self.model.apply_unchecked(m);
        let h = self.dt;
        let rho = &self.state;
        let k1 = f(rho);
        let k2 = f(&rho.add_scaled(&k1, h / 2.0));
        let k3 = f(&rho.add_scaled(&k2, h / 2.0));
        let k4 = f(&rho.add_scaled(&k3, h));
        let incr = (&(&k1 + &k4) + &(&k2 + &k3).scale(2.0)).scale(h / 6.0);
        let next = rho + &incr;

        let herm = next.hermitian_part();
        let tr = herm.trace().re;
        let fixed = herm.scale(1.0 / tr);
        let correction = (&next - &fixed).frobenius_norm();
        let t = (self.steps + 1) as f64 * h;
        if !correction.is_finite() || correction > MAX_DRIFT_CORRECTION {
            return Err(Error::Unstable {
                t,
                correction,
                limit: MAX_DRIFT_CORRECTION,
            });
        }
        self.max_correction = self.max_correction.max(correction);
        self.state = fixed;
        self.steps += 1;
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct Sample {
    pub t: f64,
    pub state: DensityMatrix,
    pub rhs_norm: f64,
}

#[derive(Debug, Clone)]
pub struct Trajectory {
    pub samples: Vec<Sample>,
    pub max_correction: f64,
    /// Whether the last sample met the relaxation criterion.
    pub converged: bool,
}

impl Trajectory {
    pub fn last(&self) -> &Sample {
        self.samples
            .last()
            .expect("trajectory has at least one sample")
    }
}

fn number_of_steps(cfg: &IntegratorConfig) -> u64 {
    (cfg.t_max / cfg.dt - 1e-9).ceil().max(0.0) as u64
}

/// Integrates to `cfg.t_max`, sampling every `cfg.check_interval` steps and at
/// the final time. Every sample is validated against
/// [`ToleranceConfig::trajectory`].
pub fn evolve(
    model: &CollectiveModel,
    rho0: &DensityMatrix,
    cfg: &IntegratorConfig,
) -> Result<Trajectory> {
    integrate(model, rho0, cfg, false)
}

/// Like [`evolve`], but stops at the first sample meeting the relaxation
/// criterion of [`relax_to_stationary`]. Reaching `cfg.t_max` first is not an
/// error; check [`Trajectory::converged`].
pub fn evolve_to_stationary(
    model: &CollectiveModel,
    rho0: &DensityMatrix,
    cfg: &IntegratorConfig,
) -> Result<Trajectory> {
    integrate(model, rho0, cfg, true)
}

fn integrate(
    model: &CollectiveModel,
    rho0: &DensityMatrix,
    cfg: &IntegratorConfig,
    stop_when_stationary: bool,
) -> Result<Trajectory> {
    cfg.validate()?;
    let tol = ToleranceConfig::trajectory();
    let threshold = cfg.convergence_tol * model.gamma();
    let mut integ = Integrator::new(model, rho0, cfg.dt)?;
    let sample = |integ: &Integrator| -> Result<Sample> {
        Ok(Sample {
            t: integ.time(),
            state: integ.density(&tol)?,
            rhs_norm: integ.residual(),
        })
    };
    let total = number_of_steps(cfg);
    let mut samples = vec![sample(&integ)?];
    loop {
        if stop_when_stationary && samples.last().expect("nonempty").rhs_norm < threshold {
            break;
        }
        if integ.steps() >= total {
            break;
        }
        integ.step()?;
        if integ.steps() % cfg.check_interval as u64 == 0 || integ.steps() == total {
            samples.push(sample(&integ)?);
        }
    }
    let converged = samples.last().expect("nonempty").rhs_norm < threshold;
    Ok(Trajectory {
        samples,
        max_correction: integ.max_correction(),
        converged,
    })
}

/// Integrates until ‖dρ/dt‖_F < convergence_tol · γ and returns the state with
/// the time at which the criterion was first met.
pub fn relax_to_stationary(
    model: &CollectiveModel,
    rho0: &DensityMatrix,
    cfg: &IntegratorConfig,
) -> Result<(DensityMatrix, f64)> {
    cfg.validate()?;
    let threshold = cfg.convergence_tol * model.gamma();
    let mut integ = Integrator::new(model, rho0, cfg.dt)?;
    let total = number_of_steps(cfg);
    loop {
        let residual = integ.residual();
        if residual < threshold {
            let state = integ.density(&ToleranceConfig::default())?;
            return Ok((state, integ.time()));
        }
        if integ.steps() >= total {
            return Err(Error::NotConverged {
                t_max: cfg.t_max,
                residual,
            });
        }
        for _ in 0..cfg.check_interval {
            if integ.steps() >= total {
                break;
            }
            integ.step()?;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::frobenius_distance;
    use crate::operators::qubit_index;
    use crate::states::{
        bell_state, maximally_mixed, qutrit_stationary_mixed, qutrit_stationary_werner,
        qutrit_werner, stationary_qubit, werner_qubit, BellSign, Family,
    };

    fn basis_state(i: usize) -> DensityMatrix {
        let mut m = ComplexMatrix::zeros(4, 4);
        m[(i, i)] = crate::linalg::C64::new(1.0, 0.0);
        DensityMatrix::new(m, (2, 2)).unwrap()
    }

    #[test]
    fn model_construction() {
        let m = CollectiveModel::qubits(1.0, 0.5).unwrap();
        assert_eq!(m.j_plus(), &m.j_minus().dagger());
        assert!(CollectiveModel::new(3, 1.0, 0.1).is_err());
        assert!(CollectiveModel::new(4, 1.0, 0.0).is_err());
        assert!(CollectiveModel::qubits(0.0, 0.0).is_err());
        assert!(CollectiveModel::qubits(1.0, -0.1).is_err());
        assert_eq!(CollectiveModel::qutrits(2.0).unwrap().dims(), (3, 3));
    }

    #[test]
    fn dark_states_have_zero_rhs() {
        for n in [0.0, 0.7, 3.0] {
            let m = CollectiveModel::qubits(1.0, n).unwrap();
            let rhs = lindblad_rhs(&m, &bell_state(BellSign::Minus)).unwrap();
            assert!(rhs.frobenius_norm() < 1e-15);
        }
        let m = CollectiveModel::qubits(1.0, 0.0).unwrap();
        let ground = basis_state(qubit_index(0, 0));
        assert!(lindblad_rhs(&m, &ground).unwrap().frobenius_norm() < 1e-15);
    }

    #[test]
    fn excited_state_decays_at_rate_two_gamma() {
        // J+J−|11⟩ = 2|11⟩, so d⟨11|ρ|11⟩/dt = −(γ/2)(2+2) = −2γ.
        let gamma = 1.3;
        let m = CollectiveModel::qubits(gamma, 0.0).unwrap();
        let rhs = lindblad_rhs(&m, &basis_state(qubit_index(1, 1))).unwrap();
        assert!((rhs[(0, 0)].re + 2.0 * gamma).abs() < 1e-14);
        assert!(rhs.trace().norm() < 1e-14);
        assert!(rhs.hermiticity_defect() < 1e-15);
    }

    #[test]
    fn rhs_rejects_wrong_dims() {
        let m = CollectiveModel::qutrits(1.0).unwrap();
        assert!(lindblad_rhs(&m, &maximally_mixed(2, 2).unwrap()).is_err());
    }

    #[test]
    fn singlet_trajectory_is_constant() {
        let m = CollectiveModel::qubits(1.0, 1.0).unwrap();
        let rho0 = bell_state(BellSign::Minus);
        let cfg = IntegratorConfig {
            t_max: 2.0,
            ..IntegratorConfig::for_model(&m)
        };
        let traj = evolve(&m, &rho0, &cfg).unwrap();
        for s in &traj.samples {
            assert!(frobenius_distance(&s.state, &rho0).unwrap() < 1e-12);
        }
        assert!((traj.last().t - 2.0).abs() < 1e-12);
    }

    #[test]
    fn mixed_qubits_reach_closed_form() {
        let m = CollectiveModel::qubits(1.0, 0.0).unwrap();
        let cfg = IntegratorConfig {
            t_max: 50.0,
            ..IntegratorConfig::for_model(&m)
        };
        let traj = evolve(&m, &maximally_mixed(2, 2).unwrap(), &cfg).unwrap();
        let want = stationary_qubit(Family::Werner, 0.0, 0.0).unwrap();
        assert!(frobenius_distance(&traj.last().state, &want).unwrap() < 1e-8);
    }

    #[test]
    fn relaxation_matches_closed_forms() {
        let cases = [(Family::Werner, 0.8, 0.5), (Family::WernerLike, 0.3, 0.1)];
        for (family, r, n) in cases {
            let m = CollectiveModel::qubits(1.0, n).unwrap();
            let cfg = IntegratorConfig::for_model(&m);
            let (rho, t) =
                relax_to_stationary(&m, &werner_qubit(r, family).unwrap(), &cfg).unwrap();
            let want = stationary_qubit(family, r, n).unwrap();
            assert!(
                frobenius_distance(&rho, &want).unwrap() < 1e-8,
                "{family:?} r={r} N={n}"
            );
            assert!(t > 0.0);
        }
    }

    #[test]
    fn qutrit_relaxation() {
        let m = CollectiveModel::qutrits(1.0).unwrap();
        let cfg = IntegratorConfig::for_model(&m);
        let (rho, _) = relax_to_stationary(&m, &maximally_mixed(3, 3).unwrap(), &cfg).unwrap();
        assert!(frobenius_distance(&rho, &qutrit_stationary_mixed()).unwrap() < 1e-8);
        let (rho, _) = relax_to_stationary(&m, &qutrit_werner(2.0).unwrap(), &cfg).unwrap();
        assert!(frobenius_distance(&rho, &qutrit_stationary_werner(2.0).unwrap()).unwrap() < 1e-8);
    }

    #[test]
    fn relaxation_reports_timeout() {
        let m = CollectiveModel::qubits(1.0, 0.0).unwrap();
        let cfg = IntegratorConfig {
            t_max: 0.1,
            ..IntegratorConfig::for_model(&m)
        };
        let err = relax_to_stationary(&m, &maximally_mixed(2, 2).unwrap(), &cfg).unwrap_err();
        assert!(matches!(err, Error::NotConverged { .. }));
    }

    #[test]
    fn early_stopping_trajectory() {
        let m = CollectiveModel::qubits(1.0, 0.5).unwrap();
        let cfg = IntegratorConfig::for_model(&m);
        let rho0 = werner_qubit(0.5, Family::Werner).unwrap();
        let traj = evolve_to_stationary(&m, &rho0, &cfg).unwrap();
        assert!(traj.converged);
        assert!(traj.last().t < cfg.t_max);
        let want = stationary_qubit(Family::Werner, 0.5, 0.5).unwrap();
        assert!(frobenius_distance(&traj.last().state, &want).unwrap() < 1e-8);

        let short = IntegratorConfig { t_max: 0.5, ..cfg };
        let traj = evolve_to_stationary(&m, &rho0, &short).unwrap();
        assert!(!traj.converged);
        assert!((traj.last().t - 0.5).abs() < 1e-9);
    }

    #[test]
    fn oversized_step_is_reported() {
        let m = CollectiveModel::qubits(1.0, 3.0).unwrap();
        let cfg = IntegratorConfig {
            dt: 5.0,
            t_max: 100.0,
            ..IntegratorConfig::for_model(&m)
        };
        let err = evolve(&m, &maximally_mixed(2, 2).unwrap(), &cfg).unwrap_err();
        assert!(
            matches!(err, Error::Unstable { .. } | Error::InvalidDensity(_)),
            "{err}"
        );
    }
}
