//! Single trajectories sampled into measurement tables.

use anyhow::{anyhow, Context, Result};
use clap::ValueEnum;
use coldecay::states::{maximally_mixed, qutrit_werner, werner_qubit};
use coldecay::{
    evolve_to_stationary, CollectiveModel, DensityMatrix, Family, IntegratorConfig, MeasureReport,
};
use rayon::prelude::*;

use crate::table::{Field, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InitialState {
    /// Werner state r|Φ−⟩⟨Φ−| + (1−r)I/4 (needs --r).
    Werner1,
    /// Werner-like state r|Φ+⟩⟨Φ+| + (1−r)I/4 (needs --r).
    Werner2,
    /// Two-qubit maximally mixed state.
    Mixed,
    /// Two-qutrit Werner state (needs --eta).
    QutritWerner,
    /// Two-qutrit maximally mixed state.
    QutritMixed,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvolveRequest {
    pub initial: InitialState,
    pub r: Option<f64>,
    pub eta: Option<f64>,
    pub n_mean: f64,
    pub gamma: f64,
    pub dt: Option<f64>,
    pub t_max: Option<f64>,
}

impl EvolveRequest {
    pub fn new(initial: InitialState) -> Self {
        Self {
            initial,
            r: None,
            eta: None,
            n_mean: 0.0,
            gamma: 1.0,
            dt: None,
            t_max: None,
        }
    }

    fn model_and_state(&self) -> Result<(CollectiveModel, DensityMatrix)> {
        let need_r = || {
            self.r
                .ok_or_else(|| anyhow!("--r is required for this initial state"))
        };
        let qubits = || CollectiveModel::qubits(self.gamma, self.n_mean);
        let qutrits = || -> Result<CollectiveModel> {
            if self.n_mean != 0.0 {
                return Err(anyhow!("qutrit dynamics is only defined at --n-mean 0"));
            }
            Ok(CollectiveModel::qutrits(self.gamma)?)
        };
        Ok(match self.initial {
            InitialState::Werner1 => (qubits()?, werner_qubit(need_r()?, Family::Werner)?),
            InitialState::Werner2 => (qubits()?, werner_qubit(need_r()?, Family::WernerLike)?),
            InitialState::Mixed => (qubits()?, maximally_mixed(2, 2)?),
            InitialState::QutritWerner => {
                let eta = self
                    .eta
                    .ok_or_else(|| anyhow!("--eta is required for qutrit-werner"))?;
                (qutrits()?, qutrit_werner(eta)?)
            }
            InitialState::QutritMixed => (qutrits()?, maximally_mixed(3, 3)?),
        })
    }
}

pub struct EvolveOutcome {
    pub table: Table,
    pub converged: bool,
    pub final_time: f64,
}

/// Integrates until the state is stationary or `t_max` is reached. The last
/// row's status is `converged` or `not_converged`; earlier rows are
/// `transient`.
pub fn run_evolve(req: &EvolveRequest) -> Result<EvolveOutcome> {
    let (model, rho0) = req.model_and_state()?;
    let defaults = IntegratorConfig::for_model(&model);
    let cfg = IntegratorConfig {
        dt: req.dt.unwrap_or(defaults.dt),
        t_max: req.t_max.unwrap_or(defaults.t_max),
        ..defaults
    };
    let traj = evolve_to_stationary(&model, &rho0, &cfg).context("integration failed")?;
    let last = traj.samples.len() - 1;
    let final_status = if traj.converged {
        "converged"
    } else {
        "not_converged"
    };
    let rows = traj
        .samples
        .par_iter()
        .enumerate()
        .map(|(k, s)| {
            let m = MeasureReport::of(&s.state)?;
            Ok(vec![
                s.t.into(),
                m.concurrence.into(),
                m.negativity.into(),
                m.chsh_max.into(),
                m.linear_entropy.into(),
                m.singlet_fraction.into(),
                s.rhs_norm.into(),
                Field::Text(if k == last { final_status } else { "transient" }),
            ])
        })
        .collect::<coldecay::Result<Vec<_>>>()?;
    Ok(EvolveOutcome {
        table: Table {
            header: vec![
                "t",
                "concurrence",
                "negativity",
                "chsh_max",
                "linear_entropy",
                "singlet_fraction",
                "rhs_norm",
                "status",
            ],
            rows,
        },
        converged: traj.converged,
        final_time: traj.last().t,
    })
}
