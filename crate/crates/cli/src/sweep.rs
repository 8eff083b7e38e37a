//! Parameter sweeps over the closed-form stationary states.

use anyhow::{bail, ensure, Result};
use clap::ValueEnum;
use coldecay::measures::{
    analytic_chsh, analytic_concurrence, bell_violation_threshold, concurrence_increment,
    entanglement_bound_werner_like, entanglement_threshold_werner, linear_entropy,
    qutrit_negativity_closed_form, werner_concurrence,
};
use coldecay::states::{qutrit_stationary_werner, stationary_qubit, werner_qubit};
use coldecay::verify::grid;
use coldecay::Family;
use rayon::prelude::*;

use crate::table::{Field, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    /// Stationary concurrence C1 over (r, N), Werner input.
    Fig1,
    /// Stationary concurrence C2 over (r, N), Werner-like input.
    Fig2,
    /// Concurrence increment over (r, N), Werner input.
    Fig3,
    /// Concurrence increment over (r, N), Werner-like input.
    Fig4,
    /// Maximal CHSH value over (r, N), Werner input.
    Fig5,
    /// Concurrence against linear entropy, Werner input.
    Fig6,
    /// Concurrence against linear entropy, Werner-like input.
    Fig7,
    /// Qutrit stationary negativity against η.
    Fig8,
    /// Entanglement and Bell thresholds in r against N.
    Thresholds,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis {
    pub min: f64,
    pub max: f64,
    pub steps: usize,
}

impl Axis {
    pub const fn new(min: f64, max: f64, steps: usize) -> Self {
        Self { min, max, steps }
    }

    pub fn points(&self) -> Vec<f64> {
        grid(self.min, self.max, self.steps)
    }

    fn validate(&self, name: &str, lo: f64, hi: f64) -> Result<()> {
        ensure!(
            self.steps >= 2,
            "{name}-steps must be at least 2, got {}",
            self.steps
        );
        ensure!(
            self.min.is_finite() && self.max.is_finite() && self.min <= self.max,
            "{name} range [{}, {}] is empty or not finite",
            self.min,
            self.max
        );
        ensure!(
            self.min >= lo && self.max <= hi,
            "{name} range [{}, {}] lies outside [{lo}, {hi}]",
            self.min,
            self.max
        );
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRequest {
    pub target: Target,
    pub r: Axis,
    pub n: Axis,
    pub eta: Axis,
}

impl SweepRequest {
    /// Surfaces use a 50×50 grid, curves 200 points. `fig6` and `fig7` trace one
    /// curve in N for each of 11 values of r.
    pub fn with_defaults(target: Target) -> Self {
        let (r_steps, n_steps) = match target {
            Target::Fig6 | Target::Fig7 => (11, 200),
            Target::Thresholds => (2, 200),
            _ => (50, 50),
        };
        Self {
            target,
            r: Axis::new(0.0, 1.0, r_steps),
            n: Axis::new(0.0, 3.0, n_steps),
            eta: Axis::new(0.5, 20.0, 200),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self.target {
            Target::Fig8 => self.eta.validate("eta", 0.5, f64::MAX),
            Target::Thresholds => self.n.validate("n", 0.0, f64::MAX),
            _ => {
                self.r.validate("r", 0.0, 1.0)?;
                self.n.validate("n", 0.0, f64::MAX)
            }
        }
    }
}

fn surface(
    req: &SweepRequest,
    family: Family,
    value: &'static str,
    f: fn(Family, f64, f64) -> coldecay::Result<f64>,
) -> Result<Table> {
    let points: Vec<(f64, f64)> = req
        .r
        .points()
        .into_iter()
        .flat_map(|r| req.n.points().into_iter().map(move |n| (r, n)))
        .collect();
    let rows = points
        .into_par_iter()
        .map(|(r, n)| {
            stationary_qubit(family, r, n)?;
            Ok(vec![r.into(), n.into(), f(family, r, n)?.into()])
        })
        .collect::<coldecay::Result<Vec<_>>>()?;
    Ok(Table {
        header: vec!["r", "n_mean", value],
        rows,
    })
}

fn mixedness(req: &SweepRequest, family: Family) -> Result<Table> {
    let points: Vec<(f64, f64)> = req
        .r
        .points()
        .into_iter()
        .flat_map(|r| req.n.points().into_iter().map(move |n| (r, n)))
        .collect();
    let rows = points
        .into_par_iter()
        .map(|(r, n)| {
            let rho = stationary_qubit(family, r, n)?;
            let werner = werner_qubit(r, Family::Werner)?;
            Ok(vec![
                n.into(),
                r.into(),
                linear_entropy(&rho)?.into(),
                analytic_concurrence(family, r, n)?.into(),
                linear_entropy(&werner)?.into(),
                werner_concurrence(r).into(),
            ])
        })
        .collect::<coldecay::Result<Vec<_>>>()?;
    Ok(Table {
        header: vec![
            "n_mean",
            "r",
            "linear_entropy",
            "concurrence",
            "werner_linear_entropy",
            "werner_concurrence",
        ],
        rows,
    })
}

fn qutrit_negativity(req: &SweepRequest) -> Result<Table> {
    let rows = req
        .eta
        .points()
        .into_par_iter()
        .map(|eta| {
            qutrit_stationary_werner(eta)?;
            Ok(vec![eta.into(), qutrit_negativity_closed_form(eta)?.into()])
        })
        .collect::<coldecay::Result<Vec<_>>>()?;
    Ok(Table {
        header: vec!["eta", "negativity"],
        rows,
    })
}

/// `r_entangle_case1` and `r_bell` are the values of r above which the
/// Werner-input stationary state is entangled or violates CHSH. For the
/// Werner-like input the state is entangled for r below
/// `r_entangle_case2_max`, which exists only while `case2_window` is true.
fn thresholds(req: &SweepRequest) -> Result<Table> {
    let rows = req
        .n
        .points()
        .into_par_iter()
        .map(|n| {
            let window = entanglement_bound_werner_like(n);
            Ok(vec![
                n.into(),
                entanglement_threshold_werner(n).into(),
                bell_violation_threshold(n)?.into(),
                window.into(),
                Field::Text(if window.is_some() { "true" } else { "false" }),
            ])
        })
        .collect::<coldecay::Result<Vec<_>>>()?;
    Ok(Table {
        header: vec![
            "n_mean",
            "r_entangle_case1",
            "r_bell",
            "r_entangle_case2_max",
            "case2_window",
        ],
        rows,
    })
}

/// Rows are ordered by grid index: r outer, N inner for surfaces.
pub fn run_sweep(req: &SweepRequest) -> Result<Table> {
    req.validate()?;
    let table = match req.target {
        Target::Fig1 => surface(req, Family::Werner, "c1", analytic_concurrence)?,
        Target::Fig2 => surface(req, Family::WernerLike, "c2", analytic_concurrence)?,
        Target::Fig3 => surface(req, Family::Werner, "delta_c1", concurrence_increment)?,
        Target::Fig4 => surface(req, Family::WernerLike, "delta_c2", concurrence_increment)?,
        Target::Fig5 => surface(req, Family::Werner, "b1", analytic_chsh)?,
        Target::Fig6 => mixedness(req, Family::Werner)?,
        Target::Fig7 => mixedness(req, Family::WernerLike)?,
        Target::Fig8 => qutrit_negativity(req)?,
        Target::Thresholds => thresholds(req)?,
    };
    if table.rows.is_empty() {
        bail!("sweep produced no rows");
    }
    Ok(table)
}
