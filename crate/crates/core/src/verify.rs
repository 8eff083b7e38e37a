//! The invariant suite: every module's properties evaluated on fixed grids and
//! seeded random samples, each reported with its worst deviation.
//!
//! Checks come in two flavours. Numeric checks compare a maximum deviation
//! against a tolerance, which [`Verifier::tolerance_override`] can replace.
//! Count checks tally violations of a predicate and pass only at zero.

use std::f64::consts::SQRT_2;
use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::distillation::{is_npt, project_to_qubit_subspace};
use crate::dynamics::{evolve, relax_to_stationary, CollectiveModel, IntegratorConfig, Trajectory};
use crate::error::Result;
use crate::linalg::{
    frobenius_distance, hermitian_eigs, is_valid_density, kron, partial_transpose_matrix,
    ComplexMatrix, DensityMatrix, Subsystem, ToleranceConfig, C64,
};
use crate::measures::{
    analytic_chsh, analytic_concurrence, analytic_negativity, chsh_max, concurrence,
    concurrence_increment, enhancement_predicate, entanglement_threshold_werner, linear_entropy,
    negativity, qutrit_negativity_closed_form, qutrit_negativity_closed_form_limit,
};
use crate::operators::{qubit_index, qutrit_index};
use crate::states::{
    bell_state, initial_singlet_fraction, maximally_mixed, qutrit_stationary_mixed,
    qutrit_stationary_weights, qutrit_stationary_werner, qutrit_stationary_werner_limit,
    qutrit_werner, singlet_ket, stationary_qubit, werner_qubit, BellSign, Eta, Family,
};

/// Constructor for the closed-form qubit stationary state under test.
pub type StationaryFn = fn(Family, f64, f64) -> Result<DensityMatrix>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Criterion {
    /// Passes when the deviation is at most the tolerance.
    Numeric(f64),
    /// Passes when no violation was counted.
    Count,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub module: &'static str,
    pub name: &'static str,
    /// Worst deviation, or number of violations for count checks.
    pub deviation: f64,
    pub criterion: Criterion,
    pub passed: bool,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        match self.criterion {
            Criterion::Numeric(tol) => write!(
                f,
                "[{status}] {}::{}  max_deviation={:.3e}  tol={:.0e}",
                self.module, self.name, self.deviation, tol
            ),
            Criterion::Count => write!(
                f,
                "[{status}] {}::{}  violations={}",
                self.module, self.name, self.deviation
            ),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Verifier {
    pub stationary: StationaryFn,
    pub tolerance_override: Option<f64>,
    pub seed: u64,
}

impl Default for Verifier {
    fn default() -> Self {
        Self {
            stationary: stationary_qubit,
            tolerance_override: None,
            seed: 0x5eed,
        }
    }
}

type Group = fn(&Verifier) -> Vec<CheckResult>;

const GROUPS: &[Group] = &[
    linalg_checks,
    state_checks,
    stationarity_checks,
    trajectory_checks,
    relaxation_checks,
    oracle_checks,
    qutrit_checks,
    random_state_checks,
    threshold_checks,
    distillation_checks,
];

impl Verifier {
    pub fn with_tolerance(tol: f64) -> Self {
        Self {
            tolerance_override: Some(tol),
            ..Self::default()
        }
    }

    /// Runs every check; result order is fixed regardless of scheduling.
    pub fn run(&self) -> Vec<CheckResult> {
        GROUPS
            .par_iter()
            .map(|g| g(self))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    }

    fn numeric(
        &self,
        module: &'static str,
        name: &'static str,
        deviation: f64,
        tol: f64,
    ) -> CheckResult {
        let tol = self.tolerance_override.unwrap_or(tol);
        CheckResult {
            module,
            name,
            deviation,
            criterion: Criterion::Numeric(tol),
            passed: deviation <= tol,
        }
    }

    fn count(&self, module: &'static str, name: &'static str, violations: usize) -> CheckResult {
        CheckResult {
            module,
            name,
            deviation: violations as f64,
            criterion: Criterion::Count,
            passed: violations == 0,
        }
    }

    fn rng(&self, stream: u64) -> StdRng {
        StdRng::seed_from_u64(self.seed ^ stream.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }

    fn stationary(&self, family: Family, r: f64, n: f64) -> Option<DensityMatrix> {
        (self.stationary)(family, r, n).ok()
    }
}

/// Largest value, treating NaN as infinite so failures cannot hide.
fn worst(it: impl IntoIterator<Item = f64>) -> f64 {
    it.into_iter()
        .map(|x| if x.is_nan() { f64::INFINITY } else { x })
        .fold(0.0, f64::max)
}

pub fn grid(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    if steps == 1 {
        return vec![lo];
    }
    (0..steps)
        .map(|k| lo + (hi - lo) * k as f64 / (steps - 1) as f64)
        .collect()
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| {
        C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    })
}

pub fn random_hermitian(rng: &mut impl Rng, n: usize) -> ComplexMatrix {
    random_matrix(rng, n, n).hermitian_part()
}

/// G G† / Tr(G G†) with G of shape d×rank.
pub fn random_density(rng: &mut impl Rng, dims: (usize, usize), rank: usize) -> DensityMatrix {
    let d = dims.0 * dims.1;
    let g = random_matrix(rng, d, rank.clamp(1, d));
    let m = &g * &g.dagger();
    let tr = m.trace().re;
    DensityMatrix::new(m.scale(1.0 / tr), dims).expect("Gram matrix is a state")
}

fn linalg_checks(v: &Verifier) -> Vec<CheckResult> {
    let mut rng = v.rng(1);
    let mut kron_dev: f64 = 0.0;
    for _ in 0..100 {
        let dims: Vec<usize> = (0..3).map(|_| rng.gen_range(2..=3)).collect();
        let a = random_matrix(&mut rng, dims[0], dims[0]);
        let b = random_matrix(&mut rng, dims[1], dims[1]);
        let c = random_matrix(&mut rng, dims[2], dims[2]);
        let left = kron(&kron(&a, &b), &c);
        let right = kron(&a, &kron(&b, &c));
        kron_dev = kron_dev.max((&left - &right).max_abs_entry());
    }

    let mut trace_dev: f64 = 0.0;
    let mut residual_dev: f64 = 0.0;
    for _ in 0..200 {
        let n = rng.gen_range(1..=9);
        let h = random_hermitian(&mut rng, n);
        let Ok(e) = hermitian_eigs(&h) else {
            trace_dev = f64::INFINITY;
            continue;
        };
        let s1: f64 = e.values.iter().sum();
        let s2: f64 = e.values.iter().map(|x| x * x).sum();
        trace_dev = trace_dev
            .max((s1 - h.trace().re).abs())
            .max((s2 - h.trace_product(&h).re).abs());
        for k in 0..n {
            let vk = e.vector(k);
            let hv = h.mul_vec(&vk);
            let r = hv
                .iter()
                .zip(&vk)
                .map(|(a, b)| (a - b * e.values[k]).norm_sqr())
                .sum::<f64>()
                .sqrt();
            residual_dev = residual_dev.max(r);
        }
    }

    let mut involution_dev: f64 = 0.0;
    let mut pt_trace_dev: f64 = 0.0;
    for _ in 0..100 {
        let dims = if rng.gen_bool(0.5) { (2, 2) } else { (3, 3) };
        let rank = rng.gen_range(1..=dims.0 * dims.1);
        let rho = random_density(&mut rng, dims, rank);
        for sub in [Subsystem::A, Subsystem::B] {
            let pt = partial_transpose_matrix(&rho, dims, sub).unwrap();
            let back = partial_transpose_matrix(&pt, dims, sub).unwrap();
            involution_dev = involution_dev.max(frobenius_distance(&back, &rho).unwrap());
            pt_trace_dev = pt_trace_dev.max((pt.trace() - rho.trace()).norm());
        }
    }

    vec![
        v.numeric("linalg", "kron_associativity", kron_dev, 1e-12),
        v.numeric("linalg", "eigs_trace_identities", trace_dev, 1e-10),
        v.numeric("linalg", "eigs_residual", residual_dev, 1e-10),
        v.numeric(
            "linalg",
            "partial_transpose_involution",
            involution_dev,
            0.0,
        ),
        v.numeric("linalg", "partial_transpose_trace", pt_trace_dev, 1e-14),
    ]
}

fn x_state_leak(rho: &ComplexMatrix) -> f64 {
    let (i10, i01) = (qubit_index(1, 0), qubit_index(0, 1));
    let mut leak: f64 = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            let allowed = i == j || (i == i10 && j == i01) || (i == i01 && j == i10);
            if !allowed {
                leak = leak.max(rho[(i, j)].norm());
            }
        }
    }
    leak
}

fn qubit_grid() -> impl Iterator<Item = (Family, f64, f64)> {
    let rs = grid(0.0, 1.0, 10);
    let ns = grid(0.0, 3.0, 10);
    [Family::Werner, Family::WernerLike]
        .into_iter()
        .flat_map(move |family| {
            let ns = ns.clone();
            rs.clone()
                .into_iter()
                .flat_map(move |r| ns.clone().into_iter().map(move |n| (family, r, n)))
        })
}

fn state_checks(v: &Verifier) -> Vec<CheckResult> {
    let tol = ToleranceConfig::default();
    let mut rng = v.rng(2);
    let mut invalid = 0usize;
    let mut check = |m: Option<&ComplexMatrix>| {
        if !m.is_some_and(|m| is_valid_density(m, &tol).valid) {
            invalid += 1;
        }
    };
    check(Some(&bell_state(BellSign::Plus)));
    check(Some(&bell_state(BellSign::Minus)));
    check(maximally_mixed(2, 2).ok().as_deref());
    check(maximally_mixed(3, 3).ok().as_deref());
    check(Some(&qutrit_stationary_mixed()));
    check(Some(&qutrit_stationary_werner_limit()));
    for r in grid(0.0, 1.0, 11) {
        check(werner_qubit(r, Family::Werner).ok().as_deref());
        check(werner_qubit(r, Family::WernerLike).ok().as_deref());
    }
    for eta in [0.5, 0.6, 1.0, 2.0, 5.0, 10.0, 100.0, 1e4] {
        check(qutrit_werner(eta).ok().as_deref());
        check(qutrit_stationary_werner(eta).ok().as_deref());
    }
    for (family, r, n) in qubit_grid() {
        check(v.stationary(family, r, n).as_ref().map(|d| d.matrix()));
    }

    let mut fraction_dev: f64 = 0.0;
    for _ in 0..50 {
        let r: f64 = rng.gen_range(0.0..=1.0);
        for family in [Family::Werner, Family::WernerLike] {
            let rho = werner_qubit(r, family).unwrap();
            let f = rho.expectation(&singlet_ket()).re;
            fraction_dev = fraction_dev.max((f - initial_singlet_fraction(family, r)).abs());
        }
    }

    let mut leak: f64 = 0.0;
    let mut conserved: f64 = 0.0;
    for (family, r, n) in qubit_grid() {
        match v.stationary(family, r, n) {
            Some(rho) => {
                leak = leak.max(x_state_leak(&rho));
                let f = rho.expectation(&singlet_ket()).re;
                conserved = conserved.max((f - initial_singlet_fraction(family, r)).abs());
            }
            None => {
                leak = f64::INFINITY;
                conserved = f64::INFINITY;
            }
        }
    }

    // Werner symmetry: invariant under U⊗U for level permutations U and under SWAP.
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let swap = qutrit_swap();
    let mut symmetry: f64 = 0.0;
    for eta in [0.5, 1.0, 2.0, 7.5, 100.0] {
        let rho = qutrit_werner(eta).unwrap();
        let swapped = &(&swap * rho.matrix()) * &swap;
        symmetry = symmetry.max(frobenius_distance(&swapped, &rho).unwrap());
        for p in &perms {
            let u = ComplexMatrix::from_fn(3, 3, |a, b| {
                C64::new(if a == p[b] { 1.0 } else { 0.0 }, 0.0)
            });
            let uu = kron(&u, &u);
            let relabeled = &(&uu * rho.matrix()) * &uu.dagger();
            symmetry = symmetry.max(frobenius_distance(&relabeled, &rho).unwrap());
        }
    }

    vec![
        v.count("states", "constructors_valid", invalid),
        v.numeric("states", "werner_singlet_fraction", fraction_dev, 1e-12),
        v.numeric("states", "stationary_x_structure", leak, 0.0),
        v.numeric("states", "stationary_singlet_fraction", conserved, 1e-12),
        v.numeric("states", "qutrit_werner_symmetry", symmetry, 1e-14),
    ]
}

fn stationarity_checks(v: &Verifier) -> Vec<CheckResult> {
    let mut qubit_dev: f64 = 0.0;
    for (family, r, n) in qubit_grid() {
        let dev = v
            .stationary(family, r, n)
            .and_then(|rho| {
                let model = CollectiveModel::qubits(1.0, n).ok()?;
                model.apply(&rho).ok().map(|d| d.frobenius_norm())
            })
            .unwrap_or(f64::INFINITY);
        qubit_dev = qubit_dev.max(dev);
    }
    let model = CollectiveModel::qutrits(1.0).unwrap();
    let mut qutrit_states = vec![qutrit_stationary_mixed(), qutrit_stationary_werner_limit()];
    for eta in [0.5, 0.75, 2.0, 10.0, 1e3] {
        qutrit_states.push(qutrit_stationary_werner(eta).unwrap());
    }
    let qutrit_dev = worst(
        qutrit_states
            .iter()
            .map(|rho| model.apply(rho).unwrap().frobenius_norm()),
    );
    vec![
        v.numeric(
            "dynamics",
            "qubit_closed_form_is_stationary",
            qubit_dev,
            1e-10,
        ),
        v.numeric(
            "dynamics",
            "qutrit_closed_form_is_stationary",
            qutrit_dev,
            1e-10,
        ),
    ]
}

struct TrajectoryStats {
    trace: f64,
    hermiticity: f64,
    min_eigenvalue: f64,
    conserved_drift: f64,
}

fn qutrit_swap() -> ComplexMatrix {
    ComplexMatrix::from_fn(9, 9, |a, b| {
        let (i, j) = (a / 3, a % 3);
        C64::new(if b == j * 3 + i { 1.0 } else { 0.0 }, 0.0)
    })
}

/// Projector (I − SWAP)/2 onto the antisymmetric two-qutrit subspace, which the
/// collective lowering operator leaves invariant.
fn qutrit_antisymmetric_projector() -> ComplexMatrix {
    (&ComplexMatrix::identity(9) - &qutrit_swap()).scale(0.5)
}

fn trajectory_stats(traj: &Trajectory, conserved: &ComplexMatrix) -> TrajectoryStats {
    let mut stats = TrajectoryStats {
        trace: 0.0,
        hermiticity: 0.0,
        min_eigenvalue: f64::INFINITY,
        conserved_drift: 0.0,
    };
    let first = traj.samples[0].state.trace_product(conserved).re;
    for s in &traj.samples {
        let report = is_valid_density(&s.state, &ToleranceConfig::trajectory());
        stats.trace = stats.trace.max(report.trace_defect);
        stats.hermiticity = stats.hermiticity.max(report.hermiticity_defect);
        stats.min_eigenvalue = stats.min_eigenvalue.min(report.min_eigenvalue);
        let f = s.state.trace_product(conserved).re;
        stats.conserved_drift = stats.conserved_drift.max((f - first).abs());
    }
    stats
}

fn trajectory_checks(v: &Verifier) -> Vec<CheckResult> {
    let mut rng = v.rng(4);
    let mut runs: Vec<(CollectiveModel, DensityMatrix, bool)> = Vec::new();
    for family in [Family::Werner, Family::WernerLike] {
        for r in [0.0, 0.5, 1.0] {
            for n in [0.0, 1.0] {
                let m = CollectiveModel::qubits(1.0, n).unwrap();
                runs.push((m, werner_qubit(r, family).unwrap(), true));
            }
        }
    }
    for n in [0.0, 0.5] {
        let m = CollectiveModel::qubits(1.0, n).unwrap();
        runs.push((m, random_density(&mut rng, (2, 2), 4), true));
    }
    let qutrits = CollectiveModel::qutrits(1.0).unwrap();
    runs.push((qutrits.clone(), maximally_mixed(3, 3).unwrap(), false));
    runs.push((qutrits.clone(), qutrit_werner(2.0).unwrap(), false));
    runs.push((qutrits, random_density(&mut rng, (3, 3), 9), false));

    let singlet = ComplexMatrix::projector(&singlet_ket());
    let anti = qutrit_antisymmetric_projector();
    let (mut trace, mut herm, mut min_eig, mut singlet_drift, mut anti_drift) =
        (0.0f64, 0.0f64, f64::INFINITY, 0.0f64, 0.0f64);
    for (model, rho0, is_qubit) in &runs {
        let cfg = IntegratorConfig {
            t_max: 10.0,
            ..IntegratorConfig::for_model(model)
        };
        match evolve(model, rho0, &cfg) {
            Ok(traj) => {
                let conserved = if *is_qubit { &singlet } else { &anti };
                let s = trajectory_stats(&traj, conserved);
                trace = trace.max(s.trace);
                herm = herm.max(s.hermiticity);
                min_eig = min_eig.min(s.min_eigenvalue);
                if *is_qubit {
                    singlet_drift = singlet_drift.max(s.conserved_drift);
                } else {
                    anti_drift = anti_drift.max(s.conserved_drift);
                }
            }
            Err(_) => {
                trace = f64::INFINITY;
                min_eig = f64::NEG_INFINITY;
            }
        }
    }
    vec![
        v.numeric("dynamics", "trajectory_trace", trace, 1e-9),
        v.numeric("dynamics", "trajectory_hermiticity", herm, 1e-9),
        v.numeric(
            "dynamics",
            "trajectory_positivity",
            (-min_eig).max(0.0),
            1e-8,
        ),
        v.numeric(
            "dynamics",
            "singlet_population_conserved",
            singlet_drift,
            1e-9,
        ),
        v.numeric(
            "dynamics",
            "qutrit_antisymmetric_population_conserved",
            anti_drift,
            1e-9,
        ),
    ]
}

fn relaxation_checks(v: &Verifier) -> Vec<CheckResult> {
    let cases = [
        (Family::Werner, 0.8, 0.5),
        (Family::Werner, 0.0, 0.0),
        (Family::Werner, 0.4, 2.0),
        (Family::WernerLike, 0.3, 0.1),
        (Family::WernerLike, 1.0, 1.0),
    ];
    let qubit_dev = worst(cases.iter().map(|&(family, r, n)| {
        let model = CollectiveModel::qubits(1.0, n).unwrap();
        let cfg = IntegratorConfig::for_model(&model);
        let relaxed = relax_to_stationary(&model, &werner_qubit(r, family).unwrap(), &cfg);
        match (relaxed, v.stationary(family, r, n)) {
            (Ok((rho, _)), Some(want)) => frobenius_distance(&rho, &want).unwrap(),
            _ => f64::INFINITY,
        }
    }));
    let model = CollectiveModel::qutrits(1.0).unwrap();
    let cfg = IntegratorConfig::for_model(&model);
    let qutrit_dev = worst(
        [
            (maximally_mixed(3, 3).unwrap(), qutrit_stationary_mixed()),
            (
                qutrit_werner(2.0).unwrap(),
                qutrit_stationary_werner(2.0).unwrap(),
            ),
        ]
        .iter()
        .map(
            |(rho0, want)| match relax_to_stationary(&model, rho0, &cfg) {
                Ok((rho, _)) => frobenius_distance(&rho, want).unwrap(),
                Err(_) => f64::INFINITY,
            },
        ),
    );
    vec![
        v.numeric(
            "dynamics",
            "qubit_relaxation_matches_closed_form",
            qubit_dev,
            1e-8,
        ),
        v.numeric(
            "dynamics",
            "qutrit_relaxation_matches_closed_form",
            qutrit_dev,
            1e-8,
        ),
    ]
}

fn oracle_grid() -> Vec<(Family, f64, f64)> {
    let rs = grid(0.0, 1.0, 20);
    let ns = grid(0.0, 3.0, 20);
    let mut out = Vec::with_capacity(800);
    for family in [Family::Werner, Family::WernerLike] {
        for &r in &rs {
            for &n in &ns {
                out.push((family, r, n));
            }
        }
    }
    out
}

fn oracle_checks(v: &Verifier) -> Vec<CheckResult> {
    let (mut c_dev, mut b_dev, mut n_dev) = (0.0f64, 0.0f64, 0.0f64);
    for (family, r, n) in oracle_grid() {
        let Some(rho) = v.stationary(family, r, n) else {
            c_dev = f64::INFINITY;
            continue;
        };
        let diff = |a: Result<f64>, b: Result<f64>| match (a, b) {
            (Ok(a), Ok(b)) => (a - b).abs(),
            _ => f64::INFINITY,
        };
        c_dev = c_dev.max(diff(analytic_concurrence(family, r, n), concurrence(&rho)));
        b_dev = b_dev.max(diff(analytic_chsh(family, r, n), chsh_max(&rho)));
        n_dev = n_dev.max(diff(analytic_negativity(family, r, n), negativity(&rho)));
    }

    let mut monotone = 0usize;
    let rs = grid(0.0, 1.0, 41);
    let ns = grid(0.0, 3.0, 41);
    let c = |f, r, n| analytic_concurrence(f, r, n).unwrap();
    for &n in &ns {
        for w in rs.windows(2) {
            if c(Family::Werner, w[1], n) < c(Family::Werner, w[0], n) - 1e-12 {
                monotone += 1;
            }
            if c(Family::WernerLike, w[1], n) > c(Family::WernerLike, w[0], n) + 1e-12 {
                monotone += 1;
            }
        }
    }
    for &r in &rs {
        for w in ns.windows(2) {
            if c(Family::WernerLike, r, w[1]) > c(Family::WernerLike, r, w[0]) + 1e-12 {
                monotone += 1;
            }
        }
    }

    vec![
        v.numeric("measures", "concurrence_closed_form_agreement", c_dev, 1e-9),
        v.numeric("measures", "chsh_closed_form_agreement", b_dev, 1e-9),
        v.numeric("measures", "negativity_closed_form_agreement", n_dev, 1e-9),
        v.count("measures", "concurrence_monotonicity", monotone),
    ]
}

fn qutrit_checks(v: &Verifier) -> Vec<CheckResult> {
    let mut dev = 0.0f64;
    for eta in [0.5, 0.6, 1.0, 2.0, 5.0, 10.0, 100.0] {
        let d = match (
            qutrit_negativity_closed_form(eta),
            qutrit_stationary_werner(eta).and_then(|rho| negativity(&rho)),
        ) {
            (Ok(a), Ok(b)) => (a - b).abs(),
            _ => f64::INFINITY,
        };
        dev = dev.max(d);
    }
    let limit = negativity(&qutrit_stationary_werner_limit())
        .map(|b| (qutrit_negativity_closed_form_limit() - b).abs())
        .unwrap_or(f64::INFINITY);
    dev = dev.max(limit);
    let mixed = negativity(&qutrit_stationary_mixed())
        .map(|x| (x - (97f64.sqrt() - 8.0) / 27.0).abs())
        .unwrap_or(f64::INFINITY);
    vec![
        v.numeric("measures", "qutrit_closed_form_agreement", dev, 1e-8),
        v.numeric("measures", "qutrit_mixed_negativity_value", mixed, 1e-10),
    ]
}

fn random_state_checks(v: &Verifier) -> Vec<CheckResult> {
    let mut rng = v.rng(8);
    let mut bounds = 0usize;
    let mut ppt = 0usize;
    for k in 0..1000 {
        let rho = random_density(&mut rng, (2, 2), 1 + k % 4);
        let (Ok(c), Ok(b), Ok(n)) = (concurrence(&rho), chsh_max(&rho), negativity(&rho)) else {
            bounds += 1;
            continue;
        };
        if !(0.0..=1.0 + 1e-12).contains(&c)
            || !(0.0..=2.0 * SQRT_2 + 1e-9).contains(&b)
            || !(0.0..=1.0 + 1e-12).contains(&n)
        {
            bounds += 1;
        }
        if (c > 1e-9) != (n > 1e-9) {
            ppt += 1;
        }
    }
    vec![
        v.count("measures", "random_state_bounds", bounds),
        v.count("measures", "ppt_concurrence_consistency", ppt),
    ]
}

fn threshold_checks(v: &Verifier) -> Vec<CheckResult> {
    let mut entangle = 0usize;
    for n in [0.3, 1.0, 2.0] {
        let r0 = entanglement_threshold_werner(n);
        for (r, want) in [(r0 + 1e-4, true), (r0 - 1e-4, false)] {
            let got = v
                .stationary(Family::Werner, r, n)
                .and_then(|rho| concurrence(&rho).ok())
                .map(|c| c > 0.0);
            if got != Some(want) {
                entangle += 1;
            }
        }
    }

    let mut bell = 0usize;
    for n in [0.0, 0.5, 1.0] {
        let t = crate::measures::bell_violation_threshold(n).unwrap();
        let above = v
            .stationary(Family::Werner, t + 1e-3, n)
            .and_then(|r| chsh_max(&r).ok());
        let below = v
            .stationary(Family::Werner, t - 1e-3, n)
            .and_then(|r| chsh_max(&r).ok());
        if !(above.is_some_and(|b| b > 2.0) && below.is_some_and(|b| b <= 2.0)) {
            bell += 1;
        }
    }

    let mut no_violation: f64 = 0.0;
    for (_, r, n) in oracle_grid() {
        no_violation = no_violation.max(analytic_chsh(Family::WernerLike, r, n).unwrap() - 2.0);
    }

    let mut mems: f64 = 0.0;
    let mut rank = 0usize;
    for r in [5.0 / 9.0, 0.7, 0.9, 1.0] {
        let Some(rho) = v.stationary(Family::Werner, r, 0.0) else {
            mems = f64::INFINITY;
            continue;
        };
        let c = (1.0 + 3.0 * r) / 4.0;
        mems = mems.max((linear_entropy(&rho).unwrap() - 8.0 / 3.0 * c * (1.0 - c)).abs());
        let nonzero = hermitian_eigs(&rho)
            .map(|e| e.values.iter().filter(|&&x| x > 1e-10).count())
            .unwrap_or(0);
        let want = if r == 1.0 { 1 } else { 2 };
        if nonzero != want {
            rank += 1;
        }
    }

    let mut rng = v.rng(10);
    let mut enhance = 0usize;
    let mut sampled = 0usize;
    while sampled < 500 {
        let r: f64 = rng.gen_range(0.0..=1.0);
        let n: f64 = rng.gen_range(0.0..=3.0);
        if near_enhancement_boundary(r, n, 1e-6) {
            continue;
        }
        sampled += 1;
        let inc = concurrence_increment(Family::Werner, r, n).unwrap();
        if (inc > 0.0) != enhancement_predicate(initial_singlet_fraction(Family::Werner, r), n) {
            enhance += 1;
        }
    }

    vec![
        v.count("measures", "entanglement_threshold_werner", entangle),
        v.count("measures", "bell_threshold_crossing", bell),
        v.numeric(
            "measures",
            "werner_like_no_violation",
            no_violation.max(0.0),
            1e-12,
        ),
        v.numeric("measures", "zero_temperature_entropy_identity", mems, 1e-10),
        v.count("measures", "zero_temperature_rank", rank),
        v.count("measures", "enhancement_region", enhance),
    ]
}

/// Whether (r, N) lies within `band` of a boundary of either the increment
/// sign or the enhancement inequalities.
pub fn near_enhancement_boundary(r: f64, n: f64, band: f64) -> bool {
    let m = n * n + n;
    let f = initial_singlet_fraction(Family::Werner, r);
    let raw_c = (1.0 + 3.0 * r + (18.0 * r - 6.0) * m) / (4.0 * (3.0 * m + 1.0));
    let raw_increment = raw_c - ((3.0 * r - 1.0) / 2.0).max(0.0);
    let margins = [
        raw_increment,
        raw_c,
        1.0 - f,
        f - 1.0 / 6.0,
        f - 3.0 * m / (6.0 * m + 1.0),
        f - (9.0 * m + 2.0) / (36.0 * m + 14.0),
    ];
    margins.iter().any(|x| x.abs() < band)
}

fn distillation_checks(v: &Verifier) -> Vec<CheckResult> {
    let etas: Vec<f64> = (0..20).map(|k| 0.5 * 1.45f64.powi(k)).collect();
    let (mut prob_dev, mut coeff_dev) = (0.0f64, 0.0f64);
    let mut not_npt = 0usize;
    for &eta in &etas {
        let Ok(out) = qutrit_stationary_werner(eta).and_then(|rho| project_to_qubit_subspace(&rho))
        else {
            prob_dev = f64::INFINITY;
            continue;
        };
        prob_dev = prob_dev.max((out.probability - (68.0 * eta - 7.0) / (72.0 * eta - 9.0)).abs());
        let norm = 68.0 * eta - 7.0;
        let s = &out.state;
        let i11 = 0;
        let i22 = 3;
        let (i12, i21) = (1, 2);
        let anti = (36.0 * eta + 9.0) / norm;
        let devs = [
            s[(i22, i22)].re - (2.0 * eta - 1.0) / norm,
            s[(i11, i11)].re - (30.0 * eta - 15.0) / norm,
            s[(i12, i12)].re - anti / 2.0,
            s[(i21, i21)].re - anti / 2.0,
            s[(i12, i21)].re + anti / 2.0,
        ];
        coeff_dev = coeff_dev.max(worst(devs.iter().map(|d| d.abs())));
        if !is_npt(&out.state).unwrap_or(false) {
            not_npt += 1;
        }
    }
    // Weights feeding the projection must match the stationary constructor.
    let w = qutrit_stationary_weights(Eta::Finite(2.0)).unwrap();
    let rho = qutrit_stationary_werner(2.0).unwrap();
    let g = rho[(qutrit_index(1, 1), qutrit_index(1, 1))].re;
    coeff_dev = coeff_dev.max((g - w.ground).abs());
    vec![
        v.numeric("distillation", "projection_probability", prob_dev, 1e-12),
        v.numeric("distillation", "projected_coefficients", coeff_dev, 1e-12),
        v.count("distillation", "projected_state_npt", not_npt),
    ]
}
