use coldecay::measures::{chsh_max, concurrence, negativity, qutrit_negativity_closed_form};
use coldecay::states::{maximally_mixed, qutrit_werner};
use coldecay::{
    hermitian_eigs, lindblad_rhs, partial_transpose, relax_to_stationary, CollectiveModel,
    IntegratorConfig, Subsystem,
};
use coldecay_bench::{qubit_initial, qubit_stationary, qutrit_stationary};
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn linalg(c: &mut Criterion) {
    let q2 = qubit_stationary();
    let q3 = qutrit_stationary();
    c.bench_function("eigs_4x4", |b| b.iter(|| hermitian_eigs(black_box(&q2))));
    c.bench_function("eigs_9x9", |b| b.iter(|| hermitian_eigs(black_box(&q3))));
    c.bench_function("partial_transpose_9x9", |b| {
        b.iter(|| partial_transpose(black_box(&q3), Subsystem::A))
    });
}

fn measures(c: &mut Criterion) {
    let q2 = qubit_stationary();
    let q3 = qutrit_stationary();
    c.bench_function("concurrence", |b| b.iter(|| concurrence(black_box(&q2))));
    c.bench_function("chsh_max", |b| b.iter(|| chsh_max(black_box(&q2))));
    c.bench_function("negativity_qutrit", |b| {
        b.iter(|| negativity(black_box(&q3)))
    });
    c.bench_function("negativity_closed_form", |b| {
        b.iter(|| qutrit_negativity_closed_form(black_box(2.0)))
    });
}

fn dynamics(c: &mut Criterion) {
    let qubits = CollectiveModel::qubits(1.0, 0.5).unwrap();
    let qutrits = CollectiveModel::qutrits(1.0).unwrap();
    let rho2 = qubit_initial();
    let rho3 = qutrit_werner(2.0).unwrap();
    c.bench_function("rhs_qubits", |b| {
        b.iter(|| lindblad_rhs(&qubits, black_box(&rho2)))
    });
    c.bench_function("rhs_qutrits", |b| {
        b.iter(|| lindblad_rhs(&qutrits, black_box(&rho3)))
    });

    let mut g = c.benchmark_group("relax");
    g.sample_size(10);
    let cfg2 = IntegratorConfig::for_model(&qubits);
    g.bench_function("qubits_werner", |b| {
        b.iter(|| relax_to_stationary(&qubits, &rho2, &cfg2).unwrap())
    });
    let cfg3 = IntegratorConfig::for_model(&qutrits);
    let mixed = maximally_mixed(3, 3).unwrap();
    g.bench_function("qutrits_mixed", |b| {
        b.iter(|| relax_to_stationary(&qutrits, &mixed, &cfg3).unwrap())
    });
    g.finish();
}

criterion_group!(benches, linalg, measures, dynamics);
criterion_main!(benches);
