use coldecay::linalg::partial_transpose_matrix;
use coldecay::measures::{chsh_max, concurrence, negativity};
use coldecay::states::stationary_coefficients;
use coldecay::verify::{random_density, random_hermitian, random_matrix, Verifier};
use coldecay::{
    frobenius_distance, hermitian_eigs, kron, DensityMatrix, Family, Result, Subsystem,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kron_is_associative(seed: u64, da in 1usize..4, db in 1usize..4, dc in 1usize..4) {
        let mut g = rng(seed);
        let a = random_matrix(&mut g, da, da);
        let b = random_matrix(&mut g, db, db);
        let c = random_matrix(&mut g, dc, dc);
        let lhs = kron(&kron(&a, &b), &c);
        let rhs = kron(&a, &kron(&b, &c));
        prop_assert!(frobenius_distance(&lhs, &rhs).unwrap() < 1e-12);
    }

    #[test]
    fn eigenvalues_match_traces(seed: u64, n in 1usize..10) {
        let h = random_hermitian(&mut rng(seed), n);
        let e = hermitian_eigs(&h).unwrap();
        let s1: f64 = e.values.iter().sum();
        let s2: f64 = e.values.iter().map(|x| x * x).sum();
        prop_assert!((s1 - h.trace().re).abs() < 1e-10);
        prop_assert!((s2 - h.trace_product(&h).re).abs() < 1e-10);
        prop_assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
        prop_assert!(frobenius_distance(&e.reconstruct(|x| x), &h).unwrap() < 1e-10);
    }

    #[test]
    fn partial_transpose_is_an_involution(seed: u64, qutrits: bool, rank in 1usize..10) {
        let dims = if qutrits { (3, 3) } else { (2, 2) };
        let rho = random_density(&mut rng(seed), dims, rank);
        for sub in [Subsystem::A, Subsystem::B] {
            let once = partial_transpose_matrix(&rho, dims, sub).unwrap();
            let twice = partial_transpose_matrix(&once, dims, sub).unwrap();
            prop_assert_eq!(twice.entries(), rho.entries());
            prop_assert!((once.trace() - rho.trace()).norm() < 1e-14);
        }
    }

    #[test]
    fn qubit_measures_are_bounded(seed: u64, rank in 1usize..5) {
        let rho = random_density(&mut rng(seed), (2, 2), rank);
        let c = concurrence(&rho).unwrap();
        let n = negativity(&rho).unwrap();
        let b = chsh_max(&rho).unwrap();
        prop_assert!((0.0..=1.0 + 1e-12).contains(&c));
        prop_assert!((0.0..=1.0 + 1e-12).contains(&n));
        prop_assert!(b <= 2.0 * std::f64::consts::SQRT_2 + 1e-9);
        prop_assert_eq!(c > 1e-8, n > 1e-8);
    }
}

fn failing(v: &Verifier) -> Vec<String> {
    v.run()
        .into_iter()
        .filter(|c| !c.passed)
        .map(|c| c.name.to_string())
        .collect()
}

fn flipped_coherence(family: Family, r: f64, n: f64) -> Result<DensityMatrix> {
    let mut x = stationary_coefficients(family, r, n)?;
    x.coherence = -x.coherence;
    x.to_density()
}

fn swapped_populations(family: Family, r: f64, n: f64) -> Result<DensityMatrix> {
    let mut x = stationary_coefficients(family, r, n)?;
    std::mem::swap(&mut x.pop_11, &mut x.pop_00);
    x.to_density()
}

#[test]
fn verifier_passes_on_the_real_constructor() {
    assert!(failing(&Verifier::default()).is_empty());
}

#[test]
fn verifier_catches_a_flipped_coherence() {
    let failed = failing(&Verifier {
        stationary: flipped_coherence,
        ..Verifier::default()
    });
    for name in [
        "qubit_closed_form_is_stationary",
        "stationary_singlet_fraction",
        "qubit_relaxation_matches_closed_form",
    ] {
        assert!(failed.iter().any(|f| f == name), "{name} not in {failed:?}");
    }
}

#[test]
fn verifier_catches_swapped_populations() {
    let failed = failing(&Verifier {
        stationary: swapped_populations,
        ..Verifier::default()
    });
    // Concurrence, negativity and CHSH are all symmetric under this swap, so
    // only the generator notices.
    for name in [
        "qubit_closed_form_is_stationary",
        "qubit_relaxation_matches_closed_form",
    ] {
        assert!(failed.iter().any(|f| f == name), "{name} not in {failed:?}");
    }
}

#[test]
fn tight_override_fails_numeric_checks_only() {
    let results = Verifier::with_tolerance(1e-300).run();
    assert!(results.iter().any(|c| !c.passed));
    assert!(results
        .iter()
        .filter(|c| c.criterion == coldecay::verify::Criterion::Count)
        .all(|c| c.passed));
}
