//! Property-based and randomized invariant tests: structural laws that must
//! hold across the whole input space, exercised with proptest generators
//! and fixed-seed sample loops.

use num_complex::Complex64;
use proptest::prelude::*;
use qent::cli;
use qent::linalg::{self, ComplexMatrix, CubicCoefficients};
use qent::measures::{self, MeasureError};
use qent::sampling::{self, SeededSampler};
use qent::states::{PureBipartiteState, Side, StateError};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

proptest! {
    /// All concurrence routes agree on a Haar sample drawn from any seed.
    #[test]
    fn routes_agree_for_any_seed(seed in any::<u64>()) {
        let mut sampler = SeededSampler::new(seed);
        let s = sampling::random_pure_state(&mut sampler, 3).unwrap();
        let report = measures::full_report(&s);
        prop_assert!(report.max_route_residual < 1e-10);
    }

    /// Concurrence dominates the family measure along the whole slice.
    #[test]
    fn concurrence_dominates_family_measure(epsilon in 0.0f64..=1.0) {
        let row = cli::family_row(epsilon).unwrap();
        prop_assert!(row.c >= row.p_e - 1e-12, "eps={epsilon}: {row:?}");
    }

    /// Cubic roots built from a known spectrum satisfy the polynomial to
    /// near machine precision, even when roots cluster.
    #[test]
    fn cubic_roots_have_small_residuals(
        r1 in -1.0f64..2.0,
        r2 in -1.0f64..2.0,
        r3 in -1.0f64..2.0,
    ) {
        let coefficients = CubicCoefficients {
            c2: -(r1 + r2 + r3),
            c1: r1 * r2 + r1 * r3 + r2 * r3,
            c0: -(r1 * r2 * r3),
        };
        let roots = linalg::solve_monic_cubic_real(coefficients).unwrap();
        let scale = 1.0 + coefficients.c2.abs() + coefficients.c1.abs() + coefficients.c0.abs();
        for r in roots {
            let residual = r * r * r
                + coefficients.c2 * r * r
                + coefficients.c1 * r
                + coefficients.c0;
            prop_assert!(
                residual.abs() <= 1e-10 * scale,
                "residual {residual:.3e} at root {r} of {coefficients:?}"
            );
        }
        // Descending order is part of the contract.
        prop_assert!(roots[0] >= roots[1] && roots[1] >= roots[2]);
    }

    /// Binary entropy is symmetric about 1/2 and rejects out-of-domain
    /// arguments.
    #[test]
    fn binary_entropy_symmetry(x in 0.0f64..=1.0) {
        let here = measures::binary_entropy(x).unwrap();
        let there = measures::binary_entropy(1.0 - x).unwrap();
        prop_assert!((here - there).abs() < 1e-12);
        prop_assert!((0.0..=1.0 + 1e-15).contains(&here));
    }

    #[test]
    fn binary_entropy_rejects_outside_domain(x in 1.1f64..10.0) {
        let above = matches!(
            measures::binary_entropy(x),
            Err(MeasureError::OutOfRange { .. })
        );
        let below = matches!(
            measures::binary_entropy(-x),
            Err(MeasureError::OutOfRange { .. })
        );
        prop_assert!(above && below);
    }

    /// States accept norms within the construction window and come out
    /// exactly normalized; norms outside the window are rejected.
    #[test]
    fn construction_window_accepts_and_renormalizes(scale in -5e-7f64..5e-7) {
        let factor = 1.0 + scale;
        let r = std::f64::consts::FRAC_1_SQRT_2 * factor;
        let mut alpha = ComplexMatrix::zeros(3, 3);
        alpha[(0, 0)] = c(r, 0.0);
        alpha[(1, 1)] = c(r, 0.0);
        let s = PureBipartiteState::new(3, alpha).unwrap();
        prop_assert!((s.alpha().frobenius_norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn construction_window_rejects_bad_norms(scale in 1e-5f64..0.5) {
        for factor in [1.0 + scale, 1.0 - scale] {
            let r = std::f64::consts::FRAC_1_SQRT_2 * factor;
            let mut alpha = ComplexMatrix::zeros(3, 3);
            alpha[(0, 0)] = c(r, 0.0);
            alpha[(1, 1)] = c(r, 0.0);
            let rejected = matches!(
                PureBipartiteState::new(3, alpha),
                Err(StateError::NotNormalized { .. })
            );
            prop_assert!(rejected, "norm factor {factor} was accepted");
        }
    }
}

/// The eigensolver recovers a planted spectrum after conjugation by a
/// random unitary, at several dimensions.
#[test]
fn eigensolver_recovers_planted_spectra() {
    let mut sampler = SeededSampler::new(21);
    for d in [2usize, 3, 4, 8] {
        for _ in 0..20 {
            let mut planted: Vec<f64> = (0..d).map(|_| sampler.next_f64()).collect();
            let v = sampling::random_unitary(&mut sampler, d).unwrap();
            let mut diag = ComplexMatrix::zeros(d, d);
            for (i, w) in planted.iter().enumerate() {
                diag[(i, i)] = c(*w, 0.0);
            }
            let m = v.mul(&diag).mul(&v.adjoint());
            let recovered = linalg::hermitian_eigenvalues(&m).unwrap();
            planted.sort_by(f64::total_cmp);
            for (got, want) in recovered.iter().zip(&planted) {
                assert!(
                    (got - want).abs() < 1e-10,
                    "d={d}: recovered {got}, planted {want}"
                );
            }
        }
    }
}

/// Both reduced states carry the same spectrum.
#[test]
fn reduced_spectra_coincide() {
    let mut sampler = SeededSampler::new(4242);
    for d in 2..=5 {
        for _ in 0..50 {
            let s = sampling::random_pure_state(&mut sampler, d).unwrap();
            let wa = s.reduced_density(Side::A).spectrum();
            let wb = s.reduced_density(Side::B).spectrum();
            for (a, b) in wa.iter().zip(&wb) {
                assert!((a - b).abs() < 1e-12, "d={d}: {a} vs {b}");
            }
        }
    }
}

/// Closed-form entanglement of formation is monotone nondecreasing in the
/// concurrence over a 1001-point grid of each domain.
#[test]
fn eof_closed_forms_are_monotone() {
    let mut previous = -1.0f64;
    for i in 0..=1000 {
        let concurrence = i as f64 / 1000.0;
        let value = measures::eof_2x2(concurrence).unwrap();
        assert!(value >= previous - 1e-12, "eof_2x2 dips at {concurrence}");
        previous = value;
    }
    let top = 3.0f64.sqrt() / 2.0;
    previous = -1.0;
    for i in 0..=1000 {
        let concurrence = top * i as f64 / 1000.0;
        let value = measures::eof_qutrit_rank2(concurrence).unwrap();
        assert!(
            value >= previous - 1e-12,
            "eof_qutrit_rank2 dips at {concurrence}"
        );
        previous = value;
    }
}

/// The rank-2 closed form equals the reduced-state entropy on states with
/// a vanishing third Schmidt coefficient.
#[test]
fn rank2_closed_form_matches_entropy() {
    let mut sampler = SeededSampler::new(808);
    for _ in 0..100 {
        let two = sampling::random_schmidt_spectrum(&mut sampler, 2).unwrap();
        let mut alpha = ComplexMatrix::zeros(3, 3);
        alpha[(0, 0)] = c(two.coefficients()[0], 0.0);
        alpha[(1, 1)] = c(two.coefficients()[1], 0.0);
        let diagonal = PureBipartiteState::new(3, alpha).unwrap();
        let u_a = sampling::random_unitary(&mut sampler, 3).unwrap();
        let u_b = sampling::random_unitary(&mut sampler, 3).unwrap();
        let s = diagonal.apply_local_unitary(&u_a, &u_b).unwrap();

        let eof = measures::eof_qutrit_rank2(measures::concurrence_minors(&s).unwrap()).unwrap();
        let entropy = measures::von_neumann_entropy(&s.reduced_density(Side::A));
        assert!((eof - entropy).abs() < 1e-9);
    }
}

/// The unrolled minor route and its independent nested-loop twin agree to
/// near machine precision over Haar samples.
#[test]
fn oracle_equals_minor_route() {
    let mut sampler = SeededSampler::new(0x0AC1E);
    for _ in 0..500 {
        let s = sampling::random_pure_state(&mut sampler, 3).unwrap();
        let fast = measures::concurrence_minors(&s).unwrap();
        let slow = sampling::oracle_concurrence_minors(&s).unwrap();
        assert!((fast - slow).abs() < 1e-12);
    }
}

/// Sweep output is byte-stable and matches frozen reference rows.
#[test]
fn sweep_bytes_are_reproducible() {
    let mut first = Vec::new();
    cli::write_sweep(101, &mut first).unwrap();
    let mut second = Vec::new();
    cli::write_sweep(101, &mut second).unwrap();
    assert_eq!(first, second);

    let text = String::from_utf8(first).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "epsilon,p_e,c");
    assert_eq!(lines[1], "0.00000000e0,0.00000000e0,0.00000000e0");
    assert_eq!(lines[51], "5.00000000e-1,9.57106781e-1,9.68245837e-1");
    assert_eq!(lines[101], "1.00000000e0,5.00000000e-1,8.66025404e-1");
}

/// Equal seeds reproduce identical states, unitaries, and spectra.
#[test]
fn samplers_are_deterministic() {
    let mut a = SeededSampler::new(99);
    let mut b = SeededSampler::new(99);
    let sa = sampling::random_pure_state(&mut a, 4).unwrap();
    let sb = sampling::random_pure_state(&mut b, 4).unwrap();
    assert_eq!(sa.alpha().max_abs_diff(sb.alpha()), 0.0);

    let ua = sampling::random_unitary(&mut a, 3).unwrap();
    let ub = sampling::random_unitary(&mut b, 3).unwrap();
    assert_eq!(ua.max_abs_diff(&ub), 0.0);

    let ka = sampling::random_schmidt_spectrum(&mut a, 5).unwrap();
    let kb = sampling::random_schmidt_spectrum(&mut b, 5).unwrap();
    assert_eq!(ka.coefficients(), kb.coefficients());
}
