mod common;

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use common::*;
use proptest::prelude::*;
use pulsega::spin::*;

/// Drift Hamiltonian assembled from Pauli-product operators, independent of
/// the diagonal shortcut used by the library.
fn hamiltonian_oracle(system: &SpinSystem) -> Operator {
    let n = system.n_spins();
    let mut h = Operator::zeros(system.dim());
    for k in 0..n {
        let iz = spin_operator(Axis::Z, k + 1, n).unwrap();
        h = &h + &iz.scale(c(TAU * system.shifts()[k]));
        for l in k + 1..n {
            let izl = spin_operator(Axis::Z, l + 1, n).unwrap();
            h = &h + &(&iz * &izl).scale(c(TAU * system.couplings()[k][l]));
        }
    }
    h
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn exponential_routes_agree(h in hermitian(4, 3.0), t in 0.0f64..2.0) {
        let a = matrix_exponential(&h, t).unwrap();
        let b = matrix_exponential_series(&h, t).unwrap();
        prop_assert!(max_abs_diff(&a, &b) < 1e-10, "{}", max_abs_diff(&a, &b));
        prop_assert!(a.unitarity_error() < 1e-10);
    }

    #[test]
    fn pulses_and_delays_are_unitary(
        flip in 0.0..TAU, phase in 0.0..TAU, d in 0.0f64..0.5,
        delta in 10.0f64..1000.0, j in 0.0f64..100.0,
    ) {
        let sys = SpinSystem::homonuclear_pair(delta, j).unwrap();
        prop_assert!(pulse_propagator(&sys, &[flip], &[phase]).unwrap().unitarity_error() < 1e-10);
        prop_assert!(delay_propagator(&sys, d).unwrap().unitarity_error() < 1e-10);
        let het = SpinSystem::selective_pair(delta, j).unwrap();
        prop_assert!(pulse_propagator(&het, &[flip, phase], &[phase, flip]).unwrap().unitarity_error() < 1e-10);
    }

    #[test]
    fn pulse_matches_rotation_generator(flip in 0.0..TAU, phase in 0.0..TAU) {
        let sys = SpinSystem::homonuclear_pair(500.0, 5.0).unwrap();
        let gen = &(&op(Axis::X, 1) + &op(Axis::X, 2)).scale(c(phase.cos()))
            + &(&op(Axis::Y, 1) + &op(Axis::Y, 2)).scale(c(phase.sin()));
        let oracle = matrix_exponential_series(&gen, flip).unwrap();
        let u = pulse_propagator(&sys, &[flip], &[phase]).unwrap();
        prop_assert!(max_abs_diff(&u, &oracle) < 1e-12);
    }

    #[test]
    fn delay_matches_hamiltonian_oracle(delta in 10.0f64..1000.0, j in 0.0f64..100.0, d in 0.0f64..0.05) {
        let sys = SpinSystem::homonuclear_pair(delta, j).unwrap();
        let h = hamiltonian_oracle(&sys);
        prop_assert!(max_abs_diff(&build_hamiltonian(&sys), &h) < 1e-9);
        let oracle = matrix_exponential_series(&h, d).unwrap();
        prop_assert!(max_abs_diff(&delay_propagator(&sys, d).unwrap(), &oracle) < 1e-9);
    }

    #[test]
    fn crusher_is_idempotent_linear_and_contracting(a in deviation(4), b in deviation(4), x in -3.0f64..3.0, y in -3.0f64..3.0) {
        let ca = apply_crusher(&a);
        prop_assert!((&apply_crusher(&ca) - &ca).frobenius_norm() < 1e-12);
        let lhs = apply_crusher(&(&a.scale(x) + &b.scale(y)));
        let rhs = &ca.scale(x) + &apply_crusher(&b).scale(y);
        prop_assert!((&lhs - &rhs).frobenius_norm() < 1e-12);
        prop_assert!(ca.frobenius_norm() <= a.frobenius_norm() + 1e-12);
        for r in 0..4 {
            for k in 0..4 {
                let expect = if coherence_order(r, k) == 0 { a.get(r, k) } else { C64::new(0.0, 0.0) };
                prop_assert_eq!(ca.get(r, k), expect);
            }
        }
    }

    #[test]
    fn unitary_evolution_preserves_norm(rho in deviation(4), flip in 0.0..TAU, phase in 0.0..TAU) {
        let sys = SpinSystem::homonuclear_pair(500.0, 5.0).unwrap();
        let u = pulse_propagator(&sys, &[flip], &[phase]).unwrap();
        let out = rho.evolve(&u);
        prop_assert!((out.frobenius_norm() - rho.frobenius_norm()).abs() < 1e-12);
        prop_assert!(out.trace().norm() < 1e-12);
    }
}

#[test]
fn zero_quantum_term_survives_crusher() {
    let zq = &(&op(Axis::X, 1) * &op(Axis::X, 2)) + &(&op(Axis::Y, 1) * &op(Axis::Y, 2));
    let rho = DensityDeviation::new(zq).unwrap();
    assert!((&apply_crusher(&rho) - &rho).frobenius_norm() < 1e-12);
    let dq = &(&op(Axis::X, 1) * &op(Axis::X, 2)) - &(&op(Axis::Y, 1) * &op(Axis::Y, 2));
    assert!(apply_crusher(&DensityDeviation::new(dq).unwrap()).frobenius_norm() < 1e-12);
}

#[test]
fn coherence_orders_of_two_spins() {
    assert_eq!(coherence_order(0, 3), 2);
    assert_eq!(coherence_order(3, 0), -2);
    assert_eq!(coherence_order(1, 2), 0);
    assert_eq!(coherence_order(0, 1), 1);
}

#[test]
fn quarter_and_half_turns() {
    let sys = SpinSystem::homonuclear_pair(500.0, 5.0).unwrap();
    let iz = &op(Axis::Z, 1) + &op(Axis::Z, 2);
    let iy = &op(Axis::Y, 1) + &op(Axis::Y, 2);
    let rho = DensityDeviation::new(iz.clone()).unwrap();
    let x90 = pulse_propagator(&sys, &[FRAC_PI_2], &[0.0]).unwrap();
    assert!((&rho.evolve(&x90).to_operator() + &iy).frobenius_norm() < 1e-14);
    let x180 = pulse_propagator(&sys, &[PI], &[0.0]).unwrap();
    assert!((&rho.evolve(&x180).to_operator() + &iz).frobenius_norm() < 1e-14);
}

#[test]
fn relative_precession_over_an_eighth_period() {
    // Shifts +delta and -delta precess apart at 2*delta; after 1/(8 delta) they
    // differ by a quarter turn.
    let delta = 500.0;
    let sys = SpinSystem::homonuclear_pair(delta, 0.0).unwrap();
    let u = delay_propagator(&sys, 1.0 / (8.0 * delta)).unwrap();
    let rel = (u.get(1, 1) / u.get(2, 2)).arg();
    assert!((rel.abs() - FRAC_PI_2).abs() < 1e-12, "{rel}");
}

#[test]
fn non_hermitian_generators_are_rejected() {
    let mut m = nalgebra::DMatrix::<C64>::identity(4, 4);
    m[(0, 1)] = C64::new(1.0, 0.0);
    let h = Operator::from_matrix(m).unwrap();
    assert!(matrix_exponential(&h, 1.0).is_err());
    assert!(matrix_exponential_series(&h, 1.0).is_err());
}

#[test]
fn negative_delay_is_rejected() {
    let sys = SpinSystem::homonuclear_pair(500.0, 5.0).unwrap();
    assert!(matches!(delay_propagator(&sys, -1e-3), Err(pulsega::Error::NegativeDelay(_))));
}
