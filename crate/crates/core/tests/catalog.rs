mod common;

use std::f64::consts::{FRAC_PI_2, PI};

use common::*;
use pulsega::catalog::*;
use pulsega::ga::{evaluate_fitness, Constraint, GAConfig, Objective, Problem, SequenceTemplate};
use pulsega::spin::*;

#[test]
fn sqr_uncoupled_is_exact_and_selective() {
    let sys = SpinSystem::homonuclear_pair(500.0, 0.0).unwrap();
    for spin in [1, 2] {
        for theta in [FRAC_PI_2, PI] {
            let s = solve_sqr(spin, theta, FRAC_PI_2, &sys).unwrap();
            assert!(s.fidelity >= 0.999, "spin {spin} theta {theta}: {}", s.fidelity);
            let other = GateLabel::sqr(3 - spin, theta, FRAC_PI_2).unwrap();
            let p = Problem::operator("o", sys.clone(), target_unitary(other, 2).unwrap(), SequenceTemplate::free(3)).unwrap();
            let cross = evaluate_fitness(&s.sequence, &p).unwrap();
            assert!(cross <= 0.8, "spin {spin} theta {theta}: {cross}");
        }
    }
}

#[test]
fn sqr_delay_follows_flip_angle() {
    // Two quarter turns bracketing a precession of theta/2 per spin.
    let delta = 400.0;
    let sys = SpinSystem::homonuclear_pair(delta, 0.0).unwrap();
    for theta in [PI / 4.0, FRAC_PI_2, PI] {
        let s = solve_sqr(1, theta, 0.3, &sys).unwrap();
        assert_eq!(s.slot, 0);
        assert!((s.delay - theta / (4.0 * PI * delta)).abs() < 1e-9, "{theta}: {}", s.delay);
    }
}

#[test]
fn sqr_spin_two_uses_swapped_phases() {
    let sys = SpinSystem::homonuclear_pair(500.0, 10.0).unwrap();
    let a = sqr_template_sequence(1, FRAC_PI_2, 0.4, 0, 1e-4, 1).unwrap();
    let b = sqr_template_sequence(2, FRAC_PI_2, 0.4, 0, 1e-4, 1).unwrap();
    assert_eq!(a.genes()[0].phases(), b.genes()[1].phases());
    assert_eq!(a.genes()[1].phases(), b.genes()[0].phases());
    assert_eq!(a.genes()[2], b.genes()[2]);
    assert!(sqr_sequence(2, FRAC_PI_2, 0.4, &sys).is_ok());
}

#[test]
fn sqr_small_angle_limit_is_identity() {
    let sys = SpinSystem::homonuclear_pair(500.0, 0.0).unwrap();
    let seq = sqr_template_sequence(1, 1e-9, 0.0, 0, 0.0, 1).unwrap();
    let p = Problem::operator("id", sys, Operator::identity(4), SequenceTemplate::free(3)).unwrap();
    assert!(evaluate_fitness(&seq, &p).unwrap() > 1.0 - 1e-12);
}

#[test]
fn sqr_rejects_unsupported_input() {
    let sys = SpinSystem::homonuclear_pair(500.0, 0.0).unwrap();
    assert!(solve_sqr(3, FRAC_PI_2, 0.0, &sys).is_err());
    assert!(solve_sqr(1, 0.0, 0.0, &sys).is_err());
    let degenerate = SpinSystem::new(vec![100.0, 100.0], vec![vec![0.0; 2]; 2], vec![vec![0, 1]]).unwrap();
    assert!(solve_sqr(1, FRAC_PI_2, 0.0, &degenerate).is_err());
}

#[test]
fn problem_structure() {
    let sys = SpinSystem::homonuclear_pair(500.0, 5.0).unwrap();
    let pps = catalog_problem(&ProblemName::State(StateLabel::Pps00), &sys).unwrap();
    assert_eq!(pps.template().len(), PPS_GENES);
    let flips: Vec<f64> = pps.template().genes().iter().map(|g| g.flip.fixed().unwrap()).collect();
    assert_eq!(flips.iter().filter(|&&f| f == FRAC_PI_2).count(), 6);
    assert_eq!(flips.iter().filter(|&&f| f == PI).count(), 1);
    assert!(pps.template().genes().iter().all(|g| g.phase.is_free() && g.crusher.is_free()));
    assert!(pps.allow_crushers());

    let bell = catalog_problem(&ProblemName::State(StateLabel::PhiMinus), &sys).unwrap();
    assert_eq!(bell.template().len(), BELL_GENES);
    assert!(bell.template().genes().iter().all(|g| g.flip == Constraint::Fixed(FRAC_PI_2) && g.delay.is_free()));
    match bell.objective() {
        Objective::State { initial, target } => {
            assert_eq!(initial, &target_state(StateLabel::Thermal));
            assert_eq!(target, &target_state(StateLabel::PhiMinus));
        }
        _ => panic!("state objective expected"),
    }
    assert!(!bell.final_crusher());
    assert_eq!(bell.growth().flip, Constraint::Fixed(FRAC_PI_2));

    let cnot = named_problem("cnot12", &sys).unwrap();
    assert!(cnot.objective().is_operator());
    assert!(!cnot.allow_crushers());
    assert!(cnot.template().genes().iter().all(|g| g.crusher == Constraint::Fixed(false)));
    assert!(named_problem("bell-chi", &sys).is_err());
}

#[test]
fn reference_constants() {
    assert_eq!(tables::cnot_angles(GateLabel::Cnot12), Some((PI / 4.0, PI / 2.0)));
    assert_eq!(tables::cnot_angles(GateLabel::CnotBar21), Some((3.0 * PI / 4.0, PI / 2.0)));
    let p = tables::bell_parameters(StateLabel::PhiMinus).unwrap();
    let (d1, d2) = p.delays_s(500.0);
    assert!((d1 - 9.0 / (48.0 * 500.0)).abs() < 1e-15);
    assert!((d2 - 9.0 / (8.0 * 500.0)).abs() < 1e-15);
    assert_eq!(tables::bell_parameters(StateLabel::PsiPlus).unwrap().d2, 0.0);
}

#[test]
fn readout_is_unitary_and_linear() {
    assert!(singlet_readout_unitary().unitarity_error() < 1e-12);
    let singlet = target_state(StateLabel::PhiMinus);
    let out = singlet_readout(&singlet).unwrap();
    assert!((out.frobenius_norm() - singlet.frobenius_norm()).abs() < 1e-12);
    assert!(singlet_readout(&DensityDeviation::zeros(4)).unwrap().frobenius_norm() == 0.0);

    // Oracle: the two factors built by hand from closed-form 2x2 rotations.
    let phase = |m: f64| C64::from_polar(1.0, -m * PI / 4.0);
    // Iz1 - Iz2 eigenvalues per basis state: 0, 1, -1, 0.
    let uz = Operator::from_diagonal(&[phase(0.0), phase(1.0), phase(-1.0), phase(0.0)]);
    let ux = rotation_2x2(FRAC_PI_2, 0.0).kron(&rotation_2x2(FRAC_PI_2, 0.0));
    let u = &ux * &uz;
    assert!(max_abs_diff(&u, &singlet_readout_unitary()) < 1e-12);
    let oracle = singlet.evolve(&u);
    assert!((&oracle - &out).frobenius_norm() < 1e-12);

    let w = coherence_weights(&out);
    let sq: f64 = w.iter().filter(|(q, _)| q.abs() == 1).map(|(_, x)| x * x).sum();
    assert!(sq > 0.1, "single-quantum part expected, got {w:?}");
}

#[test]
fn sweep_grid_rules() {
    let g = SweepGrid::default();
    assert_eq!(g.ratios().len(), 11);
    assert_eq!(g.thetas().len(), 6);
    assert_eq!(g.delta(), 500.0);
    assert_eq!(g.points(Family::Sqr).unwrap().len(), 66);
    assert_eq!(g.points(Family::Cnot).unwrap().len(), 11);
    assert!(SweepGrid::new(vec![], vec![], 500.0).is_err());
    assert!(SweepGrid::new(vec![-0.1], vec![], 500.0).is_err());
    assert!(SweepGrid::new(vec![0.1], vec![], 500.0).unwrap().points(Family::Sqr).is_err());
}

#[test]
fn ga_sweep_is_reproducible_and_flags_failures() {
    let grid = SweepGrid::new(vec![0.0, 0.05], vec![], 500.0).unwrap();
    let cfg = GAConfig { population_size: 20, generations: 30, refine_evaluations: 3000, restarts: 1, ..GAConfig::default().with_seed(3) };
    let a = fidelity_sweep(Family::Pps, &grid, SweepSolver::FixedTemplate, &cfg).unwrap();
    let b = fidelity_sweep(Family::Pps, &grid, SweepSolver::FixedTemplate, &cfg).unwrap();
    assert_eq!(a, b);
    // No coupling, no way to separate |00> from the rest.
    assert!(!a[0].converged);
    assert!(a[0].fidelity < 0.9);
}
