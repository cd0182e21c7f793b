use nalgebra::DMatrix;

use super::problem::{Objective, Problem};
use super::sequence::PulseSequence;
use crate::error::{Error, Result};
use crate::spin::{self, DensityDeviation, Operator, C64};

/// Fitness assigned inside the GA loop to individuals whose state was crushed away.
pub const ANNIHILATED_FITNESS: f64 = -1.0;

/// Result of running a sequence: a propagator or an evolved deviation.
#[derive(Clone, Debug, PartialEq)]
pub enum Simulated {
    Propagator(Operator),
    State(DensityDeviation),
}

impl Simulated {
    pub fn propagator(&self) -> Option<&Operator> {
        match self {
            Simulated::Propagator(u) => Some(u),
            Simulated::State(_) => None,
        }
    }

    pub fn state(&self) -> Option<&DensityDeviation> {
        match self {
            Simulated::State(r) => Some(r),
            Simulated::Propagator(_) => None,
        }
    }
}

fn check_channels(seq: &PulseSequence, problem: &Problem) -> Result<()> {
    let nch = problem.system().n_channels();
    if seq.n_channels() != nch {
        return Err(Error::ChannelCount { expected: nch, found: seq.n_channels() });
    }
    Ok(())
}

/// Propagator of the sequence: per gene the hard pulse, then the delay.
/// Crushers are rejected because the map would not be unitary.
pub fn sequence_propagator(seq: &PulseSequence, problem: &Problem) -> Result<Operator> {
    check_channels(seq, problem)?;
    if seq.genes().iter().any(|g| g.crusher()) {
        return Err(Error::CrusherInOperatorProblem);
    }
    let drift = problem.drift();
    let n = drift.len();
    let mut u = DMatrix::<C64>::identity(n, n);
    for gene in seq.genes() {
        let p = spin::pulse_propagator(problem.system(), gene.flips(), gene.phases())?;
        u = p.matrix() * u;
        if gene.delay() > 0.0 {
            for (i, &e) in drift.iter().enumerate() {
                let ph = C64::from_polar(1.0, -e * gene.delay());
                u.row_mut(i).iter_mut().for_each(|z| *z *= ph);
            }
        }
    }
    Operator::from_matrix(u)
}

/// Evolve `initial` through the sequence, crushing where flagged.
pub fn evolve_state(seq: &PulseSequence, problem: &Problem, initial: &DensityDeviation) -> Result<DensityDeviation> {
    check_channels(seq, problem)?;
    if !problem.allow_crushers() && seq.genes().iter().any(|g| g.crusher()) {
        return Err(Error::InvalidSequence("crusher flagged but this problem disables crushers".into()));
    }
    let drift = problem.drift();
    let mut rho = initial.clone();
    for gene in seq.genes() {
        let p = spin::pulse_propagator(problem.system(), gene.flips(), gene.phases())?;
        rho = rho.evolve(&p);
        if gene.delay() > 0.0 {
            let mut m = rho.matrix().clone();
            for c in 0..drift.len() {
                for r in 0..drift.len() {
                    if r != c {
                        m[(r, c)] *= C64::from_polar(1.0, -(drift[r] - drift[c]) * gene.delay());
                    }
                }
            }
            rho = DensityDeviation::from_matrix_unchecked(m);
        }
        if gene.crusher() {
            rho = spin::apply_crusher(&rho);
        }
    }
    if problem.final_crusher() {
        rho = spin::apply_crusher(&rho);
    }
    Ok(rho)
}

/// Run the sequence against the problem's objective.
pub fn simulate_sequence(seq: &PulseSequence, problem: &Problem) -> Result<Simulated> {
    match problem.objective() {
        Objective::Operator { .. } => sequence_propagator(seq, problem).map(Simulated::Propagator),
        Objective::State { initial, .. } => evolve_state(seq, problem, initial).map(Simulated::State),
    }
}

/// Operator or state fidelity of the simulated sequence against the target.
pub fn evaluate_fitness(seq: &PulseSequence, problem: &Problem) -> Result<f64> {
    match (simulate_sequence(seq, problem)?, problem.objective()) {
        (Simulated::Propagator(u), Objective::Operator { target }) => spin::operator_fidelity(&u, target),
        (Simulated::State(rho), Objective::State { target, .. }) => spin::state_fidelity(&rho, target),
        _ => unreachable!("simulation output always matches the objective kind"),
    }
}

/// Total version of [`evaluate_fitness`] for use inside the GA loop.
pub(crate) fn loop_fitness(seq: &PulseSequence, problem: &Problem) -> f64 {
    match evaluate_fitness(seq, problem) {
        Ok(f) => f,
        Err(Error::ZeroNorm) => ANNIHILATED_FITNESS,
        Err(e) => {
            debug_assert!(false, "template-conforming individual failed to simulate: {e}");
            ANNIHILATED_FITNESS
        }
    }
}

#[cfg(test)]
mod tests {
    use std::f64::consts::FRAC_PI_2;

    use super::*;
    use crate::ga::{PulseGene, SequenceTemplate};
    use crate::spin::{spin_operator, Axis, SpinSystem};

    fn thermal() -> DensityDeviation {
        DensityDeviation::new(&spin_operator(Axis::Z, 1, 2).unwrap() + &spin_operator(Axis::Z, 2, 2).unwrap()).unwrap()
    }

    fn state_problem(target: DensityDeviation) -> Problem {
        let sys = SpinSystem::homonuclear_pair(500.0, 10.0).unwrap();
        Problem::state("t", sys, thermal(), target, SequenceTemplate::free(1), true).unwrap()
    }

    #[test]
    fn idle_sequence_is_identity() {
        let sys = SpinSystem::homonuclear_pair(500.0, 10.0).unwrap();
        let seq = PulseSequence::new(vec![PulseGene::idle(1); 3]).unwrap();
        let p = Problem::operator("id", sys, Operator::identity(4), SequenceTemplate::free(3)).unwrap();
        let u = sequence_propagator(&seq, &p).unwrap();
        assert!((&u - &Operator::identity(4)).frobenius_norm() < 1e-15);
        let sp = state_problem(thermal());
        assert_eq!(simulate_sequence(&seq, &sp).unwrap().state().unwrap(), &thermal());
    }

    #[test]
    fn quarter_turn_preserves_norm() {
        let sp = state_problem(thermal());
        let seq = PulseSequence::new(vec![PulseGene::single(FRAC_PI_2, 0.0, 0.0, false).unwrap()]).unwrap();
        let rho = evolve_state(&seq, &sp, &thermal()).unwrap();
        assert!((rho.frobenius_norm() - 2.0_f64.sqrt()).abs() < 1e-14);
        // I_z -> -I_y on both spins for an x quarter turn
        let iy = &spin_operator(Axis::Y, 1, 2).unwrap() + &spin_operator(Axis::Y, 2, 2).unwrap();
        assert!((&rho.to_operator() + &iy).frobenius_norm() < 1e-14);
    }

    #[test]
    fn crushed_transverse_state_is_zero() {
        let sp = state_problem(thermal());
        let seq = PulseSequence::new(vec![PulseGene::single(FRAC_PI_2, 0.0, 0.0, true).unwrap()]).unwrap();
        let rho = evolve_state(&seq, &sp, &thermal()).unwrap();
        assert!(rho.frobenius_norm() < 1e-15);
        assert!(matches!(evaluate_fitness(&seq, &sp), Err(Error::ZeroNorm)));
        assert_eq!(loop_fitness(&seq, &sp), ANNIHILATED_FITNESS);
    }

    #[test]
    fn crusher_rejected_for_operators() {
        let sys = SpinSystem::homonuclear_pair(500.0, 10.0).unwrap();
        let p = Problem::operator("id", sys, Operator::identity(4), SequenceTemplate::free(1)).unwrap();
        let seq = PulseSequence::new(vec![PulseGene::single(0.0, 0.0, 0.0, true).unwrap()]).unwrap();
        assert!(matches!(simulate_sequence(&seq, &p), Err(Error::CrusherInOperatorProblem)));
    }

    #[test]
    fn identity_versus_cnot() {
        let sys = SpinSystem::homonuclear_pair(500.0, 10.0).unwrap();
        let p = Problem::operator("c", sys, Operator::permutation(&[0, 1, 3, 2]), SequenceTemplate::free(1)).unwrap();
        let seq = PulseSequence::new(vec![PulseGene::idle(1)]).unwrap();
        assert!((evaluate_fitness(&seq, &p).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn delay_matches_propagator_route() {
        let sp = state_problem(thermal());
        let seq = PulseSequence::new(vec![
            PulseGene::single(FRAC_PI_2, 0.3, 0.0123, false).unwrap(),
            PulseGene::single(1.1, 2.0, 0.004, false).unwrap(),
        ])
        .unwrap();
        let fast = evolve_state(&seq, &sp, &thermal()).unwrap();
        let mut u = Operator::identity(4);
        for g in seq.genes() {
            u = &spin::pulse_propagator(sp.system(), g.flips(), g.phases()).unwrap() * &u;
            u = &spin::delay_propagator(sp.system(), g.delay()).unwrap() * &u;
        }
        let slow = thermal().evolve(&u);
        assert!((&fast.to_operator() - &slow.to_operator()).frobenius_norm() < 1e-12);
    }
}
