use std::f64::consts::FRAC_PI_2;

use super::labels::GateLabel;
use super::targets::target_unitary;
use crate::error::{Error, Result};
use crate::ga::{PulseGene, PulseSequence};
use crate::spin::{self, Operator, SpinSystem};

/// Fidelity the solved delay must reach on the uncoupled system.
pub const SQR_UNCOUPLED_FLOOR: f64 = 0.999;

const GRID_POINTS: usize = 720;

/// Phases of the two quarter-turn pulses that select `spin` for an SQR of phase `phi`.
pub fn sqr_phases(spin: usize, phi: f64) -> Result<(f64, f64)> {
    match spin {
        1 => Ok((phi - FRAC_PI_2, phi + FRAC_PI_2)),
        2 => Ok((phi + FRAC_PI_2, phi - FRAC_PI_2)),
        _ => Err(Error::SpinIndex { index: spin, n_spins: 2 }),
    }
}

/// The three-pulse SQR sequence with its single delay placed after gene `slot`.
pub fn sqr_template_sequence(spin: usize, theta: f64, phi: f64, slot: usize, delay: f64, n_channels: usize) -> Result<PulseSequence> {
    if slot > 2 {
        return Err(Error::InvalidSequence(format!("SQR delay slot must be 0, 1 or 2, got {slot}")));
    }
    let (p1, p2) = sqr_phases(spin, phi)?;
    let pulses = [(FRAC_PI_2, p1), (FRAC_PI_2, p2), (theta / 2.0, phi)];
    let genes = pulses
        .iter()
        .enumerate()
        .map(|(i, &(f, p))| PulseGene::new(vec![f; n_channels], vec![p; n_channels], if i == slot { delay } else { 0.0 }, false))
        .collect::<Result<Vec<_>>>()?;
    PulseSequence::new(genes)
}

/// Solved SQR sequence: which slot holds the delay, its length and the fidelity reached.
#[derive(Clone, Debug, PartialEq)]
pub struct SqrSolution {
    pub sequence: PulseSequence,
    pub slot: usize,
    pub delay: f64,
    pub fidelity: f64,
}

struct SlotEval<'a> {
    system: &'a SpinSystem,
    target: Operator,
    pulses: Vec<Operator>,
}

impl SlotEval<'_> {
    fn fidelity(&self, slot: usize, d: f64) -> f64 {
        let mut u = Operator::identity(self.system.dim());
        for (i, p) in self.pulses.iter().enumerate() {
            u = p * &u;
            if i == slot && d > 0.0 {
                u = &spin::delay_propagator(self.system, d).expect("delay is non-negative") * &u;
            }
        }
        spin::operator_fidelity(&u, &self.target).unwrap_or(0.0)
    }
}

fn golden_max(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> (f64, f64) {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while (b - a).abs() > 1e-15_f64.max(1e-13 * b.abs()) {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
    }
    let x = (a + b) / 2.0;
    (x, f(x))
}

/// Best delay for every slot on `system`, ignoring the uncoupled floor.
pub fn best_sqr(spin: usize, theta: f64, phi: f64, system: &SpinSystem) -> Result<SqrSolution> {
    if system.n_spins() != 2 {
        return Err(Error::InvalidSystem(format!("SQR needs two spins, got {}", system.n_spins())));
    }
    let label = GateLabel::sqr(spin, theta, phi)?;
    let GateLabel::Sqr { phi, .. } = label else { unreachable!() };
    let split = (system.shifts()[0] - system.shifts()[1]).abs();
    if split == 0.0 {
        return Err(Error::InvalidSystem("SQR needs distinct chemical shifts".into()));
    }
    let period = 1.0 / split;
    let nch = system.n_channels();
    let probe = sqr_template_sequence(spin, theta, phi, 0, 0.0, nch)?;
    let pulses = probe
        .genes()
        .iter()
        .map(|g| spin::pulse_propagator(system, g.flips(), g.phases()))
        .collect::<Result<Vec<_>>>()?;
    let eval = SlotEval { system, target: target_unitary(label, 2)?, pulses };

    let mut best = (0usize, 0.0f64, f64::NEG_INFINITY);
    for slot in 0..3 {
        let step = period / GRID_POINTS as f64;
        let (k, fk) = (0..=GRID_POINTS)
            .map(|k| (k, eval.fidelity(slot, k as f64 * step)))
            .fold((0, f64::NEG_INFINITY), |acc, x| if x.1 > acc.1 { x } else { acc });
        let lo = (k as f64 - 1.0).max(0.0) * step;
        let hi = (k as f64 + 1.0) * step;
        let (d, f) = golden_max(|d| eval.fidelity(slot, d), lo, hi);
        let (d, f) = if fk > f { (k as f64 * step, fk) } else { (d, f) };
        if f > best.2 + 1e-12 {
            best = (slot, d, f);
        }
    }
    let (slot, delay, fidelity) = best;
    Ok(SqrSolution { sequence: sqr_template_sequence(spin, theta, phi, slot, delay, nch)?, slot, delay, fidelity })
}

/// Solve the SQR delay on `system`. Fails if even the uncoupled version of
/// the system cannot reach [`SQR_UNCOUPLED_FLOOR`].
pub fn solve_sqr(spin: usize, theta: f64, phi: f64, system: &SpinSystem) -> Result<SqrSolution> {
    let n = system.n_spins();
    let free = SpinSystem::new(system.shifts().to_vec(), vec![vec![0.0; n]; n], system.channels().to_vec())?;
    let reference = best_sqr(spin, theta, phi, &free)?;
    if reference.fidelity < SQR_UNCOUPLED_FLOOR {
        return Err(Error::Solver(format!(
            "SQR template reaches only {:.6} without coupling (need {SQR_UNCOUPLED_FLOOR})",
            reference.fidelity
        )));
    }
    best_sqr(spin, theta, phi, system)
}

/// [`solve_sqr`] returning only the sequence.
pub fn sqr_sequence(spin: usize, theta: f64, phi: f64, system: &SpinSystem) -> Result<PulseSequence> {
    solve_sqr(spin, theta, phi, system).map(|s| s.sequence)
}
