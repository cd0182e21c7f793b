//! Single-spin rotations from non-selective pulses and one free-precession delay.

use std::f64::consts::{FRAC_PI_2, PI};

use pulsega::catalog::{solve_sqr, target_unitary, GateLabel};
use pulsega::ga::{evaluate_fitness, Problem, SequenceTemplate};
use pulsega::spin::SpinSystem;

fn main() -> pulsega::Result<()> {
    let delta = 500.0;
    for ratio in [0.0, 0.05, 0.1] {
        let system = SpinSystem::homonuclear_pair(delta, ratio * delta)?;
        for spin in [1, 2] {
            let s = solve_sqr(spin, FRAC_PI_2, FRAC_PI_2, &system)?;
            // Score the same sequence against the other spin's rotation.
            let other = GateLabel::sqr(3 - spin, FRAC_PI_2, FRAC_PI_2)?;
            let p = Problem::operator("other", system.clone(), target_unitary(other, 2)?, SequenceTemplate::free(3))?;
            let cross = evaluate_fitness(&s.sequence, &p)?;
            println!(
                "J/delta={ratio:.2} spin {spin}: delay after pulse {} = {:.4e} s, F = {:.6}, F(other spin) = {:.3}",
                s.slot + 1,
                s.delay,
                s.fidelity,
                cross
            );
        }
    }

    let system = SpinSystem::homonuclear_pair(delta, 0.1 * delta)?;
    for theta in [PI / 8.0, PI / 4.0, 3.0 * PI / 8.0, FRAC_PI_2, 3.0 * PI / 4.0, PI] {
        let s = solve_sqr(1, theta, 0.0, &system)?;
        println!("theta = {:.4}: F = {:.6}", theta, s.fidelity);
    }
    Ok(())
}
