//! A user-defined problem: two-channel (heteronuclear) pair, CNOT(2,1)
//! target, with the first gene pinned to a quarter turn.

use std::f64::consts::FRAC_PI_2;

use pulsega::catalog::{target_unitary, GateLabel};
use pulsega::ga::{run_ga, Constraint, GAConfig, GeneConstraint, Problem, SequenceTemplate};
use pulsega::spin::SpinSystem;

fn main() -> pulsega::Result<()> {
    let system = SpinSystem::selective_pair(2000.0, 40.0)?;
    let mut genes = vec![GeneConstraint::FREE; 5];
    genes[0] = GeneConstraint::fixed_flip(FRAC_PI_2).with_delay(Constraint::Fixed(0.0));
    let problem = Problem::operator("hetero-cnot21", system, target_unitary(GateLabel::Cnot21, 2)?, SequenceTemplate::new(genes))?;
    let config = GAConfig { population_size: 60, generations: 400, ..GAConfig::default().with_seed(4) };
    let r = run_ga(&problem, &config)?;
    println!("F = {:.10} after {} generations", r.best_fitness, r.generations_run());
    for g in r.best.genes() {
        println!("  flips {:?} phases {:?} delay {:.4e}", g.flips(), g.phases(), g.delay());
    }
    Ok(())
}
