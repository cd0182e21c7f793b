//! GA search for a CNOT on a homonuclear pair, followed by gene reduction.

use pulsega::catalog::{catalog_problem, GateLabel, ProblemName};
use pulsega::ga::{solve, GAConfig};
use pulsega::spin::SpinSystem;

fn main() -> pulsega::Result<()> {
    let ratio: f64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(0.01);
    let system = SpinSystem::homonuclear_pair(500.0, 500.0 * ratio)?;
    let problem = catalog_problem(&ProblemName::Gate(GateLabel::Cnot12), &system)?;
    let config = GAConfig { cutoff: 0.9999, ..GAConfig::default().with_seed(11) };
    let sol = solve(&problem, &config)?;

    println!("J/delta = {ratio}");
    for a in &sol.attempts {
        println!("  attempt: {} genes, seed {}, F = {:.10}", a.genes, a.seed, a.best_fitness);
    }
    println!("best F = {:.10} with {} genes", sol.result.best_fitness, sol.genes_before());
    println!("reduced to {} genes, F = {:.10}", sol.genes_after(), sol.reduction.fitness);
    for (i, g) in sol.reduction.sequence.genes().iter().enumerate() {
        println!("  {i}: flip {:.4} phase {:.4} delay {:.4e} s", g.flips()[0], g.phases()[0], g.delay());
    }
    Ok(())
}
