//! All four Bell states from thermal equilibrium with ten quarter-turn pulses.

use pulsega::catalog::{catalog_problem, tables::bell_parameters, ProblemName, StateLabel};
use pulsega::ga::{run_ga, GAConfig};
use pulsega::spin::SpinSystem;

fn main() -> pulsega::Result<()> {
    let delta = 500.0;
    let system = SpinSystem::homonuclear_pair(delta, 50.0)?;
    for label in StateLabel::BELL {
        let problem = catalog_problem(&ProblemName::State(label), &system)?;
        let r = run_ga(&problem, &GAConfig::default().with_seed(2))?;
        let reference = bell_parameters(label).expect("tabulated");
        let (d1, d2) = reference.delays_s(delta);
        println!(
            "{label:<15} F = {:.8} after {} generations (reference delays {:.3e} s, {:.3e} s)",
            r.best_fitness,
            r.generations_run(),
            d1,
            d2
        );
    }
    Ok(())
}
