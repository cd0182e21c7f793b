//! Pseudo-pure |00> from thermal equilibrium with crushers and a fixed-flip template.

use pulsega::catalog::{catalog_problem, target_state, ProblemName, StateLabel};
use pulsega::ga::{run_ga, simulate_sequence, GAConfig};
use pulsega::spin::{diagonal_populations, transfer_efficiency, SpinSystem};

fn main() -> pulsega::Result<()> {
    for ratio in [0.01, 0.05, 0.1] {
        let system = SpinSystem::homonuclear_pair(500.0, 500.0 * ratio)?;
        let problem = catalog_problem(&ProblemName::State(StateLabel::Pps00), &system)?;
        let r = run_ga(&problem, &GAConfig::default().with_seed(5))?;
        let rho = simulate_sequence(&r.best, &problem)?.state().cloned().expect("state problem");
        let target = target_state(StateLabel::Pps00);
        let k = target.frobenius_norm() / rho.frobenius_norm();
        let pops: Vec<String> = diagonal_populations(&rho).iter().map(|p| format!("{:+.5}", p * k)).collect();
        let crushers = r.best.genes().iter().filter(|g| g.crusher()).count();
        println!(
            "J/delta={ratio:.2}: F = {:.8}, populations [{}], {crushers} crushers, retained {:.3} of the norm",
            r.best_fitness,
            pops.join(", "),
            transfer_efficiency(&rho, &target_state(StateLabel::Thermal))
        );
    }
    Ok(())
}
