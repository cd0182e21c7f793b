//! Fidelity tables over J/delta for the SQR template and the PPS search.

use pulsega::catalog::{fidelity_sweep, Family, SweepGrid, SweepSolver};
use pulsega::cli::sweep_csv;
use pulsega::ga::GAConfig;

fn main() -> pulsega::Result<()> {
    let rows = fidelity_sweep(Family::Sqr, &SweepGrid::default(), SweepSolver::FixedTemplate, &GAConfig::default())?;
    let worst = rows
        .iter()
        .filter(|r| r.theta.is_some_and(|t| t <= std::f64::consts::FRAC_PI_2 + 1e-12))
        .map(|r| r.fidelity)
        .fold(1.0, f64::min);
    println!("SQR: {} rows, worst fidelity for theta <= pi/2: {worst:.6}", rows.len());

    let grid = SweepGrid::new(vec![0.02, 0.06, 0.1], vec![], 500.0)?;
    let rows = fidelity_sweep(Family::Pps, &grid, SweepSolver::FixedTemplate, &GAConfig::default().with_seed(9))?;
    print!("{}", sweep_csv(&rows));
    Ok(())
}
