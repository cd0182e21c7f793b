//! Write a sequence file, read it back and re-simulate it.

use std::f64::consts::FRAC_PI_2;

use pulsega::catalog::{named_problem, solve_sqr};
use pulsega::cli::SequenceFile;
use pulsega::ga::evaluate_fitness;
use pulsega::spin::SpinSystem;

fn main() -> pulsega::Result<()> {
    let system = SpinSystem::homonuclear_pair(500.0, 20.0)?;
    let seq = solve_sqr(1, FRAC_PI_2, FRAC_PI_2, &system)?.sequence;
    let json = SequenceFile::from_sequence(&seq, &system).to_json();
    print!("{json}");

    let path = std::env::temp_dir().join("pulsega-sqr1.json");
    std::fs::write(&path, &json)?;
    let back = SequenceFile::from_json(&std::fs::read_to_string(&path)?)?.to_sequence(&system)?;
    let problem = named_problem("sqr1", &system)?;
    println!("fidelity as solved  {:.12}", evaluate_fitness(&seq, &problem)?);
    println!("fidelity from file  {:.12}", evaluate_fitness(&back, &problem)?);

    let mut broken: serde_json::Value = serde_json::from_str(&json)?;
    broken["genes"][0]["delay_s"] = serde_json::json!(-1.0);
    match SequenceFile::from_json(&broken.to_string()).and_then(|f| f.to_sequence(&system)) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => println!("unexpectedly accepted"),
    }
    Ok(())
}
