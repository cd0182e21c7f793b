//! Chromosome encoding, sequence simulation and the genetic algorithm.
//!
//! An individual is a [`PulseSequence`]: `m` genes, each a simultaneous hard
//! pulse on every channel plus a delay (and, for state problems, an optional
//! gradient crusher). Laid out as a matrix it has one `(θ, φ)` column pair per
//! gene and one row per channel, plus a delay row.

mod config;
mod engine;
mod problem;
mod reduce;
mod sequence;
mod simulate;
mod solve;
mod template;

pub use config::GAConfig;
pub use engine::{run_ga, run_ga_seeded, GAResult, GenerationStats};
pub use problem::{Objective, Problem};
pub use reduce::{reduce_genes, reduce_genes_detailed, Reduction};
pub use sequence::{wrap_angle, PulseGene, PulseSequence};
pub use simulate::{
    evaluate_fitness, evolve_state, sequence_propagator, simulate_sequence, Simulated, ANNIHILATED_FITNESS,
};
pub use solve::{attempt_seed, default_initial_genes, search, solve, Attempt, Search, Solution};
pub use template::{Constraint, GeneConstraint, SequenceTemplate};
