use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Genetic algorithm knobs. Defaults follow a standard real-coded GA with a
/// population of 100 over 1000 generations.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct GAConfig {
    pub population_size: usize,
    pub generations: usize,
    /// Fidelity at which a run counts as solved and below which gene
    /// reduction never goes.
    pub cutoff: f64,
    /// Early-exit fidelity. Runs keep refining past `cutoff` until they
    /// reach this or exhaust `generations`.
    pub stop_fitness: f64,
    pub elite_count: usize,
    pub tournament_size: usize,
    pub crossover_rate: f64,
    pub mutation_rate: f64,
    /// Gaussian mutation width for flips and phases, radians.
    pub angle_sigma: f64,
    /// Gaussian mutation width for delays as a fraction of `d_max`.
    pub delay_sigma: f64,
    /// Each mutation draws its width log-uniformly from
    /// `[sigma·10^-decades, sigma]`.
    pub mutation_decades: f64,
    pub crusher_flip_rate: f64,
    /// Upper delay bound in seconds; `None` uses the system default `2/J`.
    pub d_max: Option<f64>,
    pub rng_seed: u64,
    /// Independent attempts per gene count before growing the sequence.
    pub restarts: usize,
    /// Starting gene count for free templates; `None` picks 3 for operator
    /// problems and 7 for state problems.
    pub initial_genes: Option<usize>,
    pub max_genes: usize,
    /// Budget of fitness evaluations for the local (1+1)-ES refinement of
    /// the final best individual; 0 disables it.
    pub refine_evaluations: usize,
    /// Generations of the short GA used to re-polish during gene reduction.
    pub polish_generations: usize,
}

impl Default for GAConfig {
    fn default() -> Self {
        Self {
            population_size: 100,
            generations: 1000,
            cutoff: 0.99,
            stop_fitness: 1.0 - 1e-10,
            elite_count: 2,
            tournament_size: 3,
            crossover_rate: 0.8,
            mutation_rate: 0.15,
            angle_sigma: 0.1 * PI,
            delay_sigma: 0.1,
            mutation_decades: 4.0,
            crusher_flip_rate: 0.05,
            d_max: None,
            rng_seed: 0,
            restarts: 3,
            initial_genes: None,
            max_genes: 12,
            refine_evaluations: 100_000,
            polish_generations: 150,
        }
    }
}

impl GAConfig {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.rng_seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |field: &str, reason: String| Err(Error::InvalidConfig { field: field.into(), reason });
        if self.population_size < 2 {
            return bad("population_size", format!("must be at least 2, got {}", self.population_size));
        }
        if self.generations == 0 {
            return bad("generations", "must be positive".into());
        }
        if !(self.cutoff > 0.0 && self.cutoff <= 1.0) {
            return bad("cutoff", format!("must lie in (0, 1], got {}", self.cutoff));
        }
        if !(self.stop_fitness > 0.0 && self.stop_fitness <= 1.0) {
            return bad("stop_fitness", format!("must lie in (0, 1], got {}", self.stop_fitness));
        }
        if self.elite_count == 0 {
            return bad("elite_count", "at least one elite keeps the best fitness non-decreasing".into());
        }
        if self.elite_count >= self.population_size {
            return bad("elite_count", "must be smaller than population_size".into());
        }
        if self.tournament_size == 0 {
            return bad("tournament_size", "must be positive".into());
        }
        for (name, v) in [
            ("crossover_rate", self.crossover_rate),
            ("mutation_rate", self.mutation_rate),
            ("crusher_flip_rate", self.crusher_flip_rate),
        ] {
            if !(0.0..=1.0).contains(&v) {
                return bad(name, format!("must lie in [0, 1], got {v}"));
            }
        }
        for (name, v) in [("angle_sigma", self.angle_sigma), ("delay_sigma", self.delay_sigma), ("mutation_decades", self.mutation_decades)] {
            if !(v.is_finite() && v >= 0.0) {
                return bad(name, format!("must be finite and non-negative, got {v}"));
            }
        }
        if let Some(d) = self.d_max {
            if !(d.is_finite() && d > 0.0) {
                return bad("d_max", format!("must be positive, got {d}"));
            }
        }
        if self.restarts == 0 {
            return bad("restarts", "must be at least 1".into());
        }
        if let Some(m) = self.initial_genes {
            if m == 0 || m > self.max_genes {
                return bad("initial_genes", format!("must lie in 1..={}, got {m}", self.max_genes));
            }
        }
        Ok(())
    }
}
