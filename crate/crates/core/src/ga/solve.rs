use serde::{Deserialize, Serialize};

use super::config::GAConfig;
use super::engine::{run_ga, GAResult};
use super::problem::Problem;
use super::reduce::{reduce_genes_detailed, Reduction};
use crate::error::Result;

/// Summary of one GA attempt within the gene-count schedule.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Attempt {
    pub genes: usize,
    pub restart: usize,
    pub seed: u64,
    pub best_fitness: f64,
    pub generations: usize,
}

/// Best GA run of the schedule, the problem (grown template) it solved, and
/// the reduced sequence.
#[derive(Clone, Debug)]
pub struct Solution {
    pub result: GAResult,
    pub problem: Problem,
    pub reduction: Reduction,
    pub attempts: Vec<Attempt>,
}

impl Solution {
    pub fn reached_cutoff(&self) -> bool {
        self.result.reached_cutoff
    }

    pub fn genes_before(&self) -> usize {
        self.result.best.len()
    }

    pub fn genes_after(&self) -> usize {
        self.reduction.sequence.len()
    }
}

/// Seed for attempt `k` of a schedule started from `base`; attempt 0 uses `base` itself.
pub fn attempt_seed(base: u64, k: u64) -> u64 {
    base.wrapping_add(k.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Gene count a free template starts at: 3 for gates, 7 for states.
pub fn default_initial_genes(problem: &Problem) -> usize {
    if problem.objective().is_operator() {
        3
    } else {
        7
    }
}

/// Best GA run of a gene-count schedule, without reduction.
#[derive(Clone, Debug)]
pub struct Search {
    pub result: GAResult,
    pub problem: Problem,
    pub attempts: Vec<Attempt>,
}

/// Up to `restarts` GA runs per gene count, stopping at the first run that
/// reaches the cutoff. With `grow` the template gains one gene after each
/// failed round until `max_genes`; otherwise only the starting template is tried.
pub fn search(problem: &Problem, config: &GAConfig, grow: bool) -> Result<Search> {
    config.validate()?;
    let mut current = match config.initial_genes {
        Some(m) if grow && m > problem.template().len() => problem.grown(m - problem.template().len()),
        _ => problem.clone(),
    };
    let mut attempts = Vec::new();
    let mut best: Option<(GAResult, Problem)> = None;
    let mut k = 0u64;
    loop {
        for restart in 0..config.restarts {
            let cfg = GAConfig { rng_seed: attempt_seed(config.rng_seed, k), ..config.clone() };
            k += 1;
            let r = run_ga(&current, &cfg)?;
            attempts.push(Attempt {
                genes: current.template().len(),
                restart,
                seed: cfg.rng_seed,
                best_fitness: r.best_fitness,
                generations: r.generations_run(),
            });
            let better = best.as_ref().is_none_or(|(b, _)| r.best_fitness > b.best_fitness);
            let done = r.reached_cutoff;
            if better {
                best = Some((r, current.clone()));
            }
            if done {
                break;
            }
        }
        let solved = best.as_ref().is_some_and(|(b, _)| b.reached_cutoff);
        if !grow || solved || current.template().len() >= config.max_genes {
            break;
        }
        current = current.grown(1);
    }
    let (result, problem) = best.expect("at least one attempt runs");
    Ok(Search { result, problem, attempts })
}

/// Full optimization schedule: [`search`] with growth, then gene reduction
/// of the best run.
pub fn solve(problem: &Problem, config: &GAConfig) -> Result<Solution> {
    let Search { result, problem, attempts } = search(problem, config, true)?;
    let reduction = reduce_genes_detailed(&result, &problem, config)?;
    Ok(Solution { result, problem, reduction, attempts })
}
