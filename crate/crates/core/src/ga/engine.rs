use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::config::GAConfig;
use super::problem::Problem;
use super::sequence::{PulseGene, PulseSequence};
use super::simulate::loop_fitness;
use super::template::SequenceTemplate;
use crate::error::{Error, Result};

/// Best and mean fitness of one generation.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GenerationStats {
    pub best: f64,
    pub mean: f64,
}

/// Outcome of one GA run.
#[derive(Clone, Debug, PartialEq)]
pub struct GAResult {
    pub best: PulseSequence,
    pub best_fitness: f64,
    /// One entry per evaluated generation, the initial population first.
    pub history: Vec<GenerationStats>,
    pub seed: u64,
    pub reached_cutoff: bool,
}

impl GAResult {
    pub fn generations_run(&self) -> usize {
        self.history.len()
    }
}

/// Parameter bounds and mutation widths resolved for one run.
struct Search<'a> {
    template: &'a SequenceTemplate,
    n_channels: usize,
    d_max: f64,
    cfg: &'a GAConfig,
}

fn reflect(x: f64, hi: f64) -> f64 {
    if hi <= 0.0 {
        return 0.0;
    }
    let y = x.rem_euclid(2.0 * hi);
    if y > hi {
        2.0 * hi - y
    } else {
        y
    }
}

/// Signed shortest angular difference `b - a` in `(-π, π]`.
fn angle_diff(a: f64, b: f64) -> f64 {
    let d = (b - a).rem_euclid(TAU);
    if d > PI {
        d - TAU
    } else {
        d
    }
}

impl Search<'_> {
    fn random_individual(&self, rng: &mut ChaCha8Rng) -> PulseSequence {
        let genes = self
            .template
            .genes()
            .iter()
            .map(|c| {
                let flips = (0..self.n_channels).map(|_| c.flip.fixed().unwrap_or_else(|| rng.gen_range(0.0..TAU))).collect();
                let phases = (0..self.n_channels).map(|_| c.phase.fixed().unwrap_or_else(|| rng.gen_range(0.0..TAU))).collect();
                let delay = c.delay.fixed().map_or_else(|| rng.gen_range(0.0..=self.d_max), |d| d.max(0.0));
                let crusher = c.crusher.fixed().unwrap_or_else(|| rng.gen_bool(0.5));
                PulseGene::new(flips, phases, delay, crusher).expect("bounded parameters form a valid gene")
            })
            .collect();
        PulseSequence::new(genes).expect("template is non-empty")
    }

    /// Conform an externally supplied individual to the template and bounds.
    fn conform(&self, seq: &PulseSequence) -> Result<PulseSequence> {
        if seq.len() != self.template.len() {
            return Err(Error::InvalidSequence(format!(
                "seed individual has {} genes, template has {}",
                seq.len(),
                self.template.len()
            )));
        }
        if seq.n_channels() != self.n_channels {
            return Err(Error::ChannelCount { expected: self.n_channels, found: seq.n_channels() });
        }
        let mut out = seq.clone();
        for (g, c) in out.genes_mut().iter_mut().zip(self.template.genes()) {
            if c.delay.is_free() {
                g.set_delay(g.delay().min(self.d_max));
            }
            c.enforce(g);
        }
        Ok(out)
    }

    fn mutate(&self, seq: &mut PulseSequence, rng: &mut ChaCha8Rng) {
        let rate = self.cfg.mutation_rate;
        let dec = self.cfg.mutation_decades;
        let draw = |rng: &mut ChaCha8Rng| 10f64.powf(-dec * rng.gen::<f64>());
        let angle_sigma = self.cfg.angle_sigma;
        let delay_sigma = self.cfg.delay_sigma * self.d_max;
        for (g, c) in seq.genes_mut().iter_mut().zip(self.template.genes()) {
            for ch in 0..self.n_channels {
                if c.flip.is_free() && rng.gen_bool(rate) {
                    let s = angle_sigma * draw(rng);
                    let z: f64 = rng.sample(StandardNormal);
                    g.set_flip(ch, g.flips()[ch] + s * z);
                }
                if c.phase.is_free() && rng.gen_bool(rate) {
                    let s = angle_sigma * draw(rng);
                    let z: f64 = rng.sample(StandardNormal);
                    g.set_phase(ch, g.phases()[ch] + s * z);
                }
            }
            if c.delay.is_free() && rng.gen_bool(rate) {
                let s = delay_sigma * draw(rng);
                let z: f64 = rng.sample(StandardNormal);
                g.set_delay(reflect(g.delay() + s * z, self.d_max));
            }
            if c.crusher.is_free() && rng.gen_bool(self.cfg.crusher_flip_rate) {
                g.set_crusher(!g.crusher());
            }
        }
    }

    /// Arithmetic blend with one weight per child; angles blend along the
    /// shorter arc, crusher flags are inherited from either parent.
    fn crossover(&self, a: &PulseSequence, b: &PulseSequence, rng: &mut ChaCha8Rng) -> PulseSequence {
        let w: f64 = rng.gen();
        let mut child = a.clone();
        for ((g, gb), c) in child.genes_mut().iter_mut().zip(b.genes()).zip(self.template.genes()) {
            for ch in 0..self.n_channels {
                if c.flip.is_free() {
                    let (x, y) = (g.flips()[ch], gb.flips()[ch]);
                    g.set_flip(ch, x + w * angle_diff(x, y));
                }
                if c.phase.is_free() {
                    let (x, y) = (g.phases()[ch], gb.phases()[ch]);
                    g.set_phase(ch, x + w * angle_diff(x, y));
                }
            }
            if c.delay.is_free() {
                g.set_delay((g.delay() + w * (gb.delay() - g.delay())).clamp(0.0, self.d_max));
            }
            if c.crusher.is_free() && rng.gen_bool(0.5) {
                g.set_crusher(gb.crusher());
            }
        }
        child
    }

    /// Tournament over ranks: the lowest rank drawn wins, so ties resolve to
    /// the earlier-sorted (earlier-inserted) individual.
    fn tournament(&self, pop_len: usize, rng: &mut ChaCha8Rng) -> usize {
        (0..self.cfg.tournament_size).map(|_| rng.gen_range(0..pop_len)).min().unwrap_or(0)
    }

    /// (1+1) evolution strategy on the free continuous parameters of `start`
    /// with the one-fifth success rule. Delays are stepped in units of the
    /// largest drift precession phase so that one isotropic step size fits
    /// angles and delays alike. Only improvements are accepted.
    fn refine(&self, problem: &Problem, start: PulseSequence, start_fitness: f64, rng: &mut ChaCha8Rng) -> (PulseSequence, f64) {
        const INITIAL_STEP: f64 = 0.05;
        let spread = problem
            .drift()
            .iter()
            .flat_map(|a| problem.drift().iter().map(move |b| (a - b).abs()))
            .fold(0.0, f64::max);
        let omega = if spread > 0.0 { spread } else { 1.0 / self.d_max };
        let (mut x, mut f) = (start, start_fitness);
        let mut step = INITIAL_STEP;
        for _ in 0..self.cfg.refine_evaluations {
            if f >= self.cfg.stop_fitness {
                break;
            }
            let mut y = x.clone();
            for (g, c) in y.genes_mut().iter_mut().zip(self.template.genes()) {
                for ch in 0..self.n_channels {
                    if c.flip.is_free() {
                        g.set_flip(ch, g.flips()[ch] + step * rng.sample::<f64, _>(StandardNormal));
                    }
                    if c.phase.is_free() {
                        g.set_phase(ch, g.phases()[ch] + step * rng.sample::<f64, _>(StandardNormal));
                    }
                }
                if c.delay.is_free() {
                    let dz = step * rng.sample::<f64, _>(StandardNormal) / omega;
                    g.set_delay(reflect(g.delay() + dz, self.d_max));
                }
            }
            let fy = loop_fitness(&y, problem);
            if fy > f {
                x = y;
                f = fy;
                step *= 1.5;
            } else {
                step *= 0.9036;
            }
            if step < 1e-12 {
                step = INITIAL_STEP;
            }
        }
        (x, f)
    }

    fn enforce(&self, seq: &mut PulseSequence) {
        for (g, c) in seq.genes_mut().iter_mut().zip(self.template.genes()) {
            c.enforce(g);
        }
    }
}

/// Evolve a population for the problem's template.
pub fn run_ga(problem: &Problem, config: &GAConfig) -> Result<GAResult> {
    run_ga_seeded(problem, config, &[])
}

/// As [`run_ga`], but the initial population is built around `seeds`
/// (each seed kept once verbatim, the rest of the population mutated copies)
/// instead of uniform random draws.
pub fn run_ga_seeded(problem: &Problem, config: &GAConfig, seeds: &[PulseSequence]) -> Result<GAResult> {
    config.validate()?;
    let search = Search {
        template: problem.template(),
        n_channels: problem.system().n_channels(),
        d_max: config.d_max.unwrap_or_else(|| problem.system().default_max_delay()),
        cfg: config,
    };
    let seeds: Vec<PulseSequence> = seeds.iter().map(|s| search.conform(s)).collect::<Result<_>>()?;
    let mut master = ChaCha8Rng::seed_from_u64(config.rng_seed);
    let n = config.population_size;

    let init_seeds: Vec<u64> = (0..n).map(|_| master.gen()).collect();
    let mut population: Vec<PulseSequence> = init_seeds
        .par_iter()
        .enumerate()
        .map(|(i, &s)| {
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            if seeds.is_empty() {
                search.random_individual(&mut rng)
            } else if i < seeds.len() {
                seeds[i].clone()
            } else {
                let mut ind = seeds[i % seeds.len()].clone();
                search.mutate(&mut ind, &mut rng);
                ind
            }
        })
        .collect();
    let mut fitness: Vec<f64> = population.par_iter().map(|s| loop_fitness(s, problem)).collect();

    let mut history = Vec::with_capacity(config.generations);
    let mut best = population[0].clone();
    let mut best_fitness = f64::NEG_INFINITY;

    for generation in 0..config.generations {
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| fitness[b].total_cmp(&fitness[a]));
        let gen_best = fitness[order[0]];
        let mean = fitness.iter().sum::<f64>() / n as f64;
        history.push(GenerationStats { best: gen_best, mean });
        if gen_best > best_fitness {
            best_fitness = gen_best;
            best = population[order[0]].clone();
        }
        if best_fitness >= config.stop_fitness || generation + 1 == config.generations {
            break;
        }

        let ranked: Vec<&PulseSequence> = order.iter().map(|&i| &population[i]).collect();
        let child_seeds: Vec<u64> = (config.elite_count..n).map(|_| master.gen()).collect();
        let children: Vec<PulseSequence> = child_seeds
            .par_iter()
            .map(|&s| {
                let mut rng = ChaCha8Rng::seed_from_u64(s);
                let a = ranked[search.tournament(n, &mut rng)];
                let b = ranked[search.tournament(n, &mut rng)];
                let mut child = if rng.gen_bool(config.crossover_rate) {
                    search.crossover(a, b, &mut rng)
                } else {
                    a.clone()
                };
                search.mutate(&mut child, &mut rng);
                search.enforce(&mut child);
                child
            })
            .collect();
        let child_fitness: Vec<f64> = children.par_iter().map(|s| loop_fitness(s, problem)).collect();

        let mut next = Vec::with_capacity(n);
        let mut next_fitness = Vec::with_capacity(n);
        for &i in order.iter().take(config.elite_count) {
            next.push(population[i].clone());
            next_fitness.push(fitness[i]);
        }
        next.extend(children);
        next_fitness.extend(child_fitness);
        population = next;
        fitness = next_fitness;
    }

    if config.refine_evaluations > 0 && best_fitness < config.stop_fitness {
        let mut rng = ChaCha8Rng::seed_from_u64(master.gen());
        (best, best_fitness) = search.refine(problem, best, best_fitness, &mut rng);
    }

    Ok(GAResult {
        reached_cutoff: best_fitness >= config.cutoff,
        best,
        best_fitness,
        history,
        seed: config.rng_seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflect_into_bounds() {
        assert!((reflect(-0.1, 1.0) - 0.1).abs() < 1e-15);
        assert!((reflect(1.25, 1.0) - 0.75).abs() < 1e-15);
        assert!((reflect(2.5, 1.0) - 0.5).abs() < 1e-15);
        assert_eq!(reflect(0.4, 0.0), 0.0);
    }

    #[test]
    fn shortest_arc() {
        assert!((angle_diff(0.1, TAU - 0.1) + 0.2).abs() < 1e-12);
        assert!((angle_diff(TAU - 0.1, 0.1) - 0.2).abs() < 1e-12);
    }
}
