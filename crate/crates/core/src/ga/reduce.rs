use super::config::GAConfig;
use super::engine::{run_ga_seeded, GAResult};
use super::problem::Problem;
use super::sequence::PulseSequence;
use super::simulate::loop_fitness;
use super::template::{Constraint, SequenceTemplate};
use crate::error::{Error, Result};

/// Outcome of gene reduction: the shortened sequence, its fitness and the
/// template it now conforms to (removed genes dropped, zeroed delays pinned).
#[derive(Clone, Debug, PartialEq)]
pub struct Reduction {
    pub sequence: PulseSequence,
    pub fitness: f64,
    pub template: SequenceTemplate,
}

struct Reducer<'a> {
    problem: &'a Problem,
    config: &'a GAConfig,
    polish_runs: u64,
}

impl Reducer<'_> {
    /// Re-polish `cand` with a short seeded GA over the remaining free
    /// parameters unless it already meets `stop_fitness`; keep the better of
    /// the two if it reaches the cutoff.
    fn settle(&mut self, cand: PulseSequence, template: &SequenceTemplate) -> Result<Option<(PulseSequence, f64)>> {
        let sub = self.problem.with_template(template.clone());
        let f = loop_fitness(&cand, &sub);
        let mut best = (cand, f);
        if f < self.config.stop_fitness && self.config.polish_generations > 0 {
            self.polish_runs += 1;
            let cfg = GAConfig {
                generations: self.config.polish_generations,
                rng_seed: self.config.rng_seed ^ self.polish_runs.wrapping_mul(0x9E37_79B9_7F4A_7C15),
                ..self.config.clone()
            };
            let polished = run_ga_seeded(&sub, &cfg, std::slice::from_ref(&best.0))?;
            if polished.best_fitness > best.1 {
                best = (polished.best, polished.best_fitness);
            }
        }
        Ok((best.1 >= self.config.cutoff).then_some(best))
    }
}

/// Greedy gene-count reduction of a solved run.
///
/// Genes are removed (last first) and free delays pinned to zero one at a
/// time; each change is kept when the fitness, after an optional short
/// re-polish, still reaches `config.cutoff`. `problem`'s template must be the
/// one `result` was evolved under. A result below the cutoff is returned as is.
pub fn reduce_genes_detailed(result: &GAResult, problem: &Problem, config: &GAConfig) -> Result<Reduction> {
    config.validate()?;
    let mut template = problem.template().clone();
    if !template.admits(&result.best) {
        return Err(Error::InvalidSequence("result does not conform to the problem template".into()));
    }
    let mut seq = result.best.clone();
    let mut fitness = loop_fitness(&seq, problem);
    if fitness < config.cutoff {
        return Ok(Reduction { sequence: seq, fitness, template });
    }
    let mut reducer = Reducer { problem, config, polish_runs: 0 };

    // Zero-effect genes go first, without any polishing.
    while let Some(i) = seq.genes().iter().rposition(|g| g.is_idle()) {
        match seq.without_gene(i) {
            Some(s) => {
                seq = s;
                template = template.without_gene(i);
            }
            None => break,
        }
    }
    fitness = loop_fitness(&seq, &problem.with_template(template.clone()));

    loop {
        let mut changed = false;
        let mut i = seq.len();
        while i > 0 {
            i -= 1;
            let Some(cand) = seq.without_gene(i) else { break };
            let cand_tpl = template.without_gene(i);
            if let Some((s, f)) = reducer.settle(cand, &cand_tpl)? {
                seq = s;
                fitness = f;
                template = cand_tpl;
                changed = true;
            }
        }
        for i in 0..seq.len() {
            if !template.gene(i).delay.is_free() || seq.genes()[i].delay() == 0.0 {
                continue;
            }
            let mut cand = seq.clone();
            cand.genes_mut()[i].set_delay(0.0);
            let mut cand_tpl = template.clone();
            cand_tpl.gene_mut(i).delay = Constraint::Fixed(0.0);
            if let Some((s, f)) = reducer.settle(cand, &cand_tpl)? {
                seq = s;
                fitness = f;
                template = cand_tpl;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Ok(Reduction { sequence: seq, fitness, template })
}

/// [`reduce_genes_detailed`] returning only the sequence.
pub fn reduce_genes(result: &GAResult, problem: &Problem, config: &GAConfig) -> Result<PulseSequence> {
    reduce_genes_detailed(result, problem, config).map(|r| r.sequence)
}
