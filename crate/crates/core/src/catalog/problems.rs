use std::f64::consts::{FRAC_PI_2, PI};

use super::labels::{ProblemName, StateLabel};
use super::targets::{target_state, target_unitary};
use crate::error::Result;
use crate::ga::{GeneConstraint, Problem, SequenceTemplate};
use crate::spin::SpinSystem;

/// Genes in the free SQR template.
pub const SQR_GENES: usize = 3;
/// Genes in the free CNOT template.
pub const CNOT_GENES: usize = 8;
/// Genes in the PPS template: six quarter turns and one refocusing half turn.
pub const PPS_GENES: usize = 7;
/// Position of the half turn in the PPS template.
pub const PPS_PI_SLOT: usize = 3;
/// Genes in the Bell template, all quarter turns.
pub const BELL_GENES: usize = 10;

pub fn pps_template() -> SequenceTemplate {
    SequenceTemplate::new(
        (0..PPS_GENES)
            .map(|i| GeneConstraint::fixed_flip(if i == PPS_PI_SLOT { PI } else { FRAC_PI_2 }))
            .collect(),
    )
}

pub fn bell_template() -> SequenceTemplate {
    SequenceTemplate::uniform(BELL_GENES, GeneConstraint::fixed_flip(FRAC_PI_2))
}

/// Catalog problem on `system`. State problems start from thermal
/// equilibrium, allow crushers and grow by fixed quarter-turn genes.
pub fn catalog_problem(name: &ProblemName, system: &SpinSystem) -> Result<Problem> {
    let label = name.to_string();
    match *name {
        ProblemName::Gate(g) => {
            let target = target_unitary(g, system.n_spins())?;
            let m = if g.is_cnot() { CNOT_GENES } else { SQR_GENES };
            Problem::operator(label, system.clone(), target, SequenceTemplate::free(m))
        }
        ProblemName::State(s) => {
            let template = if s.is_bell() { bell_template() } else { pps_template() };
            let p = Problem::state(label, system.clone(), target_state(StateLabel::Thermal), target_state(s), template, true)?;
            Ok(p.with_growth(GeneConstraint::fixed_flip(FRAC_PI_2)))
        }
    }
}

/// Convenience wrapper parsing the problem name first.
pub fn named_problem(name: &str, system: &SpinSystem) -> Result<Problem> {
    catalog_problem(&name.parse()?, system)
}

