use super::template::{GeneConstraint, SequenceTemplate};
use crate::error::{Error, Result};
use crate::spin::{DensityDeviation, Operator, SpinSystem};

/// What a sequence is scored against.
#[derive(Clone, Debug, PartialEq)]
pub enum Objective {
    /// Gate synthesis: fidelity of the sequence propagator against `target`.
    Operator { target: Operator },
    /// State preparation: fidelity of `U ρ_in U†` (with crushers) against `target`.
    State { initial: DensityDeviation, target: DensityDeviation },
}

impl Objective {
    pub fn is_operator(&self) -> bool {
        matches!(self, Objective::Operator { .. })
    }
}

/// An optimization problem: system, objective and the sequence template.
#[derive(Clone, Debug)]
pub struct Problem {
    name: String,
    system: SpinSystem,
    objective: Objective,
    template: SequenceTemplate,
    allow_crushers: bool,
    growth: GeneConstraint,
    final_crusher: bool,
    drift: Vec<f64>,
}

impl Problem {
    pub fn operator(name: impl Into<String>, system: SpinSystem, target: Operator, template: SequenceTemplate) -> Result<Self> {
        if target.dim() != system.dim() {
            return Err(Error::Dimension { expected: system.dim(), found: target.dim() });
        }
        if !target.is_unitary() {
            return Err(Error::InvalidLabel("operator target must be unitary".into()));
        }
        Self::build(name.into(), system, Objective::Operator { target }, template, false)
    }

    pub fn state(
        name: impl Into<String>,
        system: SpinSystem,
        initial: DensityDeviation,
        target: DensityDeviation,
        template: SequenceTemplate,
        allow_crushers: bool,
    ) -> Result<Self> {
        for d in [initial.dim(), target.dim()] {
            if d != system.dim() {
                return Err(Error::Dimension { expected: system.dim(), found: d });
            }
        }
        if initial.frobenius_norm() == 0.0 || target.frobenius_norm() == 0.0 {
            return Err(Error::ZeroNorm);
        }
        Self::build(name.into(), system, Objective::State { initial, target }, template, allow_crushers)
    }

    fn build(name: String, system: SpinSystem, objective: Objective, template: SequenceTemplate, allow_crushers: bool) -> Result<Self> {
        if template.is_empty() {
            return Err(Error::InvalidSequence("template must have at least one gene".into()));
        }
        if !allow_crushers && template.genes().iter().any(|g| g.crusher.fixed() == Some(true)) {
            return Err(if objective.is_operator() {
                Error::CrusherInOperatorProblem
            } else {
                Error::InvalidSequence("template pins a crusher but crushers are disabled".into())
            });
        }
        let template = if allow_crushers { template } else { template.forbid_crushers() };
        let drift = system.hamiltonian_diagonal();
        let growth = if allow_crushers { GeneConstraint::FREE } else { GeneConstraint::FREE.without_crusher() };
        Ok(Self { name, system, objective, template, allow_crushers, growth, final_crusher: false, drift })
    }

    /// Record used when the gene-count schedule appends genes.
    pub fn with_growth(mut self, record: GeneConstraint) -> Self {
        self.growth = if self.allow_crushers { record } else { record.without_crusher() };
        self
    }

    /// Crush once more after the last gene before scoring (state problems only).
    pub fn with_final_crusher(mut self, on: bool) -> Self {
        self.final_crusher = on && self.allow_crushers;
        self
    }

    /// Same problem under another template (crusher policy re-applied).
    pub fn with_template(&self, template: SequenceTemplate) -> Self {
        let mut p = self.clone();
        p.template = if self.allow_crushers { template } else { template.forbid_crushers() };
        p
    }

    /// Template extended by `extra` growth records.
    pub fn grown(&self, extra: usize) -> Self {
        let mut t = self.template.clone();
        for _ in 0..extra {
            t.push(self.growth);
        }
        self.with_template(t)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn system(&self) -> &SpinSystem {
        &self.system
    }

    pub fn objective(&self) -> &Objective {
        &self.objective
    }

    pub fn template(&self) -> &SequenceTemplate {
        &self.template
    }

    pub fn allow_crushers(&self) -> bool {
        self.allow_crushers
    }

    pub fn final_crusher(&self) -> bool {
        self.final_crusher
    }

    pub fn growth(&self) -> &GeneConstraint {
        &self.growth
    }

    /// Drift Hamiltonian eigenvalues in rad/s.
    pub(crate) fn drift(&self) -> &[f64] {
        &self.drift
    }
}
