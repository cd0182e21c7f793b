use serde::{Deserialize, Serialize};

use super::sequence::{wrap_angle, PulseGene, PulseSequence};

/// A parameter the optimizer may change, or one pinned to a value.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum Constraint<T> {
    Free,
    Fixed(T),
}

impl<T: Copy> Constraint<T> {
    pub fn is_free(&self) -> bool {
        matches!(self, Constraint::Free)
    }

    pub fn fixed(&self) -> Option<T> {
        match *self {
            Constraint::Fixed(v) => Some(v),
            Constraint::Free => None,
        }
    }
}

/// Constraints for one gene. Flip and phase constraints apply to every channel.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneConstraint {
    pub flip: Constraint<f64>,
    pub phase: Constraint<f64>,
    pub delay: Constraint<f64>,
    pub crusher: Constraint<bool>,
}

impl GeneConstraint {
    /// Everything free.
    pub const FREE: GeneConstraint = GeneConstraint {
        flip: Constraint::Free,
        phase: Constraint::Free,
        delay: Constraint::Free,
        crusher: Constraint::Free,
    };

    /// Flip pinned, phase/delay/crusher free.
    pub fn fixed_flip(flip: f64) -> Self {
        Self { flip: Constraint::Fixed(flip), ..Self::FREE }
    }

    pub fn without_crusher(mut self) -> Self {
        self.crusher = Constraint::Fixed(false);
        self
    }

    pub fn with_delay(mut self, delay: Constraint<f64>) -> Self {
        self.delay = delay;
        self
    }

    /// Overwrite the pinned fields of `gene` with their fixed values.
    pub fn enforce(&self, gene: &mut PulseGene) {
        if let Constraint::Fixed(v) = self.flip {
            for ch in 0..gene.n_channels() {
                gene.set_flip(ch, v);
            }
        }
        if let Constraint::Fixed(v) = self.phase {
            for ch in 0..gene.n_channels() {
                gene.set_phase(ch, v);
            }
        }
        if let Constraint::Fixed(v) = self.delay {
            gene.set_delay(v.max(0.0));
        }
        if let Constraint::Fixed(v) = self.crusher {
            gene.set_crusher(v);
        }
    }

    pub fn admits(&self, gene: &PulseGene) -> bool {
        let angle_ok = |c: Constraint<f64>, vals: &[f64]| match c {
            Constraint::Free => true,
            Constraint::Fixed(v) => vals.iter().all(|&a| a == wrap_angle(v)),
        };
        angle_ok(self.flip, gene.flips())
            && angle_ok(self.phase, gene.phases())
            && self.delay.fixed().is_none_or(|d| gene.delay() == d.max(0.0))
            && self.crusher.fixed().is_none_or(|c| gene.crusher() == c)
    }
}

/// Per-gene constraint records; its length fixes the gene count `m`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SequenceTemplate {
    genes: Vec<GeneConstraint>,
}

impl SequenceTemplate {
    pub fn new(genes: Vec<GeneConstraint>) -> Self {
        Self { genes }
    }

    /// `m` unconstrained genes.
    pub fn free(m: usize) -> Self {
        Self { genes: vec![GeneConstraint::FREE; m] }
    }

    pub fn uniform(m: usize, record: GeneConstraint) -> Self {
        Self { genes: vec![record; m] }
    }

    pub fn len(&self) -> usize {
        self.genes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.genes.is_empty()
    }

    pub fn genes(&self) -> &[GeneConstraint] {
        &self.genes
    }

    pub fn gene(&self, i: usize) -> &GeneConstraint {
        &self.genes[i]
    }

    pub(crate) fn gene_mut(&mut self, i: usize) -> &mut GeneConstraint {
        &mut self.genes[i]
    }

    pub fn push(&mut self, record: GeneConstraint) {
        self.genes.push(record);
    }

    pub fn without_gene(&self, i: usize) -> Self {
        let mut genes = self.genes.clone();
        genes.remove(i);
        Self { genes }
    }

    /// Pin every crusher flag to `false`.
    pub fn forbid_crushers(&self) -> Self {
        Self { genes: self.genes.iter().map(|g| g.without_crusher()).collect() }
    }

    pub fn admits(&self, seq: &PulseSequence) -> bool {
        seq.len() == self.len() && self.genes.iter().zip(seq.genes()).all(|(c, g)| c.admits(g))
    }

    /// Count of free scalar parameters for `n_channels` channels.
    pub fn free_parameter_count(&self, n_channels: usize) -> usize {
        self.genes
            .iter()
            .map(|g| {
                n_channels * (g.flip.is_free() as usize + g.phase.is_free() as usize)
                    + g.delay.is_free() as usize
                    + g.crusher.is_free() as usize
            })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use std::f64::consts::FRAC_PI_2;

    use super::*;

    #[test]
    fn enforce_then_admit() {
        let c = GeneConstraint::fixed_flip(FRAC_PI_2).with_delay(Constraint::Fixed(0.0)).without_crusher();
        let mut g = PulseGene::single(1.0, 2.0, 0.3, true).unwrap();
        assert!(!c.admits(&g));
        c.enforce(&mut g);
        assert!(c.admits(&g));
        assert_eq!(g.flips()[0], FRAC_PI_2);
        assert_eq!(g.phases()[0], 2.0);
        assert_eq!(g.delay(), 0.0);
        assert!(!g.crusher());
    }

    #[test]
    fn parameter_count() {
        let t = SequenceTemplate::new(vec![GeneConstraint::FREE, GeneConstraint::fixed_flip(1.0).without_crusher()]);
        assert_eq!(t.free_parameter_count(1), 4 + 2);
        assert_eq!(t.forbid_crushers().free_parameter_count(1), 3 + 2);
    }
}
