use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Wrap an angle into `[0, 2π)`.
pub fn wrap_angle(a: f64) -> f64 {
    let w = a.rem_euclid(TAU);
    // rem_euclid can round up to exactly TAU for tiny negative inputs
    if w >= TAU {
        0.0
    } else {
        w
    }
}

/// One column pair of the chromosome: a simultaneous hard pulse on every
/// channel followed by a free-evolution delay, optionally followed by a
/// gradient crusher.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PulseGene {
    flips: Vec<f64>,
    phases: Vec<f64>,
    delay: f64,
    crusher: bool,
}

impl PulseGene {
    /// Angles are wrapped into `[0, 2π)`; the delay must be finite and non-negative.
    pub fn new(flips: Vec<f64>, phases: Vec<f64>, delay: f64, crusher: bool) -> Result<Self> {
        if flips.len() != phases.len() {
            return Err(Error::ChannelCount { expected: flips.len(), found: phases.len() });
        }
        if flips.is_empty() {
            return Err(Error::InvalidSequence("a gene needs at least one channel".into()));
        }
        if flips.iter().chain(&phases).any(|a| !a.is_finite()) {
            return Err(Error::InvalidSequence("pulse angles must be finite".into()));
        }
        if !(delay.is_finite() && delay >= 0.0) {
            return Err(Error::NegativeDelay(delay));
        }
        Ok(Self {
            flips: flips.into_iter().map(wrap_angle).collect(),
            phases: phases.into_iter().map(wrap_angle).collect(),
            delay,
            crusher,
        })
    }

    /// Single-channel convenience constructor.
    pub fn single(flip: f64, phase: f64, delay: f64, crusher: bool) -> Result<Self> {
        Self::new(vec![flip], vec![phase], delay, crusher)
    }

    /// Zero-effect gene.
    pub fn idle(n_channels: usize) -> Self {
        Self { flips: vec![0.0; n_channels], phases: vec![0.0; n_channels], delay: 0.0, crusher: false }
    }

    pub fn flips(&self) -> &[f64] {
        &self.flips
    }

    pub fn phases(&self) -> &[f64] {
        &self.phases
    }

    pub fn delay(&self) -> f64 {
        self.delay
    }

    pub fn crusher(&self) -> bool {
        self.crusher
    }

    pub fn n_channels(&self) -> usize {
        self.flips.len()
    }

    /// No pulse, no delay and no crusher.
    pub fn is_idle(&self) -> bool {
        self.delay == 0.0 && !self.crusher && self.flips.iter().all(|&f| f == 0.0)
    }

    pub(crate) fn set_flip(&mut self, ch: usize, v: f64) {
        self.flips[ch] = wrap_angle(v);
    }

    pub(crate) fn set_phase(&mut self, ch: usize, v: f64) {
        self.phases[ch] = wrap_angle(v);
    }

    pub(crate) fn set_delay(&mut self, v: f64) {
        debug_assert!(v >= 0.0);
        self.delay = v;
    }

    pub(crate) fn set_crusher(&mut self, v: bool) {
        self.crusher = v;
    }
}

/// An individual: the ordered list of genes applied left to right.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PulseSequence {
    genes: Vec<PulseGene>,
}

impl PulseSequence {
    pub fn new(genes: Vec<PulseGene>) -> Result<Self> {
        let first = genes.first().ok_or_else(|| Error::InvalidSequence("sequence has no genes".into()))?;
        let nch = first.n_channels();
        if let Some(g) = genes.iter().find(|g| g.n_channels() != nch) {
            return Err(Error::ChannelCount { expected: nch, found: g.n_channels() });
        }
        Ok(Self { genes })
    }

    pub fn genes(&self) -> &[PulseGene] {
        &self.genes
    }

    pub(crate) fn genes_mut(&mut self) -> &mut [PulseGene] {
        &mut self.genes
    }

    pub fn len(&self) -> usize {
        self.genes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.genes.is_empty()
    }

    pub fn n_channels(&self) -> usize {
        self.genes[0].n_channels()
    }

    /// Total free-evolution time in seconds.
    pub fn total_delay(&self) -> f64 {
        self.genes.iter().map(|g| g.delay).sum()
    }

    pub fn into_genes(self) -> Vec<PulseGene> {
        self.genes
    }

    /// Copy with gene `index` dropped; `None` if that would leave it empty.
    pub fn without_gene(&self, index: usize) -> Option<Self> {
        if self.genes.len() <= 1 || index >= self.genes.len() {
            return None;
        }
        let mut genes = self.genes.clone();
        genes.remove(index);
        Some(Self { genes })
    }

    pub fn with_appended(&self, gene: PulseGene) -> Result<Self> {
        let mut genes = self.genes.clone();
        genes.push(gene);
        Self::new(genes)
    }
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;

    #[test]
    fn angles_wrap() {
        let g = PulseGene::single(-PI / 2.0, 5.0 * PI, 0.1, false).unwrap();
        assert!((g.flips()[0] - 1.5 * PI).abs() < 1e-12);
        assert!((g.phases()[0] - PI).abs() < 1e-12);
        assert_eq!(wrap_angle(-1e-300), 0.0);
        assert!(wrap_angle(TAU) < 1e-15);
    }

    #[test]
    fn rejects_negative_delay_and_ragged_channels() {
        assert!(PulseGene::single(0.0, 0.0, -1.0, false).is_err());
        let a = PulseGene::idle(1);
        let b = PulseGene::idle(2);
        assert!(PulseSequence::new(vec![a, b]).is_err());
        assert!(PulseSequence::new(vec![]).is_err());
    }
}
