use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::catalog::SweepRow;
use crate::error::{Error, Result};
use crate::ga::{Attempt, GAConfig, GenerationStats, PulseGene, PulseSequence};
use crate::spin::SpinSystem;

/// Significant digits kept for angles and delays in sequence files.
pub const SIGNIFICANT_DIGITS: usize = 12;

/// Round to [`SIGNIFICANT_DIGITS`]; the JSON writer then prints the shortest
/// decimal for the rounded value, so files are stable under re-writing.
pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x).parse().expect("formatted float parses")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneRecord {
    pub flips: Vec<f64>,
    pub phases: Vec<f64>,
    pub delay_s: f64,
    pub crusher: bool,
}

/// On-disk pulse sequence.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SequenceFile {
    pub n_channels: usize,
    /// Channel index of each spin, in spin order.
    pub channel_map: Vec<usize>,
    pub genes: Vec<GeneRecord>,
}

impl SequenceFile {
    pub fn from_sequence(seq: &PulseSequence, system: &SpinSystem) -> Self {
        let r = |v: &[f64]| v.iter().map(|&x| round_sig(x)).collect();
        Self {
            n_channels: seq.n_channels(),
            channel_map: system.channel_map(),
            genes: seq
                .genes()
                .iter()
                .map(|g| GeneRecord { flips: r(g.flips()), phases: r(g.phases()), delay_s: round_sig(g.delay()), crusher: g.crusher() })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("sequence file serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))
    }

    /// Check the file against `system` and build the sequence.
    pub fn to_sequence(&self, system: &SpinSystem) -> Result<PulseSequence> {
        if self.n_channels != system.n_channels() {
            return Err(Error::Schema(format!("n_channels is {}, system has {}", self.n_channels, system.n_channels())));
        }
        if self.channel_map != system.channel_map() {
            return Err(Error::Schema(format!("channel_map {:?} does not match system {:?}", self.channel_map, system.channel_map())));
        }
        if self.genes.is_empty() {
            return Err(Error::Schema("genes must not be empty".into()));
        }
        let mut genes = Vec::with_capacity(self.genes.len());
        for (i, g) in self.genes.iter().enumerate() {
            if g.flips.len() != self.n_channels || g.phases.len() != self.n_channels {
                return Err(Error::Schema(format!("genes[{i}]: flips and phases need {} entries", self.n_channels)));
            }
            let values = g.flips.iter().chain(&g.phases).chain(std::iter::once(&g.delay_s));
            if values.clone().any(|x| !x.is_finite()) {
                return Err(Error::Schema(format!("genes[{i}]: non-finite value")));
            }
            if g.delay_s < 0.0 {
                return Err(Error::Schema(format!("genes[{i}].delay_s is negative")));
            }
            genes.push(PulseGene::new(g.flips.clone(), g.phases.clone(), g.delay_s, g.crusher)?);
        }
        PulseSequence::new(genes)
    }
}

/// Summary written next to an optimized sequence.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub problem: String,
    pub delta_hz: f64,
    pub j_hz: f64,
    pub seed: u64,
    pub config: GAConfig,
    /// Fidelity of the best GA individual before gene reduction.
    pub best_fidelity: f64,
    /// Fidelity of the written (reduced) sequence.
    pub final_fidelity: f64,
    pub reached_cutoff: bool,
    pub genes_before: usize,
    pub genes_after: usize,
    pub generations_run: usize,
    pub attempts: Vec<Attempt>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub populations: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub transfer_efficiency: Option<f64>,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

pub fn history_csv(history: &[GenerationStats]) -> String {
    let mut s = String::from("generation,best,mean\n");
    for (i, h) in history.iter().enumerate() {
        writeln!(s, "{i},{},{}", h.best, h.mean).unwrap();
    }
    s
}

/// Sweep table; the theta column appears only when rows carry a flip angle.
pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let with_theta = rows.iter().any(|r| r.theta.is_some());
    let mut s = String::from(if with_theta { "j_over_delta,theta,fidelity,converged\n" } else { "j_over_delta,fidelity,converged\n" });
    for r in rows {
        if with_theta {
            write!(s, "{},{},", r.j_over_delta, r.theta.map_or(String::new(), |t| t.to_string())).unwrap();
        } else {
            write!(s, "{},", r.j_over_delta).unwrap();
        }
        writeln!(s, "{},{}", r.fidelity, r.converged).unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_is_idempotent() {
        for x in [std::f64::consts::PI, 1.0 / 3.0, 2.5e-4, 7.123456789012345] {
            let r = round_sig(x);
            assert_eq!(round_sig(r), r);
            assert!((r - x).abs() <= 1e-11 * x.abs());
        }
    }

    #[test]
    fn schema_errors_name_the_problem() {
        let sys = SpinSystem::homonuclear_pair(500.0, 5.0).unwrap();
        let bad = r#"{"n_channels":1,"channel_map":[0,0],"genes":[{"flips":[1.0],"phases":[0.0],"delay_s":-1.0,"crusher":false}]}"#;
        let err = SequenceFile::from_json(bad).unwrap().to_sequence(&sys).unwrap_err();
        assert!(err.to_string().contains("delay_s"), "{err}");
        let err = SequenceFile::from_json(r#"{"n_channels":1,"channel_map":[0,0]}"#).unwrap_err();
        assert!(err.to_string().contains("genes"), "{err}");
    }
}
