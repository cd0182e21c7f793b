use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::labels::{GateLabel, ProblemName, StateLabel};
use super::problems::catalog_problem;
use super::sqr::best_sqr;
use crate::error::{Error, Result};
use crate::ga::{search, GAConfig};
use crate::spin::SpinSystem;

/// Problem families the sweep knows how to rebuild at each coupling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Spin-1 rotation about y, swept over flip angles.
    Sqr,
    /// CNOT with spin 1 as control.
    Cnot,
    /// Pseudo-pure |00> from thermal equilibrium.
    Pps,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Sqr => "sqr",
            Family::Cnot => "cnot",
            Family::Pps => "pps",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sqr" => Ok(Family::Sqr),
            "cnot" => Ok(Family::Cnot),
            "pps" => Ok(Family::Pps),
            _ => Err(Error::UnknownName { kind: "family", name: s.to_string() }),
        }
    }
}

/// How each grid point obtains its sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepSolver {
    /// Re-solve the free parameters of the family's template: the SQR delay,
    /// or a GA restricted to the catalog template without growth.
    FixedTemplate,
    /// Full GA schedule with template growth.
    Ga,
}

impl FromStr for SweepSolver {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fixed-template" | "template" => Ok(SweepSolver::FixedTemplate),
            "ga" => Ok(SweepSolver::Ga),
            _ => Err(Error::UnknownName { kind: "solver", name: s.to_string() }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepGrid {
    ratios: Vec<f64>,
    thetas: Vec<f64>,
    delta: f64,
}

impl Default for SweepGrid {
    fn default() -> Self {
        Self {
            ratios: (0..=10).map(|k| k as f64 / 100.0).collect(),
            thetas: vec![PI / 8.0, PI / 4.0, 3.0 * PI / 8.0, FRAC_PI_2, 3.0 * PI / 4.0, PI],
            delta: 500.0,
        }
    }
}

impl SweepGrid {
    pub fn new(ratios: Vec<f64>, thetas: Vec<f64>, delta: f64) -> Result<Self> {
        let bad = |field: &str, reason: &str| Err(Error::InvalidConfig { field: field.into(), reason: reason.into() });
        if ratios.is_empty() {
            return bad("ratios", "grid needs at least one J/delta ratio");
        }
        if ratios.iter().any(|r| !(r.is_finite() && *r >= 0.0)) {
            return bad("ratios", "ratios must be finite and non-negative");
        }
        if thetas.iter().any(|t| !(*t > 0.0 && *t <= PI)) {
            return bad("thetas", "flip angles must lie in (0, pi]");
        }
        if !(delta.is_finite() && delta > 0.0) {
            return bad("delta", "reference shift must be positive");
        }
        Ok(Self { ratios, thetas, delta })
    }

    pub fn ratios(&self) -> &[f64] {
        &self.ratios
    }

    pub fn thetas(&self) -> &[f64] {
        &self.thetas
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// Grid points for `family`: `(ratio, theta)` with theta only for SQR.
    pub fn points(&self, family: Family) -> Result<Vec<(f64, Option<f64>)>> {
        if family != Family::Sqr {
            return Ok(self.ratios.iter().map(|&r| (r, None)).collect());
        }
        if self.thetas.is_empty() {
            return Err(Error::InvalidConfig { field: "thetas".into(), reason: "SQR sweeps need at least one flip angle".into() });
        }
        Ok(self.ratios.iter().flat_map(|&r| self.thetas.iter().map(move |&t| (r, Some(t)))).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub j_over_delta: f64,
    pub theta: Option<f64>,
    pub fidelity: f64,
    /// Whether the point reached `config.cutoff`.
    pub converged: bool,
}

fn point_seed(base: u64, index: usize) -> u64 {
    base ^ (index as u64 + 1).wrapping_mul(0xD1B5_4A32_D192_ED03)
}

fn sweep_point(family: Family, solver: SweepSolver, delta: f64, ratio: f64, theta: Option<f64>, cfg: &GAConfig) -> Result<f64> {
    let system = SpinSystem::homonuclear_pair(delta, ratio * delta)?;
    let name = match (family, theta) {
        (Family::Sqr, Some(t)) => {
            if solver == SweepSolver::FixedTemplate {
                return Ok(best_sqr(1, t, FRAC_PI_2, &system)?.fidelity);
            }
            ProblemName::Gate(GateLabel::sqr(1, t, FRAC_PI_2)?)
        }
        (Family::Sqr, None) => unreachable!("SQR points carry a flip angle"),
        (Family::Cnot, _) => ProblemName::Gate(GateLabel::Cnot12),
        (Family::Pps, _) => ProblemName::State(StateLabel::Pps00),
    };
    let problem = catalog_problem(&name, &system)?;
    Ok(search(&problem, cfg, solver == SweepSolver::Ga)?.result.best_fitness)
}

/// Fidelity table over the grid. Points run in parallel, each GA point with
/// its own seed derived from `config.rng_seed` and the point index, so the
/// table is reproducible. A point whose solver errors or misses the cutoff
/// is flagged rather than aborting the sweep.
pub fn fidelity_sweep(family: Family, grid: &SweepGrid, solver: SweepSolver, config: &GAConfig) -> Result<Vec<SweepRow>> {
    config.validate()?;
    let points = grid.points(family)?;
    let rows = points
        .par_iter()
        .enumerate()
        .map(|(i, &(ratio, theta))| {
            let cfg = GAConfig { rng_seed: point_seed(config.rng_seed, i), ..config.clone() };
            let fidelity = sweep_point(family, solver, grid.delta, ratio, theta, &cfg).unwrap_or(f64::NAN);
            SweepRow { j_over_delta: ratio, theta, fidelity, converged: fidelity >= config.cutoff }
        })
        .collect();
    Ok(rows)
}
