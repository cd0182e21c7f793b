use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use super::config::parse_config_keys;
use super::files::{history_csv, sweep_csv, RunReport, SequenceFile};
use crate::catalog::{fidelity_sweep, named_problem, Family, SweepGrid, SweepSolver};
use crate::error::{Error, Result};
use crate::ga::{evaluate_fitness, evolve_state, solve, GAConfig, Objective, Problem, PulseSequence};
use crate::spin::{self, SpinSystem};

/// Success.
pub const EXIT_OK: i32 = 0;
/// Usage, configuration or input error.
pub const EXIT_USAGE: i32 = 1;
/// Ran fine but missed the requested fidelity.
pub const EXIT_SHORTFALL: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "pulsega", version, about = "Genetic-algorithm pulse sequence search for weakly coupled spin pairs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Search for a sequence and write sequence.json, report.json and history.csv.
    Optimize(OptimizeArgs),
    /// Re-simulate a sequence file against a problem.
    Verify(VerifyArgs),
    /// Tabulate fidelity over a J/delta (and flip angle) grid.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Args)]
pub struct SystemArgs {
    /// Chemical shift offset delta in Hz; the spins sit at +delta and -delta.
    #[arg(long, default_value_t = 500.0)]
    pub delta: f64,
    /// Scalar coupling J in Hz.
    #[arg(long, default_value_t = 5.0)]
    pub j: f64,
}

impl SystemArgs {
    fn system(&self) -> Result<SpinSystem> {
        SpinSystem::homonuclear_pair(self.delta, self.j)
    }
}

#[derive(Debug, Clone, Args)]
pub struct OptimizeArgs {
    /// Problem name, e.g. cnot12, sqr1, pps00, bell-phi-minus.
    #[arg(long)]
    pub problem: String,
    #[command(flatten)]
    pub system: SystemArgs,
    /// Flat key = value GA configuration file.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Master seed; a random one is drawn and reported when absent.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub sequence: PathBuf,
    #[arg(long)]
    pub problem: String,
    #[command(flatten)]
    pub system: SystemArgs,
    /// Minimum fidelity for success; defaults to the GA cutoff.
    #[arg(long)]
    pub tolerance: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    /// sqr, cnot or pps.
    #[arg(long)]
    pub family: String,
    /// Comma-separated J/delta ratios.
    #[arg(long, value_delimiter = ',')]
    pub ratios: Option<Vec<f64>>,
    /// Comma-separated SQR flip angles in radians.
    #[arg(long, value_delimiter = ',')]
    pub thetas: Option<Vec<f64>>,
    #[arg(long, default_value_t = 500.0)]
    pub delta: f64,
    /// fixed-template or ga.
    #[arg(long, default_value = "fixed-template")]
    pub solver: String,
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub out: PathBuf,
}

/// Config from `path` (or defaults) with the seed resolved: the flag wins,
/// then an `rng_seed` line in the file, else a fresh random seed.
fn load_config(path: Option<&Path>, seed: Option<u64>) -> Result<GAConfig> {
    let (mut config, keys) = match path {
        Some(p) => parse_config_keys(&fs::read_to_string(p)?)?,
        None => (GAConfig::default(), Vec::new()),
    };
    config.rng_seed = match seed {
        Some(s) => s,
        None if keys.iter().any(|k| k == "rng_seed") => config.rng_seed,
        None => rand::random(),
    };
    Ok(config)
}

fn report_error(e: &Error) -> i32 {
    eprintln!("error: {e}");
    EXIT_USAGE
}

/// Diagonal of `rho` rescaled to the Frobenius norm of `target`.
fn scaled_populations(rho: &spin::DensityDeviation, target: &spin::DensityDeviation) -> Vec<f64> {
    let k = target.frobenius_norm() / rho.frobenius_norm();
    spin::diagonal_populations(rho).into_iter().map(|p| p * k).collect()
}

fn state_summary(seq: &PulseSequence, problem: &Problem) -> Result<Option<(Vec<f64>, f64)>> {
    match problem.objective() {
        Objective::State { initial, target } => {
            let rho = evolve_state(seq, problem, initial)?;
            if rho.frobenius_norm() == 0.0 {
                return Ok(Some((vec![0.0; rho.dim()], 0.0)));
            }
            Ok(Some((scaled_populations(&rho, target), spin::transfer_efficiency(&rho, initial))))
        }
        Objective::Operator { .. } => Ok(None),
    }
}

pub fn cmd_optimize(args: &OptimizeArgs) -> i32 {
    match optimize(args) {
        Ok(code) => code,
        Err(e) => report_error(&e),
    }
}

fn optimize(args: &OptimizeArgs) -> Result<i32> {
    let config = load_config(args.config.as_deref(), args.seed)?;
    let system = args.system.system()?;
    let problem = named_problem(&args.problem, &system)?;
    let solution = solve(&problem, &config)?;
    let seq = &solution.reduction.sequence;
    let reduced = solution.problem.with_template(solution.reduction.template.clone());
    let summary = state_summary(seq, &reduced)?;
    let report = RunReport {
        problem: args.problem.clone(),
        delta_hz: args.system.delta,
        j_hz: args.system.j,
        seed: config.rng_seed,
        config: config.clone(),
        best_fidelity: solution.result.best_fitness,
        final_fidelity: solution.reduction.fitness,
        reached_cutoff: solution.reached_cutoff(),
        genes_before: solution.genes_before(),
        genes_after: solution.genes_after(),
        generations_run: solution.result.generations_run(),
        attempts: solution.attempts.clone(),
        populations: summary.as_ref().map(|s| s.0.clone()),
        transfer_efficiency: summary.as_ref().map(|s| s.1),
    };
    fs::create_dir_all(&args.out)?;
    fs::write(args.out.join("sequence.json"), SequenceFile::from_sequence(seq, &system).to_json())?;
    fs::write(args.out.join("report.json"), report.to_json())?;
    fs::write(args.out.join("history.csv"), history_csv(&solution.result.history))?;
    println!("problem {}  seed {}", report.problem, report.seed);
    println!("best fidelity {:.10}  final fidelity {:.10}", report.best_fidelity, report.final_fidelity);
    println!("genes {} -> {}", report.genes_before, report.genes_after);
    Ok(if report.reached_cutoff { EXIT_OK } else { EXIT_SHORTFALL })
}

pub fn cmd_verify(args: &VerifyArgs) -> i32 {
    match verify(args) {
        Ok(code) => code,
        Err(e) => report_error(&e),
    }
}

fn verify(args: &VerifyArgs) -> Result<i32> {
    let system = args.system.system()?;
    let problem = named_problem(&args.problem, &system)?;
    let text = fs::read_to_string(&args.sequence)?;
    let seq = SequenceFile::from_json(&text)?.to_sequence(&system)?;
    let tolerance = args.tolerance.unwrap_or(GAConfig::default().cutoff);
    let fidelity = match evaluate_fitness(&seq, &problem) {
        Err(Error::ZeroNorm) => {
            println!("fidelity undefined: the sequence crushes the state to zero");
            return Ok(EXIT_SHORTFALL);
        }
        r => r?,
    };
    println!("fidelity {fidelity:.12}");
    if let Some((pops, eff)) = state_summary(&seq, &problem)? {
        let p: Vec<String> = pops.iter().map(|x| format!("{x:.6}")).collect();
        println!("populations {}", p.join(" "));
        println!("transfer efficiency {eff:.6}");
    }
    Ok(if fidelity >= tolerance { EXIT_OK } else { EXIT_SHORTFALL })
}

pub fn cmd_sweep(args: &SweepArgs) -> i32 {
    match sweep(args) {
        Ok(code) => code,
        Err(e) => report_error(&e),
    }
}

fn sweep(args: &SweepArgs) -> Result<i32> {
    let family: Family = args.family.parse()?;
    let solver: SweepSolver = args.solver.parse()?;
    let config = load_config(args.config.as_deref(), args.seed)?;
    let d = SweepGrid::default();
    let grid = SweepGrid::new(
        args.ratios.clone().unwrap_or_else(|| d.ratios().to_vec()),
        args.thetas.clone().unwrap_or_else(|| d.thetas().to_vec()),
        args.delta,
    )?;
    let rows = fidelity_sweep(family, &grid, solver, &config)?;
    if let Some(dir) = args.out.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    fs::write(&args.out, sweep_csv(&rows))?;
    let flagged = rows.iter().filter(|r| !r.converged).count();
    eprintln!("seed {}  {} rows  {} below cutoff", config.rng_seed, rows.len(), flagged);
    Ok(if flagged == 0 { EXIT_OK } else { EXIT_SHORTFALL })
}

/// Parse `args` (program name first) and dispatch; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match &cli.command {
        Command::Optimize(a) => cmd_optimize(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Sweep(a) => cmd_sweep(a),
    }
}
