//! Command-line layer: sequence/report/CSV files, the flat config format
//! and the `optimize`, `verify` and `sweep` commands.

mod commands;
mod config;
mod files;

pub use commands::{cmd_optimize, cmd_sweep, cmd_verify, run, Cli, Command, OptimizeArgs, SweepArgs, SystemArgs, VerifyArgs, EXIT_OK, EXIT_SHORTFALL, EXIT_USAGE};
pub use config::{parse_config, parse_config_keys};
pub use files::{history_csv, round_sig, sweep_csv, GeneRecord, RunReport, SequenceFile, SIGNIFICANT_DIGITS};
