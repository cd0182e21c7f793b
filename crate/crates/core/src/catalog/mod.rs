//! Catalog of named targets, templates and reference constants, the
//! three-pulse SQR construction, the singlet readout and fidelity sweeps.

mod labels;
mod problems;
mod readout;
mod sqr;
mod sweep;
pub mod tables;
mod targets;

pub use labels::{GateLabel, ProblemName, StateLabel};
pub use problems::{bell_template, named_problem, catalog_problem, pps_template, BELL_GENES, CNOT_GENES, PPS_GENES, PPS_PI_SLOT, SQR_GENES};
pub use readout::{coherence_weights, singlet_readout, singlet_readout_unitary};
pub use sqr::{best_sqr, solve_sqr, sqr_phases, sqr_sequence, sqr_template_sequence, SqrSolution, SQR_UNCOUPLED_FLOOR};
pub use sweep::{fidelity_sweep, Family, SweepGrid, SweepRow, SweepSolver};
pub use targets::{target_unitary, target_state};
