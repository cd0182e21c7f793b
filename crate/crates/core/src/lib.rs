//! Pulse-sequence discovery for weakly coupled NMR spin systems.
//!
//! The crate has four layers:
//!
//! * [`spin`]: exact density-matrix and propagator simulation of hard
//!   pulses, free evolution and ideal gradient crushers, plus the operator
//!   and state fidelity functionals.
//! * [`ga`]: the pulse-sequence chromosome, constraint templates and a
//!   real-coded genetic algorithm with gene-count reduction.
//! * [`catalog`]: the two-spin targets (selective rotations, the four
//!   controlled-NOT variants, pseudo-pure and Bell states), their sequence
//!   templates, the singlet readout and fidelity sweeps.
//! * [`cli`]: file formats (JSON sequences and reports, CSV tables,
//!   key=value configs) and the `optimize` / `verify` / `sweep` commands
//!   behind the `pulsega` binary.
//!
//! The runnable programs under `examples/` walk through each capability.

pub mod catalog;
pub mod cli;
pub mod error;
pub mod ga;
pub mod spin;

pub use error::{Error, Result};
