//! Exact simulation primitives for weakly coupled spin-1/2 systems.
//!
//! Everything lives in the Zeeman product basis with spin 1 as the most
//! significant tensor factor; bit value 0 is the `+1/2` eigenstate of `I_z`.
//! For two spins the basis order is `|00>, |01>, |10>, |11>`.

mod expm;
mod fidelity;
mod operator;
mod propagate;
mod system;

pub use expm::{matrix_exponential, matrix_exponential_series};
pub use fidelity::{diagonal_populations, operator_fidelity, state_fidelity, transfer_efficiency};
pub use operator::{spin_operator, Axis, DensityDeviation, Operator, C64};
pub use propagate::{
    apply_crusher, build_hamiltonian, coherence_order, delay_propagator, pulse_propagator,
    rotation_2x2,
};
pub use system::SpinSystem;

/// Tolerance used when checking unitarity and Hermiticity of inputs.
pub const MATRIX_TOL: f64 = 1e-10;
