use super::operator::{DensityDeviation, Operator, C64};
use super::system::SpinSystem;
use crate::error::{Error, Result};

/// Weak-coupling Hamiltonian `Σ 2π ν_k I_z^k + Σ_{k<l} 2π J_kl I_z^k I_z^l`
/// in rad/s. Diagonal in the Zeeman basis.
pub fn build_hamiltonian(system: &SpinSystem) -> Operator {
    let diag: Vec<C64> = system.hamiltonian_diagonal().into_iter().map(|e| C64::new(e, 0.0)).collect();
    Operator::from_diagonal(&diag)
}

/// `exp(-iθ(cos φ I_x + sin φ I_y))` for one spin-1/2.
pub fn rotation_2x2(flip: f64, phase: f64) -> Operator {
    let c = (flip / 2.0).cos();
    let s = (flip / 2.0).sin();
    let off_upper = C64::new(0.0, -s) * C64::from_polar(1.0, -phase);
    let off_lower = C64::new(0.0, -s) * C64::from_polar(1.0, phase);
    Operator::from_rows(2, &[C64::new(c, 0.0), off_upper, off_lower, C64::new(c, 0.0)])
}

/// Instantaneous hard pulse: each channel rotates all of its spins by its
/// `(flip, phase)`. The drift Hamiltonian is ignored during the pulse.
pub fn pulse_propagator(system: &SpinSystem, flips: &[f64], phases: &[f64]) -> Result<Operator> {
    let nch = system.n_channels();
    for len in [flips.len(), phases.len()] {
        if len != nch {
            return Err(Error::ChannelCount { expected: nch, found: len });
        }
    }
    let map = system.channel_map();
    let per_channel: Vec<Operator> = flips.iter().zip(phases).map(|(&t, &p)| rotation_2x2(t, p)).collect();
    let mut out = Operator::identity(1);
    for &ch in &map {
        out = out.kron(&per_channel[ch]);
    }
    Ok(out)
}

/// Free evolution `exp(-i H d)` under the drift Hamiltonian for `d` seconds.
pub fn delay_propagator(system: &SpinSystem, delay: f64) -> Result<Operator> {
    if delay < 0.0 || delay.is_nan() {
        return Err(Error::NegativeDelay(delay));
    }
    let diag: Vec<C64> = system
        .hamiltonian_diagonal()
        .into_iter()
        .map(|e| C64::from_polar(1.0, -e * delay))
        .collect();
    Ok(Operator::from_diagonal(&diag))
}

/// Coherence order of the element `|row><col|`: total `M_z` of the row state
/// minus that of the column state.
pub fn coherence_order(row: usize, col: usize) -> i32 {
    // M_z = n/2 - popcount, so the n/2 cancels.
    col.count_ones() as i32 - row.count_ones() as i32
}

/// Ideal pulsed-field-gradient crusher: every element of nonzero coherence
/// order is dephased to zero; populations and zero-quantum coherences stay.
pub fn apply_crusher(rho: &DensityDeviation) -> DensityDeviation {
    let mut m = rho.matrix().clone();
    let n = rho.dim();
    for c in 0..n {
        for r in 0..n {
            if coherence_order(r, c) != 0 {
                m[(r, c)] = C64::new(0.0, 0.0);
            }
        }
    }
    DensityDeviation::from_matrix_unchecked(m)
}
