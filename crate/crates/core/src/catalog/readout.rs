use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::spin::{matrix_exponential, spin_operator, Axis, DensityDeviation, Operator};

/// Readout unitary for the singlet: a `pi/4` relative z precession
/// followed by a non-selective quarter turn about x.
pub fn singlet_readout_unitary() -> Operator {
    let op = |a, k| spin_operator(a, k, 2).expect("two-spin operator");
    let x = &op(Axis::X, 1) + &op(Axis::X, 2);
    let dz = &op(Axis::Z, 1) - &op(Axis::Z, 2);
    let ux = matrix_exponential(&x, FRAC_PI_2).expect("Hermitian generator");
    let uz = matrix_exponential(&dz, FRAC_PI_2 / 2.0).expect("Hermitian generator");
    &ux * &uz
}

/// Map a two-spin deviation through [`singlet_readout_unitary`].
pub fn singlet_readout(rho: &DensityDeviation) -> Result<DensityDeviation> {
    if rho.dim() != 4 {
        return Err(Error::Dimension { expected: 4, found: rho.dim() });
    }
    Ok(rho.evolve(&singlet_readout_unitary()))
}

/// Frobenius weight of the deviation in each coherence order `-n..=n`.
pub fn coherence_weights(rho: &DensityDeviation) -> Vec<(i32, f64)> {
    let n = rho.dim().trailing_zeros() as i32;
    (-n..=n)
        .map(|q| {
            let mut w = 0.0;
            for r in 0..rho.dim() {
                for c in 0..rho.dim() {
                    if crate::spin::coherence_order(r, c) == q {
                        w += rho.get(r, c).norm_sqr();
                    }
                }
            }
            (q, w.sqrt())
        })
        .collect()
}
