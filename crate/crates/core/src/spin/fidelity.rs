use super::operator::{DensityDeviation, Operator};
use crate::error::{Error, Result};

/// Relative norm below which a deviation counts as annihilated.
const ZERO_NORM: f64 = 1e-12;

/// Gate fidelity `|Tr(U_tar† U_pul)| / 2^n`.
///
/// Equal to 1 exactly when the two propagators agree up to a global phase.
pub fn operator_fidelity(achieved: &Operator, target: &Operator) -> Result<f64> {
    if achieved.dim() != target.dim() {
        return Err(Error::Dimension { expected: target.dim(), found: achieved.dim() });
    }
    let tr: num_complex::Complex64 = target
        .matrix()
        .iter()
        .zip(achieved.matrix().iter())
        .map(|(t, a)| t.conj() * a)
        .sum();
    Ok((tr.norm() / target.dim() as f64).min(1.0))
}

/// Normalized Hilbert-Schmidt overlap `Tr(ρ_f ρ_tar) / (‖ρ_f‖ ‖ρ_tar‖)`.
///
/// Invariant under positive rescaling of either argument; a crusher that
/// removes all magnetization yields [`Error::ZeroNorm`].
pub fn state_fidelity(achieved: &DensityDeviation, target: &DensityDeviation) -> Result<f64> {
    if achieved.dim() != target.dim() {
        return Err(Error::Dimension { expected: target.dim(), found: achieved.dim() });
    }
    let na = achieved.frobenius_norm();
    let nt = target.frobenius_norm();
    if na < ZERO_NORM || nt < ZERO_NORM {
        return Err(Error::ZeroNorm);
    }
    Ok((achieved.overlap(target) / (na * nt)).clamp(-1.0, 1.0))
}

/// Fraction of the initial Frobenius norm retained after a sequence.
pub fn transfer_efficiency(achieved: &DensityDeviation, initial: &DensityDeviation) -> f64 {
    achieved.frobenius_norm() / initial.frobenius_norm()
}

/// Real parts of the diagonal, in basis order.
pub fn diagonal_populations(rho: &DensityDeviation) -> Vec<f64> {
    (0..rho.dim()).map(|i| rho.get(i, i).re).collect()
}
