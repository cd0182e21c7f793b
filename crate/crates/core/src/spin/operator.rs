use std::fmt;
use std::ops::{Add, Mul, Sub};

use nalgebra::DMatrix;
pub use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use super::MATRIX_TOL;
use crate::error::{Error, Result};

/// Cartesian axis of a single-spin angular momentum operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Axis {
    X,
    Y,
    Z,
}

/// Dense complex square matrix acting on the `2^n` dimensional spin space.
///
/// Used for Hamiltonians (rad/s) and propagators alike.
#[derive(Clone, Debug, PartialEq)]
pub struct Operator(DMatrix<C64>);

impl Operator {
    pub fn from_matrix(m: DMatrix<C64>) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(Error::Dimension { expected: m.nrows(), found: m.ncols() });
        }
        Ok(Self(m))
    }

    /// Row-major construction, panics if `entries.len() != dim * dim`.
    pub fn from_rows(dim: usize, entries: &[C64]) -> Self {
        assert_eq!(entries.len(), dim * dim, "entry count must be dim^2");
        Self(DMatrix::from_row_slice(dim, dim, entries))
    }

    pub fn identity(dim: usize) -> Self {
        Self(DMatrix::identity(dim, dim))
    }

    pub fn zeros(dim: usize) -> Self {
        Self(DMatrix::zeros(dim, dim))
    }

    pub fn from_diagonal(diag: &[C64]) -> Self {
        let n = diag.len();
        let mut m = DMatrix::zeros(n, n);
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        Self(m)
    }

    /// Permutation operator sending basis state `i` to `perm[i]`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = DMatrix::zeros(n, n);
        for (i, &j) in perm.iter().enumerate() {
            m[(j, i)] = C64::new(1.0, 0.0);
        }
        Self(m)
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.0
    }

    pub fn into_matrix(self) -> DMatrix<C64> {
        self.0
    }

    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.0[(row, col)]
    }

    pub fn dagger(&self) -> Self {
        Self(self.0.adjoint())
    }

    pub fn trace(&self) -> C64 {
        self.0.trace()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn scale(&self, c: C64) -> Self {
        Self(self.0.map(|z| z * c))
    }

    pub fn kron(&self, other: &Operator) -> Self {
        Self(self.0.kronecker(&other.0))
    }

    /// `‖A − A†‖_F`.
    pub fn hermiticity_error(&self) -> f64 {
        Self(&self.0 - self.0.adjoint()).frobenius_norm()
    }

    /// `‖U†U − I‖_F`.
    pub fn unitarity_error(&self) -> f64 {
        let n = self.dim();
        Self(self.0.adjoint() * &self.0 - DMatrix::identity(n, n)).frobenius_norm()
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermiticity_error() < MATRIX_TOL
    }

    pub fn is_unitary(&self) -> bool {
        self.unitarity_error() < MATRIX_TOL
    }

    /// Diagonal entries if every off-diagonal element vanishes exactly.
    pub fn as_diagonal(&self) -> Option<Vec<C64>> {
        let n = self.dim();
        for r in 0..n {
            for c in 0..n {
                if r != c && self.0[(r, c)] != C64::new(0.0, 0.0) {
                    return None;
                }
            }
        }
        Some((0..n).map(|i| self.0[(i, i)]).collect())
    }

    pub fn commutator(&self, other: &Operator) -> Operator {
        Self(&self.0 * &other.0 - &other.0 * &self.0)
    }
}

impl Mul for &Operator {
    type Output = Operator;
    fn mul(self, rhs: &Operator) -> Operator {
        Operator(&self.0 * &rhs.0)
    }
}

impl Mul for Operator {
    type Output = Operator;
    fn mul(self, rhs: Operator) -> Operator {
        Operator(self.0 * rhs.0)
    }
}

impl Add for &Operator {
    type Output = Operator;
    fn add(self, rhs: &Operator) -> Operator {
        Operator(&self.0 + &rhs.0)
    }
}

impl Add for Operator {
    type Output = Operator;
    fn add(self, rhs: Operator) -> Operator {
        Operator(self.0 + rhs.0)
    }
}

impl Sub for &Operator {
    type Output = Operator;
    fn sub(self, rhs: &Operator) -> Operator {
        Operator(&self.0 - &rhs.0)
    }
}

impl Sub for Operator {
    type Output = Operator;
    fn sub(self, rhs: Operator) -> Operator {
        Operator(self.0 - rhs.0)
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.dim() {
            for c in 0..self.dim() {
                let z = self.0[(r, c)];
                write!(f, "{:>9.5}{:+.5}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Single-spin angular momentum operator `I_axis` of spin `spin` (numbered
/// from 1) embedded in an `n_spins` product space.
pub fn spin_operator(axis: Axis, spin: usize, n_spins: usize) -> Result<Operator> {
    if spin == 0 || spin > n_spins {
        return Err(Error::SpinIndex { index: spin, n_spins });
    }
    let half = C64::new(0.5, 0.0);
    let zero = C64::new(0.0, 0.0);
    let pauli_half = match axis {
        Axis::X => [zero, half, half, zero],
        Axis::Y => [zero, C64::new(0.0, -0.5), C64::new(0.0, 0.5), zero],
        Axis::Z => [half, zero, zero, -half],
    };
    let local = Operator::from_rows(2, &pauli_half);
    let id2 = Operator::identity(2);
    let mut out = Operator::identity(1);
    for k in 1..=n_spins {
        out = out.kron(if k == spin { &local } else { &id2 });
    }
    Ok(out)
}

/// Traceless Hermitian deviation part of a density matrix.
///
/// The identity offset of the high-temperature density matrix is dropped;
/// only this part is transformed by pulses and observed by the fidelity.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityDeviation(DMatrix<C64>);

impl DensityDeviation {
    /// Checked construction from an operator.
    pub fn new(op: Operator) -> Result<Self> {
        let herm = op.hermiticity_error();
        if herm > MATRIX_TOL {
            return Err(Error::NotHermitian(herm));
        }
        let tr = op.trace().norm();
        if tr > 1e-12 * op.frobenius_norm().max(1.0) {
            return Err(Error::NotTraceless(tr));
        }
        Ok(Self(op.into_matrix()))
    }

    /// Removes the trace before checking, for inputs written as `a·I + ...`.
    pub fn from_traceful(op: Operator) -> Result<Self> {
        let n = op.dim();
        let shift = op.trace() / n as f64;
        let m = op.into_matrix() - DMatrix::<C64>::identity(n, n) * shift;
        Self::new(Operator(m))
    }

    pub fn zeros(dim: usize) -> Self {
        Self(DMatrix::zeros(dim, dim))
    }

    pub(crate) fn from_matrix_unchecked(m: DMatrix<C64>) -> Self {
        Self(m)
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.0
    }

    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.0[(row, col)]
    }

    pub fn to_operator(&self) -> Operator {
        Operator(self.0.clone())
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn trace(&self) -> C64 {
        self.0.trace()
    }

    /// `U ρ U†`.
    pub fn evolve(&self, u: &Operator) -> Self {
        Self(u.matrix() * &self.0 * u.matrix().adjoint())
    }

    /// `Re Tr(ρ σ)`, the Hilbert-Schmidt inner product of Hermitian matrices.
    pub fn overlap(&self, other: &DensityDeviation) -> f64 {
        self.0.iter().zip(other.0.transpose().iter()).map(|(a, b)| (a * b).re).sum()
    }

    pub fn scale(&self, c: f64) -> Self {
        Self(self.0.map(|z| z * c))
    }
}

impl Add for &DensityDeviation {
    type Output = DensityDeviation;
    fn add(self, rhs: &DensityDeviation) -> DensityDeviation {
        DensityDeviation(&self.0 + &rhs.0)
    }
}

impl Sub for &DensityDeviation {
    type Output = DensityDeviation;
    fn sub(self, rhs: &DensityDeviation) -> DensityDeviation {
        DensityDeviation(&self.0 - &rhs.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iz_single_spin() {
        let iz = spin_operator(Axis::Z, 1, 1).unwrap();
        assert_eq!(iz.as_diagonal().unwrap(), vec![C64::new(0.5, 0.0), C64::new(-0.5, 0.0)]);
    }

    #[test]
    fn iz1_two_spins() {
        let iz = spin_operator(Axis::Z, 1, 2).unwrap();
        let d: Vec<f64> = iz.as_diagonal().unwrap().iter().map(|z| z.re).collect();
        assert_eq!(d, vec![0.5, 0.5, -0.5, -0.5]);
    }

    #[test]
    fn ix2_square_trace() {
        // Tr(I_x^2 I_x^2) = 4 * (1/4) = 1, computed directly from entries.
        let ix = spin_operator(Axis::X, 2, 2).unwrap();
        let mut acc = C64::new(0.0, 0.0);
        for i in 0..4 {
            for k in 0..4 {
                acc += ix.get(i, k) * ix.get(k, i);
            }
        }
        assert!((acc.re - 1.0).abs() < 1e-15 && acc.im.abs() < 1e-15);
        assert!((ix.trace().norm()) < 1e-15);
        assert!(ix.is_hermitian());
    }

    #[test]
    fn spin_index_errors() {
        assert!(matches!(spin_operator(Axis::X, 0, 2), Err(Error::SpinIndex { .. })));
        assert!(matches!(spin_operator(Axis::X, 3, 2), Err(Error::SpinIndex { .. })));
    }

    #[test]
    fn deviation_rejects_trace_and_non_hermitian() {
        assert!(matches!(
            DensityDeviation::new(Operator::identity(4)),
            Err(Error::NotTraceless(_))
        ));
        let mut m = DMatrix::zeros(2, 2);
        m[(0, 1)] = C64::new(1.0, 0.0);
        assert!(matches!(
            DensityDeviation::new(Operator::from_matrix(m).unwrap()),
            Err(Error::NotHermitian(_))
        ));
        let shifted = &Operator::identity(4) + &spin_operator(Axis::Z, 1, 2).unwrap();
        let dev = DensityDeviation::from_traceful(shifted).unwrap();
        assert!(dev.trace().norm() < 1e-15);
    }
}
