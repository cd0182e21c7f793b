use nalgebra::{DMatrix, SymmetricEigen};

use super::operator::{Operator, C64};
use super::MATRIX_TOL;
use crate::error::{Error, Result};

fn check_hermitian(h: &Operator) -> Result<()> {
    let err = h.hermiticity_error();
    if err > MATRIX_TOL * h.frobenius_norm().max(1.0) {
        return Err(Error::NotHermitian(err));
    }
    Ok(())
}

/// Propagator `exp(-i H t)` of a Hermitian `H`, via the eigendecomposition
/// `H = V Λ V†`.
pub fn matrix_exponential(h: &Operator, t: f64) -> Result<Operator> {
    check_hermitian(h)?;
    if t == 0.0 {
        return Ok(Operator::identity(h.dim()));
    }
    // Symmetrize so the eigensolver sees an exactly Hermitian matrix.
    let m = h.matrix();
    let sym = (m + m.adjoint()) * C64::new(0.5, 0.0);
    let eig = SymmetricEigen::new(sym);
    let v = &eig.eigenvectors;
    let phases = DMatrix::from_diagonal(&eig.eigenvalues.map(|lam| C64::from_polar(1.0, -lam * t)));
    Operator::from_matrix(v * phases * v.adjoint())
}

/// Same propagator through scaling and squaring of a truncated Taylor series.
/// Independent of the eigensolver; used to cross-check it.
pub fn matrix_exponential_series(h: &Operator, t: f64) -> Result<Operator> {
    check_hermitian(h)?;
    let n = h.dim();
    let a = h.matrix() * C64::new(0.0, -t);
    let norm = a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    // Scale so that ‖A / 2^s‖ ≤ 1/2, where 20 Taylor terms are far below f64 resolution.
    let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as i32 } else { 0 };
    let scaled = a * C64::new(0.5_f64.powi(squarings), 0.0);
    let mut term = DMatrix::<C64>::identity(n, n);
    let mut sum = term.clone();
    for k in 1..=20 {
        term = &term * &scaled * C64::new(1.0 / k as f64, 0.0);
        sum += &term;
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    Operator::from_matrix(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spin::{spin_operator, Axis};

    #[test]
    fn zero_time_is_identity() {
        let h = spin_operator(Axis::X, 1, 2).unwrap();
        assert_eq!(matrix_exponential(&h, 0.0).unwrap(), Operator::identity(4));
    }

    #[test]
    fn non_hermitian_rejected() {
        let mut m = DMatrix::zeros(2, 2);
        m[(0, 1)] = C64::new(1.0, 0.0);
        let op = Operator::from_matrix(m).unwrap();
        assert!(matches!(matrix_exponential(&op, 1.0), Err(Error::NotHermitian(_))));
        assert!(matches!(matrix_exponential_series(&op, 1.0), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn large_norm_series_matches_eigen() {
        let h = spin_operator(Axis::Y, 2, 2).unwrap().scale(C64::new(3000.0, 0.0));
        let a = matrix_exponential(&h, 0.37).unwrap();
        let b = matrix_exponential_series(&h, 0.37).unwrap();
        assert!((&a - &b).frobenius_norm() < 1e-10);
    }
}
