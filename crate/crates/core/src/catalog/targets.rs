use std::f64::consts::FRAC_1_SQRT_2;

use super::labels::{GateLabel, StateLabel};
use crate::error::{Error, Result};
use crate::spin::{rotation_2x2, spin_operator, Axis, DensityDeviation, Operator, C64};

/// Unitary for a gate label on `n_spins` spins. CNOT variants need exactly two spins.
pub fn target_unitary(label: GateLabel, n_spins: usize) -> Result<Operator> {
    label.validate()?;
    match label {
        GateLabel::Sqr { spin, theta, phi } => {
            if spin > n_spins {
                return Err(Error::SpinIndex { index: spin, n_spins });
            }
            let mut u = Operator::identity(1);
            for k in 1..=n_spins {
                let f = if k == spin { rotation_2x2(theta, phi) } else { Operator::identity(2) };
                u = u.kron(&f);
            }
            Ok(u)
        }
        cnot => {
            if n_spins != 2 {
                return Err(Error::InvalidLabel(format!("{cnot} acts on two spins, not {n_spins}")));
            }
            let perm: [usize; 4] = match cnot {
                GateLabel::Cnot12 => [0, 1, 3, 2],
                GateLabel::CnotBar12 => [1, 0, 2, 3],
                GateLabel::Cnot21 => [0, 3, 2, 1],
                GateLabel::CnotBar21 => [2, 1, 0, 3],
                GateLabel::Sqr { .. } => unreachable!(),
            };
            Ok(Operator::permutation(&perm))
        }
    }
}

fn pure_deviation(amplitudes: [f64; 4]) -> DensityDeviation {
    let mut m = Vec::with_capacity(16);
    for (i, a) in amplitudes.iter().enumerate() {
        for (j, b) in amplitudes.iter().enumerate() {
            let id = if i == j { 0.25 } else { 0.0 };
            m.push(C64::new(a * b - id, 0.0));
        }
    }
    DensityDeviation::new(Operator::from_rows(4, &m)).expect("projector minus identity/4 is a valid deviation")
}

/// Two-spin deviation for a state label. Bell states are `|s><s| - I/4`;
/// pseudo-pure states are twice that, so `Pps00 = Iz1 + Iz2 + 2 Iz1 Iz2`.
pub fn target_state(label: StateLabel) -> DensityDeviation {
    let s = FRAC_1_SQRT_2;
    let basis = |k: usize| {
        let mut v = [0.0; 4];
        v[k] = 1.0;
        v
    };
    match label {
        StateLabel::Thermal => {
            let iz = |k| spin_operator(Axis::Z, k, 2).expect("two-spin operator");
            DensityDeviation::new(&iz(1) + &iz(2)).expect("Zeeman order is traceless")
        }
        StateLabel::Pps00 => pure_deviation(basis(0)).scale(2.0),
        StateLabel::Pps01 => pure_deviation(basis(1)).scale(2.0),
        StateLabel::Pps10 => pure_deviation(basis(2)).scale(2.0),
        StateLabel::Pps11 => pure_deviation(basis(3)).scale(2.0),
        StateLabel::PsiPlus => pure_deviation([s, 0.0, 0.0, s]),
        StateLabel::PsiMinus => pure_deviation([s, 0.0, 0.0, -s]),
        StateLabel::PhiPlus => pure_deviation([0.0, s, s, 0.0]),
        StateLabel::PhiMinus => pure_deviation([0.0, s, -s, 0.0]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cnot12_swaps_lower_block() {
        let u = target_unitary(GateLabel::Cnot12, 2).unwrap();
        assert_eq!(u.get(3, 2), C64::new(1.0, 0.0));
        assert_eq!(u.get(2, 3), C64::new(1.0, 0.0));
        assert_eq!(u.get(0, 0), C64::new(1.0, 0.0));
        assert_eq!(u.get(1, 1), C64::new(1.0, 0.0));
    }

    #[test]
    fn cnot_needs_two_spins() {
        assert!(target_unitary(GateLabel::Cnot21, 3).is_err());
        assert!(target_unitary(GateLabel::Sqr { spin: 3, theta: 1.0, phi: 0.0 }, 2).is_err());
    }

    #[test]
    fn pps00_diagonal() {
        let d = crate::spin::diagonal_populations(&target_state(StateLabel::Pps00));
        assert_eq!(d, vec![1.5, -0.5, -0.5, -0.5]);
    }
}
