use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ga::wrap_angle;

/// Gate targets. `Sqr` rotates one spin by `theta` about an axis at `phi`
/// in the transverse plane; the CNOT variants are named control first, and
/// Bar marks a gate that fires when the control bit is 0.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GateLabel {
    Sqr { spin: usize, theta: f64, phi: f64 },
    Cnot12,
    CnotBar12,
    Cnot21,
    CnotBar21,
}

impl GateLabel {
    pub const CNOTS: [GateLabel; 4] = [GateLabel::Cnot12, GateLabel::CnotBar12, GateLabel::Cnot21, GateLabel::CnotBar21];

    pub fn sqr(spin: usize, theta: f64, phi: f64) -> Result<Self> {
        let g = GateLabel::Sqr { spin, theta, phi: wrap_angle(phi) };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        if let GateLabel::Sqr { spin, theta, phi } = *self {
            if spin != 1 && spin != 2 {
                return Err(Error::InvalidLabel(format!("SQR spin must be 1 or 2, got {spin}")));
            }
            if !(theta > 0.0 && theta <= PI) {
                return Err(Error::InvalidLabel(format!("SQR flip angle must lie in (0, pi], got {theta}")));
            }
            if !(phi.is_finite() && (0.0..2.0 * PI).contains(&phi)) {
                return Err(Error::InvalidLabel(format!("SQR phase must lie in [0, 2pi), got {phi}")));
            }
        }
        Ok(())
    }

    pub fn is_cnot(&self) -> bool {
        !matches!(self, GateLabel::Sqr { .. })
    }
}

impl fmt::Display for GateLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GateLabel::Sqr { spin, theta, phi } => write!(f, "sqr{spin}:{theta}:{phi}"),
            GateLabel::Cnot12 => f.write_str("cnot12"),
            GateLabel::CnotBar12 => f.write_str("cnot1bar2"),
            GateLabel::Cnot21 => f.write_str("cnot21"),
            GateLabel::CnotBar21 => f.write_str("cnot2bar1"),
        }
    }
}

impl FromStr for GateLabel {
    type Err = Error;

    /// `cnot12`, `cnot1bar2`, `cnot21`, `cnot2bar1`, or `sqr<spin>` with
    /// optional `:<theta>:<phi>` in radians (default a quarter turn about y).
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownName { kind: "gate", name: s.to_string() };
        match s {
            "cnot12" => return Ok(GateLabel::Cnot12),
            "cnot1bar2" => return Ok(GateLabel::CnotBar12),
            "cnot21" => return Ok(GateLabel::Cnot21),
            "cnot2bar1" => return Ok(GateLabel::CnotBar21),
            _ => {}
        }
        let rest = s.strip_prefix("sqr").ok_or_else(unknown)?;
        let mut parts = rest.split(':');
        let spin = parts.next().and_then(|p| p.parse::<usize>().ok()).ok_or_else(unknown)?;
        let (theta, phi) = match (parts.next(), parts.next(), parts.next()) {
            (None, _, _) => (FRAC_PI_2, FRAC_PI_2),
            (Some(t), Some(p), None) => {
                let t = t.parse::<f64>().map_err(|_| unknown())?;
                let p = p.parse::<f64>().map_err(|_| unknown())?;
                (t, p)
            }
            _ => return Err(unknown()),
        };
        GateLabel::sqr(spin, theta, phi)
    }
}

/// Named two-spin deviation targets. Bell labels: `PsiPlus` is
/// (|00> + |11>)/sqrt2, `PsiMinus` (|00> - |11>)/sqrt2, `PhiPlus`
/// (|01> + |10>)/sqrt2 and `PhiMinus` the singlet (|01> - |10>)/sqrt2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StateLabel {
    Thermal,
    Pps00,
    Pps01,
    Pps10,
    Pps11,
    PsiPlus,
    PsiMinus,
    PhiPlus,
    PhiMinus,
}

impl StateLabel {
    pub const BELL: [StateLabel; 4] = [StateLabel::PsiPlus, StateLabel::PsiMinus, StateLabel::PhiPlus, StateLabel::PhiMinus];
    pub const PPS: [StateLabel; 4] = [StateLabel::Pps00, StateLabel::Pps01, StateLabel::Pps10, StateLabel::Pps11];

    pub fn is_bell(&self) -> bool {
        Self::BELL.contains(self)
    }

    pub fn is_pps(&self) -> bool {
        Self::PPS.contains(self)
    }

    pub fn name(&self) -> &'static str {
        match self {
            StateLabel::Thermal => "thermal",
            StateLabel::Pps00 => "pps00",
            StateLabel::Pps01 => "pps01",
            StateLabel::Pps10 => "pps10",
            StateLabel::Pps11 => "pps11",
            StateLabel::PsiPlus => "bell-psi-plus",
            StateLabel::PsiMinus => "bell-psi-minus",
            StateLabel::PhiPlus => "bell-phi-plus",
            StateLabel::PhiMinus => "bell-phi-minus",
        }
    }
}

impl fmt::Display for StateLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StateLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let all = [StateLabel::Thermal].into_iter().chain(Self::PPS).chain(Self::BELL);
        for l in all {
            if l.name() == s {
                return Ok(l);
            }
        }
        match s {
            "pps" => Ok(StateLabel::Pps00),
            "singlet" => Ok(StateLabel::PhiMinus),
            _ => Err(Error::UnknownName { kind: "state", name: s.to_string() }),
        }
    }
}

/// A catalog problem: a gate or a state prepared from thermal equilibrium.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ProblemName {
    Gate(GateLabel),
    State(StateLabel),
}

impl fmt::Display for ProblemName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProblemName::Gate(g) => g.fmt(f),
            ProblemName::State(s) => s.fmt(f),
        }
    }
}

impl FromStr for ProblemName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Ok(g) = s.parse::<GateLabel>() {
            return Ok(ProblemName::Gate(g));
        }
        match s.parse::<StateLabel>() {
            Ok(StateLabel::Thermal) | Err(_) => Err(Error::UnknownName { kind: "problem", name: s.to_string() }),
            Ok(l) => Ok(ProblemName::State(l)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for g in GateLabel::CNOTS {
            assert_eq!(g.to_string().parse::<GateLabel>().unwrap(), g);
        }
        for l in StateLabel::PPS.into_iter().chain(StateLabel::BELL) {
            assert_eq!(l.to_string().parse::<ProblemName>().unwrap(), ProblemName::State(l));
        }
        assert_eq!("sqr2".parse::<GateLabel>().unwrap(), GateLabel::sqr(2, FRAC_PI_2, FRAC_PI_2).unwrap());
        let g = "sqr1:2.5:0".parse::<GateLabel>().unwrap();
        assert_eq!(g, GateLabel::Sqr { spin: 1, theta: 2.5, phi: 0.0 });
    }

    #[test]
    fn rejects_bad_labels() {
        assert!(GateLabel::sqr(3, 1.0, 0.0).is_err());
        assert!(GateLabel::sqr(1, 0.0, 0.0).is_err());
        assert!(GateLabel::sqr(1, 4.0, 0.0).is_err());
        assert!("thermal".parse::<ProblemName>().is_err());
        assert!("cnot13".parse::<ProblemName>().is_err());
        assert!("sqr1:1.0".parse::<GateLabel>().is_err());
    }
}
