//! Reference parameter values for the CNOT family and the Bell sequences.

use std::f64::consts::PI;

use super::labels::{GateLabel, StateLabel};

/// `(gate, theta, phi)` that select each CNOT variant within one shared sequence.
pub const CNOT_ANGLES: [(GateLabel, f64, f64); 4] = [
    (GateLabel::Cnot12, PI / 4.0, PI / 2.0),
    (GateLabel::CnotBar12, PI / 4.0, 0.0),
    (GateLabel::Cnot21, 3.0 * PI / 4.0, 0.0),
    (GateLabel::CnotBar21, 3.0 * PI / 4.0, PI / 2.0),
];

/// Phases and delays of the reference Bell sequences. Delays are multiples
/// of `1/delta`, so the delay in seconds is `d1 / delta` with `delta` in Hz.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BellParameters {
    pub state: StateLabel,
    pub phi1: f64,
    pub phi2: f64,
    pub phi3: f64,
    pub d1: f64,
    pub d2: f64,
}

impl BellParameters {
    pub fn delays_s(&self, delta: f64) -> (f64, f64) {
        (self.d1 / delta, self.d2 / delta)
    }
}

pub const BELL_PARAMETERS: [BellParameters; 4] = [
    BellParameters { state: StateLabel::PsiPlus, phi1: 3.0 * PI / 4.0, phi2: 9.0 * PI / 8.0, phi3: 3.0 * PI / 4.0, d1: 1.0 / 16.0, d2: 0.0 },
    BellParameters { state: StateLabel::PsiMinus, phi1: 3.0 * PI / 4.0, phi2: 9.0 * PI / 8.0, phi3: PI / 4.0, d1: 1.0 / 16.0, d2: 0.0 },
    BellParameters { state: StateLabel::PhiPlus, phi1: 0.0, phi2: 5.0 * PI / 8.0, phi3: 3.0 * PI / 4.0, d1: 9.0 / 48.0, d2: 9.0 / 8.0 },
    BellParameters { state: StateLabel::PhiMinus, phi1: 0.0, phi2: 5.0 * PI / 8.0, phi3: PI / 4.0, d1: 9.0 / 48.0, d2: 9.0 / 8.0 },
];

pub fn cnot_angles(gate: GateLabel) -> Option<(f64, f64)> {
    CNOT_ANGLES.iter().find(|(g, _, _)| *g == gate).map(|&(_, t, p)| (t, p))
}

pub fn bell_parameters(state: StateLabel) -> Option<BellParameters> {
    BELL_PARAMETERS.iter().copied().find(|b| b.state == state)
}
