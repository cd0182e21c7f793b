use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Chemical shifts, scalar couplings and the RF channel layout of a spin system.
///
/// Shifts and couplings are in Hz in the rotating frame. Spins sharing a
/// channel always receive identical pulse parameters; a homonuclear pair has
/// a single channel holding both spins.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpinSystem {
    shifts: Vec<f64>,
    couplings: Vec<Vec<f64>>,
    /// 0-based spin indices per channel.
    channels: Vec<Vec<usize>>,
}

impl SpinSystem {
    #[allow(clippy::needless_range_loop)]
    pub fn new(shifts: Vec<f64>, couplings: Vec<Vec<f64>>, channels: Vec<Vec<usize>>) -> Result<Self> {
        let n = shifts.len();
        if n == 0 {
            return Err(Error::InvalidSystem("at least one spin is required".into()));
        }
        if n > 10 {
            return Err(Error::InvalidSystem(format!("{n} spins exceeds the dense simulator limit of 10")));
        }
        if couplings.len() != n || couplings.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidSystem(format!("coupling matrix must be {n}x{n}")));
        }
        for i in 0..n {
            if couplings[i][i] != 0.0 {
                return Err(Error::InvalidSystem(format!("coupling diagonal entry {i} must be zero")));
            }
            for j in 0..n {
                if couplings[i][j] != couplings[j][i] {
                    return Err(Error::InvalidSystem(format!("coupling matrix not symmetric at ({i}, {j})")));
                }
            }
        }
        if shifts.iter().chain(couplings.iter().flatten()).any(|v| !v.is_finite()) {
            return Err(Error::InvalidSystem("shifts and couplings must be finite".into()));
        }
        let mut seen = vec![false; n];
        for ch in &channels {
            if ch.is_empty() {
                return Err(Error::InvalidSystem("empty channel".into()));
            }
            for &s in ch {
                if s >= n {
                    return Err(Error::InvalidSystem(format!("channel refers to spin {s} of {n}")));
                }
                if seen[s] {
                    return Err(Error::InvalidSystem(format!("spin {s} assigned to more than one channel")));
                }
                seen[s] = true;
            }
        }
        if let Some(s) = seen.iter().position(|&b| !b) {
            return Err(Error::InvalidSystem(format!("spin {s} belongs to no channel")));
        }
        Ok(Self { shifts, couplings, channels })
    }

    /// Two spins at `+delta` and `-delta` Hz coupled by `j` Hz, both on one
    /// channel (global hard pulses only).
    pub fn homonuclear_pair(delta: f64, j: f64) -> Result<Self> {
        Self::new(vec![delta, -delta], vec![vec![0.0, j], vec![j, 0.0]], vec![vec![0, 1]])
    }

    /// Same pair but with a separate channel per spin.
    pub fn selective_pair(delta: f64, j: f64) -> Result<Self> {
        Self::new(vec![delta, -delta], vec![vec![0.0, j], vec![j, 0.0]], vec![vec![0], vec![1]])
    }

    pub fn n_spins(&self) -> usize {
        self.shifts.len()
    }

    pub fn dim(&self) -> usize {
        1 << self.n_spins()
    }

    pub fn n_channels(&self) -> usize {
        self.channels.len()
    }

    pub fn shifts(&self) -> &[f64] {
        &self.shifts
    }

    pub fn couplings(&self) -> &[Vec<f64>] {
        &self.couplings
    }

    pub fn channels(&self) -> &[Vec<usize>] {
        &self.channels
    }

    /// Channel index for each spin (0-based), in spin order.
    pub fn channel_map(&self) -> Vec<usize> {
        let mut map = vec![0; self.n_spins()];
        for (c, ch) in self.channels.iter().enumerate() {
            for &s in ch {
                map[s] = c;
            }
        }
        map
    }

    /// Largest |J| divided by the smallest nonzero shift difference.
    /// `None` when all shifts coincide.
    pub fn weak_coupling_ratio(&self) -> Option<f64> {
        let n = self.n_spins();
        let mut min_diff = f64::INFINITY;
        let mut max_j = 0.0_f64;
        for i in 0..n {
            for j in (i + 1)..n {
                let d = (self.shifts[i] - self.shifts[j]).abs();
                if d > 0.0 {
                    min_diff = min_diff.min(d);
                }
                max_j = max_j.max(self.couplings[i][j].abs());
            }
        }
        min_diff.is_finite().then(|| max_j / min_diff)
    }

    /// Default upper bound on a single delay: two coupling periods `2/J_max`
    /// when any coupling is present, otherwise `2/|Δν|` over the smallest
    /// nonzero shift difference.
    pub fn default_max_delay(&self) -> f64 {
        let n = self.n_spins();
        let max_j = (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .map(|(i, j)| self.couplings[i][j].abs())
            .fold(0.0, f64::max);
        if max_j > 0.0 {
            return 2.0 / max_j;
        }
        let min_diff = (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .map(|(i, j)| (self.shifts[i] - self.shifts[j]).abs())
            .filter(|&d| d > 0.0)
            .fold(f64::INFINITY, f64::min);
        if min_diff.is_finite() {
            2.0 / min_diff
        } else if let Some(s) = self.shifts.iter().map(|s| s.abs()).filter(|&s| s > 0.0).reduce(f64::max) {
            2.0 / s
        } else {
            1.0
        }
    }

    /// Eigenvalues of the weak-coupling Hamiltonian (rad/s), in basis order.
    pub fn hamiltonian_diagonal(&self) -> Vec<f64> {
        use std::f64::consts::TAU;
        let n = self.n_spins();
        (0..self.dim())
            .map(|state| {
                let m: Vec<f64> = (0..n)
                    .map(|k| if (state >> (n - 1 - k)) & 1 == 0 { 0.5 } else { -0.5 })
                    .collect();
                let mut e = 0.0;
                for k in 0..n {
                    e += TAU * self.shifts[k] * m[k];
                    for l in (k + 1)..n {
                        e += TAU * self.couplings[k][l] * m[k] * m[l];
                    }
                }
                e
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_layouts() {
        assert!(SpinSystem::new(vec![1.0, -1.0], vec![vec![0.0, 1.0], vec![2.0, 0.0]], vec![vec![0, 1]]).is_err());
        assert!(SpinSystem::new(vec![1.0, -1.0], vec![vec![0.0; 2]; 2], vec![vec![0]]).is_err());
        assert!(SpinSystem::new(vec![1.0, -1.0], vec![vec![0.0; 2]; 2], vec![vec![0, 1], vec![1]]).is_err());
        assert!(SpinSystem::new(vec![1.0, -1.0], vec![vec![1.0, 0.0], vec![0.0, 0.0]], vec![vec![0, 1]]).is_err());
    }

    #[test]
    fn weak_coupling_ratio_pair() {
        let sys = SpinSystem::homonuclear_pair(500.0, 25.0).unwrap();
        assert!((sys.weak_coupling_ratio().unwrap() - 0.025).abs() < 1e-15);
        assert_eq!(sys.channel_map(), vec![0, 0]);
        assert!((sys.default_max_delay() - 0.08).abs() < 1e-15);
        let uncoupled = SpinSystem::homonuclear_pair(500.0, 0.0).unwrap();
        assert!((uncoupled.default_max_delay() - 2.0 / 1000.0).abs() < 1e-15);
    }
}
