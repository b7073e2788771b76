use alloc::vec::Vec;

use num_complex::Complex64;

use crate::{Error, Result};

/// Largest register stored densely.
pub const MAX_DENSE_QUBITS: usize = 26;

/// Dense normalized state of `n_qubits` qubits in the computational basis.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    n_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl PureState {
    /// Normalizes `amplitudes`, which must have length `2^n_qubits`.
    pub fn new(n_qubits: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        if n_qubits == 0 || n_qubits > MAX_DENSE_QUBITS {
            return Err(Error::SizeCap {
                what: "dense state",
                size: n_qubits,
                cap: MAX_DENSE_QUBITS,
            });
        }
        if amplitudes.len() != 1 << n_qubits {
            return Err(Error::ArityMismatch {
                expected: 1 << n_qubits,
                found: amplitudes.len(),
            });
        }
        let norm = libm::sqrt(amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>());
        if !(norm > 0.0) {
            return Err(Error::ZeroState);
        }
        Ok(PureState {
            n_qubits,
            amplitudes: amplitudes.into_iter().map(|a| a / norm).collect(),
        })
    }

    pub fn from_real(n_qubits: usize, amplitudes: &[f64]) -> Result<Self> {
        Self::new(
            n_qubits,
            amplitudes.iter().map(|&a| Complex64::new(a, 0.0)).collect(),
        )
    }

    /// Builds a state from `(configuration, amplitude)` pairs; repeated
    /// configurations are summed.
    pub fn from_sparse(n_qubits: usize, entries: &[(u64, Complex64)]) -> Result<Self> {
        if n_qubits == 0 || n_qubits > MAX_DENSE_QUBITS {
            return Err(Error::SizeCap {
                what: "dense state",
                size: n_qubits,
                cap: MAX_DENSE_QUBITS,
            });
        }
        let mut amps = alloc::vec![Complex64::new(0.0, 0.0); 1 << n_qubits];
        for &(x, a) in entries {
            let slot = amps.get_mut(x as usize).ok_or_else(|| {
                Error::InvalidArgument(alloc::format!(
                    "configuration {x} out of range for {n_qubits} qubits"
                ))
            })?;
            *slot += a;
        }
        Self::new(n_qubits, amps)
    }

    /// Computational basis state `|x>`.
    pub fn basis(n_qubits: usize, x: u64) -> Result<Self> {
        Self::from_sparse(n_qubits, &[(x, Complex64::new(1.0, 0.0))])
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, x: u64) -> Complex64 {
        self.amplitudes[x as usize]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Configurations whose amplitude magnitude exceeds `tol`.
    pub fn support(&self, tol: f64) -> Vec<u64> {
        self.amplitudes
            .iter()
            .enumerate()
            .filter(|(_, a)| a.norm() > tol)
            .map(|(x, _)| x as u64)
            .collect()
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &PureState) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// `|<self|other>|`.
    pub fn overlap(&self, other: &PureState) -> f64 {
        self.inner(other).norm()
    }

    /// Gauge fix: the largest-magnitude amplitude (lowest index on ties) is
    /// made real and positive.
    pub fn phase_fixed(mut self) -> Self {
        let mut best = 0usize;
        let mut best_mag = -1.0f64;
        for (x, a) in self.amplitudes.iter().enumerate() {
            let m = a.norm();
            if m > best_mag + 1e-12 {
                best = x;
                best_mag = m;
            }
        }
        let pivot = self.amplitudes[best];
        if pivot.norm() > 0.0 {
            let phase = pivot.conj() / pivot.norm();
            for a in &mut self.amplitudes {
                *a *= phase;
            }
        }
        self
    }

    /// Largest per-amplitude difference after aligning the global phase of
    /// `other` to `self`.
    pub fn max_abs_diff_up_to_phase(&self, other: &PureState) -> f64 {
        if self.n_qubits != other.n_qubits {
            return f64::INFINITY;
        }
        let ip = other.inner(self);
        let phase = if ip.norm() > 1e-300 {
            ip / ip.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b * phase).norm())
            .fold(0.0, f64::max)
    }
}
