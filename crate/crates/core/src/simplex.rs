//! Ancillary simplex states on three and four qubits.
//!
//! Amplitudes are indexed by the ancilla bitstring with leg 0 as the leading
//! bit, so `amplitude(0b001)` is the amplitude of `|001>`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::{Error, Result};

const NORM_TOL: f64 = 1e-12;

/// Normalized state of `arity` ancilla qubits, each of dimension χ = 2.
#[derive(Debug, Clone, PartialEq)]
pub struct SimplexState {
    arity: usize,
    amplitudes: Vec<Complex64>,
    label: String,
}

impl SimplexState {
    /// Ancilla leg dimension.
    pub const CHI: usize = 2;

    /// Normalizes `amplitudes` (length `2^arity`, arity 3 or 4).
    pub fn new(arity: usize, amplitudes: Vec<Complex64>, label: impl Into<String>) -> Result<Self> {
        if !(3..=4).contains(&arity) {
            return Err(Error::InvalidArgument(alloc::format!(
                "simplex arity must be 3 or 4, got {arity}"
            )));
        }
        if amplitudes.len() != 1 << arity {
            return Err(Error::ArityMismatch {
                expected: 1 << arity,
                found: amplitudes.len(),
            });
        }
        let norm = libm::sqrt(amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>());
        if !(norm > NORM_TOL) {
            return Err(Error::ZeroState);
        }
        Ok(SimplexState {
            arity,
            amplitudes: amplitudes.into_iter().map(|a| a / norm).collect(),
            label: label.into(),
        })
    }

    pub fn from_real(arity: usize, amplitudes: &[f64], label: impl Into<String>) -> Result<Self> {
        Self::new(
            arity,
            amplitudes.iter().map(|&a| Complex64::new(a, 0.0)).collect(),
            label,
        )
    }

    /// Equal superposition of the given basis strings.
    pub fn uniform_over(arity: usize, strings: &[usize], label: impl Into<String>) -> Result<Self> {
        let mut amps = alloc::vec![Complex64::new(0.0, 0.0); 1 << arity.min(8)];
        for &s in strings {
            if s >= amps.len() {
                return Err(Error::InvalidArgument(alloc::format!(
                    "basis string {s} out of range for arity {arity}"
                )));
            }
            amps[s] = Complex64::new(1.0, 0.0);
        }
        Self::new(arity, amps, label)
    }

    /// The computational basis state `|bits>`.
    pub fn basis(arity: usize, bits: usize) -> Result<Self> {
        let label = crate::bits::to_bitstring(bits as u64, arity);
        Self::uniform_over(arity, &[bits], label)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, bits: usize) -> Complex64 {
        self.amplitudes[bits]
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &SimplexState) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Basis strings with nonzero amplitude.
    pub fn support(&self) -> Vec<usize> {
        (0..self.amplitudes.len())
            .filter(|&b| self.amplitudes[b].norm_sqr() > 0.0)
            .collect()
    }
}

fn weight_class(arity: usize, weight: u32) -> Vec<usize> {
    (0..1usize << arity)
        .filter(|b| b.count_ones() == weight)
        .collect()
}

/// `(|001> + |010> + |100>)/√3`.
pub fn w_state() -> SimplexState {
    SimplexState::uniform_over(3, &weight_class(3, 1), "W").expect("W is nonzero")
}

/// `(|011> + |101> + |110>)/√3`.
pub fn wbar_state() -> SimplexState {
    SimplexState::uniform_over(3, &weight_class(3, 2), "Wbar").expect("Wbar is nonzero")
}

/// `(|0...0> + |1...1>)/√2` on 3 or 4 qubits.
pub fn ghz_state(arity: usize) -> Result<SimplexState> {
    if !(3..=4).contains(&arity) {
        return Err(Error::InvalidArgument(alloc::format!(
            "GHZ arity must be 3 or 4, got {arity}"
        )));
    }
    SimplexState::uniform_over(arity, &[0, (1 << arity) - 1], "GHZ")
}

/// Normalized linear combination `Σ w_k |s_k>` of simplex states.
pub fn mix(states: &[(&SimplexState, f64)]) -> Result<SimplexState> {
    let first = states
        .first()
        .ok_or_else(|| Error::InvalidArgument("mix of no states".into()))?
        .0;
    let arity = first.arity();
    let mut amps = alloc::vec![Complex64::new(0.0, 0.0); 1 << arity];
    for (s, w) in states {
        if s.arity() != arity {
            return Err(Error::ArityMismatch {
                expected: arity,
                found: s.arity(),
            });
        }
        for (a, b) in amps.iter_mut().zip(s.amplitudes()) {
            *a += b * *w;
        }
    }
    let label = states
        .iter()
        .map(|(s, _)| s.label().to_string())
        .collect::<Vec<_>>()
        .join("+");
    SimplexState::new(arity, amps, label)
}

/// Seeded simplex with independent complex amplitudes drawn from the unit
/// square; used for randomized network fixtures.
pub fn random_simplex(arity: usize, seed: u64) -> Result<SimplexState> {
    let mut rng = crate::rng::seeded(seed);
    let amps = (0..1usize << arity.min(8))
        .map(|_| {
            let re = crate::rng::symmetric_unit(&mut rng);
            Complex64::new(re, crate::rng::symmetric_unit(&mut rng))
        })
        .collect();
    SimplexState::new(arity, amps, "random")
}

/// Exchange-symmetric 4-qubit simplex with one real coefficient per Hamming
/// weight: `α_w` multiplies every bitstring of weight `w`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetricFourQubit {
    coeffs: [f64; 5],
}

/// Number of 4-bit strings of each Hamming weight.
pub const WEIGHT_MULTIPLICITY: [f64; 5] = [1.0, 4.0, 6.0, 4.0, 1.0];

impl SymmetricFourQubit {
    /// Rescales so that `α₀² + 4α₁² + 6α₂² + 4α₃² + α₄² = 1`.
    pub fn new(coeffs: [f64; 5]) -> Result<Self> {
        let norm = libm::sqrt(
            coeffs
                .iter()
                .zip(WEIGHT_MULTIPLICITY)
                .map(|(c, m)| m * c * c)
                .sum::<f64>(),
        );
        if !(norm > NORM_TOL) || !norm.is_finite() {
            return Err(Error::ZeroState);
        }
        Ok(SymmetricFourQubit {
            coeffs: coeffs.map(|c| c / norm),
        })
    }

    pub fn coeffs(&self) -> [f64; 5] {
        self.coeffs
    }

    pub fn to_simplex(&self) -> SimplexState {
        let amps = (0..16usize)
            .map(|b| Complex64::new(self.coeffs[b.count_ones() as usize], 0.0))
            .collect();
        SimplexState::new(4, amps, "sym4").expect("coefficients are normalized")
    }
}

/// 16-amplitude symmetric state with amplitude `α_w` on weight-`w` strings.
pub fn symmetric_four(coeffs: [f64; 5]) -> Result<SimplexState> {
    Ok(SymmetricFourQubit::new(coeffs)?.to_simplex())
}
