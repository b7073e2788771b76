use alloc::vec::Vec;

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::state::PureState;
use crate::bits::restrict;
use crate::lattice::Region;
use crate::{Error, Result};

/// Largest region for which a reduced density matrix is formed.
pub const REGION_CAP: usize = 14;

/// Eigenvalues below this are treated as zero before taking logarithms.
pub const EIGENVALUE_FLOOR: f64 = 1e-14;

/// Reduced density matrix of a region, indexed by the region bitstring
/// (first region site is the leading bit).
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedDensity {
    sites: Vec<usize>,
    matrix: DMatrix<Complex64>,
}

impl ReducedDensity {
    /// Wraps an unnormalized Hermitian positive matrix, rescaling it to unit
    /// trace.
    pub fn from_unnormalized(sites: Vec<usize>, mut matrix: DMatrix<Complex64>) -> Result<Self> {
        let dim = 1usize << sites.len();
        if matrix.nrows() != dim || matrix.ncols() != dim {
            return Err(Error::ArityMismatch {
                expected: dim,
                found: matrix.nrows(),
            });
        }
        let trace: f64 = (0..dim).map(|i| matrix[(i, i)].re).sum();
        if !(trace > 0.0) {
            return Err(Error::ZeroState);
        }
        matrix /= Complex64::new(trace, 0.0);
        Ok(ReducedDensity { sites, matrix })
    }

    pub fn sites(&self) -> &[usize] {
        &self.sites
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn trace(&self) -> f64 {
        (0..self.matrix.nrows())
            .map(|i| self.matrix[(i, i)].re)
            .sum()
    }

    /// Eigenvalues, ascending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut values: Vec<f64> = if self.matrix.iter().all(|z| z.im == 0.0) {
            self.matrix
                .map(|z| z.re)
                .symmetric_eigenvalues()
                .iter()
                .copied()
                .collect()
        } else {
            self.matrix
                .clone()
                .symmetric_eigenvalues()
                .iter()
                .copied()
                .collect()
        };
        values.sort_by(f64::total_cmp);
        values
    }

    /// Von Neumann entropy in ebits.
    pub fn entropy(&self) -> f64 {
        entropy_of_spectrum(&self.eigenvalues())
    }
}

/// `-Σ p log₂ p`, with eigenvalues below [`EIGENVALUE_FLOOR`] dropped.
pub fn entropy_of_spectrum(eigenvalues: &[f64]) -> f64 {
    let s: f64 = eigenvalues
        .iter()
        .filter(|&&p| p > EIGENVALUE_FLOOR)
        .map(|&p| -p * libm::log2(p))
        .sum();
    s.max(0.0)
}

pub fn entropy(rho: &ReducedDensity) -> f64 {
    rho.entropy()
}

/// `ρ_A = Tr_B |ψ><ψ|` for the sites of `region`.
pub fn partial_trace(state: &PureState, region: &Region) -> Result<ReducedDensity> {
    reduced_on_sites(state, region.sites())
}

fn reduced_on_sites(state: &PureState, sites: &[usize]) -> Result<ReducedDensity> {
    let n = state.n_qubits();
    if sites.len() > REGION_CAP {
        return Err(Error::SizeCap {
            what: "region",
            size: sites.len(),
            cap: REGION_CAP,
        });
    }
    if sites.iter().any(|&s| s >= n) {
        return Err(Error::InvalidRegion("region site outside the state".into()));
    }
    let rest: Vec<usize> = (0..n).filter(|s| !sites.contains(s)).collect();
    let (da, db) = (1usize << sites.len(), 1usize << rest.len());
    let mut m = DMatrix::<Complex64>::zeros(da, db);
    for (x, &amp) in state.amplitudes().iter().enumerate() {
        if amp.norm_sqr() == 0.0 {
            continue;
        }
        let x = x as u64;
        m[(restrict(x, sites, n), restrict(x, &rest, n))] = amp;
    }
    let rho = &m * m.adjoint();
    ReducedDensity::from_unnormalized(sites.to_vec(), rho)
}

/// Entanglement entropy of `region`, computed on whichever side of the cut
/// is smaller.
pub fn entanglement_entropy(state: &PureState, region: &Region) -> Result<f64> {
    let complement = region.complement();
    let side = if complement.len() < region.len() {
        complement.sites().to_vec()
    } else {
        region.sites().to_vec()
    };
    Ok(reduced_on_sites(state, &side)?.entropy())
}
