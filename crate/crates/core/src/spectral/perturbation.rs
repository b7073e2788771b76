//! First-order degenerate perturbation theory for the λ → 0⁺ ground state.
//!
//! At λ = 0 the ground space is spanned by the classical minimizers. The
//! transverse field, projected onto that space, couples minimizers that
//! differ by one spin flip; diagonalizing the projection selects the state
//! the small-field ground state converges to.

use alloc::vec::Vec;

use nalgebra::DMatrix;

use super::eigen::{sorted_eigen, DEGENERACY_TOL};
use super::hamiltonian::HamiltonianSpec;
use super::state::PureState;
use crate::{Error, Result};

/// Tolerance when collecting classical minimizers with real couplings.
const ENERGY_TOL: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct PtGround {
    pub state: PureState,
    /// Lowest eigenvalue of `sign(λ) P Σσˣ P`, i.e. the first-order energy
    /// shift per unit `|λ|`.
    pub first_order_shift: f64,
    /// Distance to the next projected eigenvalue (zero when first order does
    /// not lift the degeneracy).
    pub gap: f64,
    pub manifold: Vec<u64>,
    pub classical_energy: f64,
}

/// Classical minimum energy of `spec` and its sorted minimizers.
pub fn classical_ground(spec: &HamiltonianSpec) -> Result<(f64, Vec<u64>)> {
    let n = spec.n_sites();
    if n > 26 {
        return Err(Error::SizeCap {
            what: "classical enumeration",
            size: n,
            cap: 26,
        });
    }
    let mut best = f64::INFINITY;
    let mut configs = Vec::new();
    for x in 0..1u64 << n {
        let e = spec.classical_energy(x);
        if e < best - ENERGY_TOL {
            best = e;
            configs.clear();
            configs.push(x);
        } else if (e - best).abs() <= ENERGY_TOL {
            configs.push(x);
        }
    }
    Ok((best, configs))
}

/// Degenerate perturbation theory on the classical ground manifold of `spec`.
/// The sign of the field in `spec` selects the lowest (λ > 0) or highest
/// (λ < 0) projected eigenvector.
pub fn degenerate_pt_ground(spec: &HamiltonianSpec) -> Result<PtGround> {
    let (energy, manifold) = classical_ground(spec)?;
    let sign = if spec.field() < 0.0 { -1.0 } else { 1.0 };
    let mut out = degenerate_pt_on_manifold(spec.n_sites(), &manifold, sign)?;
    out.classical_energy = energy;
    Ok(out)
}

/// Diagonalizes `sign · P Σσˣ P` on the span of `manifold` (distinct
/// configurations) and returns its lowest eigenvector.
pub fn degenerate_pt_on_manifold(n_qubits: usize, manifold: &[u64], sign: f64) -> Result<PtGround> {
    if manifold.is_empty() {
        return Err(Error::EmptyManifold);
    }
    let mut sorted = manifold.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let m = sorted.len();
    let projected = DMatrix::from_fn(m, m, |a, b| {
        if (sorted[a] ^ sorted[b]).count_ones() == 1 {
            sign
        } else {
            0.0
        }
    });
    let (values, vectors) = sorted_eigen(projected);
    let entries: Vec<(u64, num_complex::Complex64)> = sorted
        .iter()
        .enumerate()
        .map(|(k, &x)| (x, num_complex::Complex64::new(vectors[(k, 0)], 0.0)))
        .collect();
    let state = PureState::from_sparse(n_qubits, &entries)?.phase_fixed();
    let gap = values.get(1).map_or(f64::INFINITY, |v| v - values[0]);
    Ok(PtGround {
        state,
        first_order_shift: values[0],
        gap,
        manifold: sorted,
        classical_energy: f64::NAN,
    })
}

impl PtGround {
    /// Whether first order fully resolves the ground state.
    pub fn is_resolved(&self) -> bool {
        self.gap > DEGENERACY_TOL
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::build_triangular_patch;

    #[test]
    fn triangle_manifold_is_a_hexagon() {
        let l = build_triangular_patch(1).unwrap();
        let pt = degenerate_pt_ground(&HamiltonianSpec::uniform(&l, 1.0, 1e-3)).unwrap();
        assert_eq!(pt.manifold.len(), 6);
        assert_eq!(pt.classical_energy, -1.0);
        // adjacency spectrum of a 6-cycle: lowest -2, next -1
        assert!((pt.first_order_shift + 2.0).abs() < 1e-12);
        assert!((pt.gap - 1.0).abs() < 1e-12);
        for x in 1..7u64 {
            assert!((pt.state.amplitude(x).norm() - 1.0 / libm::sqrt(6.0)).abs() < 1e-12);
        }
    }

    #[test]
    fn single_state_manifold() {
        let pt = degenerate_pt_on_manifold(3, &[0], 1.0).unwrap();
        assert!((pt.state.amplitude(0).re - 1.0).abs() < 1e-15);
        assert_eq!(
            degenerate_pt_on_manifold(3, &[], 1.0).unwrap_err(),
            Error::EmptyManifold
        );
    }
}
