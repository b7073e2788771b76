//! Lowest eigenpairs of real symmetric spin operators: dense diagonalization
//! for small registers, restarted Lanczos with full reorthogonalization for
//! larger ones.

use alloc::vec;
use alloc::vec::Vec;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use super::hamiltonian::{build_hamiltonian, HamiltonianSpec, SpinOperator, DEFAULT_QUBIT_CAP};
use super::state::PureState;
use crate::{Error, Result};

/// Registers up to this size are diagonalized densely.
pub const DENSE_MAX_QUBITS: usize = 10;

/// Minimum gap between the two lowest eigenvalues for a ground state to be
/// reported.
pub const DEGENERACY_TOL: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct GroundState {
    pub energy: f64,
    /// Second-lowest eigenvalue.
    pub next_energy: f64,
    pub state: PureState,
}

impl GroundState {
    pub fn gap(&self) -> f64 {
        self.next_energy - self.energy
    }
}

/// `(eigenvalues ascending, eigenvectors as columns)` of a dense symmetric matrix.
pub fn sorted_eigen(m: DMatrix<f64>) -> (Vec<f64>, DMatrix<f64>) {
    let eig = SymmetricEigen::new(m);
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let vectors = DMatrix::from_fn(eig.eigenvectors.nrows(), order.len(), |r, c| {
        eig.eigenvectors[(r, order[c])]
    });
    (values, vectors)
}

fn to_state(n: usize, v: &[f64]) -> Result<PureState> {
    Ok(PureState::from_real(n, v)?.phase_fixed())
}

fn dense_ground(op: &SpinOperator) -> Result<GroundState> {
    let (values, vectors) = sorted_eigen(op.to_dense());
    let v: Vec<f64> = vectors.column(0).iter().copied().collect();
    Ok(GroundState {
        energy: values[0],
        next_energy: values.get(1).copied().unwrap_or(f64::INFINITY),
        state: to_state(op.n_qubits(), &v)?,
    })
}

#[derive(Debug, Clone, Copy)]
pub struct LanczosConfig {
    /// Krylov vectors kept per restart.
    pub krylov_dim: usize,
    pub max_restarts: usize,
    /// Residual norm `‖Hv - θv‖` at which a Ritz pair is accepted.
    pub tol: f64,
}

impl Default for LanczosConfig {
    fn default() -> Self {
        LanczosConfig {
            krylov_dim: 60,
            max_restarts: 400,
            tol: 1e-10,
        }
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn axpy(alpha: f64, x: &[f64], y: &mut [f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

fn normalize(v: &mut [f64]) -> f64 {
    let norm = libm::sqrt(dot(v, v));
    if norm > 0.0 {
        v.iter_mut().for_each(|x| *x /= norm);
    }
    norm
}

fn project_out(v: &mut [f64], basis: &[Vec<f64>]) {
    // twice is enough
    for _ in 0..2 {
        for b in basis {
            let c = dot(b, v);
            axpy(-c, b, v);
        }
    }
}

/// Deterministic start vector with no special symmetry.
fn start_vector(dim: usize) -> Vec<f64> {
    (0..dim)
        .map(|i| {
            let h = (i as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15) >> 40;
            1.0 + (h as f64) / (1u64 << 24) as f64
        })
        .collect()
}

/// Lowest eigenpair of `op` restricted to the orthogonal complement of
/// `deflate` (orthonormal vectors).
pub fn lanczos_lowest(
    op: &SpinOperator,
    deflate: &[Vec<f64>],
    config: &LanczosConfig,
) -> Result<(f64, Vec<f64>)> {
    let dim = op.dim();
    let m_max = config
        .krylov_dim
        .min(dim.saturating_sub(deflate.len()))
        .max(1);
    let mut guess = start_vector(dim);
    project_out(&mut guess, deflate);
    if normalize(&mut guess) == 0.0 {
        return Err(Error::ZeroState);
    }
    let mut w = vec![0.0; dim];
    for restart in 0..config.max_restarts {
        let mut basis: Vec<Vec<f64>> = Vec::with_capacity(m_max);
        let mut alpha = Vec::with_capacity(m_max);
        let mut beta: Vec<f64> = Vec::with_capacity(m_max);
        basis.push(guess.clone());
        loop {
            let k = basis.len() - 1;
            op.apply(&basis[k], &mut w);
            let a = dot(&w, &basis[k]);
            alpha.push(a);
            project_out(&mut w, deflate);
            project_out(&mut w, &basis);
            let b = libm::sqrt(dot(&w, &w));
            if basis.len() == m_max || b < 1e-13 {
                beta.push(b);
                break;
            }
            beta.push(b);
            basis.push(w.iter().map(|x| x / b).collect());
        }
        let m = alpha.len();
        let t = DMatrix::from_fn(m, m, |i, j| {
            if i == j {
                alpha[i]
            } else if i + 1 == j {
                beta[i]
            } else if j + 1 == i {
                beta[j]
            } else {
                0.0
            }
        });
        let (values, vectors) = sorted_eigen(t);
        let theta = values[0];
        let mut ritz = vec![0.0; dim];
        for (k, b) in basis.iter().enumerate() {
            axpy(vectors[(k, 0)], b, &mut ritz);
        }
        project_out(&mut ritz, deflate);
        normalize(&mut ritz);
        op.apply(&ritz, &mut w);
        axpy(-theta, &ritz, &mut w);
        let residual = libm::sqrt(dot(&w, &w));
        if residual < config.tol || beta[m - 1] < 1e-13 {
            return Ok((theta, ritz));
        }
        guess = ritz;
        if restart + 1 == config.max_restarts {
            break;
        }
    }
    Err(Error::NoConvergence {
        iterations: config.max_restarts,
    })
}

/// Lowest eigenvalue, next eigenvalue and ground vector; dense for small
/// registers, Lanczos otherwise.
pub fn lowest_pair(op: &SpinOperator, config: &LanczosConfig) -> Result<GroundState> {
    if op.n_qubits() <= DENSE_MAX_QUBITS {
        return dense_ground(op);
    }
    let (e0, v0) = lanczos_lowest(op, &[], config)?;
    let (e1, _) = lanczos_lowest(op, core::slice::from_ref(&v0), config)?;
    Ok(GroundState {
        energy: e0,
        next_energy: e1,
        state: to_state(op.n_qubits(), &v0)?,
    })
}

/// Ground state of the transverse-field model at the (small, positive)
/// field stored in `spec`. Fails when the two lowest levels are closer than
/// [`DEGENERACY_TOL`].
pub fn ground_state_small_lambda(spec: &HamiltonianSpec) -> Result<GroundState> {
    ground_state_with(spec, DEFAULT_QUBIT_CAP, &LanczosConfig::default())
}

pub fn ground_state_with(
    spec: &HamiltonianSpec,
    cap: usize,
    config: &LanczosConfig,
) -> Result<GroundState> {
    if !(spec.field() > 0.0) {
        return Err(Error::InvalidArgument(
            "transverse field must be positive".into(),
        ));
    }
    let op = build_hamiltonian(spec, cap)?;
    let gs = lowest_pair(&op, config)?;
    if gs.gap() < DEGENERACY_TOL {
        return Err(Error::DegenerateGround { gap: gs.gap() });
    }
    Ok(gs)
}

/// Expectation value `<ψ|H|ψ>` for a real-amplitude state.
pub fn energy_of(op: &SpinOperator, state: &PureState) -> f64 {
    let v: Vec<f64> = state
        .amplitudes()
        .iter()
        .map(|a: &Complex64| a.re)
        .collect();
    let mut w = vec![0.0; v.len()];
    op.apply(&v, &mut w);
    dot(&v, &w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::build_triangular_patch;

    #[test]
    fn lanczos_matches_dense() {
        let l = build_triangular_patch(3).unwrap();
        let op = build_hamiltonian(&HamiltonianSpec::uniform(&l, 1.0, 0.7), 24).unwrap();
        let dense = dense_ground(&op).unwrap();
        let (e0, v0) = lanczos_lowest(&op, &[], &LanczosConfig::default()).unwrap();
        assert!((e0 - dense.energy).abs() < 1e-9);
        let (e1, _) =
            lanczos_lowest(&op, core::slice::from_ref(&v0), &LanczosConfig::default()).unwrap();
        assert!((e1 - dense.next_energy).abs() < 1e-8);
        let lz = to_state(op.n_qubits(), &v0).unwrap();
        assert!(lz.overlap(&dense.state) > 1.0 - 1e-9);
    }

    #[test]
    fn zero_field_is_rejected_or_degenerate() {
        let l = build_triangular_patch(1).unwrap();
        assert!(ground_state_small_lambda(&HamiltonianSpec::uniform(&l, 1.0, 0.0)).is_err());
        // λ tiny: the splitting drops below the resolution
        assert!(matches!(
            ground_state_small_lambda(&HamiltonianSpec::uniform(&l, 1.0, 1e-12)),
            Err(Error::DegenerateGround { .. })
        ));
    }
}
