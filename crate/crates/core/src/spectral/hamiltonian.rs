use alloc::vec::Vec;

use nalgebra::DMatrix;

use crate::bits::{bit, mask};
use crate::lattice::LatticeGraph;
use crate::{Error, Result};

/// Default cap on the number of spins for operator construction.
pub const DEFAULT_QUBIT_CAP: usize = 24;

/// `H = Σ J_ij σᶻ_i σᶻ_j + λ Σ σˣ_i`; `J > 0` is antiferromagnetic.
#[derive(Debug, Clone, PartialEq)]
pub struct HamiltonianSpec {
    n_sites: usize,
    couplings: Vec<((usize, usize), f64)>,
    field: f64,
}

impl HamiltonianSpec {
    /// Coupling `j` on every bond, counted once per up-triangle containing
    /// it. On a regular lattice every bond lies in exactly one up-triangle,
    /// so this is the plain uniform model.
    pub fn uniform(lattice: &LatticeGraph, j: f64, field: f64) -> Self {
        let couplings = lattice
            .edges()
            .iter()
            .map(|&(a, b)| ((a, b), j * lattice.edge_multiplicity(a, b) as f64))
            .collect();
        HamiltonianSpec {
            n_sites: lattice.n_sites(),
            couplings,
            field,
        }
    }

    /// Per-bond couplings; every key must be a bond of `lattice`.
    pub fn with_couplings(
        lattice: &LatticeGraph,
        couplings: Vec<((usize, usize), f64)>,
        field: f64,
    ) -> Result<Self> {
        let mut normalized = Vec::with_capacity(couplings.len());
        for ((a, b), j) in couplings {
            let key = (a.min(b), a.max(b));
            if lattice.edges().binary_search(&key).is_err() {
                return Err(Error::InvalidLattice(alloc::format!(
                    "coupling on ({a}, {b}) which is not a lattice bond"
                )));
            }
            normalized.push((key, j));
        }
        Ok(HamiltonianSpec {
            n_sites: lattice.n_sites(),
            couplings: normalized,
            field,
        })
    }

    /// Arbitrary bond list, e.g. a two-site chain with no triangle.
    pub fn from_bonds(
        n_sites: usize,
        couplings: Vec<((usize, usize), f64)>,
        field: f64,
    ) -> Result<Self> {
        for &((a, b), _) in &couplings {
            if a == b || a >= n_sites || b >= n_sites {
                return Err(Error::InvalidLattice(alloc::format!(
                    "bad bond ({a}, {b}) for {n_sites} sites"
                )));
            }
        }
        Ok(HamiltonianSpec {
            n_sites,
            couplings: couplings
                .into_iter()
                .map(|((a, b), j)| ((a.min(b), a.max(b)), j))
                .collect(),
            field,
        })
    }

    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    pub fn couplings(&self) -> &[((usize, usize), f64)] {
        &self.couplings
    }

    pub fn field(&self) -> f64 {
        self.field
    }

    pub fn with_field(mut self, field: f64) -> Self {
        self.field = field;
        self
    }

    /// Classical (λ = 0) energy of configuration `x`, with σᶻ = +1 on bit 1.
    pub fn classical_energy(&self, x: u64) -> f64 {
        let n = self.n_sites;
        self.couplings
            .iter()
            .map(|&((a, b), j)| if bit(x, a, n) == bit(x, b, n) { j } else { -j })
            .sum()
    }
}

/// Diagonal plus uniform transverse field: `diag(E_x) + λ Σ σˣ_i`.
///
/// Off-diagonal entries are single bit flips and are generated on the fly.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinOperator {
    n: usize,
    diag: Vec<f64>,
    field: f64,
}

impl SpinOperator {
    pub fn n_qubits(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn diagonal(&self) -> &[f64] {
        &self.diag
    }

    pub fn field(&self) -> f64 {
        self.field
    }

    /// Nonzero off-diagonal entries `(column, value)` of row `x`.
    pub fn off_diagonal_row(&self, x: u64) -> impl Iterator<Item = (u64, f64)> + '_ {
        let field = self.field;
        let n = if field == 0.0 { 0 } else { self.n };
        (0..n).map(move |i| (x ^ mask(i, self.n), field))
    }

    /// `out = H v`.
    pub fn apply(&self, v: &[f64], out: &mut [f64]) {
        for (x, o) in out.iter_mut().enumerate() {
            let mut acc = self.diag[x] * v[x];
            if self.field != 0.0 {
                let flips: f64 = (0..self.n).map(|i| v[x ^ (1 << i)]).sum();
                acc += self.field * flips;
            }
            *o = acc;
        }
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        let dim = self.dim();
        let mut m = DMatrix::<f64>::zeros(dim, dim);
        for x in 0..dim {
            m[(x, x)] = self.diag[x];
            for (y, v) in self.off_diagonal_row(x as u64) {
                m[(x, y as usize)] += v;
            }
        }
        m
    }
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap || n > 30 {
        return Err(Error::SizeCap {
            what: "Hamiltonian",
            size: n,
            cap: cap.min(30),
        });
    }
    Ok(())
}

/// The transverse-field antiferromagnet of `spec`, limited to `cap` spins.
pub fn build_hamiltonian(spec: &HamiltonianSpec, cap: usize) -> Result<SpinOperator> {
    check_cap(spec.n_sites, cap)?;
    let diag = (0..1u64 << spec.n_sites)
        .map(|x| spec.classical_energy(x))
        .collect();
    Ok(SpinOperator {
        n: spec.n_sites,
        diag,
        field: spec.field,
    })
}

fn triangle_occupation(x: u64, t: &[usize; 3], n: usize) -> i64 {
    t.iter().map(|&s| bit(x, s, n) as i64).sum()
}

/// `H_W = Σ_{up-triangles} (z_i + z_j + z_k - 1)²` with `z = (1 + σᶻ)/2`.
/// Its zero-energy space is spanned by configurations with exactly one 1 per
/// up-triangle.
pub fn build_hw(lattice: &LatticeGraph, cap: usize) -> Result<SpinOperator> {
    let n = lattice.n_sites();
    check_cap(n, cap)?;
    let diag = (0..1u64 << n)
        .map(|x| {
            lattice
                .up_triangles()
                .iter()
                .map(|t| {
                    let s = triangle_occupation(x, t, n) - 1;
                    (s * s) as f64
                })
                .sum()
        })
        .collect();
    Ok(SpinOperator {
        n,
        diag,
        field: 0.0,
    })
}

/// `Σ_{up-triangles} [(s - 1)² + (s - 2)² - 2]` with `s = z_i + z_j + z_k`:
/// the antiferromagnetic coupling written as a W condition plus a W̄
/// condition.
pub fn build_two_condition_form(lattice: &LatticeGraph, cap: usize) -> Result<SpinOperator> {
    let n = lattice.n_sites();
    check_cap(n, cap)?;
    let diag = (0..1u64 << n)
        .map(|x| {
            lattice
                .up_triangles()
                .iter()
                .map(|t| {
                    let s = triangle_occupation(x, t, n);
                    ((s - 1) * (s - 1) + (s - 2) * (s - 2) - 2) as f64
                })
                .sum()
        })
        .collect();
    Ok(SpinOperator {
        n,
        diag,
        field: 0.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::from_bitstring;
    use crate::lattice::build_triangular_patch;

    #[test]
    fn single_triangle_spectrum() {
        let l = build_triangular_patch(1).unwrap();
        let h =
            build_hamiltonian(&HamiltonianSpec::uniform(&l, 1.0, 0.0), DEFAULT_QUBIT_CAP).unwrap();
        let min = h.diagonal().iter().copied().fold(f64::INFINITY, f64::min);
        assert_eq!(min, -1.0);
        assert_eq!(h.diagonal().iter().filter(|&&e| e == min).count(), 6);
        assert_eq!(h.diagonal()[0b111], 3.0);
    }

    #[test]
    fn field_gives_one_flip_per_qubit() {
        let l = build_triangular_patch(1).unwrap();
        let h =
            build_hamiltonian(&HamiltonianSpec::uniform(&l, 1.0, 0.1), DEFAULT_QUBIT_CAP).unwrap();
        let dense = h.to_dense();
        for x in 0..8 {
            let off = (0..8).filter(|&y| y != x && dense[(x, y)] != 0.0).count();
            assert_eq!(off, 3);
        }
        assert_eq!(dense, dense.transpose());
    }

    #[test]
    fn hw_on_a_triangle() {
        let l = build_triangular_patch(1).unwrap();
        let hw = build_hw(&l, DEFAULT_QUBIT_CAP).unwrap();
        let zeros: Vec<usize> = (0..8).filter(|&x| hw.diagonal()[x] == 0.0).collect();
        assert_eq!(zeros, [0b001, 0b010, 0b100]);
        assert_eq!(hw.diagonal()[from_bitstring("111").unwrap() as usize], 4.0);
    }

    #[test]
    fn cap_is_enforced() {
        let l = build_triangular_patch(3).unwrap();
        assert!(matches!(
            build_hw(&l, 8),
            Err(Error::SizeCap { size: 10, .. })
        ));
    }

    #[test]
    fn couplings_must_be_bonds() {
        let l = build_triangular_patch(2).unwrap();
        assert!(HamiltonianSpec::with_couplings(&l, alloc::vec![((0, 5), 1.0)], 0.0).is_err());
        assert!(HamiltonianSpec::with_couplings(&l, alloc::vec![((1, 0), 1.0)], 0.0).is_ok());
    }
}
