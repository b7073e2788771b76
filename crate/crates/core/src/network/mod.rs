//! Simplex tensor networks.
//!
//! A network places one simplex tensor on every plaquette (up-triangle or
//! checked square) and a copy tensor on every site. The copy tensor is 1 when
//! all incident ancilla legs and the physical leg carry the same value and 0
//! otherwise, so the amplitude of a physical configuration is the product of
//! the simplex amplitudes evaluated on each plaquette's restriction.
//!
//! Two independent contraction routes are provided: [`contract_diagonal`]
//! evaluates that product directly, [`contract_pairwise`] builds the dense
//! tensors and contracts them pair by pair along a planned order.

mod diagonal;
mod pairwise;

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::lattice::{LatticeGraph, SquareNetworkGraph};
use crate::simplex::SimplexState;
use crate::{Error, Result};

pub use diagonal::{
    contract_diagonal, contract_sparse, for_each_support, reduced_density_streaming, Contraction,
    SparseContraction, MAX_DIAGONAL_QUBITS,
};
pub use pairwise::{
    contract_pairwise, plan_order, ContractionOrder, PairwiseContraction, PhysicalLegs, Tensor,
    TensorNetwork, DEFAULT_MEMORY_CAP,
};

/// Plaquettes of a lattice with one amplitude table per plaquette.
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkSpec {
    n_sites: usize,
    plaquettes: Vec<Vec<usize>>,
    tables: Vec<Vec<Complex64>>,
    labels: Vec<String>,
}

impl NetworkSpec {
    /// General constructor. Every table must have `2^len` entries for its
    /// plaquette, and every site must belong to some plaquette.
    pub fn from_tables(
        n_sites: usize,
        plaquettes: Vec<Vec<usize>>,
        tables: Vec<Vec<Complex64>>,
        labels: Vec<String>,
    ) -> Result<Self> {
        if plaquettes.len() != tables.len() || labels.len() != tables.len() {
            return Err(Error::InvalidArgument(alloc::format!(
                "{} plaquettes, {} tables, {} labels",
                plaquettes.len(),
                tables.len(),
                labels.len()
            )));
        }
        if n_sites == 0 || n_sites > 64 {
            return Err(Error::SizeCap {
                what: "network",
                size: n_sites,
                cap: 64,
            });
        }
        let mut covered = alloc::vec![false; n_sites];
        for (p, t) in plaquettes.iter().zip(&tables) {
            if t.len() != 1 << p.len() {
                return Err(Error::ArityMismatch {
                    expected: 1 << p.len(),
                    found: t.len(),
                });
            }
            for (k, &s) in p.iter().enumerate() {
                if s >= n_sites || p[..k].contains(&s) {
                    return Err(Error::InvalidLattice(alloc::format!(
                        "bad plaquette {p:?} for {n_sites} sites"
                    )));
                }
                covered[s] = true;
            }
        }
        if let Some(s) = covered.iter().position(|c| !c) {
            return Err(Error::InvalidLattice(alloc::format!(
                "site {s} belongs to no plaquette"
            )));
        }
        Ok(NetworkSpec {
            n_sites,
            plaquettes,
            tables,
            labels,
        })
    }

    /// One simplex per up-triangle, in the lattice's triangle order.
    pub fn assigned(lattice: &LatticeGraph, simplices: Vec<SimplexState>) -> Result<Self> {
        let plaquettes = lattice.up_triangles().iter().map(|t| t.to_vec()).collect();
        Self::from_simplices(lattice.n_sites(), plaquettes, simplices)
    }

    /// The same simplex on every up-triangle.
    pub fn uniform(lattice: &LatticeGraph, simplex: &SimplexState) -> Result<Self> {
        let simplices = alloc::vec![simplex.clone(); lattice.up_triangles().len()];
        Self::assigned(lattice, simplices)
    }

    /// The same 4-qubit simplex on every checked square.
    pub fn square_uniform(graph: &SquareNetworkGraph, simplex: &SimplexState) -> Result<Self> {
        let plaquettes = graph.checked_squares().iter().map(|s| s.to_vec()).collect();
        let simplices = alloc::vec![simplex.clone(); graph.checked_squares().len()];
        Self::from_simplices(graph.n_sites(), plaquettes, simplices)
    }

    pub fn from_simplices(
        n_sites: usize,
        plaquettes: Vec<Vec<usize>>,
        simplices: Vec<SimplexState>,
    ) -> Result<Self> {
        if plaquettes.len() != simplices.len() {
            return Err(Error::InvalidArgument(alloc::format!(
                "{} plaquettes but {} simplices",
                plaquettes.len(),
                simplices.len()
            )));
        }
        for (p, s) in plaquettes.iter().zip(&simplices) {
            if p.len() != s.arity() {
                return Err(Error::ArityMismatch {
                    expected: p.len(),
                    found: s.arity(),
                });
            }
        }
        let labels = simplices.iter().map(|s| s.label().to_string()).collect();
        let tables = simplices
            .into_iter()
            .map(|s| s.amplitudes().to_vec())
            .collect();
        Self::from_tables(n_sites, plaquettes, tables, labels)
    }

    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    pub fn plaquettes(&self) -> &[Vec<usize>] {
        &self.plaquettes
    }

    pub fn tables(&self) -> &[Vec<Complex64>] {
        &self.tables
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `(plaquette, leg)` pairs incident on each site; their count is the
    /// degree of the site's copy tensor.
    pub fn incidence(&self) -> Vec<Vec<(usize, usize)>> {
        let mut inc = alloc::vec![Vec::new(); self.n_sites];
        for (p, sites) in self.plaquettes.iter().enumerate() {
            for (leg, &s) in sites.iter().enumerate() {
                inc[s].push((p, leg));
            }
        }
        inc
    }

    /// Unnormalized amplitude of configuration `x`.
    pub fn amplitude(&self, x: u64) -> Complex64 {
        let mut amp = Complex64::new(1.0, 0.0);
        for (p, t) in self.plaquettes.iter().zip(&self.tables) {
            amp *= t[crate::bits::restrict(x, p, self.n_sites)];
            if amp.norm_sqr() == 0.0 {
                break;
            }
        }
        amp
    }
}
