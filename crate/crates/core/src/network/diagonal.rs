use alloc::vec;
use alloc::vec::Vec;

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::NetworkSpec;
use crate::bits::{mask, restrict};
use crate::lattice::Region;
use crate::spectral::{PureState, ReducedDensity, REGION_CAP};
use crate::{Error, Result};

/// Largest network contracted into a dense state.
pub const MAX_DIAGONAL_QUBITS: usize = 24;

/// Normalized contraction result plus the squared norm before normalization.
/// With 0/1 tables the squared norm is the number of nonzero configurations.
#[derive(Debug, Clone)]
pub struct Contraction {
    pub state: PureState,
    pub norm_sqr: f64,
}

/// Dense contraction using the diagonality of the copy tensors:
/// `ψ(x) = Π_p T_p(x|_p)` for every configuration `x`.
pub fn contract_diagonal(spec: &NetworkSpec) -> Result<Contraction> {
    let n = spec.n_sites();
    if n > MAX_DIAGONAL_QUBITS {
        return Err(Error::SizeCap {
            what: "diagonal contraction",
            size: n,
            cap: MAX_DIAGONAL_QUBITS,
        });
    }
    let amps: Vec<Complex64> = (0..1u64 << n).map(|x| spec.amplitude(x)).collect();
    let norm_sqr: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
    if !(norm_sqr > 0.0) {
        return Err(Error::ZeroState);
    }
    Ok(Contraction {
        state: PureState::new(n, amps)?,
        norm_sqr,
    })
}

/// Depth-first enumeration of the configurations with nonzero amplitude.
/// Sites are assigned in `order`; a plaquette is evaluated as soon as its
/// last site is assigned, pruning zero branches early.
struct Enumerator<'a> {
    spec: &'a NetworkSpec,
    order: Vec<usize>,
    closing: Vec<Vec<usize>>,
}

impl<'a> Enumerator<'a> {
    fn new(spec: &'a NetworkSpec, order: Vec<usize>) -> Result<Self> {
        let n = spec.n_sites();
        let mut position = vec![usize::MAX; n];
        for (d, &s) in order.iter().enumerate() {
            if s >= n || position[s] != usize::MAX {
                return Err(Error::InvalidArgument(
                    "site order is not a permutation".into(),
                ));
            }
            position[s] = d;
        }
        if order.len() != n {
            return Err(Error::InvalidArgument(
                "site order is not a permutation".into(),
            ));
        }
        let mut closing = vec![Vec::new(); n];
        for (p, sites) in spec.plaquettes().iter().enumerate() {
            let last = sites
                .iter()
                .map(|&s| position[s])
                .max()
                .expect("nonempty plaquette");
            closing[last].push(p);
        }
        Ok(Enumerator {
            spec,
            order,
            closing,
        })
    }

    fn run(
        &self,
        depth: usize,
        end: usize,
        x: u64,
        weight: Complex64,
        f: &mut dyn FnMut(u64, Complex64),
    ) {
        if depth == end {
            f(x, weight);
            return;
        }
        let n = self.spec.n_sites();
        let site = self.order[depth];
        for value in 0..2u64 {
            let x = if value == 1 { x | mask(site, n) } else { x };
            let mut w = weight;
            for &p in &self.closing[depth] {
                let sites = &self.spec.plaquettes()[p];
                w *= self.spec.tables()[p][restrict(x, sites, n)];
                if w.norm_sqr() == 0.0 {
                    break;
                }
            }
            if w.norm_sqr() != 0.0 {
                self.run(depth + 1, end, x, w, f);
            }
        }
    }
}

/// Calls `f(x, amplitude)` for every configuration with nonzero
/// (unnormalized) amplitude, in lexicographic order of `x`.
pub fn for_each_support(spec: &NetworkSpec, mut f: impl FnMut(u64, Complex64)) -> Result<()> {
    let e = Enumerator::new(spec, (0..spec.n_sites()).collect())?;
    e.run(0, spec.n_sites(), 0, Complex64::new(1.0, 0.0), &mut f);
    Ok(())
}

/// Support of the contracted state as sorted `(configuration, amplitude)`
/// pairs, unnormalized.
#[derive(Debug, Clone)]
pub struct SparseContraction {
    pub n_sites: usize,
    pub entries: Vec<(u64, Complex64)>,
    pub norm_sqr: f64,
}

impl SparseContraction {
    pub fn to_dense(&self) -> Result<PureState> {
        PureState::from_sparse(self.n_sites, &self.entries)
    }
}

pub fn contract_sparse(spec: &NetworkSpec) -> Result<SparseContraction> {
    let mut entries = Vec::new();
    for_each_support(spec, |x, a| entries.push((x, a)))?;
    let norm_sqr: f64 = entries.iter().map(|(_, a)| a.norm_sqr()).sum();
    if !(norm_sqr > 0.0) {
        return Err(Error::ZeroState);
    }
    Ok(SparseContraction {
        n_sites: spec.n_sites(),
        entries,
        norm_sqr,
    })
}

/// Reduced density matrix of `region` for the contracted state, without
/// ever storing the state: complement sites are enumerated first, and for
/// each complement configuration the region completions form one column
/// `v_b`, accumulated as `ρ += v_b v_b†`.
pub fn reduced_density_streaming(spec: &NetworkSpec, region: &Region) -> Result<ReducedDensity> {
    let n = spec.n_sites();
    if region.n_sites() != n {
        return Err(Error::InvalidRegion(
            "region belongs to another system".into(),
        ));
    }
    if region.len() > REGION_CAP {
        return Err(Error::SizeCap {
            what: "region",
            size: region.len(),
            cap: REGION_CAP,
        });
    }
    let inside = region.sites();
    let outside = region.complement();
    let mut order = outside.sites().to_vec();
    order.extend_from_slice(inside);
    let split = outside.len();
    let e = Enumerator::new(spec, order)?;

    let dim = 1usize << inside.len();
    let real = spec.tables().iter().flatten().all(|z| z.im == 0.0);
    let mut acc = Accumulator::new(dim, real);
    let mut column: Vec<(usize, Complex64)> = Vec::new();
    e.run(0, split, 0, Complex64::new(1.0, 0.0), &mut |xb, wb| {
        column.clear();
        e.run(split, n, xb, wb, &mut |x, a| {
            column.push((restrict(x, inside, n), a));
        });
        debug_assert!(column.windows(2).all(|w| w[0].0 < w[1].0));
        acc.add(&column);
    });
    ReducedDensity::from_unnormalized(inside.to_vec(), acc.finish())
}

/// Accumulates the upper triangle of `Σ_b v_b v_b†` (row-major); columns
/// arrive sorted by region index. Real networks use real arithmetic.
enum Accumulator {
    Real { dim: usize, rho: Vec<f64> },
    Complex { dim: usize, rho: Vec<Complex64> },
}

impl Accumulator {
    fn new(dim: usize, real: bool) -> Self {
        if real {
            Accumulator::Real {
                dim,
                rho: vec![0.0; dim * dim],
            }
        } else {
            Accumulator::Complex {
                dim,
                rho: vec![Complex64::new(0.0, 0.0); dim * dim],
            }
        }
    }

    fn add(&mut self, column: &[(usize, Complex64)]) {
        match self {
            Accumulator::Real { dim, rho } => {
                for (k, &(i, ai)) in column.iter().enumerate() {
                    let row = &mut rho[i * *dim..(i + 1) * *dim];
                    for &(j, aj) in &column[k..] {
                        row[j] += ai.re * aj.re;
                    }
                }
            }
            Accumulator::Complex { dim, rho } => {
                for (k, &(i, ai)) in column.iter().enumerate() {
                    let row = &mut rho[i * *dim..(i + 1) * *dim];
                    for &(j, aj) in &column[k..] {
                        row[j] += ai * aj.conj();
                    }
                }
            }
        }
    }

    fn finish(self) -> DMatrix<Complex64> {
        let (dim, upper): (usize, Vec<Complex64>) = match self {
            Accumulator::Real { dim, rho } => (
                dim,
                rho.into_iter().map(|v| Complex64::new(v, 0.0)).collect(),
            ),
            Accumulator::Complex { dim, rho } => (dim, rho),
        };
        DMatrix::from_fn(dim, dim, |i, j| {
            if i <= j {
                upper[i * dim + j]
            } else {
                upper[j * dim + i].conj()
            }
        })
    }
}
