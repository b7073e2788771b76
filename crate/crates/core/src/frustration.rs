//! Classical ground manifolds of Ising models on triangle lattices.
//!
//! Energies are integers: spins `s = 2x − 1` and integer couplings, so
//! minimizers are collected by exact comparison.

use alloc::string::String;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::bits::{mask, restrict};
use crate::lattice::{build_triangular_patch, LatticeGraph};
use crate::spectral::PureState;
use crate::{Error, Result};

/// Largest lattice enumerated exhaustively.
pub const ENUMERATION_CAP: usize = 26;

/// Integer bond list `((i, j), J)` with `i < j`.
pub type IntCouplings = Vec<((usize, usize), i64)>;

/// Antiferromagnetic `J = 1` per bond, weighted by the number of
/// up-triangles containing it.
pub fn unit_couplings(lattice: &LatticeGraph) -> IntCouplings {
    lattice
        .edges()
        .iter()
        .map(|&(a, b)| ((a, b), lattice.edge_multiplicity(a, b) as i64))
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct GroundManifold {
    pub lattice: LatticeGraph,
    /// Sorted, duplicate-free minimizers.
    pub configurations: Vec<u64>,
    pub energy: i64,
}

impl GroundManifold {
    pub fn degeneracy(&self) -> usize {
        self.configurations.len()
    }
}

/// `Σ J s_i s_j` for configuration `x`.
pub fn ising_energy(n: usize, couplings: &[((usize, usize), i64)], x: u64) -> i64 {
    couplings
        .iter()
        .map(|&((a, b), j)| {
            let same = ((x & mask(a, n)) == 0) == ((x & mask(b, n)) == 0);
            if same {
                j
            } else {
                -j
            }
        })
        .sum()
}

/// Minimum energy and minimizers over the Gray-code indices `start..end`.
/// Results of disjoint ranges combine with [`merge_minima`].
pub fn scan_range(
    n: usize,
    couplings: &[((usize, usize), i64)],
    start: u64,
    end: u64,
) -> (i64, Vec<u64>) {
    // neighbour lists drive the incremental energy update
    let mut adjacency: Vec<Vec<(usize, i64)>> = alloc::vec![Vec::new(); n];
    for &((a, b), j) in couplings {
        adjacency[a].push((b, j));
        adjacency[b].push((a, j));
    }
    let spin = |x: u64, k: usize| if x & mask(k, n) != 0 { 1i64 } else { -1 };
    let mut best = i64::MAX;
    let mut found = Vec::new();
    if start >= end {
        return (best, found);
    }
    let mut x = start ^ (start >> 1);
    let mut energy = ising_energy(n, couplings, x);
    let mut g = start;
    loop {
        if energy < best {
            best = energy;
            found.clear();
        }
        if energy == best {
            found.push(x);
        }
        g += 1;
        if g == end {
            break;
        }
        // Gray step flips bit number trailing_zeros(g) counted from the
        // least significant end, i.e. site n - 1 - tz.
        let site = n - 1 - g.trailing_zeros() as usize;
        let s = spin(x, site);
        let local: i64 = adjacency[site].iter().map(|&(o, j)| j * spin(x, o)).sum();
        energy -= 2 * s * local;
        x ^= mask(site, n);
    }
    found.sort_unstable();
    (best, found)
}

/// Combines per-range minima; deterministic regardless of merge order.
pub fn merge_minima(a: (i64, Vec<u64>), b: (i64, Vec<u64>)) -> (i64, Vec<u64>) {
    match a.0.cmp(&b.0) {
        core::cmp::Ordering::Less => a,
        core::cmp::Ordering::Greater => b,
        core::cmp::Ordering::Equal => {
            let mut all = a.1;
            all.extend(b.1);
            all.sort_unstable();
            all.dedup();
            (a.0, all)
        }
    }
}

fn check_cap(n: usize) -> Result<()> {
    if n > ENUMERATION_CAP {
        return Err(Error::SizeCap {
            what: "ground enumeration",
            size: n,
            cap: ENUMERATION_CAP,
        });
    }
    Ok(())
}

/// Ground manifold of the unit antiferromagnet on `lattice`.
pub fn enumerate_ground(lattice: &LatticeGraph) -> Result<GroundManifold> {
    enumerate_ground_with(lattice, &unit_couplings(lattice))
}

/// Ground manifold for arbitrary integer couplings on `lattice`'s sites.
pub fn enumerate_ground_with(
    lattice: &LatticeGraph,
    couplings: &[((usize, usize), i64)],
) -> Result<GroundManifold> {
    let n = lattice.n_sites();
    check_cap(n)?;
    validate_couplings(n, couplings)?;
    let (energy, configurations) = scan_range(n, couplings, 0, 1u64 << n);
    Ok(GroundManifold {
        lattice: lattice.clone(),
        configurations,
        energy,
    })
}

pub fn validate_couplings(n: usize, couplings: &[((usize, usize), i64)]) -> Result<()> {
    for &((a, b), _) in couplings {
        if a == b || a >= n || b >= n {
            return Err(Error::InvalidLattice(alloc::format!(
                "bad bond ({a}, {b}) for {n} sites"
            )));
        }
    }
    Ok(())
}

/// `Σ_x |x⟩ / √M` over the manifold.
pub fn equal_superposition(manifold: &GroundManifold) -> Result<PureState> {
    if manifold.configurations.is_empty() {
        return Err(Error::EmptyManifold);
    }
    let entries: Vec<(u64, Complex64)> = manifold
        .configurations
        .iter()
        .map(|&x| (x, Complex64::new(1.0, 0.0)))
        .collect();
    PureState::from_sparse(manifold.lattice.n_sites(), &entries)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WStructureReport {
    /// Basis states inspected (amplitude above threshold).
    pub checked: usize,
    /// `(configuration, triangle)` pairs where the triangle is monochromatic.
    pub witnesses: Vec<(u64, [usize; 3])>,
}

impl WStructureReport {
    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }
}

/// Amplitude magnitude below which a basis state is ignored.
pub const SUPPORT_THRESHOLD: f64 = 1e-10;

/// Checks that every supported configuration restricts to a member of W or
/// W̄ (i.e. is not monochromatic) on every up-triangle.
pub fn verify_w_structure(state: &PureState, lattice: &LatticeGraph) -> WStructureReport {
    let n = state.n_qubits();
    let mut checked = 0;
    let mut witnesses = Vec::new();
    for x in state.support(SUPPORT_THRESHOLD) {
        checked += 1;
        for t in lattice.up_triangles() {
            let r = restrict(x, t, n);
            if r == 0 || r == 7 {
                witnesses.push((x, *t));
            }
        }
    }
    WStructureReport { checked, witnesses }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WannierPoint {
    pub side: usize,
    pub n_sites: usize,
    pub degeneracy: usize,
    /// `log₂ M / n` for this finite open patch.
    pub exponent: f64,
}

/// Caveat attached to every finite-patch exponent report.
pub const WANNIER_NOTE: &str = "finite open patches; boundary effects dominate and no \
thermodynamic-limit extrapolation is attempted (bulk value 0.488)";

/// Degeneracy exponent of the unit antiferromagnet on triangular patches.
pub fn wannier_estimate(sides: &[usize]) -> Result<Vec<WannierPoint>> {
    sides
        .iter()
        .map(|&side| {
            let lattice = build_triangular_patch(side)?;
            let m = enumerate_ground(&lattice)?;
            let n = lattice.n_sites();
            Ok(WannierPoint {
                side,
                n_sites: n,
                degeneracy: m.degeneracy(),
                exponent: libm::log2(m.degeneracy() as f64) / n as f64,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrustrationReport {
    pub ground_energy: i64,
    /// `−Σ |J|`: the energy if every bond could be satisfied at once.
    pub bond_minimum_sum: i64,
}

impl FrustrationReport {
    pub fn frustrated(&self) -> bool {
        self.ground_energy > self.bond_minimum_sum
    }

    pub fn verdict(&self) -> String {
        String::from(if self.frustrated() {
            "frustrated"
        } else {
            "unfrustrated"
        })
    }
}

pub fn frustration_indicator(
    couplings: &[((usize, usize), i64)],
    ground_energy: i64,
) -> FrustrationReport {
    FrustrationReport {
        ground_energy,
        bond_minimum_sum: -couplings.iter().map(|&(_, j)| j.abs()).sum::<i64>(),
    }
}
