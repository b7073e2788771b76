//! Exact Cover: every clause of three bits must read 001, 010 or 100.
//!
//! The tensor-network count uses the network engine with 0/1 clause tables
//! and summed physical legs, so the contracted scalar is the model count.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::bits::mask;
use crate::lattice::LatticeGraph;
use crate::network::{NetworkSpec, PhysicalLegs, TensorNetwork, DEFAULT_MEMORY_CAP};
use crate::{Error, Result};

pub const COUNT_CAP: usize = 26;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverInstance {
    n_bits: usize,
    clauses: Vec<[usize; 3]>,
}

impl CoverInstance {
    /// Rejects out-of-range or repeated bits and clauses repeating the same
    /// bit set.
    pub fn new(n_bits: usize, clauses: Vec<[usize; 3]>) -> Result<Self> {
        if n_bits == 0 {
            return Err(Error::InvalidArgument("instance has no bits".into()));
        }
        let mut seen: Vec<[usize; 3]> = Vec::with_capacity(clauses.len());
        for c in &clauses {
            if c.iter().any(|&b| b >= n_bits) || c[0] == c[1] || c[0] == c[2] || c[1] == c[2] {
                return Err(Error::InvalidArgument(alloc::format!(
                    "bad clause {c:?} for {n_bits} bits"
                )));
            }
            let mut key = *c;
            key.sort_unstable();
            if seen.contains(&key) {
                return Err(Error::InvalidArgument(alloc::format!(
                    "duplicate clause {c:?}"
                )));
            }
            seen.push(key);
        }
        Ok(CoverInstance { n_bits, clauses })
    }

    pub fn n_bits(&self) -> usize {
        self.n_bits
    }

    pub fn clauses(&self) -> &[[usize; 3]] {
        &self.clauses
    }

    /// Same instance with one more clause.
    pub fn with_clause(&self, clause: [usize; 3]) -> Result<Self> {
        let mut clauses = self.clauses.clone();
        clauses.push(clause);
        Self::new(self.n_bits, clauses)
    }

    fn check_cap(&self) -> Result<()> {
        if self.n_bits > COUNT_CAP {
            return Err(Error::SizeCap {
                what: "exact cover",
                size: self.n_bits,
                cap: COUNT_CAP,
            });
        }
        Ok(())
    }
}

/// One clause per up-triangle; bits are sites.
pub fn lattice_to_instance(lattice: &LatticeGraph) -> CoverInstance {
    CoverInstance {
        n_bits: lattice.n_sites(),
        clauses: lattice.up_triangles().to_vec(),
    }
}

pub fn count_solutions_bruteforce(inst: &CoverInstance) -> Result<u64> {
    inst.check_cap()?;
    Ok(count_range(inst, 0, 1u64 << inst.n_bits))
}

/// Satisfying assignments among `start..end`; disjoint ranges add up.
pub fn count_range(inst: &CoverInstance, start: u64, end: u64) -> u64 {
    let n = inst.n_bits;
    let masks: Vec<u64> = inst
        .clauses
        .iter()
        .map(|c| c.iter().fold(0, |m, &b| m | mask(b, n)))
        .collect();
    (start..end)
        .filter(|x| masks.iter().all(|m| (x & m).count_ones() == 1))
        .count() as u64
}

/// Contraction count with the size of the largest intermediate tensor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TnCount {
    pub count: u64,
    pub free_bits: usize,
    pub peak_rank: usize,
    pub peak_elements: usize,
}

/// 0/1 table of a clause: ones on 001, 010, 100.
pub fn clause_table() -> Vec<Complex64> {
    (0..8u32)
        .map(|s| Complex64::new(if s.count_ones() == 1 { 1.0 } else { 0.0 }, 0.0))
        .collect()
}

pub fn count_solutions_tn(inst: &CoverInstance) -> Result<u64> {
    count_solutions_tn_with(inst, DEFAULT_MEMORY_CAP).map(|c| c.count)
}

pub fn count_solutions_tn_with(inst: &CoverInstance, memory_cap: usize) -> Result<TnCount> {
    inst.check_cap()?;
    // compact the bits that appear in some clause; the rest are free
    let mut index = alloc::vec![usize::MAX; inst.n_bits];
    let mut used = 0;
    for c in &inst.clauses {
        for &b in c {
            if index[b] == usize::MAX {
                index[b] = used;
                used += 1;
            }
        }
    }
    let free_bits = inst.n_bits - used;
    if used == 0 {
        return Ok(TnCount {
            count: 1 << free_bits,
            free_bits,
            peak_rank: 0,
            peak_elements: 1,
        });
    }
    let plaquettes: Vec<Vec<usize>> = inst
        .clauses
        .iter()
        .map(|c| c.iter().map(|&b| index[b]).collect())
        .collect();
    let tables = alloc::vec![clause_table(); plaquettes.len()];
    let labels = alloc::vec!["clause".into(); plaquettes.len()];
    let spec = NetworkSpec::from_tables(used, plaquettes, tables, labels)?;
    let net = TensorNetwork::from_spec(&spec, PhysicalLegs::Summed);
    let order = net.plan();
    let out = net.contract(&order, memory_cap)?;
    let value = out.tensor.data()[0].re;
    let count = libm::round(value);
    if (value - count).abs() > 1e-6 || count < 0.0 {
        return Err(Error::InvalidArgument(alloc::format!(
            "contraction gave non-integer count {value}"
        )));
    }
    Ok(TnCount {
        count: (count as u64) << free_bits,
        free_bits,
        peak_rank: out.peak_rank,
        peak_elements: out.peak_elements,
    })
}

/// Seeded instance with `n_clauses` distinct random clauses.
pub fn random_instance(n_bits: usize, n_clauses: usize, seed: u64) -> Result<CoverInstance> {
    let available = if n_bits >= 3 {
        n_bits * (n_bits - 1) * (n_bits - 2) / 6
    } else {
        0
    };
    if n_clauses > available {
        return Err(Error::InvalidArgument(alloc::format!(
            "{n_clauses} distinct clauses do not fit on {n_bits} bits"
        )));
    }
    let mut rng = crate::rng::seeded(seed);
    let mut below = |k: usize| crate::rng::below(&mut rng, k);
    let mut clauses: Vec<[usize; 3]> = Vec::with_capacity(n_clauses);
    while clauses.len() < n_clauses {
        let a = below(n_bits);
        let b = below(n_bits);
        let c = below(n_bits);
        if a == b || a == c || b == c {
            continue;
        }
        let mut key = [a, b, c];
        key.sort_unstable();
        if clauses.iter().any(|k| {
            let mut k = *k;
            k.sort_unstable();
            k == key
        }) {
            continue;
        }
        clauses.push([a, b, c]);
    }
    CoverInstance::new(n_bits, clauses)
}
