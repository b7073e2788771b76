//! Shared fixtures and brute-force oracles for the integration tests.
#![allow(dead_code)]

use simplexnet_core::lattice::{build_six_site, build_triangular_patch, random_lattice};
use simplexnet_core::LatticeGraph;

/// Site `i` of an `n`-site configuration, site 0 being the leading bit.
pub fn spin(x: u64, i: usize, n: usize) -> u64 {
    (x >> (n - 1 - i)) & 1
}

/// Deterministic lattice set with at most `max_sites` sites: patches, the
/// six-site lattice and a spread of random explicit lattices.
pub fn fixture_lattices(max_sites: usize) -> Vec<(String, LatticeGraph)> {
    let mut out = Vec::new();
    for side in 1..=4 {
        let l = build_triangular_patch(side).unwrap();
        if l.n_sites() <= max_sites {
            out.push((format!("patch-{side}"), l));
        }
    }
    out.push(("six-site".into(), build_six_site()));
    for seed in 0..12u64 {
        let n = 4 + (seed as usize % 9);
        if n > max_sites {
            continue;
        }
        let disjoint = seed % 2 == 0;
        if let Ok(l) = random_lattice(n, (seed % 3) as usize, disjoint, seed) {
            out.push((format!("random-{seed}"), l));
        }
    }
    out
}

/// Pairwise-edge Ising energy written out from the triangles: every
/// triangle contributes `+1` per aligned pair and `-1` per anti-aligned pair.
pub fn triangle_pair_energy(l: &LatticeGraph, x: u64) -> i64 {
    let n = l.n_sites();
    l.up_triangles()
        .iter()
        .map(|t| {
            let pairs = [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])];
            pairs
                .iter()
                .map(|&(a, b)| {
                    if spin(x, a, n) == spin(x, b, n) {
                        1
                    } else {
                        -1
                    }
                })
                .sum::<i64>()
        })
        .sum()
}

/// Minimum of [`triangle_pair_energy`] and its minimizers, by plain loop.
pub fn ground_oracle(l: &LatticeGraph) -> (i64, Vec<u64>) {
    let mut best = i64::MAX;
    let mut arg = Vec::new();
    for x in 0..1u64 << l.n_sites() {
        let e = triangle_pair_energy(l, x);
        if e < best {
            best = e;
            arg.clear();
        }
        if e == best {
            arg.push(x);
        }
    }
    (best, arg)
}

/// Exact Cover count by plain loop over assignments and clauses.
pub fn cover_oracle(n: usize, clauses: &[[usize; 3]]) -> u64 {
    (0..1u64 << n)
        .filter(|&x| {
            clauses
                .iter()
                .all(|c| c.iter().map(|&b| spin(x, b, n)).sum::<u64>() == 1)
        })
        .count() as u64
}
