//! Parallel versions of the embarrassingly parallel loops in the core.
//! Results are assembled in a fixed order, so they match the sequential
//! runners exactly.

use rayon::prelude::*;

use simplexnet_core::exactcover::{count_range, CoverInstance, COUNT_CAP};
use simplexnet_core::experiments::region_entropy::{
    entropy_jobs, run_entropy_job, EntropyEntry, EntropyJob, Placement,
};
use simplexnet_core::experiments::scan4::{run_scan4_with, Scan4Evaluator, ScanConfig, ScanResult};
use simplexnet_core::frustration::{
    merge_minima, scan_range, unit_couplings, validate_couplings, GroundManifold, ENUMERATION_CAP,
};
use simplexnet_core::{Error, LatticeGraph, Result};

/// Configurations handled per task in the enumeration loops.
const CHUNK: u64 = 1 << 16;

fn chunks(total: u64) -> Vec<(u64, u64)> {
    (0..total.div_ceil(CHUNK))
        .map(|k| (k * CHUNK, ((k + 1) * CHUNK).min(total)))
        .collect()
}

/// Runs the jobs in parallel; jobs whose region does not fit are dropped.
pub fn run_entropy_jobs(jobs: &[EntropyJob]) -> Result<Vec<EntropyEntry>> {
    let results: Vec<Result<EntropyEntry>> = jobs.par_iter().map(run_entropy_job).collect();
    let mut out = Vec::with_capacity(results.len());
    for r in results {
        match r {
            Ok(e) => out.push(e),
            Err(Error::InvalidRegion(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

pub fn run_region_entropy(sides: &[usize], placement: Placement) -> Result<Vec<EntropyEntry>> {
    run_entropy_jobs(&entropy_jobs(sides, placement)?)
}

pub fn enumerate_ground(lattice: &LatticeGraph) -> Result<GroundManifold> {
    enumerate_ground_with(lattice, &unit_couplings(lattice))
}

pub fn enumerate_ground_with(
    lattice: &LatticeGraph,
    couplings: &[((usize, usize), i64)],
) -> Result<GroundManifold> {
    let n = lattice.n_sites();
    if n > ENUMERATION_CAP {
        return Err(Error::SizeCap {
            what: "ground enumeration",
            size: n,
            cap: ENUMERATION_CAP,
        });
    }
    validate_couplings(n, couplings)?;
    let (energy, configurations) = chunks(1 << n)
        .into_par_iter()
        .map(|(a, b)| scan_range(n, couplings, a, b))
        .reduce(|| (i64::MAX, Vec::new()), merge_minima);
    Ok(GroundManifold {
        lattice: lattice.clone(),
        configurations,
        energy,
    })
}

pub fn count_solutions_bruteforce(inst: &CoverInstance) -> Result<u64> {
    if inst.n_bits() > COUNT_CAP {
        return Err(Error::SizeCap {
            what: "exact cover",
            size: inst.n_bits(),
            cap: COUNT_CAP,
        });
    }
    Ok(chunks(1 << inst.n_bits())
        .into_par_iter()
        .map(|(a, b)| count_range(inst, a, b))
        .sum())
}

/// Scan with grid points evaluated in parallel; bit-for-bit identical to
/// the sequential scan.
pub fn run_scan4(config: &ScanConfig) -> Result<ScanResult> {
    let eval = Scan4Evaluator::square_network();
    run_scan4_with(&eval, config, |pts| {
        pts.par_iter().map(|&c| eval.entropy(c)).collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use simplexnet_core::exactcover::random_instance;
    use simplexnet_core::lattice::build_triangular_patch;

    #[test]
    fn parallel_enumeration_matches_sequential() {
        for side in 1..=4 {
            let l = build_triangular_patch(side).unwrap();
            assert_eq!(
                enumerate_ground(&l).unwrap(),
                simplexnet_core::frustration::enumerate_ground(&l).unwrap()
            );
        }
    }

    #[test]
    fn parallel_count_matches_sequential() {
        let inst = random_instance(18, 8, 3).unwrap();
        assert_eq!(
            count_solutions_bruteforce(&inst).unwrap(),
            simplexnet_core::exactcover::count_solutions_bruteforce(&inst).unwrap()
        );
    }

    #[test]
    fn chunk_bounds() {
        assert_eq!(chunks(5), [(0, 5)]);
        assert_eq!(chunks(CHUNK * 2 + 1).len(), 3);
        assert!(chunks(0).is_empty());
    }
}
