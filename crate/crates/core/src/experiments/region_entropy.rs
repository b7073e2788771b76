//! Outward entangling power: entropy of a triangular region when one simplex
//! is placed on every up-triangle of a patch.

use alloc::string::String;
use alloc::vec::Vec;

use crate::lattice::{build_triangular_patch, centered_triangular_region, triangular_region_at};
use crate::network::{reduced_density_streaming, NetworkSpec};
use crate::simplex::SimplexState;
use crate::Result;

/// Rows of the triangular regions; `n_A = rows (rows + 1) / 2` gives 3, 6, 10.
pub const REGION_ROWS: [usize; 3] = [2, 3, 4];

/// Reference entropies per simplex row for `n_A = 3, 6, 10`.
pub const GHZ_REFERENCE: [f64; 3] = [1.0, 1.0, 1.0];
pub const W_REFERENCE: [f64; 3] = [
    1.584_962_500_721_156,
    1.584_962_500_721_156,
    1.584_962_500_721_156,
];
pub const W_111_REFERENCE: [f64; 3] = [2.0, 3.0, 4.0];
pub const W_WBAR_REFERENCE: [f64; 3] = [2.183, 3.126, 5.053];
pub const W_WBAR_111_REFERENCE: [f64; 3] = [1.815, 2.756, 4.314];

/// Tolerance used when judging the geometry-dependent rows.
pub const MATCH_TOLERANCE: f64 = 0.05;

#[derive(Debug, Clone)]
pub struct EntropyRow {
    pub label: String,
    pub simplex: SimplexState,
    pub reference: [f64; 3],
    /// Rows whose values do not depend on where the region sits.
    pub geometry_independent: bool,
}

/// The five simplex rows, each an equal superposition of its allowed
/// 3-bit strings.
pub fn entropy_rows() -> Vec<EntropyRow> {
    let row = |label: &str, strings: &[usize], reference, independent| EntropyRow {
        label: label.into(),
        simplex: SimplexState::uniform_over(3, strings, label).expect("valid strings"),
        reference,
        geometry_independent: independent,
    };
    alloc::vec![
        row("GHZ", &[0, 7], GHZ_REFERENCE, true),
        row("W", &[1, 2, 4], W_REFERENCE, true),
        row("W+111", &[1, 2, 4, 7], W_111_REFERENCE, false),
        row("W+Wbar", &[1, 2, 3, 4, 5, 6], W_WBAR_REFERENCE, false),
        row(
            "W+Wbar+111",
            &[1, 2, 3, 4, 5, 6, 7],
            W_WBAR_111_REFERENCE,
            false
        ),
    ]
}

/// Where regions are placed inside a patch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Placement {
    /// Apex of the region at the apex of the patch.
    Apex,
    /// As close to the patch centroid as the grid allows.
    Centered,
    /// Every position that fits.
    All,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EntropyJob {
    pub side: usize,
    pub row: usize,
    pub region_rows: usize,
    pub apex: (usize, usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct EntropyEntry {
    pub side: usize,
    pub n_sites: usize,
    pub label: String,
    pub n_a: usize,
    pub apex: (usize, usize),
    pub boundary: usize,
    pub entropy: f64,
    pub reference: f64,
}

impl EntropyEntry {
    pub fn residual(&self) -> f64 {
        (self.entropy - self.reference).abs()
    }
}

fn apex_positions(side: usize, rows: usize, placement: Placement) -> Result<Vec<(usize, usize)>> {
    Ok(match placement {
        Placement::Apex => alloc::vec![(0, 0)],
        Placement::Centered => {
            let patch = build_triangular_patch(side)?;
            let region = centered_triangular_region(&patch, rows)?;
            let first = region.sites()[0];
            let coords = patch.coords().expect("patches carry coordinates");
            alloc::vec![coords[first]]
        }
        Placement::All => (0..=side + 1 - rows)
            .flat_map(|r| (0..=r).map(move |c| (r, c)))
            .collect(),
    })
}

/// Jobs for every (side, row, region size, position), in a fixed order.
/// Geometry-independent rows are only evaluated at the apex.
pub fn entropy_jobs(sides: &[usize], placement: Placement) -> Result<Vec<EntropyJob>> {
    let rows = entropy_rows();
    let mut jobs = Vec::new();
    for &side in sides {
        for (k, row) in rows.iter().enumerate() {
            for &region_rows in &REGION_ROWS {
                // a region of side + 1 rows is the whole patch
                if region_rows > side {
                    continue;
                }
                let where_ = if row.geometry_independent {
                    Placement::Apex
                } else {
                    placement
                };
                let mut positions = apex_positions(side, region_rows, where_)?;
                if where_ == Placement::All {
                    // keep the apex and centered placements first
                    let centered = apex_positions(side, region_rows, Placement::Centered)?[0];
                    positions.retain(|&p| p != (0, 0) && p != centered);
                    positions.insert(0, centered);
                    if centered != (0, 0) {
                        positions.insert(0, (0, 0));
                    }
                }
                for apex in positions {
                    jobs.push(EntropyJob {
                        side,
                        row: k,
                        region_rows,
                        apex,
                    });
                }
            }
        }
    }
    Ok(jobs)
}

/// Contracts the patch with the job's simplex everywhere and returns the
/// region entropy. Regions covering the whole patch are rejected.
pub fn run_entropy_job(job: &EntropyJob) -> Result<EntropyEntry> {
    let rows = entropy_rows();
    let row = &rows[job.row];
    let patch = build_triangular_patch(job.side)?;
    let region = triangular_region_at(&patch, job.apex.0, job.apex.1, job.region_rows)?;
    let spec = NetworkSpec::uniform(&patch, &row.simplex)?;
    let entropy = reduced_density_streaming(&spec, &region)?.entropy();
    let k = REGION_ROWS
        .iter()
        .position(|&r| r == job.region_rows)
        .unwrap_or(0);
    Ok(EntropyEntry {
        side: job.side,
        n_sites: patch.n_sites(),
        label: row.label.clone(),
        n_a: region.len(),
        apex: job.apex,
        boundary: region.boundary_size(patch.edges()),
        entropy,
        reference: row.reference[k],
    })
}

/// Sequential driver; jobs that do not fit (e.g. a region as large as the
/// patch) are skipped.
pub fn run_region_entropy(sides: &[usize], placement: Placement) -> Result<Vec<EntropyEntry>> {
    let mut out = Vec::new();
    for job in entropy_jobs(sides, placement)? {
        match run_entropy_job(&job) {
            Ok(e) => out.push(e),
            Err(crate::Error::InvalidRegion(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// Closest value found for one (row, side, n_A).
#[derive(Debug, Clone, PartialEq)]
pub struct BestMatch {
    pub label: String,
    pub side: usize,
    pub n_a: usize,
    pub apex: (usize, usize),
    pub entropy: f64,
    pub reference: f64,
    pub residual: f64,
}

/// For one row and side, the best placement per region size and the worst
/// of those residuals.
#[derive(Debug, Clone, PartialEq)]
pub struct RowMatch {
    pub label: String,
    pub side: usize,
    pub per_size: Vec<BestMatch>,
    pub max_residual: f64,
}

impl RowMatch {
    pub fn matches(&self) -> bool {
        self.per_size.len() == REGION_ROWS.len() && self.max_residual <= MATCH_TOLERANCE
    }
}

/// Groups entries by (row, side) and keeps the closest placement for every
/// region size. Ties keep the earliest entry.
pub fn best_matches(entries: &[EntropyEntry]) -> Vec<RowMatch> {
    let mut out: Vec<RowMatch> = Vec::new();
    for e in entries {
        let pos = out
            .iter()
            .position(|m| m.label == e.label && m.side == e.side);
        let m = match pos {
            Some(p) => &mut out[p],
            None => {
                out.push(RowMatch {
                    label: e.label.clone(),
                    side: e.side,
                    per_size: Vec::new(),
                    max_residual: 0.0,
                });
                out.last_mut().unwrap()
            }
        };
        let candidate = BestMatch {
            label: e.label.clone(),
            side: e.side,
            n_a: e.n_a,
            apex: e.apex,
            entropy: e.entropy,
            reference: e.reference,
            residual: e.residual(),
        };
        match m.per_size.iter_mut().find(|b| b.n_a == e.n_a) {
            Some(b) if candidate.residual < b.residual => *b = candidate,
            Some(_) => {}
            None => m.per_size.push(candidate),
        }
        m.max_residual = m.per_size.iter().map(|b| b.residual).fold(0.0, f64::max);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ghz_and_w_rows_on_side_four() {
        let entries = run_region_entropy(&[4], Placement::Apex).unwrap();
        for e in entries
            .iter()
            .filter(|e| e.label == "GHZ" || e.label == "W")
        {
            assert!(e.residual() < 1e-9, "{e:?}");
        }
        let w111: Vec<f64> = entries
            .iter()
            .filter(|e| e.label == "W+111")
            .map(|e| e.entropy)
            .collect();
        for (s, t) in w111.iter().zip([2.0, 3.0, 4.0]) {
            assert!((s - t).abs() < 1e-9);
        }
    }

    #[test]
    fn whole_patch_regions_are_skipped() {
        // side 3 has 10 sites, so the 4-row region is the whole patch
        let entries = run_region_entropy(&[3], Placement::Apex).unwrap();
        assert!(entries.iter().all(|e| e.n_a < 10));
    }

    #[test]
    fn job_order_starts_with_apex_and_center() {
        let jobs = entropy_jobs(&[5], Placement::All).unwrap();
        let ww: Vec<_> = jobs
            .iter()
            .filter(|j| j.row == 3 && j.region_rows == 3)
            .collect();
        assert_eq!(ww[0].apex, (0, 0));
        assert_eq!(ww.len(), 10);
    }
}
