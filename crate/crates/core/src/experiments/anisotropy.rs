//! Anisotropic couplings: ferromagnetic along rows, antiferromagnetic on the
//! two slanted directions. Frustration disappears and every up-triangle
//! settles into one of two patterns.
//!
//! Edge labeling: a bond is horizontal when both sites share a row of the
//! generated patch. Triangle patterns are read as (base-left, base-right,
//! apex).

use alloc::string::String;
use alloc::vec::Vec;

use crate::frustration::{
    enumerate_ground_with, equal_superposition, frustration_indicator, verify_w_structure,
    FrustrationReport, IntCouplings,
};
use crate::lattice::{build_triangular_patch, LatticeGraph};
use crate::{Error, Result};

pub const HORIZONTAL_COUPLING: i64 = -1;
pub const DIAGONAL_COUPLING: i64 = 1;

/// Predicted triangle patterns in (base-left, base-right, apex) order.
pub const PREDICTED_PATTERNS: [&str; 2] = ["001", "110"];

/// Horizontal bonds get [`HORIZONTAL_COUPLING`], the rest
/// [`DIAGONAL_COUPLING`]. Needs site coordinates.
pub fn anisotropic_couplings(lattice: &LatticeGraph) -> Result<IntCouplings> {
    lattice
        .edges()
        .iter()
        .map(|&(a, b)| {
            let horizontal = lattice.is_horizontal(a, b).ok_or_else(|| {
                Error::InvalidLattice("edge directions need site coordinates".into())
            })?;
            let j = if horizontal {
                HORIZONTAL_COUPLING
            } else {
                DIAGONAL_COUPLING
            };
            Ok(((a, b), j * lattice.edge_multiplicity(a, b) as i64))
        })
        .collect()
}

/// Triangle sites as (base-left, base-right, apex).
pub fn oriented_triangle(lattice: &LatticeGraph, t: [usize; 3]) -> Result<[usize; 3]> {
    let coords = lattice
        .coords()
        .ok_or_else(|| Error::InvalidLattice("orientation needs site coordinates".into()))?;
    let mut sites = t;
    // apex has the smallest row; base sorted by column
    sites.sort_by_key(|&s| (coords[s].0, coords[s].1));
    let apex = sites[0];
    let (l, r) = (sites[1], sites[2]);
    if coords[l].0 != coords[r].0 || coords[apex].0 >= coords[l].0 {
        return Err(Error::InvalidLattice(alloc::format!(
            "triangle {t:?} is not an up-triangle"
        )));
    }
    Ok([l, r, apex])
}

/// A single up-triangle: base sites 0 and 1 on row 1, apex 2 on row 0.
pub fn single_triangle() -> LatticeGraph {
    LatticeGraph::from_triangles_with_coords(
        3,
        alloc::vec![[0, 1, 2]],
        alloc::vec![(1, 0), (1, 1), (0, 0)],
    )
    .expect("valid triangle")
}

#[derive(Debug, Clone)]
pub struct AnisotropyCase {
    pub name: String,
    pub n_sites: usize,
    pub ground_energy: i64,
    pub configurations: Vec<u64>,
    /// Distinct oriented triangle patterns seen across the ground manifold.
    pub patterns: Vec<String>,
    pub w_structure_passed: bool,
    pub frustration: FrustrationReport,
}

impl AnisotropyCase {
    pub fn patterns_as_predicted(&self) -> bool {
        !self.patterns.is_empty()
            && self
                .patterns
                .iter()
                .all(|p| PREDICTED_PATTERNS.contains(&p.as_str()))
    }
}

pub fn anisotropy_case(name: &str, lattice: &LatticeGraph) -> Result<AnisotropyCase> {
    let couplings = anisotropic_couplings(lattice)?;
    let manifold = enumerate_ground_with(lattice, &couplings)?;
    let n = lattice.n_sites();
    let mut patterns: Vec<String> = Vec::new();
    for t in lattice.up_triangles() {
        let o = oriented_triangle(lattice, *t)?;
        for &x in &manifold.configurations {
            let p = crate::bits::to_bitstring(crate::bits::restrict(x, &o, n) as u64, 3);
            if !patterns.contains(&p) {
                patterns.push(p);
            }
        }
    }
    patterns.sort();
    let psi = equal_superposition(&manifold)?;
    Ok(AnisotropyCase {
        name: name.into(),
        n_sites: n,
        ground_energy: manifold.energy,
        configurations: manifold.configurations.clone(),
        patterns,
        w_structure_passed: verify_w_structure(&psi, lattice).passed(),
        frustration: frustration_indicator(&couplings, manifold.energy),
    })
}

/// The single triangle and the six-site patch.
pub fn run_anisotropy() -> Result<Vec<AnisotropyCase>> {
    Ok(alloc::vec![
        anisotropy_case("triangle", &single_triangle())?,
        anisotropy_case("six-site", &build_triangular_patch(2)?)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_has_two_patterns() {
        let c = &run_anisotropy().unwrap()[0];
        // sites (0, 1, 2) = (base-left, base-right, apex)
        assert_eq!(c.configurations, [0b001, 0b110]);
        assert_eq!(c.ground_energy, -3);
        assert!(c.patterns_as_predicted());
        assert!(c.w_structure_passed);
        assert!(!c.frustration.frustrated());
    }

    #[test]
    fn six_site_is_unfrustrated() {
        let c = &run_anisotropy().unwrap()[1];
        assert_eq!(c.configurations.len(), 2);
        assert_eq!(c.ground_energy, -9);
        assert!(c.patterns_as_predicted());
        assert!(!c.frustration.frustrated());
    }

    #[test]
    fn orientation_of_patch_triangles() {
        let l = build_triangular_patch(2).unwrap();
        // stored as (apex, lower-left, lower-right)
        assert_eq!(oriented_triangle(&l, [1, 3, 4]).unwrap(), [3, 4, 1]);
        assert!(anisotropic_couplings(
            &LatticeGraph::from_triangles(3, alloc::vec![[0, 1, 2]]).unwrap()
        )
        .is_err());
    }
}
