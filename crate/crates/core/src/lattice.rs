//! Lattice geometries: triangular patches built from up-triangles, explicit
//! triangle lists, and the 24-site checkerboard square network.
//!
//! Only up-triangles carry interactions; the bond set is the deduplicated
//! union of their edges. Site numbering of generated patches is row-major
//! from the apex: row `r` holds sites `r(r+1)/2 ..= r(r+1)/2 + r`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeKind {
    TriangularPatch { side: usize },
    Explicit,
}

/// Sites, up-triangles and bonds of a (possibly irregular) triangular lattice.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeGraph {
    n_sites: usize,
    up_triangles: Vec<[usize; 3]>,
    edges: Vec<(usize, usize)>,
    kind: LatticeKind,
    /// `(row, col)` per site; present for generated patches.
    coords: Option<Vec<(usize, usize)>>,
}

impl LatticeGraph {
    /// Builds an explicit lattice from its up-triangles.
    pub fn from_triangles(n_sites: usize, up_triangles: Vec<[usize; 3]>) -> Result<Self> {
        Self::build(n_sites, up_triangles, LatticeKind::Explicit, None)
    }

    /// Like [`from_triangles`](Self::from_triangles) but with site coordinates,
    /// which define edge directions (same row = horizontal).
    pub fn from_triangles_with_coords(
        n_sites: usize,
        up_triangles: Vec<[usize; 3]>,
        coords: Vec<(usize, usize)>,
    ) -> Result<Self> {
        if coords.len() != n_sites {
            return Err(Error::InvalidLattice(format!(
                "{} coordinates for {n_sites} sites",
                coords.len()
            )));
        }
        Self::build(n_sites, up_triangles, LatticeKind::Explicit, Some(coords))
    }

    fn build(
        n_sites: usize,
        up_triangles: Vec<[usize; 3]>,
        kind: LatticeKind,
        coords: Option<Vec<(usize, usize)>>,
    ) -> Result<Self> {
        if n_sites == 0 {
            return Err(Error::InvalidLattice("lattice has no sites".into()));
        }
        let mut seen = BTreeSet::new();
        let mut covered = alloc::vec![false; n_sites];
        for t in &up_triangles {
            if let Some(&s) = t.iter().find(|&&s| s >= n_sites) {
                return Err(Error::InvalidLattice(format!(
                    "site {s} out of range for {n_sites} sites"
                )));
            }
            if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
                return Err(Error::InvalidLattice(format!("degenerate triangle {t:?}")));
            }
            let mut key = *t;
            key.sort_unstable();
            if !seen.insert(key) {
                return Err(Error::InvalidLattice(format!("duplicate triangle {t:?}")));
            }
            for &s in t {
                covered[s] = true;
            }
        }
        if let Some(s) = covered.iter().position(|c| !c) {
            return Err(Error::InvalidLattice(format!(
                "site {s} belongs to no up-triangle"
            )));
        }
        let edges: BTreeSet<(usize, usize)> =
            up_triangles.iter().flat_map(triangle_edges).collect();
        let lattice = LatticeGraph {
            n_sites,
            up_triangles,
            edges: edges.into_iter().collect(),
            kind,
            coords,
        };
        if let Some(e) = lattice
            .edges
            .iter()
            .find(|&&(i, j)| lattice.edge_multiplicity(i, j) > 2)
        {
            return Err(Error::InvalidLattice(format!(
                "edge {e:?} shared by more than two up-triangles"
            )));
        }
        Ok(lattice)
    }

    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    pub fn up_triangles(&self) -> &[[usize; 3]] {
        &self.up_triangles
    }

    /// Deduplicated bonds `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn kind(&self) -> LatticeKind {
        self.kind
    }

    pub fn coords(&self) -> Option<&[(usize, usize)]> {
        self.coords.as_deref()
    }

    /// Number of up-triangles containing the bond `{i, j}`.
    pub fn edge_multiplicity(&self, i: usize, j: usize) -> usize {
        self.up_triangles
            .iter()
            .filter(|t| t.contains(&i) && t.contains(&j))
            .count()
    }

    /// True when no bond is shared by two up-triangles (always the case on a
    /// regular triangular lattice).
    pub fn triangles_edge_disjoint(&self) -> bool {
        self.edges.len() == 3 * self.up_triangles.len()
    }

    /// Whether bond `{i, j}` joins two sites of the same row. `None` without
    /// coordinates.
    pub fn is_horizontal(&self, i: usize, j: usize) -> Option<bool> {
        self.coords.as_ref().map(|c| c[i].0 == c[j].0)
    }

    /// Sites adjacent to `site` through a bond.
    pub fn neighbors(&self, site: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter_map(move |&(i, j)| {
            if i == site {
                Some(j)
            } else if j == site {
                Some(i)
            } else {
                None
            }
        })
    }

    /// Site index of `(row, col)` in a generated patch.
    pub fn patch_site(&self, row: usize, col: usize) -> Option<usize> {
        match self.kind {
            LatticeKind::TriangularPatch { side } if row <= side && col <= row => {
                Some(row * (row + 1) / 2 + col)
            }
            _ => None,
        }
    }
}

fn triangle_edges(t: &[usize; 3]) -> [(usize, usize); 3] {
    let e = |a: usize, b: usize| (a.min(b), a.max(b));
    [e(t[0], t[1]), e(t[0], t[2]), e(t[1], t[2])]
}

/// Triangle-shaped patch of `side` rows of up-triangles. Each up-triangle is
/// stored as `(apex, lower-left, lower-right)`.
pub fn build_triangular_patch(side: usize) -> Result<LatticeGraph> {
    if side == 0 {
        return Err(Error::InvalidArgument(
            "patch side must be at least 1".into(),
        ));
    }
    let idx = |r: usize, c: usize| r * (r + 1) / 2 + c;
    let n_sites = (side + 1) * (side + 2) / 2;
    let mut triangles = Vec::with_capacity(side * (side + 1) / 2);
    for r in 0..side {
        for c in 0..=r {
            triangles.push([idx(r, c), idx(r + 1, c), idx(r + 1, c + 1)]);
        }
    }
    let coords = (0..=side)
        .flat_map(|r| (0..=r).map(move |c| (r, c)))
        .collect();
    LatticeGraph::build(
        n_sites,
        triangles,
        LatticeKind::TriangularPatch { side },
        Some(coords),
    )
}

/// The six-spin lattice whose small-field ground state carries the four
/// amplitude classes α, β, γ, δ: the side-2 patch, with up-triangles
/// `{0,1,2}`, `{1,3,4}`, `{2,4,5}` and nine bonds.
pub fn build_six_site() -> LatticeGraph {
    build_triangular_patch(2).expect("side 2 is valid")
}

/// Seeded explicit lattice on `n_sites` sites: random triangles are added
/// until every site is covered, then `extra` more. With `edge_disjoint`, no
/// bond is shared by two triangles; otherwise a bond may be shared by two.
pub fn random_lattice(
    n_sites: usize,
    extra: usize,
    edge_disjoint: bool,
    seed: u64,
) -> Result<LatticeGraph> {
    if n_sites < 3 {
        return Err(Error::InvalidArgument(
            "a lattice needs at least 3 sites".into(),
        ));
    }
    let mut rng = crate::rng::seeded(seed);
    let limit = if edge_disjoint { 1 } else { 2 };
    let mut triangles: Vec<[usize; 3]> = Vec::new();
    let mut covered = alloc::vec![false; n_sites];
    let mut added_extra = 0;
    for _ in 0..10_000 {
        let done = covered.iter().all(|&c| c);
        if done && added_extra == extra {
            return LatticeGraph::from_triangles(n_sites, triangles);
        }
        let first = if done {
            crate::rng::below(&mut rng, n_sites)
        } else {
            covered.iter().position(|c| !c).expect("uncovered site")
        };
        let b = crate::rng::below(&mut rng, n_sites);
        let c = crate::rng::below(&mut rng, n_sites);
        let t = [first, b, c];
        if first == b || first == c || b == c {
            continue;
        }
        let mut key = t;
        key.sort_unstable();
        let duplicate = triangles.iter().any(|u| {
            let mut u = *u;
            u.sort_unstable();
            u == key
        });
        let crowded = triangle_edges(&t).iter().any(|&(i, j)| {
            triangles
                .iter()
                .filter(|u| u.contains(&i) && u.contains(&j))
                .count()
                >= limit
        });
        if duplicate || crowded {
            continue;
        }
        triangles.push(t);
        if done {
            added_extra += 1;
        }
        for s in t {
            covered[s] = true;
        }
    }
    Err(Error::InvalidArgument(format!(
        "no random lattice with {n_sites} sites and {extra} extra triangles found"
    )))
}

/// A set of sites of an `n_sites` system; always a nonempty proper subset.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Region {
    n_sites: usize,
    sites: Vec<usize>,
}

impl Region {
    pub fn new(n_sites: usize, sites: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = sites.into_iter().collect();
        if set.is_empty() {
            return Err(Error::InvalidRegion("region is empty".into()));
        }
        if let Some(&s) = set.iter().find(|&&s| s >= n_sites) {
            return Err(Error::InvalidRegion(format!(
                "site {s} out of range for {n_sites} sites"
            )));
        }
        if set.len() == n_sites {
            return Err(Error::InvalidRegion(
                "region covers the whole system".into(),
            ));
        }
        Ok(Region {
            n_sites,
            sites: set.into_iter().collect(),
        })
    }

    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    /// Sorted region sites.
    pub fn sites(&self) -> &[usize] {
        &self.sites
    }

    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }

    pub fn contains(&self, site: usize) -> bool {
        self.sites.binary_search(&site).is_ok()
    }

    pub fn complement(&self) -> Region {
        Region {
            n_sites: self.n_sites,
            sites: (0..self.n_sites).filter(|s| !self.contains(*s)).collect(),
        }
    }

    /// Bonds with exactly one end inside the region.
    pub fn cut_edges(&self, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
        edges
            .iter()
            .copied()
            .filter(|&(i, j)| self.contains(i) != self.contains(j))
            .collect()
    }

    /// ∂A: number of region sites with a bond into the complement.
    pub fn boundary_size(&self, edges: &[(usize, usize)]) -> usize {
        let boundary: BTreeSet<usize> = self
            .cut_edges(edges)
            .into_iter()
            .map(|(i, j)| if self.contains(i) { i } else { j })
            .collect();
        boundary.len()
    }
}

/// Apex-anchored triangular region made of the first `core_rows` rows of a
/// patch (`n_A = core_rows (core_rows + 1) / 2`).
pub fn triangular_core_region(patch: &LatticeGraph, core_rows: usize) -> Result<Region> {
    triangular_region_at(patch, 0, 0, core_rows)
}

/// Triangular region of `rows` rows whose apex sits at `(apex_row, apex_col)`.
pub fn triangular_region_at(
    patch: &LatticeGraph,
    apex_row: usize,
    apex_col: usize,
    rows: usize,
) -> Result<Region> {
    let side = match patch.kind() {
        LatticeKind::TriangularPatch { side } => side,
        LatticeKind::Explicit => {
            return Err(Error::InvalidRegion(
                "triangular regions need a generated patch".into(),
            ))
        }
    };
    if rows == 0 || apex_col > apex_row || apex_row + rows > side + 1 {
        return Err(Error::InvalidRegion(format!(
            "{rows}-row region at ({apex_row}, {apex_col}) does not fit a side-{side} patch"
        )));
    }
    let sites = (0..rows).flat_map(|i| {
        (0..=i).map(move |j| {
            let (r, c) = (apex_row + i, apex_col + j);
            r * (r + 1) / 2 + c
        })
    });
    Region::new(patch.n_sites(), sites)
}

/// Triangular region of `rows` rows placed as close to the patch centroid as
/// the grid allows: the `side + 1 - rows` spare rows are split between the
/// left, right and bottom margins, any remainder going to the bottom.
pub fn centered_triangular_region(patch: &LatticeGraph, rows: usize) -> Result<Region> {
    let side = match patch.kind() {
        LatticeKind::TriangularPatch { side } => side,
        LatticeKind::Explicit => {
            return Err(Error::InvalidRegion(
                "triangular regions need a generated patch".into(),
            ))
        }
    };
    if rows == 0 || rows > side + 1 {
        return Err(Error::InvalidRegion(format!(
            "{rows}-row region does not fit a side-{side} patch"
        )));
    }
    let spare = side + 1 - rows;
    let left = spare / 3;
    let right = spare / 3;
    // apex_row - apex_col is the right margin
    triangular_region_at(patch, left + right, left, rows)
}

/// The 24-spin square network: a 4 x 6 periodic grid of sites whose
/// plaquettes are checked in a checkerboard pattern. The 12 checked
/// plaquettes carry the 4-qubit simplices and every site touches exactly two
/// of them.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareNetworkGraph {
    rows: usize,
    cols: usize,
    checked_squares: Vec<[usize; 4]>,
    inner: Region,
}

impl SquareNetworkGraph {
    pub fn n_sites(&self) -> usize {
        self.rows * self.cols
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Checked squares, each listed counter-clockwise from its top-left site.
    pub fn checked_squares(&self) -> &[[usize; 4]] {
        &self.checked_squares
    }

    /// The inner 4-spin region (one checked square).
    pub fn inner_region(&self) -> &Region {
        &self.inner
    }

    /// Number of checked squares containing each site.
    pub fn site_membership(&self) -> Vec<usize> {
        let mut count = alloc::vec![0; self.n_sites()];
        for sq in &self.checked_squares {
            for &s in sq {
                count[s] += 1;
            }
        }
        count
    }

    /// Sides of the checked squares; these are the bonds of the network.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .checked_squares
            .iter()
            .flat_map(|sq| {
                (0..4).map(move |k| {
                    let (a, b) = (sq[k], sq[(k + 1) % 4]);
                    (a.min(b), a.max(b))
                })
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

pub fn build_square_network() -> SquareNetworkGraph {
    let (rows, cols) = (4usize, 6usize);
    let site = |r: usize, c: usize| (r % rows) * cols + (c % cols);
    let mut checked_squares = Vec::with_capacity(rows * cols / 2);
    for r in 0..rows {
        for c in 0..cols {
            if (r + c) % 2 == 0 {
                checked_squares.push([
                    site(r, c),
                    site(r + 1, c),
                    site(r + 1, c + 1),
                    site(r, c + 1),
                ]);
            }
        }
    }
    let inner = Region::new(
        rows * cols,
        [site(1, 1), site(1, 2), site(2, 1), site(2, 2)],
    )
    .expect("inner square is a proper subset");
    SquareNetworkGraph {
        rows,
        cols,
        checked_squares,
        inner,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_site_lattice() {
        let l = build_six_site();
        assert_eq!(l.n_sites(), 6);
        assert_eq!(l.up_triangles(), &[[0, 1, 2], [1, 3, 4], [2, 4, 5]]);
        assert_eq!(l.edges().len(), 9);
        assert!(l.triangles_edge_disjoint());
    }

    #[test]
    fn shared_edge_is_counted_once() {
        // triangles {0,1,2},{2,3,4},{2,4,5}: the bond {2,4} appears twice
        let l =
            LatticeGraph::from_triangles(6, alloc::vec![[0, 1, 2], [2, 3, 4], [2, 4, 5]]).unwrap();
        assert_eq!(l.edges().len(), 8);
        assert_eq!(l.edge_multiplicity(2, 4), 2);
        assert!(!l.triangles_edge_disjoint());
    }

    #[test]
    fn rejects_bad_triangle_lists() {
        assert!(LatticeGraph::from_triangles(3, alloc::vec![[0, 1, 3]]).is_err());
        assert!(LatticeGraph::from_triangles(3, alloc::vec![[0, 1, 1]]).is_err());
        assert!(LatticeGraph::from_triangles(3, alloc::vec![[0, 1, 2], [2, 1, 0]]).is_err());
        assert!(LatticeGraph::from_triangles(4, alloc::vec![[0, 1, 2]]).is_err());
    }

    #[test]
    fn patch_sizes() {
        let l = build_triangular_patch(1).unwrap();
        assert_eq!(l.n_sites(), 3);
        assert_eq!(l.up_triangles(), &[[0, 1, 2]]);
        assert_eq!(build_triangular_patch(2).unwrap().up_triangles().len(), 3);
        // rows of the side-3 patch: 1 + 2 + 3 + 4 sites, 1 + 2 + 3 up-triangles
        let l3 = build_triangular_patch(3).unwrap();
        assert_eq!(l3.n_sites(), 10);
        assert_eq!(l3.up_triangles().len(), 6);
        assert!(build_triangular_patch(0).is_err());
    }

    #[test]
    fn patch_counts_by_construction() {
        for side in 1..=6 {
            let l = build_triangular_patch(side).unwrap();
            assert_eq!(l.n_sites(), (side + 1) * (side + 2) / 2);
            assert_eq!(l.up_triangles().len(), side * (side + 1) / 2);
            for &(i, j) in l.edges() {
                assert!(l.edge_multiplicity(i, j) <= 2);
            }
            let mut sorted = l.edges().to_vec();
            sorted.dedup();
            assert_eq!(sorted.len(), l.edges().len());
        }
    }

    #[test]
    fn core_regions() {
        let p4 = build_triangular_patch(4).unwrap();
        assert_eq!(triangular_core_region(&p4, 2).unwrap().len(), 3);
        assert_eq!(triangular_core_region(&p4, 3).unwrap().len(), 6);
        assert_eq!(triangular_core_region(&p4, 4).unwrap().len(), 10);
        let p2 = build_triangular_patch(2).unwrap();
        assert!(triangular_core_region(&p2, 5).is_err());
        // whole patch is not a proper region
        assert!(triangular_core_region(&p2, 3).is_err());
    }

    #[test]
    fn centered_regions_leave_margins() {
        let p4 = build_triangular_patch(4).unwrap();
        let r = centered_triangular_region(&p4, 2).unwrap();
        assert_eq!(r.sites(), &[4, 7, 8]);
        let p6 = build_triangular_patch(6).unwrap();
        let r = centered_triangular_region(&p6, 4).unwrap();
        assert_eq!(r.len(), 10);
        assert_eq!(r.sites()[0], p6.patch_site(2, 1).unwrap());
    }

    #[test]
    fn boundary_and_cut_symmetry() {
        let p = build_triangular_patch(3).unwrap();
        let a = triangular_core_region(&p, 2).unwrap();
        let b = a.complement();
        assert_eq!(a.cut_edges(p.edges()), b.cut_edges(p.edges()));
        // apex triangle {0,1,2}: sites 1 and 2 touch row 2
        assert_eq!(a.boundary_size(p.edges()), 2);
        assert_eq!(b.boundary_size(p.edges()), 3);
    }

    #[test]
    fn square_network_membership() {
        let g = build_square_network();
        assert_eq!(g.n_sites(), 24);
        assert_eq!(g.checked_squares().len(), 12);
        assert!(g.site_membership().iter().all(|&m| m == 2));
        assert_eq!(g.inner_region().len(), 4);
        let inner = g.inner_region().sites();
        assert!(g.checked_squares().iter().any(|sq| {
            let mut s = sq.to_vec();
            s.sort_unstable();
            s == inner
        }));
        assert_eq!(g.edges().len(), 48);
    }
}
