//! Lattice file:
//!
//! ```text
//! n 6
//! k patch 2          # optional: generated patch of the given side
//! t 0 1 2            # one line per up-triangle
//! c 0 0 0            # optional: site row col
//! r 0 1 2            # optional regions
//! ```

use std::fmt::Write;

use simplexnet_core::lattice::build_triangular_patch;
use simplexnet_core::{LatticeGraph, LatticeKind, Region};

use super::{number, numbers, tokenized, FormatError};

#[derive(Debug, Clone, PartialEq)]
pub struct LatticeFile {
    pub lattice: LatticeGraph,
    pub regions: Vec<Region>,
}

impl LatticeFile {
    pub fn new(lattice: LatticeGraph) -> Self {
        LatticeFile {
            lattice,
            regions: Vec::new(),
        }
    }
}

pub fn parse_lattice(text: &str) -> Result<LatticeFile, FormatError> {
    let mut n = None;
    let mut triangles = Vec::new();
    let mut coord_lines = Vec::new();
    let mut region_lines = Vec::new();
    let mut patch_side = None;
    for (line, tokens) in tokenized(text) {
        match tokens.as_slice() {
            ["n", v] if n.is_none() => n = Some((line, number::<usize>(line, v)?)),
            ["t", rest @ ..] => {
                let v: Vec<usize> = numbers(line, rest)?;
                let t: [usize; 3] = v
                    .try_into()
                    .map_err(|_| FormatError::at(line, "a triangle has three sites"))?;
                triangles.push(t);
            }
            ["c", s, r, c] => coord_lines.push((
                line,
                number::<usize>(line, s)?,
                (number(line, r)?, number(line, c)?),
            )),
            ["r", rest @ ..] => region_lines.push((line, numbers::<usize>(line, rest)?)),
            ["k", "patch", side] => patch_side = Some((line, number::<usize>(line, side)?)),
            _ => {
                return Err(FormatError::at(
                    line,
                    format!("unknown line `{}`", tokens.join(" ")),
                ))
            }
        }
    }
    let lattice = if let Some((line, side)) = patch_side {
        // a bare `k patch` line generates the patch; anything listed must agree
        let patch = build_triangular_patch(side)?;
        let n_ok = n.is_none_or(|(_, n)| n == patch.n_sites());
        let t_ok = triangles.is_empty() || patch.up_triangles() == triangles.as_slice();
        if !n_ok || !t_ok {
            return Err(FormatError::at(
                line,
                format!("triangles do not form a side-{side} patch"),
            ));
        }
        patch
    } else {
        let (_, n) = n.ok_or_else(|| FormatError::at(1, "expected `n <n_sites>`"))?;
        let mut coords: Vec<Option<(usize, usize)>> = vec![None; n];
        for &(line, s, rc) in &coord_lines {
            let slot = coords
                .get_mut(s)
                .ok_or_else(|| FormatError::at(line, format!("site {s} out of range")))?;
            *slot = Some(rc);
        }
        if coord_lines.is_empty() {
            LatticeGraph::from_triangles(n, triangles)?
        } else if coords.iter().all(Option::is_some) {
            LatticeGraph::from_triangles_with_coords(
                n,
                triangles,
                coords.into_iter().flatten().collect(),
            )?
        } else {
            return Err(FormatError::at(
                coord_lines[0].0,
                "coordinates must be given for every site or none",
            ));
        }
    };
    let regions = region_lines
        .into_iter()
        .map(|(_, sites)| Region::new(lattice.n_sites(), sites))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LatticeFile { lattice, regions })
}

pub fn write_lattice(file: &LatticeFile) -> String {
    let l = &file.lattice;
    let mut out = format!("n {}\n", l.n_sites());
    if let LatticeKind::TriangularPatch { side } = l.kind() {
        writeln!(out, "k patch {side}").unwrap();
    }
    for t in l.up_triangles() {
        writeln!(out, "t {} {} {}", t[0], t[1], t[2]).unwrap();
    }
    if let (LatticeKind::Explicit, Some(coords)) = (l.kind(), l.coords()) {
        for (s, (r, c)) in coords.iter().enumerate() {
            writeln!(out, "c {s} {r} {c}").unwrap();
        }
    }
    for r in &file.regions {
        let sites: Vec<String> = r.sites().iter().map(usize::to_string).collect();
        writeln!(out, "r {}", sites.join(" ")).unwrap();
    }
    out
}

/// Comma-separated site list such as `0,1,2`.
pub fn parse_region(n_sites: usize, text: &str) -> Result<Region, FormatError> {
    let sites = text
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| number(1, t))
        .collect::<Result<Vec<usize>, _>>()?;
    Ok(Region::new(n_sites, sites)?)
}
