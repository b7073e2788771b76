//! Ground manifold file: header `M=<count> E0=<energy>`, then one bitstring
//! per line in increasing order.

use std::fmt::Write;

use simplexnet_core::bits::{from_bitstring, to_bitstring};
use simplexnet_core::frustration::GroundManifold;

use super::{number, tokenized, FormatError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifoldFile {
    pub n_sites: usize,
    pub energy: i64,
    pub configurations: Vec<u64>,
}

impl From<&GroundManifold> for ManifoldFile {
    fn from(m: &GroundManifold) -> Self {
        ManifoldFile {
            n_sites: m.lattice.n_sites(),
            energy: m.energy,
            configurations: m.configurations.clone(),
        }
    }
}

pub fn write_manifold(m: &ManifoldFile) -> String {
    let mut out = format!("M={} E0={}\n", m.configurations.len(), m.energy);
    for &x in &m.configurations {
        writeln!(out, "{}", to_bitstring(x, m.n_sites)).unwrap();
    }
    out
}

pub fn parse_manifold(text: &str) -> Result<ManifoldFile, FormatError> {
    let mut lines = tokenized(text);
    let (first, head) = lines
        .next()
        .ok_or_else(|| FormatError::at(1, "empty manifold file"))?;
    let field = |tok: Option<&&str>, key: &str| -> Result<String, FormatError> {
        tok.and_then(|t| t.strip_prefix(key))
            .map(str::to_string)
            .ok_or_else(|| FormatError::at(first, "expected `M=<count> E0=<energy>`"))
    };
    let count: usize = number(first, &field(head.first(), "M=")?)?;
    let energy: i64 = number(first, &field(head.get(1), "E0=")?)?;
    let mut n_sites = None;
    let mut configurations = Vec::new();
    for (line, tokens) in lines {
        let bits = tokens[0];
        let x = from_bitstring(bits)
            .ok_or_else(|| FormatError::at(line, format!("bad bitstring `{bits}`")))?;
        if *n_sites.get_or_insert(bits.len()) != bits.len() {
            return Err(FormatError::at(line, "bitstrings of different lengths"));
        }
        configurations.push(x);
    }
    if configurations.len() != count {
        return Err(FormatError::at(
            first,
            format!(
                "header announces {count} configurations, found {}",
                configurations.len()
            ),
        ));
    }
    Ok(ManifoldFile {
        n_sites: n_sites.unwrap_or(0),
        energy,
        configurations,
    })
}
