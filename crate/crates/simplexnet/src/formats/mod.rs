//! Plain-text file formats. Blank lines and lines starting with `#` are
//! ignored everywhere.

mod cover;
mod lattice;
mod manifold;
mod network;
mod state;

pub use cover::{parse_cover, write_cover};
pub use lattice::{parse_lattice, parse_region, write_lattice, LatticeFile};
pub use manifold::{parse_manifold, write_manifold, ManifoldFile};
pub use network::{parse_network, write_network, NetworkFile, SimplexDef};
pub use state::{parse_state_csv, write_state_csv, STATE_CSV_HEADER};

use std::str::FromStr;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Model(#[from] simplexnet_core::Error),
}

impl FormatError {
    pub(crate) fn at(line: usize, message: impl Into<String>) -> Self {
        FormatError::Syntax {
            line,
            message: message.into(),
        }
    }
}

/// Non-comment lines as `(1-based line number, tokens)`.
pub(crate) fn tokenized(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(k, l)| {
        let l = l.trim();
        if l.is_empty() || l.starts_with('#') {
            None
        } else {
            Some((k + 1, l.split_whitespace().collect()))
        }
    })
}

pub(crate) fn number<T: FromStr>(line: usize, token: &str) -> Result<T, FormatError> {
    token
        .parse()
        .map_err(|_| FormatError::at(line, format!("cannot parse `{token}`")))
}

pub(crate) fn numbers<T: FromStr>(line: usize, tokens: &[&str]) -> Result<Vec<T>, FormatError> {
    tokens.iter().map(|t| number(line, t)).collect()
}
