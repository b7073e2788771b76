//! Provenance headers: `# key=value` lines naming the tool versions, the
//! command, its parameters and a SHA-256 of the canonical parameter list.
//! Identical configurations always produce identical headers.

use std::fmt::{Display, Write};

use sha2::{Digest, Sha256};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    command: String,
    params: Vec<(String, String)>,
}

impl Provenance {
    pub fn new(command: &str) -> Self {
        Provenance {
            command: command.to_string(),
            params: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Display) -> Self {
        self.params.push((key.to_string(), value.to_string()));
        self
    }

    /// `command=<name>` followed by the parameters, one `key=value` per line.
    pub fn canonical(&self) -> String {
        let mut out = format!("command={}\n", self.command);
        for (k, v) in &self.params {
            writeln!(out, "{k}={v}").unwrap();
        }
        out
    }

    pub fn config_hash(&self) -> String {
        Sha256::digest(self.canonical().as_bytes()).iter().fold(
            String::with_capacity(64),
            |mut s, b| {
                write!(s, "{b:02x}").unwrap();
                s
            },
        )
    }

    pub fn header(&self) -> String {
        let mut out = format!(
            "# tool=simplexnet\n# version={}\n# core_version={}\n",
            env!("CARGO_PKG_VERSION"),
            simplexnet_core::VERSION
        );
        for line in self.canonical().lines() {
            writeln!(out, "# {line}").unwrap();
        }
        writeln!(out, "# config_sha256={}", self.config_hash()).unwrap();
        out
    }
}

/// Parses `# key=value` header lines back into pairs.
pub fn parse_header(text: &str) -> Vec<(String, String)> {
    text.lines()
        .map_while(|l| l.strip_prefix("# "))
        .filter_map(|l| l.split_once('='))
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect()
}
