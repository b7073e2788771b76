//! Network file: lattice lines plus simplex definitions and one assignment
//! per plaquette.
//!
//! ```text
//! n 6
//! t 0 1 2
//! t 1 3 4
//! q 0 1 2 3               # optional 4-site plaquette
//! s 3 W 0 1 1 0 1 0 0 0   # arity, label, 2^arity amplitudes (re or re:im)
//! sym4 S 1 -1 1 1 1       # symmetric 4-qubit simplex, label optional
//! a * W                   # every plaquette
//! a 1 Wbar                # plaquette 1 (triangles first, then squares)
//! ```
//!
//! Amplitudes are stored as written; normalization happens when the network
//! is built.

use std::fmt::Write;

use simplexnet_core::simplex::symmetric_four;
use simplexnet_core::{Complex64, LatticeGraph, NetworkSpec, SimplexState};

use super::{number, numbers, tokenized, FormatError};

#[derive(Debug, Clone, PartialEq)]
pub enum SimplexDef {
    Table {
        label: String,
        arity: usize,
        amplitudes: Vec<Complex64>,
    },
    Symmetric {
        label: String,
        coeffs: [f64; 5],
    },
}

impl SimplexDef {
    pub fn label(&self) -> &str {
        match self {
            SimplexDef::Table { label, .. } | SimplexDef::Symmetric { label, .. } => label,
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            SimplexDef::Table { arity, .. } => *arity,
            SimplexDef::Symmetric { .. } => 4,
        }
    }

    pub fn build(&self) -> simplexnet_core::Result<SimplexState> {
        match self {
            SimplexDef::Table {
                label,
                arity,
                amplitudes,
            } => SimplexState::new(*arity, amplitudes.clone(), label.as_str()),
            SimplexDef::Symmetric { label, coeffs } => {
                Ok(symmetric_four(*coeffs)?.with_label(label.as_str()))
            }
        }
    }

    /// Exact table of an existing simplex.
    pub fn from_simplex(s: &SimplexState) -> Self {
        SimplexDef::Table {
            label: s.label().to_string(),
            arity: s.arity(),
            amplitudes: s.amplitudes().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NetworkFile {
    pub n_sites: usize,
    pub triangles: Vec<[usize; 3]>,
    pub squares: Vec<[usize; 4]>,
    pub simplices: Vec<SimplexDef>,
    /// Simplex label per plaquette, triangles first.
    pub assignment: Vec<String>,
}

impl NetworkFile {
    /// The same simplex on every up-triangle of `lattice`.
    pub fn uniform(lattice: &LatticeGraph, simplex: &SimplexState) -> Self {
        NetworkFile {
            n_sites: lattice.n_sites(),
            triangles: lattice.up_triangles().to_vec(),
            squares: Vec::new(),
            simplices: vec![SimplexDef::from_simplex(simplex)],
            assignment: vec![simplex.label().to_string(); lattice.up_triangles().len()],
        }
    }

    pub fn plaquettes(&self) -> Vec<Vec<usize>> {
        self.triangles
            .iter()
            .map(|t| t.to_vec())
            .chain(self.squares.iter().map(|s| s.to_vec()))
            .collect()
    }

    pub fn to_spec(&self) -> simplexnet_core::Result<NetworkSpec> {
        let built = self
            .simplices
            .iter()
            .map(SimplexDef::build)
            .collect::<simplexnet_core::Result<Vec<_>>>()?;
        let per_plaquette = self
            .assignment
            .iter()
            .map(|label| {
                let k = self
                    .simplices
                    .iter()
                    .position(|d| d.label() == label)
                    .expect("assignments are validated on parse");
                built[k].clone()
            })
            .collect();
        NetworkSpec::from_simplices(self.n_sites, self.plaquettes(), per_plaquette)
    }
}

fn amplitude(line: usize, token: &str) -> Result<Complex64, FormatError> {
    match token.split_once(':') {
        Some((re, im)) => Ok(Complex64::new(number(line, re)?, number(line, im)?)),
        None => Ok(Complex64::new(number(line, token)?, 0.0)),
    }
}

pub fn parse_network(text: &str) -> Result<NetworkFile, FormatError> {
    let mut lines = tokenized(text);
    let (first, head) = lines
        .next()
        .ok_or_else(|| FormatError::at(1, "empty network file"))?;
    let n_sites: usize = match head.as_slice() {
        ["n", v] => number(first, v)?,
        _ => return Err(FormatError::at(first, "expected `n <n_sites>`")),
    };
    let mut file = NetworkFile {
        n_sites,
        triangles: Vec::new(),
        squares: Vec::new(),
        simplices: Vec::new(),
        assignment: Vec::new(),
    };
    let mut assignments: Vec<(usize, Option<usize>, String)> = Vec::new();
    for (line, tokens) in lines {
        match tokens.as_slice() {
            ["t", rest @ ..] => {
                let v: Vec<usize> = numbers(line, rest)?;
                file.triangles.push(
                    v.try_into()
                        .map_err(|_| FormatError::at(line, "a triangle has three sites"))?,
                );
            }
            ["q", rest @ ..] => {
                let v: Vec<usize> = numbers(line, rest)?;
                file.squares.push(
                    v.try_into()
                        .map_err(|_| FormatError::at(line, "a square has four sites"))?,
                );
            }
            ["s", arity, label, amps @ ..] => {
                let arity: usize = number(line, arity)?;
                let amplitudes = amps
                    .iter()
                    .map(|t| amplitude(line, t))
                    .collect::<Result<Vec<_>, _>>()?;
                if arity >= 16 || amplitudes.len() != 1 << arity {
                    return Err(FormatError::at(
                        line,
                        format!(
                            "arity {arity} needs 2^{arity} amplitudes, got {}",
                            amplitudes.len()
                        ),
                    ));
                }
                file.simplices.push(SimplexDef::Table {
                    label: label.to_string(),
                    arity,
                    amplitudes,
                });
            }
            ["sym4", rest @ ..] => {
                let (label, values) = match rest.len() {
                    5 => ("sym4", rest),
                    6 => (rest[0], &rest[1..]),
                    _ => {
                        return Err(FormatError::at(
                            line,
                            "sym4 takes an optional label and 5 coefficients",
                        ))
                    }
                };
                let v: Vec<f64> = numbers(line, values)?;
                file.simplices.push(SimplexDef::Symmetric {
                    label: label.to_string(),
                    coeffs: v.try_into().expect("five coefficients"),
                });
            }
            ["a", target, label] => {
                let index = if *target == "*" {
                    None
                } else {
                    Some(number(line, target)?)
                };
                assignments.push((line, index, label.to_string()));
            }
            ["k", "patch", _] | ["c", ..] | ["r", ..] => {}
            _ => {
                return Err(FormatError::at(
                    line,
                    format!("unknown line `{}`", tokens.join(" ")),
                ))
            }
        }
    }
    for (k, d) in file.simplices.iter().enumerate() {
        if file.simplices[..k].iter().any(|e| e.label() == d.label()) {
            return Err(FormatError::at(
                first,
                format!("simplex `{}` defined twice", d.label()),
            ));
        }
    }
    let count = file.triangles.len() + file.squares.len();
    let mut slots: Vec<Option<String>> = vec![None; count];
    for (line, index, label) in assignments {
        if !file.simplices.iter().any(|d| d.label() == label) {
            return Err(FormatError::at(line, format!("unknown simplex `{label}`")));
        }
        match index {
            None => slots.iter_mut().for_each(|s| *s = Some(label.clone())),
            Some(p) if p < count => slots[p] = Some(label),
            Some(p) => return Err(FormatError::at(line, format!("no plaquette {p}"))),
        }
    }
    file.assignment = slots
        .into_iter()
        .enumerate()
        .map(|(p, s)| {
            s.ok_or_else(|| FormatError::at(first, format!("plaquette {p} has no simplex")))
        })
        .collect::<Result<_, _>>()?;
    // fail early on structural errors
    file.to_spec()?;
    Ok(file)
}

pub fn write_network(file: &NetworkFile) -> String {
    let mut out = format!("n {}\n", file.n_sites);
    for t in &file.triangles {
        writeln!(out, "t {} {} {}", t[0], t[1], t[2]).unwrap();
    }
    for q in &file.squares {
        writeln!(out, "q {} {} {} {}", q[0], q[1], q[2], q[3]).unwrap();
    }
    for d in &file.simplices {
        match d {
            SimplexDef::Table {
                label,
                arity,
                amplitudes,
            } => {
                let amps: Vec<String> = amplitudes
                    .iter()
                    .map(|a| {
                        if a.im == 0.0 {
                            format!("{}", a.re)
                        } else {
                            format!("{}:{}", a.re, a.im)
                        }
                    })
                    .collect();
                writeln!(out, "s {arity} {label} {}", amps.join(" ")).unwrap();
            }
            SimplexDef::Symmetric { label, coeffs } => {
                let c: Vec<String> = coeffs.iter().map(f64::to_string).collect();
                writeln!(out, "sym4 {label} {}", c.join(" ")).unwrap();
            }
        }
    }
    let uniform = file.assignment.windows(2).all(|w| w[0] == w[1]);
    if uniform && !file.assignment.is_empty() {
        writeln!(out, "a * {}", file.assignment[0]).unwrap();
    } else {
        for (p, label) in file.assignment.iter().enumerate() {
            writeln!(out, "a {p} {label}").unwrap();
        }
    }
    out
}
