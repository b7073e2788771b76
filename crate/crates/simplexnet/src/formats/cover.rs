//! Exact Cover instance: `p ec <n_bits> <n_clauses>`, then one `c i j k`
//! line per clause.

use std::fmt::Write;

use simplexnet_core::exactcover::CoverInstance;

use super::{number, numbers, tokenized, FormatError};

pub fn write_cover(inst: &CoverInstance) -> String {
    let mut out = format!("p ec {} {}\n", inst.n_bits(), inst.clauses().len());
    for c in inst.clauses() {
        writeln!(out, "c {} {} {}", c[0], c[1], c[2]).unwrap();
    }
    out
}

pub fn parse_cover(text: &str) -> Result<CoverInstance, FormatError> {
    let mut lines = tokenized(text);
    let (first, head) = lines
        .next()
        .ok_or_else(|| FormatError::at(1, "empty instance file"))?;
    let (n_bits, n_clauses): (usize, usize) = match head.as_slice() {
        ["p", "ec", n, m] => (number(first, n)?, number(first, m)?),
        _ => {
            return Err(FormatError::at(
                first,
                "expected `p ec <n_bits> <n_clauses>`",
            ))
        }
    };
    let mut clauses = Vec::new();
    for (line, tokens) in lines {
        match tokens.as_slice() {
            ["c", rest @ ..] => {
                let v: Vec<usize> = numbers(line, rest)?;
                clauses.push(
                    v.try_into()
                        .map_err(|_| FormatError::at(line, "a clause has three bits"))?,
                );
            }
            _ => {
                return Err(FormatError::at(
                    line,
                    format!("unknown line `{}`", tokens.join(" ")),
                ))
            }
        }
    }
    if clauses.len() != n_clauses {
        return Err(FormatError::at(
            first,
            format!(
                "header announces {n_clauses} clauses, found {}",
                clauses.len()
            ),
        ));
    }
    Ok(CoverInstance::new(n_bits, clauses)?)
}
