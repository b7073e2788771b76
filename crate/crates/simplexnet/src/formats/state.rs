//! State CSV: `bitstring,re,im` with one row per nonzero amplitude, site 0
//! first in the bitstring.

use std::fmt::Write;

use simplexnet_core::bits::{from_bitstring, to_bitstring};
use simplexnet_core::{Complex64, PureState};

use super::{number, FormatError};

pub const STATE_CSV_HEADER: &str = "bitstring,re,im";

/// Values use the shortest representation that parses back exactly.
pub fn write_state_csv(state: &PureState) -> String {
    let mut out = format!("{STATE_CSV_HEADER}\n");
    for (x, a) in state.amplitudes().iter().enumerate() {
        if a.re != 0.0 || a.im != 0.0 {
            let bits = to_bitstring(x as u64, state.n_qubits());
            writeln!(out, "{bits},{},{}", a.re, a.im).unwrap();
        }
    }
    out
}

/// Reads a state CSV; `#` lines are skipped and the state is renormalized.
pub fn parse_state_csv(text: &str) -> Result<PureState, FormatError> {
    let mut n_qubits = None;
    let mut entries = Vec::new();
    let mut header_seen = false;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let row = raw.trim();
        if row.is_empty() || row.starts_with('#') {
            continue;
        }
        if !header_seen {
            if row != STATE_CSV_HEADER {
                return Err(FormatError::at(
                    line,
                    format!("expected header `{STATE_CSV_HEADER}`"),
                ));
            }
            header_seen = true;
            continue;
        }
        let fields: Vec<&str> = row.split(',').map(str::trim).collect();
        let [bits, re, im] = fields.as_slice() else {
            return Err(FormatError::at(line, "expected three fields"));
        };
        let x = from_bitstring(bits)
            .ok_or_else(|| FormatError::at(line, format!("bad bitstring `{bits}`")))?;
        match n_qubits {
            None => n_qubits = Some(bits.len()),
            Some(n) if n != bits.len() => {
                return Err(FormatError::at(line, "bitstrings of different lengths"))
            }
            Some(_) => {}
        }
        entries.push((x, Complex64::new(number(line, re)?, number(line, im)?)));
    }
    let n = n_qubits.ok_or_else(|| FormatError::at(1, "state has no rows"))?;
    Ok(PureState::from_sparse(n, &entries)?)
}
