//! Basis-index conventions.
//!
//! A configuration of `n` qubits is a `u64` whose most significant of the `n`
//! used bits is qubit 0, so the bitstring reads left to right in qubit order
//! (`|q0 q1 ... q(n-1)>`). The same convention applies to simplex legs.

use alloc::string::String;
use alloc::vec::Vec;

/// Value of qubit `i` in configuration `x` of an `n`-qubit register.
#[inline]
pub fn bit(x: u64, i: usize, n: usize) -> u8 {
    ((x >> (n - 1 - i)) & 1) as u8
}

/// Mask selecting qubit `i` of an `n`-qubit register.
#[inline]
pub fn mask(i: usize, n: usize) -> u64 {
    1u64 << (n - 1 - i)
}

/// Restriction of `x` to `sites`, packed with `sites[0]` as the leading bit.
#[inline]
pub fn restrict(x: u64, sites: &[usize], n: usize) -> usize {
    sites
        .iter()
        .fold(0usize, |acc, &s| (acc << 1) | bit(x, s, n) as usize)
}

pub fn to_bitstring(x: u64, n: usize) -> String {
    (0..n)
        .map(|i| if bit(x, i, n) == 1 { '1' } else { '0' })
        .collect()
}

/// Parses a `0`/`1` string; qubit 0 is the first character.
pub fn from_bitstring(s: &str) -> Option<u64> {
    if s.is_empty() || s.len() > 63 {
        return None;
    }
    s.bytes().try_fold(0u64, |acc, b| match b {
        b'0' => Some(acc << 1),
        b'1' => Some((acc << 1) | 1),
        _ => None,
    })
}

/// Indices of the set qubits of `x`.
pub fn ones(x: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| bit(x, i, n) == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qubit_zero_is_leftmost() {
        let x = from_bitstring("100").unwrap();
        assert_eq!(x, 4);
        assert_eq!(bit(x, 0, 3), 1);
        assert_eq!(to_bitstring(x, 3), "100");
        assert_eq!(restrict(0b011010, &[1, 2, 4], 6), 0b111);
        assert_eq!(from_bitstring("01a"), None);
    }
}
