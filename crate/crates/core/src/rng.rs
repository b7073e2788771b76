//! Seeded draws shared by the random fixture generators.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

pub(crate) fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform integer in `0..k` (rejection sampling, unbiased).
pub(crate) fn below(rng: &mut ChaCha8Rng, k: usize) -> usize {
    let k = k as u64;
    let zone = u64::MAX - u64::MAX % k;
    loop {
        let r = rng.next_u64();
        if r < zone {
            return (r % k) as usize;
        }
    }
}

/// Uniform float in `[-1, 1)`.
pub(crate) fn symmetric_unit(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
}
