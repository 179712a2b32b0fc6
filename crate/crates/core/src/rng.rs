//! Seeded randomness.
//!
//! Every random choice in the crate goes through [`Xoshiro256PlusPlus`],
//! seeded from a `u64` by SplitMix64 expansion (`seed_from_u64`). Streams for
//! independent tasks are keyed by [`derive_seed`], so results do not depend on
//! the order in which parallel workers run.

use rand::SeedableRng;
pub use rand_xoshiro::Xoshiro256PlusPlus;

/// Generator for a seed.
pub fn rng_from_seed(seed: u64) -> Xoshiro256PlusPlus {
    Xoshiro256PlusPlus::seed_from_u64(seed)
}

/// SplitMix64 output function.
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for the substream named by `keys`, e.g. `(seed, [cell, run])`.
pub fn derive_seed(seed: u64, keys: &[u64]) -> u64 {
    keys.iter()
        .fold(splitmix64(seed), |acc, &k| splitmix64(acc ^ splitmix64(k)))
}
