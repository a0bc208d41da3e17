//! Seed derivation helpers.
//!
//! All randomized operations take a single `u64` seed and derive independent
//! streams from it, so that results are reproducible and sub-streams (per
//! weight class, per replicate, per edge) do not depend on execution order.

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// SplitMix64 finalizer. Bijective on u64.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derive a child seed from a parent seed and a tag. For a fixed parent,
/// distinct tags give distinct children.
pub fn derive(seed: u64, tag: u64) -> u64 {
    mix(seed.wrapping_add(mix(tag)))
}

/// One uniform in [0, 1) keyed by (seed, tag); order-independent.
pub fn unit_uniform(seed: u64, tag: u64) -> f64 {
    (derive(seed, tag) >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// A seeded generator on its own stream. Streams with different ids never
/// overlap for the same seed.
pub fn stream(seed: u64, stream_id: u64) -> ChaCha12Rng {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    rng.set_stream(stream_id);
    rng
}
