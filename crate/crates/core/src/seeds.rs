//! Deterministic seed derivation.
//!
//! All randomness in this crate flows through ChaCha12, a fixed, portable
//! generator, so identical seeds give identical results across platforms and
//! releases. Substreams (ensemble layers, Monte Carlo trials, sweep points)
//! are derived from the run seed by counter hashing: substream `i` is seeded
//! with `splitmix64(seed + (i + 1) * GOLDEN)`.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

/// splitmix64 finalizer.
#[inline]
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(GOLDEN);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of substream `index` under the given run seed.
#[inline]
pub fn substream(seed: u64, index: u64) -> u64 {
    splitmix64(seed ^ index.wrapping_add(1).wrapping_mul(GOLDEN))
}

/// Generator for a run seed.
pub fn rng_from(seed: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed)
}

/// Generator for substream `index` of a run seed.
pub fn substream_rng(seed: u64, index: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(substream(seed, index))
}

/// Uniform index in `[0, bound)` by rejection sampling, bias-free.
///
/// Hand-rolled so the byte stream consumed per call is pinned by this crate,
/// not by the rand version in the lockfile.
#[inline]
pub fn gen_index(rng: &mut ChaCha12Rng, bound: usize) -> usize {
    use rand_chacha::rand_core::RngCore;
    debug_assert!(bound > 0);
    let bound = bound as u64;
    let threshold = bound.wrapping_neg() % bound; // 2^64 mod bound
    loop {
        let x = rng.next_u64();
        if x >= threshold {
            return (x % bound) as usize;
        }
    }
}

/// Fisher-Yates shuffle driven by `gen_index`.
pub fn shuffle<T>(rng: &mut ChaCha12Rng, items: &mut [T]) {
    for i in (1..items.len()).rev() {
        let j = gen_index(rng, i + 1);
        items.swap(i, j);
    }
}

/// Bernoulli(p) draw from one 64-bit word.
#[inline]
pub fn gen_bool(rng: &mut ChaCha12Rng, p: f64) -> bool {
    use rand_chacha::rand_core::RngCore;
    let threshold = (p * 18_446_744_073_709_551_616.0) as u128; // p * 2^64
    (rng.next_u64() as u128) < threshold
}
