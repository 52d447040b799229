//! Seeded randomness. Every sampler draws from `ChaCha8Rng` seeded with
//! `seed_from_u64(seed + replica)`, and categorical draws scan cumulative
//! weights with one uniform `f64`, so streams are fixed across platforms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type SimRng = ChaCha8Rng;

pub fn replica_rng(seed: u64, replica: u64) -> SimRng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_add(replica))
}

/// Index drawn with probability proportional to `weights`. The last index
/// absorbs rounding.
pub fn pick_weighted(rng: &mut SimRng, weights: &[f64]) -> usize {
    let total: f64 = weights.iter().sum();
    let u = rng.random::<f64>() * total;
    let mut acc = 0.0;
    for (i, &w) in weights.iter().enumerate() {
        acc += w;
        if u < acc {
            return i;
        }
    }
    weights.len() - 1
}
