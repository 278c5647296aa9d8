//! Seeded random instances for the randomized checks.
//!
//! A weight is drawn uniformly from `0..=max_weight`, then an object of that
//! weight is drawn uniformly from the full enumeration, so every weight is
//! exercised regardless of how skewed the class sizes are.

use rand::Rng;

use crate::cores::PairScDd;
use crate::hooks::pairs_of_weight;
use crate::partition::{enumerate, Partition, PartitionClass};

pub use rand_chacha::ChaCha8Rng as SeededRng;

/// A deterministic generator for `seed`.
pub fn seeded(seed: u64) -> SeededRng {
    use rand::SeedableRng;
    SeededRng::seed_from_u64(seed)
}

pub fn random_partition<R: Rng + ?Sized>(max_weight: usize, rng: &mut R) -> Partition {
    let n = rng.gen_range(0..=max_weight);
    let all = enumerate(PartitionClass::All, n);
    all[rng.gen_range(0..all.len())].clone()
}

pub fn random_pair<R: Rng + ?Sized>(max_weight: usize, rng: &mut R) -> PairScDd {
    let n = rng.gen_range(0..=max_weight);
    let mut pairs = pairs_of_weight(n);
    let k = rng.gen_range(0..pairs.len());
    pairs.swap_remove(k)
}
