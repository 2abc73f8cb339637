#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniformly random bijection on `n`-bit values.
pub fn random_perm(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut p: Vec<usize> = (0..1usize << n).collect();
    p.shuffle(rng);
    p
}

pub fn identity(n: usize) -> Vec<usize> {
    (0..1usize << n).collect()
}

pub fn parity(v: u64) -> u64 {
    (v.count_ones() & 1) as u64
}
