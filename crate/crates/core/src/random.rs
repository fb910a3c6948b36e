//! Seeded random functions. All randomized sweeps draw from [`seeded`] so runs are replayable.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::function::{BooleanFunction, OctalFunction};

pub type SweepRng = ChaCha8Rng;

/// ChaCha8 stream seeded from a 64-bit value.
pub fn seeded(seed: u64) -> SweepRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_boolean<R: Rng + ?Sized>(n: u32, rng: &mut R) -> Result<BooleanFunction> {
    BooleanFunction::from_fn(n, |_| rng.gen())
}

pub fn random_octal<R: Rng + ?Sized>(n: u32, rng: &mut R) -> Result<OctalFunction> {
    OctalFunction::from_fn_mod8(n, |_| rng.gen_range(0..8))
}

/// Uniform permutation of `0..len`.
pub fn random_permutation<R: Rng + ?Sized>(len: usize, rng: &mut R) -> Vec<usize> {
    let mut p: Vec<usize> = (0..len).collect();
    p.shuffle(rng);
    p
}
