#![allow(dead_code)]

use gsinterp::{Field, FieldElement, InterpPoints};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn gf(m: u32) -> Field {
    Field::with_default_poly(m).unwrap()
}

/// Points (alpha^i, y_i) with uniformly random y_i.
pub fn random_points(f: &Field, n: usize, seed: u64) -> InterpPoints {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    InterpPoints::new(
        (0..n)
            .map(|i| (f.alpha_pow(i as i64), FieldElement(rng.random_range(0..f.size()) as u16)))
            .collect(),
    )
    .unwrap()
}
