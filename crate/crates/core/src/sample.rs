//! Seeded random rational points for sampling-based checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{SimplexPoint, Vector};
use crate::rational::{ratio, Rational};

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Interior point of the simplex with small denominators.
    pub fn simplex_point(&mut self, n: usize) -> SimplexPoint {
        let weights: Vec<i64> = (0..n).map(|_| self.rng.gen_range(1..=12)).collect();
        normalize(&weights)
    }

    /// Simplex point with roughly a third of its coordinates zero.
    pub fn boundary_point(&mut self, n: usize) -> SimplexPoint {
        let mut weights: Vec<i64> = (0..n)
            .map(|_| {
                if self.rng.gen_range(0..3) == 0 {
                    0
                } else {
                    self.rng.gen_range(1..=12)
                }
            })
            .collect();
        if weights.iter().all(|&w| w == 0) {
            let i = self.rng.gen_range(0..n);
            weights[i] = 1;
        }
        normalize(&weights)
    }

    /// Arbitrary rational vector with numerators in [-9, 9] and denominators in [1, 9].
    pub fn vector(&mut self, n: usize) -> Vector {
        Vector::new(
            (0..n)
                .map(|_| ratio(self.rng.gen_range(-9..=9), self.rng.gen_range(1..=9)))
                .collect(),
        )
    }

    pub fn index(&mut self, bound: usize) -> usize {
        self.rng.gen_range(0..bound)
    }
}

fn normalize(weights: &[i64]) -> SimplexPoint {
    let total: i64 = weights.iter().sum();
    let coords: Vec<Rational> = weights.iter().map(|&w| ratio(w, total)).collect();
    SimplexPoint::new(Vector::new(coords)).expect("normalized weights lie on the simplex")
}
