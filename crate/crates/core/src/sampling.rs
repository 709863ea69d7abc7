//! Seeded sampling of rational test points.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::scalar::Scalar;
use crate::verma::Weight;

/// Denominators used when probing claims that hold for a free weight component.
pub const GENERIC_DENOMINATORS: [i64; 5] = [1, 2, 3, 4, 8];
/// Denominators used when probing classification; quarter-integers hit every
/// reducibility lattice.
pub const LATTICE_DENOMINATORS: [i64; 3] = [1, 2, 4];

const NUMERATOR_BOUND: i64 = 24;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rational<S: Scalar, R: Rng>(rng: &mut R, denominators: &[i64]) -> S {
    let d = denominators[rng.gen_range(0..denominators.len())];
    let n = rng.gen_range(-NUMERATOR_BOUND..=NUMERATOR_BOUND);
    S::from_ratio(n, d)
}

pub fn random_weight<S: Scalar, R: Rng>(rng: &mut R, denominators: &[i64]) -> Weight<S> {
    let l1 = random_rational(rng, denominators);
    let l2 = random_rational(rng, denominators);
    Weight::new(l1, l2)
}

/// `count` values in a reproducible sequence.
pub fn rationals<S: Scalar>(seed: u64, count: usize, denominators: &[i64]) -> Vec<S> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| random_rational(&mut r, denominators))
        .collect()
}

pub fn weights<S: Scalar>(seed: u64, count: usize, denominators: &[i64]) -> Vec<Weight<S>> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| random_weight(&mut r, denominators))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn reproducible() {
        let a: Vec<Weight<Rational>> = weights(7, 5, &LATTICE_DENOMINATORS);
        let b: Vec<Weight<Rational>> = weights(7, 5, &LATTICE_DENOMINATORS);
        assert_eq!(a, b);
        let c: Vec<Weight<Rational>> = weights(8, 5, &LATTICE_DENOMINATORS);
        assert_ne!(a, c);
    }
}
