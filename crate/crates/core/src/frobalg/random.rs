use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::algebra::{FrobeniusAlgebra, Involution};
use super::matrix::{ratio, rational, Rational};

/// Deterministic family of involutive Frobenius algebras `ℚ^dim`.
///
/// The first `2·s` factors come in pairs with equal counit weights that the
/// involution swaps, where `s = seed mod (⌊dim/2⌋ + 1)`. The remaining
/// factors are fixed by the involution and get pairwise distinct weights
/// that are squares of rationals, so every member also admits a Möbius
/// element. Panics unless `1 ≤ dim ≤ 4`.
pub fn random_involutive_algebra(seed: u64, dim: usize) -> (FrobeniusAlgebra, Involution) {
    assert!((1..=4).contains(&dim), "dimension must be between 1 and 4");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs = (seed % (dim as u64 / 2 + 1)) as usize;

    let mut weights: Vec<Rational> = Vec::with_capacity(dim);
    let mut perm: Vec<usize> = (0..dim).collect();
    for p in 0..pairs {
        let mut w = ratio(rng.gen_range(1..=5), rng.gen_range(1..=3));
        if rng.gen_bool(0.5) {
            w = -w;
        }
        weights.push(w.clone());
        weights.push(w);
        perm.swap(2 * p, 2 * p + 1);
    }
    while weights.len() < dim {
        let root = ratio(rng.gen_range(1..=4), rng.gen_range(1..=3));
        let w = &root * &root;
        if !weights[2 * pairs..].contains(&w) {
            weights.push(w);
        }
    }

    let basis = (1..=dim).map(|i| format!("e{i}")).collect();
    let mul = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| {
                    (0..dim)
                        .map(|k| rational(i64::from(i == j && j == k)))
                        .collect()
                })
                .collect()
        })
        .collect();
    let unit = vec![rational(1); dim];
    let algebra = FrobeniusAlgebra::new(basis, mul, unit, weights).expect("well formed");
    (algebra, Involution::permutation(&perm))
}

/// The algebra used for seed `seed` in the seeded oracle suites:
/// dimension `1 + seed mod 4`.
pub fn seeded_algebra(seed: u64) -> (FrobeniusAlgebra, Involution) {
    random_involutive_algebra(seed, 1 + (seed % 4) as usize)
}
