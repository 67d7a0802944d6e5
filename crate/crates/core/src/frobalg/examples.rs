//! Small algebras used in tests, documentation and the self-test.

use super::algebra::{FrobeniusAlgebra, Involution};
use super::matrix::{rational, Rational};

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| rational(x)).collect()
}

/// ℚ with `ε = id`.
pub fn rationals() -> FrobeniusAlgebra {
    FrobeniusAlgebra::new(
        vec!["1".into()],
        vec![vec![ints(&[1])]],
        ints(&[1]),
        ints(&[1]),
    )
    .expect("well formed")
}

/// `ℚ[x]/(x²)` with `ε(1) = 0`, `ε(x) = 1`: the cohomology of ℂP¹.
pub fn cp1() -> FrobeniusAlgebra {
    FrobeniusAlgebra::new(
        vec!["1".into(), "x".into()],
        vec![
            vec![ints(&[1, 0]), ints(&[0, 1])],
            vec![ints(&[0, 1]), ints(&[0, 0])],
        ],
        ints(&[1, 0]),
        ints(&[0, 1]),
    )
    .expect("well formed")
}

/// `ℚ × ℚ` with `ε(a, b) = a + b`.
pub fn qq() -> FrobeniusAlgebra {
    FrobeniusAlgebra::new(
        vec!["e1".into(), "e2".into()],
        vec![
            vec![ints(&[1, 0]), ints(&[0, 0])],
            vec![ints(&[0, 0]), ints(&[0, 1])],
        ],
        ints(&[1, 1]),
        ints(&[1, 1]),
    )
    .expect("well formed")
}

/// `ℚ × ℚ` with the coordinate swap.
pub fn qq_swap() -> (FrobeniusAlgebra, Involution) {
    (qq(), Involution::permutation(&[1, 0]))
}
