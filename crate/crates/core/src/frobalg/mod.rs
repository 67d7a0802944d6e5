//! Involutive and extended commutative Frobenius algebras over ℚ and the
//! evaluation of cobordism terms as exact-rational matrices.

mod algebra;
mod eval;
pub mod examples;
mod matrix;
mod random;
mod spec;
mod theta;

pub use algebra::{
    check_extended, derive_comultiplication, klein_element, validate_algebra, validate_involution,
    Check, DerivedCoalgebra, FrobeniusAlgebra, Involution, ThetaElement, ValidationReport,
};
pub use eval::{evaluate, Tqft};
pub use matrix::{
    format_rational, nullspace, parse_rational, ratio, rational, rational_sqrt, LinearMap, Rational,
};
pub use random::{random_involutive_algebra, seeded_algebra};
pub use spec::{AlgebraData, AlgebraSpec};
pub use theta::{find_theta, ThetaSearch, PRIMES};
