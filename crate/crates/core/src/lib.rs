//! Cobordisms between disjoint unions of circles, with and without
//! orientations.
//!
//! Terms over the generators `mul unit comul counit swap phi theta id
//! empty` are parsed by [`term`], reduced to a canonical surface by
//! [`surface`], sorted into the oriented, orientable and unoriented
//! categories by [`classify`], and evaluated in extended Frobenius algebras
//! over ℚ by [`frobalg`].

pub mod classify;
pub mod error;
pub mod frobalg;
pub mod relations;
pub mod sample;
pub mod selftest;
pub mod surface;
pub mod term;

pub use classify::{
    check_membership, decide_equal, in_ocob2, statistic_x, synthesize_term, CategoryFlavor,
    MembershipReport,
};
pub use error::{AlgebraError, Error, FlavorError, Result, TermError};
pub use frobalg::{
    evaluate, find_theta, AlgebraSpec, FrobeniusAlgebra, Involution, LinearMap, Rational,
    ThetaElement, ThetaSearch, Tqft,
};
pub use surface::{normalize, ClosedComponent, Component, Surface, Topology};
pub use term::{parse, Arity, Generator, Term};
