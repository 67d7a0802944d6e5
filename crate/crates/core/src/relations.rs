//! The defining relations of the three cobordism categories, written in the
//! term syntax.

use crate::classify::CategoryFlavor;
use crate::term::{parse, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Relation {
    pub name: &'static str,
    pub lhs: &'static str,
    pub rhs: &'static str,
    /// Smallest category whose generators both sides use.
    pub flavor: CategoryFlavor,
}

impl Relation {
    pub fn lhs(&self) -> Term {
        parse(self.lhs).expect("relation sides parse")
    }

    pub fn rhs(&self) -> Term {
        parse(self.rhs).expect("relation sides parse")
    }
}

const fn rel(
    name: &'static str,
    lhs: &'static str,
    rhs: &'static str,
    flavor: CategoryFlavor,
) -> Relation {
    Relation {
        name,
        lhs,
        rhs,
        flavor,
    }
}

use CategoryFlavor::{Orientable, Oriented, Unoriented};

/// Commutative Frobenius algebra, involution, and Möbius relations.
pub const RELATIONS: [Relation; 20] = [
    rel("left unit", "mul . (unit * id)", "id", Oriented),
    rel("right unit", "mul . (id * unit)", "id", Oriented),
    rel(
        "associativity",
        "mul . (mul * id)",
        "mul . (id * mul)",
        Oriented,
    ),
    rel("commutativity", "mul . swap", "mul", Oriented),
    rel("left counit", "(counit * id) . comul", "id", Oriented),
    rel("right counit", "(id * counit) . comul", "id", Oriented),
    rel(
        "coassociativity",
        "(comul * id) . comul",
        "(id * comul) . comul",
        Oriented,
    ),
    rel("cocommutativity", "swap . comul", "comul", Oriented),
    rel(
        "frobenius left",
        "(id * mul) . (comul * id)",
        "comul . mul",
        Oriented,
    ),
    rel(
        "frobenius right",
        "comul . mul",
        "(mul * id) . (id * comul)",
        Oriented,
    ),
    rel("swap involutive", "swap . swap", "id * id", Oriented),
    rel("involution squares to id", "phi . phi", "id", Orientable),
    rel(
        "involution multiplicative",
        "mul . (phi * phi)",
        "phi . mul",
        Orientable,
    ),
    rel("involution fixes unit", "phi . unit", "unit", Orientable),
    rel(
        "involution comultiplicative",
        "comul . phi",
        "(phi * phi) . comul",
        Orientable,
    ),
    rel(
        "involution preserves counit",
        "counit . phi",
        "counit",
        Orientable,
    ),
    rel(
        "crosscap absorbs twist",
        "mul . (theta * id)",
        "phi . mul . (theta * id)",
        Unoriented,
    ),
    rel(
        "two crosscaps make a Klein bottle",
        "mul . (theta * theta)",
        "mul . (phi * id) . comul . unit",
        Unoriented,
    ),
    rel(
        "Klein bottle absorbs twist",
        "mul . ((mul . (phi * id) . comul . unit) * id)",
        "phi . mul . ((mul . (phi * id) . comul . unit) * id)",
        Orientable,
    ),
    rel(
        "naturality of swap",
        "swap . (phi * id)",
        "(id * phi) . swap",
        Orientable,
    ),
];

/// Rewriting `mul . (K * id)` for the punctured Klein bottle `K`.
pub const KLEIN_ABSORPTION: [&str; 6] = [
    "mul . ((mul . (phi * id) . comul . unit) * id)",
    "mul . (mul * id) . (phi * id * id) . (comul * id) . (unit * id)",
    "mul . (id * mul) . (phi * id * id) . (comul * id) . (unit * id)",
    "mul . (phi * id) . (id * mul) . (comul * id) . (unit * id)",
    "mul . (phi * id) . comul . mul . (unit * id)",
    "mul . (phi * id) . comul",
];

/// Post-composing the end of [`KLEIN_ABSORPTION`] with `phi`.
pub const KLEIN_TWIST: [&str; 5] = [
    "phi . mul . (phi * id) . comul",
    "mul . ((phi . phi) * phi) . comul",
    "mul . (id * phi) . comul",
    "mul . swap . (phi * id) . swap . comul",
    "mul . (phi * id) . comul",
];
