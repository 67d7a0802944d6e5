//! Inputs shared by the benchmarks.

use cob2_core::{parse, Term};

/// Genus-`g` closed surface with `b` outgoing circles, built from
/// handles on a disk.
pub fn handlebody(g: usize, b: usize) -> Term {
    let mut t = parse("unit").expect("valid");
    for _ in 0..g {
        t = Term::compose(parse("mul . comul").expect("valid"), t);
    }
    for k in 1..b {
        let fan = Term::tensor(Term::ids(k - 1), parse("comul").expect("valid"));
        t = Term::compose(fan, t);
    }
    if b == 0 {
        t = Term::compose(parse("counit").expect("valid"), t);
    }
    t
}

/// `n` crosscaps absorbed into one circle, then capped.
pub fn crosscaps(n: usize) -> Term {
    let mut t = parse("unit").expect("valid");
    for _ in 0..n {
        t = Term::compose(parse("mul . (theta * id)").expect("valid"), t);
    }
    Term::compose(parse("counit").expect("valid"), t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use cob2_core::{normalize, Arity};

    #[test]
    fn inputs_have_expected_shapes() {
        assert_eq!(handlebody(3, 2).arity().unwrap(), Arity::new(0, 2));
        assert_eq!(
            normalize(&handlebody(2, 0)).unwrap().to_text(),
            "closed{or,g=2}"
        );
        assert_eq!(
            normalize(&crosscaps(3)).unwrap().to_text(),
            "closed{nonor,k=3}"
        );
    }
}
