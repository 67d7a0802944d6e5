use proptest::prelude::*;

use cob2_core::classify::{in_ocob2, synthesize_term, CategoryFlavor};
use cob2_core::frobalg::{examples, seeded_algebra, Involution, ThetaElement};
use cob2_core::relations::RELATIONS;
use cob2_core::sample::TermSampler;
use cob2_core::{normalize, parse, Term, Tqft};

fn flavor() -> impl Strategy<Value = CategoryFlavor> {
    prop::sample::select(CategoryFlavor::ALL.to_vec())
}

fn qq_swap() -> Tqft {
    let (a, phi) = examples::qq_swap();
    Tqft::new(
        &a,
        &phi,
        Some(&ThetaElement(vec![Default::default(), Default::default()])),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn render_parse_round_trip(seed in any::<u64>(), f in flavor()) {
        let t = TermSampler::new(seed, f).with_limits(3, 3).term();
        prop_assume!(t.depth() <= 8);
        prop_assert_eq!(parse(&t.render()).unwrap(), t.clone());
        prop_assert_eq!(parse(&t.render()).unwrap().render(), t.render());
    }

    #[test]
    fn arity_adds_under_tensor(a in any::<u64>(), b in any::<u64>()) {
        let x = TermSampler::new(a, CategoryFlavor::Unoriented).term();
        let y = TermSampler::new(b, CategoryFlavor::Unoriented).term();
        let xy = Term::tensor(x.clone(), y.clone());
        prop_assert_eq!(xy.arity().unwrap(), x.arity().unwrap() + y.arity().unwrap());
    }

    #[test]
    fn composition_is_associative(seed in any::<u64>(), i in 0..3usize, j in 0..3usize, k in 0..3usize, l in 0..3usize) {
        let mut s = TermSampler::new(seed, CategoryFlavor::Unoriented);
        let (h, g, f) = (s.term_between(i, j), s.term_between(j, k), s.term_between(k, l));
        let left = Term::compose(Term::compose(f.clone(), g.clone()), h.clone());
        let right = Term::compose(f, Term::compose(g, h));
        prop_assert_eq!(normalize(&left).unwrap(), normalize(&right).unwrap());
    }

    #[test]
    fn interchange_law(seed in any::<u64>(), a in 0..3usize, b in 0..3usize, c in 0..3usize, d in 0..3usize) {
        let mut s = TermSampler::new(seed, CategoryFlavor::Unoriented);
        let (g1, g2) = (s.term_between(a, b), s.term_between(c, d));
        let (f1, f2) = (s.term_between(b, a), s.term_between(d, c));
        let lhs = Term::compose(Term::tensor(f1.clone(), f2.clone()), Term::tensor(g1.clone(), g2.clone()));
        let rhs = Term::tensor(Term::compose(f1, g1), Term::compose(f2, g2));
        prop_assert_eq!(normalize(&lhs).unwrap(), normalize(&rhs).unwrap());
    }

    #[test]
    fn euler_characteristic_is_additive(seed in any::<u64>(), i in 0..3usize, j in 0..4usize, k in 0..3usize) {
        let mut s = TermSampler::new(seed, CategoryFlavor::Unoriented);
        let (g, f) = (s.term_between(i, j), s.term_between(j, k));
        let chi = |t: &Term| normalize(t).unwrap().euler_characteristic();
        prop_assert_eq!(chi(&Term::compose(f.clone(), g.clone())), chi(&f) + chi(&g));
        prop_assert_eq!(chi(&Term::tensor(f.clone(), g.clone())), chi(&f) + chi(&g));
    }

    #[test]
    fn synthesis_round_trips(seed in any::<u64>(), f in flavor()) {
        let t = TermSampler::new(seed, CategoryFlavor::Unoriented).term();
        let s = normalize(&t).unwrap();
        match synthesize_term(&s, f) {
            Ok(word) => {
                prop_assert!(in_ocob2(&s).verdict(f));
                prop_assert_eq!(normalize(&word).unwrap(), s);
            }
            Err(_) => prop_assert!(!in_ocob2(&s).verdict(f)),
        }
    }

    #[test]
    fn relations_survive_contexts_algebraically(seed in any::<u64>(), r in 0..RELATIONS.len()) {
        let rel = RELATIONS[r];
        let arity = rel.lhs().arity().unwrap();
        let ctx = TermSampler::new(seed, CategoryFlavor::Unoriented).with_limits(2, 3).context(arity.inputs, arity.outputs);
        let q = qq_swap();
        prop_assert_eq!(q.evaluate(&ctx.apply(rel.lhs())).unwrap(), q.evaluate(&ctx.apply(rel.rhs())).unwrap());
    }

    #[test]
    fn evaluation_is_a_functor(seed in any::<u64>(), alg in 0..20u64, i in 0..3usize, j in 0..3usize, k in 0..3usize) {
        let (a, _) = seeded_algebra(alg);
        let q = Tqft::new(&a, &Involution::identity(a.dim()), None).unwrap();
        let mut s = TermSampler::new(seed, CategoryFlavor::Orientable);
        let (g, f) = (s.term_between(i, j), s.term_between(j, k));
        let (eg, ef) = (q.evaluate(&g).unwrap(), q.evaluate(&f).unwrap());
        prop_assert_eq!(q.evaluate(&Term::compose(f.clone(), g.clone())).unwrap(), ef.compose(&eg));
        prop_assert_eq!(q.evaluate(&Term::tensor(f, g)).unwrap(), ef.kron(&eg));
    }

    #[test]
    fn evaluation_depends_only_on_normal_form(seed in any::<u64>()) {
        let t = TermSampler::new(seed, CategoryFlavor::Unoriented).term();
        let word = synthesize_term(&normalize(&t).unwrap(), CategoryFlavor::Unoriented).unwrap();
        let q = qq_swap();
        prop_assert_eq!(q.evaluate(&t).unwrap(), q.evaluate(&word).unwrap());
    }
}
