//! Built-in verification suites, deterministic for a given seed.
//!
//! Cases are distributed over a rayon pool; each case draws from its own
//! generator seeded by `(seed, suite, index)`, so results do not depend on
//! scheduling. Results are reported in case order.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{check_generators, in_ocob2, synthesize_term, CategoryFlavor};
use crate::frobalg::{examples, find_theta, seeded_algebra, Involution, ThetaSearch, Tqft};
use crate::relations::{KLEIN_ABSORPTION, KLEIN_TWIST, RELATIONS};
use crate::sample::{strip_phi, TermSampler};
use crate::surface::{normalize, normalize_traced};
use crate::term::{parse, Generator, Term};

const MAX_REPORTED: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelftestReport {
    pub seed: u64,
    pub cases: usize,
    pub suites: Vec<SuiteResult>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }
}

impl fmt::Display for SelftestReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.suites {
            writeln!(
                f,
                "{} {} ({} checks)",
                if s.passed() { "pass" } else { "FAIL" },
                s.name,
                s.checks
            )?;
            for msg in &s.failures {
                writeln!(f, "    {msg}")?;
            }
        }
        write!(
            f,
            "{}",
            if self.passed() {
                "all suites pass"
            } else {
                "selftest failed"
            }
        )
    }
}

/// A named evaluation target.
pub struct Model {
    pub name: String,
    pub tqft: Tqft,
}

/// ℂP¹ and ℚ×ℚ with the swap, then the 20 seeded algebras with their
/// Möbius element when one is found.
pub fn oracle_models() -> Vec<Model> {
    let mut models = vec![Model {
        name: "cp1".into(),
        tqft: Tqft::new(&examples::cp1(), &Involution::identity(2), None).expect("cp1 is valid"),
    }];
    let (a, phi) = examples::qq_swap();
    let theta = match find_theta(&a, &phi) {
        ThetaSearch::Found(t) => Some(t),
        _ => None,
    };
    models.push(Model {
        name: "qq_swap".into(),
        tqft: Tqft::new(&a, &phi, theta.as_ref()).expect("qq_swap is valid"),
    });
    models.extend(
        (0..20)
            .into_par_iter()
            .map(seeded_model)
            .collect::<Vec<_>>(),
    );
    models
}

pub fn seeded_model(seed: u64) -> Model {
    let (a, phi) = seeded_algebra(seed);
    let theta = match find_theta(&a, &phi) {
        ThetaSearch::Found(t) => Some(t),
        _ => None,
    };
    Model {
        name: format!("seed {seed} (dim {})", a.dim()),
        tqft: Tqft::new(&a, &phi, theta.as_ref()).expect("seeded algebras are valid"),
    }
}

fn identity_models() -> Vec<Model> {
    let mut models = vec![Model {
        name: "cp1".into(),
        tqft: Tqft::new(&examples::cp1(), &Involution::identity(2), None).expect("valid"),
    }];
    for seed in 0..6 {
        let (a, _) = seeded_algebra(seed);
        let dim = a.dim();
        models.push(Model {
            name: format!("seed {seed} with φ = id"),
            tqft: Tqft::new(&a, &Involution::identity(dim), None).expect("valid"),
        });
    }
    models
}

fn case_seed(seed: u64, suite: u64, index: usize) -> u64 {
    let mut z = seed
        .wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(suite.wrapping_mul(0xBF58_476D_1CE4_E5B9))
        .wrapping_add(index as u64);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Runs `check` on every case index in parallel and gathers failures.
fn run_cases(
    name: &'static str,
    cases: usize,
    check: impl Fn(usize) -> (usize, Option<String>) + Sync + Send,
) -> SuiteResult {
    let outcomes: Vec<_> = (0..cases).into_par_iter().map(check).collect();
    SuiteResult {
        name,
        checks: outcomes.iter().map(|(n, _)| n).sum(),
        failures: outcomes
            .into_iter()
            .filter_map(|(_, f)| f)
            .take(MAX_REPORTED)
            .collect(),
    }
}

fn same_normal_form(a: &Term, b: &Term) -> bool {
    matches!((normalize(a), normalize(b)), (Ok(x), Ok(y)) if x == y)
}

fn evaluates_equal(model: &Model, a: &Term, b: &Term) -> Result<(), String> {
    if (a.contains(Generator::Theta) || b.contains(Generator::Theta)) && !model.tqft.has_theta() {
        return Ok(());
    }
    match (model.tqft.evaluate(a), model.tqft.evaluate(b)) {
        (Ok(x), Ok(y)) if x == y => Ok(()),
        (Ok(_), Ok(_)) => Err(format!(
            "{}: `{a}` and `{b}` evaluate differently",
            model.name
        )),
        (Err(e), _) | (_, Err(e)) => Err(format!("{}: {e}", model.name)),
    }
}

pub fn relations_topological(seed: u64, cases: usize) -> SuiteResult {
    run_cases(
        "relations hold for normal forms in random contexts",
        RELATIONS.len(),
        |i| {
            let r = RELATIONS[i];
            let (lhs, rhs) = (r.lhs(), r.rhs());
            if !same_normal_form(&lhs, &rhs) {
                return (1, Some(format!("{}: `{}` ≠ `{}`", r.name, r.lhs, r.rhs)));
            }
            let a = lhs.arity().expect("well typed");
            let mut sampler = TermSampler::new(case_seed(seed, 1, i), CategoryFlavor::Unoriented);
            for _ in 0..cases {
                let ctx = sampler.context(a.inputs, a.outputs);
                let (l, rr) = (ctx.apply(lhs.clone()), ctx.apply(rhs.clone()));
                if !same_normal_form(&l, &rr) {
                    return (
                        cases + 1,
                        Some(format!("{} in context: `{l}` ≠ `{rr}`", r.name)),
                    );
                }
            }
            (cases + 1, None)
        },
    )
}

pub fn relations_algebraic(models: &[Model]) -> SuiteResult {
    run_cases("relations hold as matrix identities", models.len(), |m| {
        for r in RELATIONS {
            if let Err(e) = evaluates_equal(&models[m], &r.lhs(), &r.rhs()) {
                return (RELATIONS.len(), Some(format!("{}: {e}", r.name)));
            }
        }
        (RELATIONS.len(), None)
    })
}

pub fn klein_chain(models: &[Model]) -> SuiteResult {
    let mut failures = Vec::new();
    let mut checks = 0;
    for chain in [&KLEIN_ABSORPTION[..], &KLEIN_TWIST[..]] {
        for pair in chain.windows(2) {
            checks += 1;
            let (a, b) = (
                parse(pair[0]).expect("valid"),
                parse(pair[1]).expect("valid"),
            );
            if !same_normal_form(&a, &b) {
                failures.push(format!("`{}` ≠ `{}`", pair[0], pair[1]));
            }
        }
    }
    let absorb = RELATIONS
        .iter()
        .find(|r| r.name == "Klein bottle absorbs twist")
        .expect("listed");
    checks += 1;
    if !same_normal_form(&absorb.lhs(), &absorb.rhs()) {
        failures.push(format!("`{}` ≠ `{}`", absorb.lhs, absorb.rhs));
    }
    for m in models {
        checks += 1;
        if let Err(e) = evaluates_equal(m, &absorb.lhs(), &absorb.rhs()) {
            failures.push(e);
        }
    }
    failures.truncate(MAX_REPORTED);
    SuiteResult {
        name: "twice-punctured Klein bottle derivation",
        checks,
        failures,
    }
}

pub fn crosscap_parity(seed: u64, cases: usize) -> SuiteResult {
    run_cases("parity of X equals parity of crosscap count", cases, |i| {
        let t = TermSampler::new(case_seed(seed, 2, i), CategoryFlavor::Unoriented).term();
        let traced = normalize_traced(&t).expect("well typed");
        let s = &traced.surface;
        let open = s
            .open
            .iter()
            .zip(&traced.open_thetas)
            .map(|(c, &k)| (crate::classify::component_x(c), k));
        let closed = s
            .closed
            .iter()
            .zip(&traced.closed_thetas)
            .map(|(c, &k)| (c.euler_characteristic(), k));
        for (x, thetas) in open.chain(closed) {
            if x.rem_euclid(2) as usize != thetas % 2 {
                return (1, Some(format!("`{t}`: X = {x} but {thetas} crosscaps")));
            }
        }
        (1, None)
    })
}

pub fn synthesis(seed: u64, cases: usize) -> SuiteResult {
    run_cases(
        "synthesized words renormalize to the same surface",
        cases,
        |i| {
            let mut sampler = TermSampler::new(case_seed(seed, 3, i), CategoryFlavor::Unoriented);
            let t = sampler.term();
            let s = normalize(&t).expect("well typed");
            let mut checks = 0;
            for flavor in CategoryFlavor::ALL {
                let member = in_ocob2(&s).verdict(flavor);
                match synthesize_term(&s, flavor) {
                    Ok(word) => {
                        checks += 1;
                        if !member {
                            return (checks, Some(format!("`{t}`: synthesized outside {flavor}")));
                        }
                        if check_generators(&word, flavor).is_err() {
                            return (
                                checks,
                                Some(format!("`{t}`: word `{word}` leaves {flavor}")),
                            );
                        }
                        if normalize(&word).ok().as_ref() != Some(&s) {
                            return (
                                checks,
                                Some(format!("`{t}`: word `{word}` renormalizes differently")),
                            );
                        }
                    }
                    Err(_) if member => {
                        return (checks, Some(format!("`{t}`: {flavor} synthesis refused")))
                    }
                    Err(_) => {}
                }
            }
            (checks, None)
        },
    )
}

pub fn closure(seed: u64, cases: usize) -> SuiteResult {
    run_cases(
        "orientable category is closed under composition",
        cases,
        |i| {
            let mut sampler = TermSampler::new(case_seed(seed, 4, i), CategoryFlavor::Unoriented);
            let mut members = |inputs: usize, outputs: usize| loop {
                let t = sampler.term_between(inputs, outputs);
                if in_ocob2(&normalize(&t).expect("well typed")).orientable_cat {
                    return t;
                }
            };
            let g = members(1, 2);
            let f = members(2, 1);
            let h = Term::compose(f, g);
            if in_ocob2(&normalize(&h).expect("well typed")).orientable_cat {
                (1, None)
            } else {
                (1, Some(format!("`{h}` leaves the orientable category")))
            }
        },
    )
}

pub fn evaluation_oracle(seed: u64, cases: usize, models: &[Model]) -> SuiteResult {
    run_cases("equal normal forms evaluate equally", cases, |i| {
        let (a, b) =
            TermSampler::new(case_seed(seed, 5, i), CategoryFlavor::Unoriented).equal_pair();
        if !same_normal_form(&a, &b) {
            return (
                0,
                Some(format!("sampler produced unequal pair `{a}`, `{b}`")),
            );
        }
        for m in models {
            if let Err(e) = evaluates_equal(m, &a, &b) {
                return (models.len(), Some(e));
            }
        }
        (models.len(), None)
    })
}

pub fn section(seed: u64, cases: usize) -> SuiteResult {
    let models = identity_models();
    run_cases("identity involution forgets phi", cases, |i| {
        let t = TermSampler::new(case_seed(seed, 6, i), CategoryFlavor::Orientable).term();
        let stripped = strip_phi(&t);
        for m in &models {
            if let Err(e) = evaluates_equal(m, &t, &stripped) {
                return (models.len() + 1, Some(e));
            }
        }
        let oriented = TermSampler::new(case_seed(seed, 7, i), CategoryFlavor::Oriented).term();
        if !in_ocob2(&normalize(&oriented).expect("well typed")).orientable_cat {
            return (
                models.len() + 1,
                Some(format!(
                    "oriented `{oriented}` not in the orientable category"
                )),
            );
        }
        (models.len() + 1, None)
    })
}

pub fn run(seed: u64, cases: usize) -> SelftestReport {
    let models = oracle_models();
    SelftestReport {
        seed,
        cases,
        suites: vec![
            relations_topological(seed, cases),
            relations_algebraic(&models),
            klein_chain(&models),
            crosscap_parity(seed, cases),
            synthesis(seed, cases),
            closure(seed, cases),
            evaluation_oracle(seed, cases, &models),
            section(seed, cases),
        ],
    }
}
