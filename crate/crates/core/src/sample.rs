//! Seeded random well-typed terms for property tests and the self-test.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classify::{synthesize_term, CategoryFlavor};
use crate::relations::{Relation, RELATIONS};
use crate::surface::normalize;
use crate::term::{Generator, Term};

const CONSUMERS: [Generator; 6] = [
    Generator::Mul,
    Generator::Comul,
    Generator::Counit,
    Generator::Swap,
    Generator::Phi,
    Generator::Id,
];

#[derive(Debug, Clone)]
pub struct TermSampler {
    rng: ChaCha8Rng,
    flavor: CategoryFlavor,
    max_width: usize,
    max_layers: usize,
}

impl TermSampler {
    /// Terms over the flavor's generators, at most 3 circles wide at any
    /// cut and at most 4 layers deep.
    pub fn new(seed: u64, flavor: CategoryFlavor) -> Self {
        TermSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            flavor,
            max_width: 3,
            max_layers: 4,
        }
    }

    pub fn with_limits(mut self, max_width: usize, max_layers: usize) -> Self {
        assert!(max_width >= 2);
        self.max_width = max_width;
        self.max_layers = max_layers;
        self
    }

    pub fn flavor(&self) -> CategoryFlavor {
        self.flavor
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn term(&mut self) -> Term {
        let inputs = self.rng.gen_range(0..=self.max_width);
        let outputs = self.rng.gen_range(0..=self.max_width);
        self.term_between(inputs, outputs)
    }

    pub fn term_between(&mut self, inputs: usize, outputs: usize) -> Term {
        let mut layers = Vec::new();
        let mut width = inputs;
        for _ in 0..self.rng.gen_range(1..=self.max_layers) {
            let (layer, next) = self.layer(width);
            layers.push(layer);
            width = next;
        }
        while width != outputs {
            let (layer, next) = self.adjust(width, outputs);
            layers.push(layer);
            width = next;
        }
        self.bracket(layers, true)
    }

    /// A random composable context around a morphism of the given arity:
    /// `post ∘ (x ⊗ id^e) ∘ pre` (or with the identities first).
    pub fn context(&mut self, inputs: usize, outputs: usize) -> Context {
        let extra = self.rng.gen_range(0..=1);
        let pre_in = self.rng.gen_range(0..=2);
        let post_out = self.rng.gen_range(0..=2);
        Context {
            pre: self.term_between(pre_in, inputs + extra),
            post: self.term_between(outputs + extra, post_out),
            extra,
            identities_first: self.rng.gen_bool(0.5),
        }
    }

    /// Two terms with equal normal forms, built by one of: resynthesis from
    /// the normal form, a relation instance in a random context, or
    /// replacing generators by equal composites.
    pub fn equal_pair(&mut self) -> (Term, Term) {
        match self.rng.gen_range(0..3) {
            0 => {
                let t = self.term();
                let s = normalize(&t).expect("sampled terms are well typed");
                let word = synthesize_term(&s, self.flavor).unwrap_or_else(|_| t.clone());
                (t, word)
            }
            1 => {
                let usable: Vec<&Relation> = RELATIONS
                    .iter()
                    .filter(|r| r.flavor <= self.flavor)
                    .collect();
                let r = *usable.choose(&mut self.rng).expect("relations exist");
                let (lhs, rhs) = (r.lhs(), r.rhs());
                let a = lhs.arity().expect("relations are well typed");
                let ctx = self.context(a.inputs, a.outputs);
                (ctx.apply(lhs), ctx.apply(rhs))
            }
            _ => {
                let t = self.term();
                let mut u = t.clone();
                let mut rewrites: Vec<(Generator, &str)> = vec![
                    (Generator::Mul, "mul . swap"),
                    (Generator::Comul, "swap . comul"),
                    (Generator::Id, "mul . (unit * id)"),
                    (Generator::Swap, "swap . swap . swap"),
                ];
                if self.flavor >= CategoryFlavor::Orientable {
                    rewrites.push((Generator::Id, "phi . phi"));
                    rewrites.push((Generator::Counit, "counit . phi"));
                }
                rewrites.shuffle(&mut self.rng);
                for (g, replacement) in rewrites.into_iter().take(2) {
                    u = u.substitute(g, &crate::term::parse(replacement).expect("valid rewrite"));
                }
                (t, u)
            }
        }
    }

    fn allowed(&self, g: Generator) -> bool {
        self.flavor.allows(g)
    }

    fn source(&mut self) -> Generator {
        if self.allowed(Generator::Theta) && self.rng.gen_bool(0.4) {
            Generator::Theta
        } else {
            Generator::Unit
        }
    }

    /// One tensor layer consuming `width` circles. Never wider than the
    /// larger of `max_width` and `width`.
    fn layer(&mut self, width: usize) -> (Term, usize) {
        let mut parts = Vec::new();
        let mut remaining = width;
        let mut out = 0;
        let cap = self.max_width.max(width);
        while remaining > 0 {
            if out + remaining < cap && self.rng.gen_bool(0.12) {
                parts.push(Term::Gen(self.source()));
                out += 1;
                continue;
            }
            let candidates: Vec<Generator> = CONSUMERS
                .into_iter()
                .filter(|&g| {
                    let a = g.arity();
                    self.allowed(g)
                        && a.inputs <= remaining
                        && out + a.outputs + remaining - a.inputs <= cap
                })
                .collect();
            let g = *candidates.choose(&mut self.rng).expect("id always fits");
            parts.push(Term::Gen(g));
            remaining -= g.arity().inputs;
            out += g.arity().outputs;
        }
        if width == 0 {
            match self.rng.gen_range(0..4) {
                0 => parts.push(Term::Gen(Generator::Empty)),
                1 if self.max_width >= 2 => {
                    parts.push(Term::Gen(self.source()));
                    parts.push(Term::Gen(self.source()));
                    out = 2;
                }
                _ => {
                    parts.push(Term::Gen(self.source()));
                    out = 1;
                }
            }
        }
        (self.bracket(parts, false), out)
    }

    /// A layer moving the width one step toward `target`.
    fn adjust(&mut self, width: usize, target: usize) -> (Term, usize) {
        let at = self.rng.gen_range(0..width.max(1));
        let (g, next) = if width > target {
            if width >= 2 {
                (Generator::Mul, width - 1)
            } else {
                (Generator::Counit, width - 1)
            }
        } else if width >= 1 && self.rng.gen_bool(0.5) {
            (Generator::Comul, width + 1)
        } else {
            (self.source(), width + 1)
        };
        let consumed = g.arity().inputs;
        let at = at.min(width - consumed.min(width));
        let parts: Vec<Term> = std::iter::repeat_n(Term::Gen(Generator::Id), at)
            .chain([Term::Gen(g)])
            .chain(std::iter::repeat_n(
                Term::Gen(Generator::Id),
                width - consumed - at,
            ))
            .collect();
        (self.bracket(parts, false), next)
    }

    /// Random binary bracketing. For compositions `parts[0]` is applied
    /// first.
    fn bracket(&mut self, mut parts: Vec<Term>, compose: bool) -> Term {
        if parts.len() == 1 {
            return parts.pop().expect("one part");
        }
        let split = self.rng.gen_range(1..parts.len());
        let right = parts.split_off(split);
        let left = self.bracket(parts, compose);
        let right = self.bracket(right, compose);
        if compose {
            Term::compose(right, left)
        } else {
            Term::tensor(left, right)
        }
    }
}

/// `post ∘ (x ⊗ id^extra) ∘ pre`.
#[derive(Debug, Clone)]
pub struct Context {
    pub pre: Term,
    pub post: Term,
    pub extra: usize,
    pub identities_first: bool,
}

impl Context {
    pub fn apply(&self, x: Term) -> Term {
        let middle = match (self.extra, self.identities_first) {
            (0, _) => x,
            (e, false) => Term::tensor(x, Term::ids(e)),
            (e, true) => Term::tensor(Term::ids(e), x),
        };
        Term::compose(Term::compose(self.post.clone(), middle), self.pre.clone())
    }
}

/// Replaces every `phi` by `id`.
pub fn strip_phi(t: &Term) -> Term {
    t.substitute(Generator::Phi, &Term::Gen(Generator::Id))
}
