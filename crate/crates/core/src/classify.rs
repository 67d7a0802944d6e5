//! Membership in the oriented, orientable, and unoriented cobordism
//! categories, and synthesis of generator words from normal forms.
//!
//! A morphism lies in the orientable category exactly when every connected
//! component `C` has even `X(C) = χ(C) − |π₀(∂C)|`. `X` is additive under
//! disjoint union, changes by an even amount under gluing, and the crosscap
//! is the only generator with odd `X`, so the parity of `X` on a component
//! equals the parity of the number of crosscaps merged into it.

use std::fmt;

use serde::Serialize;

use crate::error::{FlavorError, Result};
use crate::surface::{normalize, Component, Surface, Topology};
use crate::term::{Generator, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CategoryFlavor {
    /// Cob₂: mul, unit, comul, counit, swap, id.
    Oriented,
    /// OCob₂: additionally phi.
    Orientable,
    /// UCob₂: additionally theta.
    Unoriented,
}

impl CategoryFlavor {
    pub const ALL: [CategoryFlavor; 3] = [
        CategoryFlavor::Oriented,
        CategoryFlavor::Orientable,
        CategoryFlavor::Unoriented,
    ];

    pub fn allows(self, g: Generator) -> bool {
        match g {
            Generator::Phi => self >= CategoryFlavor::Orientable,
            Generator::Theta => self == CategoryFlavor::Unoriented,
            _ => true,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CategoryFlavor::Oriented => "oriented",
            CategoryFlavor::Orientable => "orientable",
            CategoryFlavor::Unoriented => "unoriented",
        }
    }
}

impl fmt::Display for CategoryFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for CategoryFlavor {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        CategoryFlavor::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown flavor `{s}`"))
    }
}

/// Rejects terms using generators outside the flavor's alphabet.
pub fn check_generators(t: &Term, flavor: CategoryFlavor) -> Result<(), FlavorError> {
    let mut bad = None;
    t.for_each_generator(&mut |g| {
        if bad.is_none() && !flavor.allows(g) {
            bad = Some(g);
        }
    });
    match bad {
        Some(g) => Err(FlavorError::GeneratorOutOfFlavor {
            generator: g.to_string(),
            flavor: flavor.to_string(),
        }),
        None => Ok(()),
    }
}

/// Per-component membership data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentRecord {
    pub chi: i64,
    pub b: usize,
    #[serde(rename = "X")]
    pub x: i64,
    pub crosscaps: u32,
    pub even: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MembershipReport {
    /// Open components in canonical order, then closed ones.
    pub components: Vec<ComponentRecord>,
    pub oriented: bool,
    pub orientable_cat: bool,
    pub unoriented: bool,
}

impl MembershipReport {
    pub fn verdict(&self, flavor: CategoryFlavor) -> bool {
        match flavor {
            CategoryFlavor::Oriented => self.oriented,
            CategoryFlavor::Orientable => self.orientable_cat,
            CategoryFlavor::Unoriented => self.unoriented,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

impl fmt::Display for MembershipReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:>4} {:>5} {:>3} {:>5} {:>9}  even",
            "#", "chi", "b", "X", "crosscaps"
        )?;
        for (i, c) in self.components.iter().enumerate() {
            writeln!(
                f,
                "{:>4} {:>5} {:>3} {:>5} {:>9}  {}",
                i + 1,
                c.chi,
                c.b,
                c.x,
                c.crosscaps,
                if c.even { "yes" } else { "no" }
            )?;
        }
        writeln!(f, "oriented:   {}", self.oriented)?;
        writeln!(f, "orientable: {}", self.orientable_cat)?;
        write!(f, "unoriented: {}", self.unoriented)
    }
}

fn crosscap_count(t: Topology) -> String {
    match t.crosscaps() {
        1 => "1 crosscap".into(),
        k => format!("{k} crosscaps"),
    }
}

/// `χ(C) − b(C)`.
pub fn statistic_x(chi: i64, boundary: usize) -> i64 {
    chi - boundary as i64
}

pub fn component_x(c: &Component) -> i64 {
    statistic_x(c.euler_characteristic(), c.boundary())
}

fn record(chi: i64, b: usize, topology: Topology) -> ComponentRecord {
    let x = statistic_x(chi, b);
    ComponentRecord {
        chi,
        b,
        x,
        crosscaps: topology.crosscaps(),
        even: x % 2 == 0,
    }
}

fn is_oriented_image(s: &Surface) -> bool {
    s.open.iter().all(Component::untwisted) && s.closed.iter().all(|c| c.topology.is_orientable())
}

pub fn in_ocob2(s: &Surface) -> MembershipReport {
    let components: Vec<_> = s
        .open
        .iter()
        .map(|c| record(c.euler_characteristic(), c.boundary(), c.topology))
        .chain(
            s.closed
                .iter()
                .map(|c| record(c.euler_characteristic(), 0, c.topology)),
        )
        .collect();
    let orientable_cat = components.iter().all(|c| c.even);
    MembershipReport {
        components,
        oriented: is_oriented_image(s),
        orientable_cat,
        unoriented: true,
    }
}

/// True iff every component, open or closed, is orientable.
pub fn is_orientable_cobordism(s: &Surface) -> bool {
    s.open.iter().all(|c| c.topology.is_orientable())
        && s.closed.iter().all(|c| c.topology.is_orientable())
}

/// Checks that `s` is a morphism of the flavor's category, naming the first
/// offending component otherwise. Components are numbered from 1, open
/// before closed.
pub fn check_membership(s: &Surface, flavor: CategoryFlavor) -> Result<(), FlavorError> {
    let fail = |component: usize, reason: String| FlavorError::ComponentOutOfFlavor {
        component,
        flavor: flavor.to_string(),
        reason,
    };
    let topologies = s
        .open
        .iter()
        .map(|c| (c.topology, c.boundary(), c.euler_characteristic(), Some(c)))
        .chain(
            s.closed
                .iter()
                .map(|c| (c.topology, 0, c.euler_characteristic(), None)),
        );
    for (i, (topology, b, chi, open)) in topologies.enumerate() {
        match flavor {
            CategoryFlavor::Unoriented => {}
            CategoryFlavor::Orientable => {
                let x = statistic_x(chi, b);
                if x % 2 != 0 {
                    return Err(fail(
                        i + 1,
                        format!("X = {x} is odd ({})", crosscap_count(topology)),
                    ));
                }
            }
            CategoryFlavor::Oriented => {
                if !topology.is_orientable() {
                    return Err(fail(
                        i + 1,
                        format!("non-orientable with {}", crosscap_count(topology)),
                    ));
                }
                if open.is_some_and(|c| !c.untwisted()) {
                    return Err(fail(i + 1, "twisted boundary identification".into()));
                }
            }
        }
    }
    Ok(())
}

/// Decides equality of two terms as morphisms of the flavor's category.
pub fn decide_equal(t1: &Term, t2: &Term, flavor: CategoryFlavor) -> Result<bool> {
    check_generators(t1, flavor)?;
    check_generators(t2, flavor)?;
    let (a1, a2) = (t1.arity()?, t2.arity()?);
    if a1 != a2 {
        return Err(FlavorError::ArityDiffers {
            left: a1,
            right: a2,
        }
        .into());
    }
    Ok(normalize(t1)? == normalize(t2)?)
}

/// The punctured Klein bottle `mul . (phi * id) . comul . unit`.
pub fn punctured_klein_bottle() -> Term {
    use Generator::*;
    Term::compose_in_order(
        Unit.into(),
        [Comul.into(), Term::tensor(Phi, Id), Mul.into()],
    )
}

/// Writes a generator word over the flavor's alphabet whose normal form is
/// `s`.
///
/// Each component is built as: twists on the inputs, a left-nested tree of
/// `mul` fanning the inputs in (or `unit`), one `mul . comul` per handle,
/// one multiplication by the punctured Klein bottle per pair of crosscaps
/// and by `theta` for an odd one, a tree of `comul` fanning out (or
/// `counit`), and twists on the outputs. Components are laid side by side in
/// canonical order and wired to the boundary by swap networks.
pub fn synthesize_term(s: &Surface, flavor: CategoryFlavor) -> Result<Term, FlavorError> {
    check_membership(s, flavor)?;

    let mut blocks = Vec::new();
    let mut input_order: Vec<usize> = Vec::with_capacity(s.arity.inputs);
    let mut output_order: Vec<usize> = Vec::with_capacity(s.arity.outputs);
    for c in &s.open {
        input_order.extend(&c.inputs);
        output_order.extend(&c.outputs);
        let (in_bits, out_bits) = match &c.twists {
            Some(tw) => {
                let (i, o) = tw.split_at(c.inputs.len());
                (i.to_vec(), o.to_vec())
            }
            None => (vec![false; c.inputs.len()], vec![false; c.outputs.len()]),
        };
        blocks.push(component_word(&in_bits, &out_bits, c.topology));
    }
    for c in &s.closed {
        blocks.push(component_word(&[], &[], c.topology));
    }

    // block input position p carries boundary circle input_order[p]
    let mut into_blocks = vec![0; s.arity.inputs];
    for (p, &circle) in input_order.iter().enumerate() {
        into_blocks[circle - 1] = p;
    }
    let out_of_blocks: Vec<usize> = output_order.iter().map(|&circle| circle - 1).collect();

    let mut word = permutation(&into_blocks);
    if let Some(body) = blocks.into_iter().reduce(Term::tensor) {
        word = then(word, Some(body));
    }
    word = then(word, permutation(&out_of_blocks));
    Ok(word.unwrap_or_else(|| Term::ids(s.arity.inputs)))
}

fn then(first: Option<Term>, next: Option<Term>) -> Option<Term> {
    match (first, next) {
        (Some(a), Some(b)) => Some(Term::compose(b, a)),
        (a, b) => a.or(b),
    }
}

fn twist_layer(bits: &[bool]) -> Option<Term> {
    bits.iter().any(|&b| b).then(|| {
        Term::tensor_all(
            bits.iter()
                .map(|&b| Term::Gen(if b { Generator::Phi } else { Generator::Id })),
        )
    })
}

fn component_word(in_bits: &[bool], out_bits: &[bool], topology: Topology) -> Term {
    use Generator::*;
    let mut word = twist_layer(in_bits);

    let fan_in = match in_bits.len() {
        0 => Some(Term::Gen(Unit)),
        1 => None,
        n => Some((2..n).fold(Term::Gen(Mul), |acc, _| {
            Term::compose(Mul, Term::tensor(acc, Id))
        })),
    };
    word = then(word, fan_in);

    let times = |factor: Term| Term::compose(Mul, Term::tensor(factor, Id));
    match topology {
        Topology::Orientable { genus } => {
            for _ in 0..genus {
                word = then(word, Some(Term::compose(Mul, Comul)));
            }
        }
        Topology::NonOrientable { crosscaps } => {
            for _ in 0..crosscaps / 2 {
                word = then(word, Some(times(punctured_klein_bottle())));
            }
            if crosscaps % 2 == 1 {
                word = then(word, Some(times(Theta.into())));
            }
        }
    }

    let fan_out = match out_bits.len() {
        0 => Some(Term::Gen(Counit)),
        1 => None,
        n => Some((2..n).fold(Term::Gen(Comul), |acc, _| {
            Term::compose(Term::tensor(acc, Id), Comul)
        })),
    };
    word = then(word, fan_out);
    word = then(word, twist_layer(out_bits));
    word.unwrap_or(Term::Gen(Id))
}

/// Swap network sending wire `j` to wire `targets[j]`; `None` for the
/// identity permutation. Built by bubble sort, one adjacent transposition
/// per layer.
pub fn permutation(targets: &[usize]) -> Option<Term> {
    let n = targets.len();
    let mut current = targets.to_vec();
    let mut layers = Vec::new();
    for pass in 0..n {
        for p in 0..n.saturating_sub(pass + 1) {
            if current[p] > current[p + 1] {
                current.swap(p, p + 1);
                let layer = Term::tensor_all(
                    std::iter::repeat_n(Term::Gen(Generator::Id), p)
                        .chain([Term::Gen(Generator::Swap)])
                        .chain(std::iter::repeat_n(Term::Gen(Generator::Id), n - p - 2)),
                );
                layers.push(layer);
            }
        }
    }
    let mut layers = layers.into_iter();
    let first = layers.next()?;
    Some(Term::compose_in_order(first, layers))
}
