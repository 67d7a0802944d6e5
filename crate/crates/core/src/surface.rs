//! Topological normal form of unoriented cobordisms.
//!
//! A morphism is stored as its connected components. An open component
//! remembers which boundary circles it touches, its topological type, and,
//! while orientable, one twist bit per boundary circle recording whether the
//! circle's parametrization agrees with a chosen orientation of the
//! component. The two orientations of a connected orientable surface give
//! twist vectors that differ by a global flip; the stored representative is
//! the lexicographically smaller one, i.e. the one whose first bit is 0.
//!
//! Composition glues circles one at a time while tracking Euler
//! characteristics. Genus and crosscap numbers are always recomputed from
//! `χ` and the boundary count at the end.

use std::fmt;

use serde::Serialize;

use crate::error::TermError;
use crate::term::{Arity, Generator, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Topology {
    Orientable { genus: u32 },
    NonOrientable { crosscaps: u32 },
}

impl Topology {
    /// Classifies a connected surface with `boundary` circles.
    ///
    /// Panics if `χ` is inconsistent with the given data; gluing never
    /// produces such a combination.
    pub fn from_euler(chi: i64, boundary: usize, orientable: bool) -> Topology {
        let deficit = 2 - chi - boundary as i64;
        if orientable {
            assert!(
                deficit >= 0 && deficit % 2 == 0,
                "orientable surface with χ={chi}, b={boundary}"
            );
            Topology::Orientable {
                genus: (deficit / 2) as u32,
            }
        } else {
            assert!(
                deficit >= 1,
                "non-orientable surface with χ={chi}, b={boundary}"
            );
            Topology::NonOrientable {
                crosscaps: deficit as u32,
            }
        }
    }

    pub fn euler_characteristic(self, boundary: usize) -> i64 {
        let b = boundary as i64;
        match self {
            Topology::Orientable { genus } => 2 - 2 * i64::from(genus) - b,
            Topology::NonOrientable { crosscaps } => 2 - i64::from(crosscaps) - b,
        }
    }

    pub fn is_orientable(self) -> bool {
        matches!(self, Topology::Orientable { .. })
    }

    /// Number of crosscaps, 0 for orientable surfaces.
    pub fn crosscaps(self) -> u32 {
        match self {
            Topology::Orientable { .. } => 0,
            Topology::NonOrientable { crosscaps } => crosscaps,
        }
    }
}

/// A connected component touching at least one boundary circle.
///
/// Port indices are 1-based. `twists` is present iff the component is
/// orientable and lists the bits of the inputs (ascending) followed by the
/// outputs (ascending).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Component {
    pub inputs: Vec<usize>,
    pub outputs: Vec<usize>,
    pub topology: Topology,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub twists: Option<Vec<bool>>,
}

impl Component {
    pub fn boundary(&self) -> usize {
        self.inputs.len() + self.outputs.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.topology.euler_characteristic(self.boundary())
    }

    /// Smallest port, inputs ordered before outputs at equal index.
    fn sort_key(&self) -> (usize, u8) {
        let i = self.inputs.first().map(|&i| (i, 0));
        let o = self.outputs.first().map(|&o| (o, 1));
        match (i, o) {
            (Some(i), Some(o)) => i.min(o),
            (Some(k), None) | (None, Some(k)) => k,
            (None, None) => unreachable!("open component without ports"),
        }
    }

    /// True when the twist vector is all zeros, i.e. the component is the
    /// image of an oriented cobordism.
    pub fn untwisted(&self) -> bool {
        self.twists
            .as_ref()
            .is_some_and(|tw| tw.iter().all(|&b| !b))
    }

    fn canonicalize(&mut self) {
        self.inputs.sort_unstable();
        self.outputs.sort_unstable();
        if let Some(tw) = &mut self.twists {
            if tw.first() == Some(&true) {
                tw.iter_mut().for_each(|b| *b = !*b);
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ClosedComponent {
    pub topology: Topology,
}

impl ClosedComponent {
    pub fn euler_characteristic(&self) -> i64 {
        self.topology.euler_characteristic(0)
    }
}

/// A morphism of the unoriented cobordism category in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Surface {
    pub arity: Arity,
    pub open: Vec<Component>,
    pub closed: Vec<ClosedComponent>,
}

impl Surface {
    pub fn empty() -> Surface {
        Surface {
            arity: Arity::default(),
            open: Vec::new(),
            closed: Vec::new(),
        }
    }

    /// Builds a surface from arbitrary component data and puts it in
    /// canonical order.
    pub fn from_parts(arity: Arity, open: Vec<Component>, closed: Vec<ClosedComponent>) -> Surface {
        Surface {
            arity,
            open,
            closed,
        }
        .canonicalize()
    }

    pub fn canonicalize(mut self) -> Surface {
        self.open.iter_mut().for_each(Component::canonicalize);
        self.open.sort_by_key(Component::sort_key);
        self.closed.sort();
        self
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.open
            .iter()
            .map(Component::euler_characteristic)
            .sum::<i64>()
            + self
                .closed
                .iter()
                .map(ClosedComponent::euler_characteristic)
                .sum::<i64>()
    }

    pub fn component_count(&self) -> usize {
        self.open.len() + self.closed.len()
    }

    pub fn generator(g: Generator) -> Surface {
        Raw::generator(g).finish().surface
    }

    pub fn tensor(&self, other: &Surface) -> Surface {
        Raw::from(self).tensor(Raw::from(other)).finish().surface
    }

    /// `self ∘ inner`: the outputs of `inner` are glued to the inputs of
    /// `self`.
    pub fn compose(&self, inner: &Surface) -> Result<Surface, SurfaceError> {
        if inner.arity.outputs != self.arity.inputs {
            return Err(SurfaceError {
                produced: inner.arity.outputs,
                expected: self.arity.inputs,
            });
        }
        Ok(Raw::from(self).compose(Raw::from(inner)).finish().surface)
    }

    /// Single-line text form, e.g.
    /// `open{in=[1,2],out=[1],or,g=0,tw=[0,0|0]};closed{nonor,k=2}`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.component_count() == 0 {
            return f.write_str("empty");
        }
        let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        let bits = |v: &[bool]| {
            v.iter()
                .map(|&b| if b { "1" } else { "0" })
                .collect::<Vec<_>>()
                .join(",")
        };
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| {
            if !std::mem::take(&mut first) {
                f.write_str(";")?;
            }
            Ok(())
        };
        for c in &self.open {
            sep(f)?;
            write!(
                f,
                "open{{in=[{}],out=[{}],",
                list(&c.inputs),
                list(&c.outputs)
            )?;
            match (c.topology, &c.twists) {
                (Topology::Orientable { genus }, Some(tw)) => {
                    let (ti, to) = tw.split_at(c.inputs.len());
                    write!(f, "or,g={genus},tw=[{}|{}]}}", bits(ti), bits(to))?;
                }
                (Topology::Orientable { genus }, None) => write!(f, "or,g={genus}}}")?,
                (Topology::NonOrientable { crosscaps }, _) => write!(f, "nonor,k={crosscaps}}}")?,
            }
        }
        for c in &self.closed {
            sep(f)?;
            match c.topology {
                Topology::Orientable { genus } => write!(f, "closed{{or,g={genus}}}")?,
                Topology::NonOrientable { crosscaps } => {
                    write!(f, "closed{{nonor,k={crosscaps}}}")?
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("cannot glue: inner surface has {produced} outputs, outer expects {expected} inputs")]
pub struct SurfaceError {
    pub produced: usize,
    pub expected: usize,
}

/// Normal form of a term.
pub fn normalize(t: &Term) -> Result<Surface, TermError> {
    Ok(normalize_traced(t)?.surface)
}

pub fn surfaces_equal(a: &Surface, b: &Surface) -> bool {
    a == b
}

/// A normal form together with the number of `theta` generators that ended
/// up in each component. The counts are presentation data, not part of the
/// surface's identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TracedSurface {
    pub surface: Surface,
    /// Parallel to `surface.open`.
    pub open_thetas: Vec<usize>,
    /// Parallel to `surface.closed`.
    pub closed_thetas: Vec<usize>,
}

pub fn normalize_traced(t: &Term) -> Result<TracedSurface, TermError> {
    t.arity()?;
    Ok(interpret(t).finish())
}

fn interpret(t: &Term) -> Raw {
    match t {
        Term::Gen(g) => Raw::generator(*g),
        Term::Tensor(a, b) => interpret(a).tensor(interpret(b)),
        Term::Compose(f, g) => interpret(f).compose(interpret(g)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Side {
    In,
    Out,
}

#[derive(Debug, Clone, Copy)]
struct Port {
    side: Side,
    index: usize,
    bit: bool,
}

/// Working form of a component during gluing.
#[derive(Debug, Clone)]
struct Piece {
    ports: Vec<Port>,
    chi: i64,
    orientable: bool,
    thetas: usize,
}

impl Piece {
    fn new(ports: &[(Side, usize, bool)], chi: i64) -> Piece {
        Piece {
            ports: ports
                .iter()
                .map(|&(side, index, bit)| Port { side, index, bit })
                .collect(),
            chi,
            orientable: true,
            thetas: 0,
        }
    }
}

#[derive(Debug, Clone)]
struct Raw {
    arity: Arity,
    pieces: Vec<Piece>,
}

impl From<&Surface> for Raw {
    fn from(s: &Surface) -> Raw {
        let mut pieces = Vec::with_capacity(s.component_count());
        for c in &s.open {
            let bits = c
                .twists
                .clone()
                .unwrap_or_else(|| vec![false; c.boundary()]);
            let ports = c
                .inputs
                .iter()
                .map(|&i| (Side::In, i))
                .chain(c.outputs.iter().map(|&o| (Side::Out, o)))
                .zip(bits)
                .map(|((side, index), bit)| Port { side, index, bit })
                .collect();
            pieces.push(Piece {
                ports,
                chi: c.euler_characteristic(),
                orientable: c.topology.is_orientable(),
                thetas: 0,
            });
        }
        for c in &s.closed {
            pieces.push(Piece {
                ports: Vec::new(),
                chi: c.euler_characteristic(),
                orientable: c.topology.is_orientable(),
                thetas: 0,
            });
        }
        Raw {
            arity: s.arity,
            pieces,
        }
    }
}

impl Raw {
    fn generator(g: Generator) -> Raw {
        use Side::{In, Out};
        let pieces = match g {
            Generator::Mul => vec![Piece::new(
                &[(In, 1, false), (In, 2, false), (Out, 1, false)],
                -1,
            )],
            Generator::Unit => vec![Piece::new(&[(Out, 1, false)], 1)],
            Generator::Comul => vec![Piece::new(
                &[(In, 1, false), (Out, 1, false), (Out, 2, false)],
                -1,
            )],
            Generator::Counit => vec![Piece::new(&[(In, 1, false)], 1)],
            Generator::Swap => vec![
                Piece::new(&[(In, 1, false), (Out, 2, false)], 0),
                Piece::new(&[(In, 2, false), (Out, 1, false)], 0),
            ],
            Generator::Phi => vec![Piece::new(&[(In, 1, false), (Out, 1, true)], 0)],
            Generator::Theta => vec![Piece {
                ports: vec![Port {
                    side: Out,
                    index: 1,
                    bit: false,
                }],
                chi: 0,
                orientable: false,
                thetas: 1,
            }],
            Generator::Id => vec![Piece::new(&[(In, 1, false), (Out, 1, false)], 0)],
            Generator::Empty => vec![],
        };
        Raw {
            arity: g.arity(),
            pieces,
        }
    }

    fn tensor(mut self, other: Raw) -> Raw {
        let shift = self.arity;
        self.pieces.extend(other.pieces.into_iter().map(|mut p| {
            for port in &mut p.ports {
                port.index += match port.side {
                    Side::In => shift.inputs,
                    Side::Out => shift.outputs,
                };
            }
            p
        }));
        self.arity = self.arity + other.arity;
        self
    }

    /// `self ∘ inner`. Arity agreement is the caller's responsibility.
    fn compose(self, inner: Raw) -> Raw {
        debug_assert_eq!(inner.arity.outputs, self.arity.inputs);
        let offset = inner.pieces.len();
        let n = offset + self.pieces.len();
        let mut uf = ParityUnionFind::new(n);
        let mut chi = Vec::with_capacity(n);
        let mut orientable = Vec::with_capacity(n);
        let mut thetas = Vec::with_capacity(n);
        for p in inner.pieces.iter().chain(&self.pieces) {
            chi.push(p.chi);
            orientable.push(p.orientable);
            thetas.push(p.thetas);
        }

        // circle index -> (piece, twist bit) on each side of the seam
        let k = self.arity.inputs;
        let mut lower = vec![(0, false); k + 1];
        let mut upper = vec![(0, false); k + 1];
        for (pi, p) in inner.pieces.iter().enumerate() {
            for port in p.ports.iter().filter(|q| q.side == Side::Out) {
                lower[port.index] = (pi, port.bit);
            }
        }
        for (pi, p) in self.pieces.iter().enumerate() {
            for port in p.ports.iter().filter(|q| q.side == Side::In) {
                upper[port.index] = (offset + pi, port.bit);
            }
        }

        for circle in 1..=k {
            let (a, bit_a) = lower[circle];
            let (b, bit_b) = upper[circle];
            let (ra, pa) = uf.find(a);
            let (rb, pb) = uf.find(b);
            let (ea, eb) = (bit_a ^ pa, bit_b ^ pb);
            if ra != rb {
                let both_orientable = orientable[ra] && orientable[rb];
                // flip the whole of rb's class if the bits disagree
                uf.attach(rb, ra, both_orientable && ea != eb);
                chi[ra] += chi[rb];
                thetas[ra] += thetas[rb];
                orientable[ra] = both_orientable;
            } else if orientable[ra] && ea != eb {
                // a seam closing up against the orientation: Klein handle
                orientable[ra] = false;
            }
        }

        let mut root_slot = vec![usize::MAX; n];
        let mut pieces: Vec<Piece> = Vec::new();
        let sources = inner
            .pieces
            .iter()
            .map(|p| (p, Side::In))
            .chain(self.pieces.iter().map(|p| (p, Side::Out)));
        for (i, (p, keep)) in sources.enumerate() {
            let (root, parity) = uf.find(i);
            if root_slot[root] == usize::MAX {
                root_slot[root] = pieces.len();
                pieces.push(Piece {
                    ports: Vec::new(),
                    chi: chi[root],
                    orientable: orientable[root],
                    thetas: thetas[root],
                });
            }
            let target = &mut pieces[root_slot[root]];
            target
                .ports
                .extend(p.ports.iter().filter(|q| q.side == keep).map(|q| Port {
                    bit: q.bit ^ parity,
                    ..*q
                }));
        }
        Raw {
            arity: Arity::new(inner.arity.inputs, self.arity.outputs),
            pieces,
        }
    }

    fn finish(self) -> TracedSurface {
        let mut open = Vec::new();
        let mut closed = Vec::new();
        for mut p in self.pieces {
            let topology = Topology::from_euler(p.chi, p.ports.len(), p.orientable);
            if p.ports.is_empty() {
                closed.push((ClosedComponent { topology }, p.thetas));
                continue;
            }
            p.ports.sort_by_key(|q| (q.side, q.index));
            let split = p.ports.partition_point(|q| q.side == Side::In);
            let twists = p.orientable.then(|| {
                let flip = p.ports[0].bit;
                p.ports.iter().map(|q| q.bit ^ flip).collect()
            });
            let c = Component {
                inputs: p.ports[..split].iter().map(|q| q.index).collect(),
                outputs: p.ports[split..].iter().map(|q| q.index).collect(),
                topology,
                twists,
            };
            open.push((c, p.thetas));
        }
        open.sort_by_key(|(c, _)| c.sort_key());
        closed.sort();
        let (open, open_thetas) = open.into_iter().unzip();
        let (closed, closed_thetas) = closed.into_iter().unzip();
        TracedSurface {
            surface: Surface {
                arity: self.arity,
                open,
                closed,
            },
            open_thetas,
            closed_thetas,
        }
    }
}

/// Union-find where every node also stores whether its twist bits are
/// flipped relative to its parent.
struct ParityUnionFind {
    parent: Vec<usize>,
    flip: Vec<bool>,
}

impl ParityUnionFind {
    fn new(n: usize) -> Self {
        ParityUnionFind {
            parent: (0..n).collect(),
            flip: vec![false; n],
        }
    }

    /// Returns the root and the parity of `x` relative to it.
    fn find(&mut self, x: usize) -> (usize, bool) {
        let p = self.parent[x];
        if p == x {
            return (x, false);
        }
        let (root, parity) = self.find(p);
        self.parent[x] = root;
        self.flip[x] ^= parity;
        (root, self.flip[x])
    }

    fn attach(&mut self, child_root: usize, root: usize, flip: bool) {
        self.parent[child_root] = root;
        self.flip[child_root] = flip;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::parse;

    fn nf(s: &str) -> Surface {
        normalize(&parse(s).unwrap()).unwrap()
    }

    #[test]
    fn theta_is_a_mobius_band() {
        let s = nf("theta");
        assert_eq!(s.open.len(), 1);
        let c = &s.open[0];
        assert_eq!(c.topology, Topology::NonOrientable { crosscaps: 1 });
        assert!(c.inputs.is_empty());
        assert_eq!(c.outputs, vec![1]);
        assert_eq!(c.twists, None);
        assert_eq!(s.euler_characteristic(), 0);
    }

    #[test]
    fn phi_and_id_cylinders() {
        assert_eq!(nf("phi").to_text(), "open{in=[1],out=[1],or,g=0,tw=[0|1]}");
        assert_eq!(nf("id").to_text(), "open{in=[1],out=[1],or,g=0,tw=[0|0]}");
        assert_ne!(nf("phi"), nf("id"));
        assert_eq!(nf("phi . phi"), nf("id"));
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(
            nf("id * id").to_text(),
            "open{in=[1],out=[1],or,g=0,tw=[0|0]};open{in=[2],out=[2],or,g=0,tw=[0|0]}"
        );
        assert_eq!(
            nf("theta * theta").to_text(),
            "open{in=[],out=[1],nonor,k=1};open{in=[],out=[2],nonor,k=1}"
        );
        let s = nf("mul . (phi * id)");
        assert_eq!(Surface::empty().tensor(&s), s);
        assert_eq!(s.tensor(&Surface::empty()), s);
        assert_eq!(nf("empty"), Surface::empty());
        assert_eq!(nf("empty").to_text(), "empty");
    }

    #[test]
    fn punctured_torus_and_klein_bottle() {
        assert_eq!(
            nf("mul . comul . unit").to_text(),
            "open{in=[],out=[1],or,g=1,tw=[|0]}"
        );
        assert_eq!(
            nf("mul . (phi * id) . comul . unit").to_text(),
            "open{in=[],out=[1],nonor,k=2}"
        );
        assert_eq!(
            nf("mul . (theta * theta)"),
            nf("mul . (phi * id) . comul . unit")
        );
    }

    #[test]
    fn closed_surfaces() {
        let torus = nf("counit . mul . comul . unit");
        assert_eq!(torus.arity, Arity::new(0, 0));
        assert!(torus.open.is_empty());
        assert_eq!(
            torus.closed,
            vec![ClosedComponent {
                topology: Topology::Orientable { genus: 1 }
            }]
        );
        assert_eq!(nf("counit . unit").to_text(), "closed{or,g=0}");
        assert_eq!(nf("counit . theta").to_text(), "closed{nonor,k=1}");
        assert_eq!(
            nf("counit . mul . (phi * id) . comul . unit").to_text(),
            "closed{nonor,k=2}"
        );
        // handle plus crosscap is three crosscaps
        assert_eq!(
            nf("counit . mul . (theta * id) . mul . comul . unit").to_text(),
            "closed{nonor,k=3}"
        );
        assert_eq!(
            nf("(counit . theta) * (counit . unit) * (counit . mul . comul . unit)").to_text(),
            "closed{or,g=0};closed{or,g=1};closed{nonor,k=1}"
        );
    }

    #[test]
    fn twisted_pants_are_distinguished() {
        let left = nf("mul . (phi * id)");
        let right = nf("mul . (id * phi)");
        assert!(!surfaces_equal(&left, &right));
        assert_eq!(left.to_text(), "open{in=[1,2],out=[1],or,g=0,tw=[0,1|1]}");
        assert_eq!(right.to_text(), "open{in=[1,2],out=[1],or,g=0,tw=[0,1|0]}");
        assert!(surfaces_equal(&nf("mul"), &nf("mul . swap")));
    }

    #[test]
    fn component_order_and_swap() {
        assert_eq!(
            nf("swap").to_text(),
            "open{in=[1],out=[2],or,g=0,tw=[0|0]};open{in=[2],out=[1],or,g=0,tw=[0|0]}"
        );
        // a component with only outputs sorts by its first output
        assert_eq!(
            nf("(counit * unit) * id").to_text(),
            "open{in=[1],out=[],or,g=0,tw=[0|]};open{in=[],out=[1],or,g=0,tw=[|0]};open{in=[2],out=[2],or,g=0,tw=[0|0]}"
        );
    }

    #[test]
    fn compose_checks_arity() {
        let err = Surface::generator(Generator::Mul)
            .compose(&Surface::generator(Generator::Counit))
            .unwrap_err();
        assert_eq!(
            err,
            SurfaceError {
                produced: 0,
                expected: 2
            }
        );
    }

    #[test]
    fn surface_level_compose_matches_normalize() {
        let outer = nf("mul . (phi * id)");
        let inner = nf("comul . unit");
        assert_eq!(
            outer.compose(&inner).unwrap(),
            nf("mul . (phi * id) . comul . unit")
        );
    }

    #[test]
    fn canonicalize_is_idempotent() {
        let messy = Surface {
            arity: Arity::new(1, 2),
            open: vec![
                Component {
                    inputs: vec![],
                    outputs: vec![2],
                    topology: Topology::Orientable { genus: 0 },
                    twists: Some(vec![true]),
                },
                Component {
                    inputs: vec![1],
                    outputs: vec![1],
                    topology: Topology::Orientable { genus: 3 },
                    twists: Some(vec![true, false]),
                },
            ],
            closed: vec![
                ClosedComponent {
                    topology: Topology::NonOrientable { crosscaps: 1 },
                },
                ClosedComponent {
                    topology: Topology::Orientable { genus: 2 },
                },
            ],
        };
        let once = messy.canonicalize();
        assert_eq!(once.open[0].inputs, vec![1]);
        assert_eq!(once.open[0].twists, Some(vec![false, true]));
        assert_eq!(once.open[1].twists, Some(vec![false]));
        assert!(once.closed[0].topology.is_orientable());
        assert_eq!(once.clone().canonicalize(), once);
    }

    #[test]
    fn theta_counts_follow_components() {
        let traced =
            normalize_traced(&parse("(mul . (theta * theta)) * theta * (counit . theta)").unwrap())
                .unwrap();
        assert_eq!(traced.open_thetas, vec![2, 1]);
        assert_eq!(traced.closed_thetas, vec![1]);
    }

    #[test]
    fn topology_formulas() {
        assert_eq!(
            Topology::from_euler(-1, 1, true),
            Topology::Orientable { genus: 1 }
        );
        assert_eq!(
            Topology::from_euler(-1, 1, false),
            Topology::NonOrientable { crosscaps: 2 }
        );
        assert_eq!(
            Topology::Orientable { genus: 2 }.euler_characteristic(0),
            -2
        );
        assert_eq!(
            Topology::NonOrientable { crosscaps: 1 }.euler_characteristic(1),
            0
        );
    }
}
