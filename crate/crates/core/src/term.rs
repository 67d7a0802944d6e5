//! Generator alphabet and term syntax for cobordism morphisms.
//!
//! Concrete syntax:
//!
//! ```text
//! term := comp
//! comp := tens { "." tens }
//! tens := atom { "*" atom }
//! atom := "mul" | "unit" | "comul" | "counit" | "swap" | "phi" | "theta"
//!       | "id" | "empty" | "(" term ")"
//! ```
//!
//! `f . g` is `f ∘ g`: `g` is applied first. `*` is the disjoint union and
//! binds tighter than `.`. Both operators associate to the left.

use std::fmt;

use serde::Serialize;

use crate::error::TermError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Generator {
    /// Pair of pants, two circles in, one out.
    Mul,
    /// Disk (cup), creates a circle.
    Unit,
    /// Reverse pair of pants.
    Comul,
    /// Disk (cap), destroys a circle.
    Counit,
    /// Transposition of two circles.
    Swap,
    /// Cylinder with orientation-reversing boundary identifications.
    Phi,
    /// Möbius band, a crosscap ending in one circle.
    Theta,
    Id,
    /// Identity of the monoidal unit.
    Empty,
}

impl Generator {
    pub const ALL: [Generator; 9] = [
        Generator::Mul,
        Generator::Unit,
        Generator::Comul,
        Generator::Counit,
        Generator::Swap,
        Generator::Phi,
        Generator::Theta,
        Generator::Id,
        Generator::Empty,
    ];

    pub fn arity(self) -> Arity {
        let (inputs, outputs) = match self {
            Generator::Mul => (2, 1),
            Generator::Unit => (0, 1),
            Generator::Comul => (1, 2),
            Generator::Counit => (1, 0),
            Generator::Swap => (2, 2),
            Generator::Phi => (1, 1),
            Generator::Theta => (0, 1),
            Generator::Id => (1, 1),
            Generator::Empty => (0, 0),
        };
        Arity::new(inputs, outputs)
    }

    pub fn keyword(self) -> &'static str {
        match self {
            Generator::Mul => "mul",
            Generator::Unit => "unit",
            Generator::Comul => "comul",
            Generator::Counit => "counit",
            Generator::Swap => "swap",
            Generator::Phi => "phi",
            Generator::Theta => "theta",
            Generator::Id => "id",
            Generator::Empty => "empty",
        }
    }

    pub fn from_keyword(word: &str) -> Option<Generator> {
        Generator::ALL.into_iter().find(|g| g.keyword() == word)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// Number of source and target circles of a morphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct Arity {
    pub inputs: usize,
    pub outputs: usize,
}

impl Arity {
    pub const fn new(inputs: usize, outputs: usize) -> Self {
        Arity { inputs, outputs }
    }
}

impl std::ops::Add for Arity {
    type Output = Arity;

    fn add(self, rhs: Arity) -> Arity {
        Arity::new(self.inputs + rhs.inputs, self.outputs + rhs.outputs)
    }
}

impl fmt::Display for Arity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.inputs, self.outputs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Gen(Generator),
    /// `Compose(f, g)` is `f ∘ g`.
    Compose(Box<Term>, Box<Term>),
    /// `Tensor(a, b)`: the boundary circles of `a` come first.
    Tensor(Box<Term>, Box<Term>),
}

impl From<Generator> for Term {
    fn from(g: Generator) -> Self {
        Term::Gen(g)
    }
}

impl Term {
    pub fn compose(outer: impl Into<Term>, inner: impl Into<Term>) -> Term {
        Term::Compose(Box::new(outer.into()), Box::new(inner.into()))
    }

    pub fn tensor(top: impl Into<Term>, bottom: impl Into<Term>) -> Term {
        Term::Tensor(Box::new(top.into()), Box::new(bottom.into()))
    }

    /// Identity on `n` circles: `id * ... * id`, or `empty` for `n = 0`.
    pub fn ids(n: usize) -> Term {
        Term::tensor_all(std::iter::repeat_n(Term::Gen(Generator::Id), n))
    }

    /// Left-nested tensor of the given terms; `empty` when there are none.
    pub fn tensor_all(terms: impl IntoIterator<Item = Term>) -> Term {
        terms
            .into_iter()
            .reduce(Term::tensor)
            .unwrap_or(Term::Gen(Generator::Empty))
    }

    /// `first` is applied first, so the result reads `... . second . first`.
    pub fn compose_in_order(first: Term, rest: impl IntoIterator<Item = Term>) -> Term {
        rest.into_iter()
            .fold(first, |acc, next| Term::compose(next, acc))
    }

    /// Computes the arity bottom-up, failing on the first composition whose
    /// sides do not match.
    pub fn arity(&self) -> Result<Arity, TermError> {
        match self {
            Term::Gen(g) => Ok(g.arity()),
            Term::Tensor(a, b) => Ok(a.arity()? + b.arity()?),
            Term::Compose(f, g) => {
                let (af, ag) = (f.arity()?, g.arity()?);
                if ag.outputs != af.inputs {
                    return Err(TermError::ArityMismatch {
                        outer: f.render(),
                        inner: g.render(),
                        produced: ag.outputs,
                        expected: af.inputs,
                    });
                }
                Ok(Arity::new(ag.inputs, af.outputs))
            }
        }
    }

    /// Canonical fully parenthesized text.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out);
        out
    }

    fn render_into(&self, out: &mut String) {
        match self {
            Term::Gen(g) => out.push_str(g.keyword()),
            Term::Compose(a, b) | Term::Tensor(a, b) => {
                let op = if matches!(self, Term::Compose(..)) {
                    " . "
                } else {
                    " * "
                };
                out.push('(');
                a.render_into(out);
                out.push_str(op);
                b.render_into(out);
                out.push(')');
            }
        }
    }

    /// Calls `visit` on every generator occurrence, left to right.
    pub fn for_each_generator(&self, visit: &mut impl FnMut(Generator)) {
        match self {
            Term::Gen(g) => visit(*g),
            Term::Compose(a, b) | Term::Tensor(a, b) => {
                a.for_each_generator(visit);
                b.for_each_generator(visit);
            }
        }
    }

    pub fn contains(&self, generator: Generator) -> bool {
        let mut found = false;
        self.for_each_generator(&mut |g| found |= g == generator);
        found
    }

    pub fn count(&self, generator: Generator) -> usize {
        let mut n = 0;
        self.for_each_generator(&mut |g| n += usize::from(g == generator));
        n
    }

    /// Replaces every occurrence of `from` by `to`. Arities must agree.
    pub fn substitute(&self, from: Generator, to: &Term) -> Term {
        match self {
            Term::Gen(g) if *g == from => to.clone(),
            Term::Gen(g) => Term::Gen(*g),
            Term::Compose(a, b) => Term::compose(a.substitute(from, to), b.substitute(from, to)),
            Term::Tensor(a, b) => Term::tensor(a.substitute(from, to), b.substitute(from, to)),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Term::Gen(_) => 1,
            Term::Compose(a, b) | Term::Tensor(a, b) => 1 + a.depth().max(b.depth()),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl std::str::FromStr for Term {
    type Err = TermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

/// Parses and arity-checks a term.
pub fn parse(text: &str) -> Result<Term, TermError> {
    let mut parser = Parser { text, pos: 0 };
    let term = parser.comp()?;
    parser.skip_ws();
    if parser.pos < text.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    term.arity()?;
    Ok(term)
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> TermError {
        TermError::Syntax {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn eat(&mut self, symbol: char) -> bool {
        self.skip_ws();
        if self.text[self.pos..].starts_with(symbol) {
            self.pos += symbol.len_utf8();
            true
        } else {
            false
        }
    }

    fn comp(&mut self) -> Result<Term, TermError> {
        let mut acc = self.tens()?;
        while self.eat('.') {
            acc = Term::compose(acc, self.tens()?);
        }
        Ok(acc)
    }

    fn tens(&mut self) -> Result<Term, TermError> {
        let mut acc = self.atom()?;
        while self.eat('*') {
            acc = Term::tensor(acc, self.atom()?);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Term, TermError> {
        self.skip_ws();
        if self.eat('(') {
            let inner = self.comp()?;
            if !self.eat(')') {
                return Err(self.error("expected `)`"));
            }
            return Ok(inner);
        }
        let rest = &self.text[self.pos..];
        let len = rest
            .find(|c: char| !c.is_ascii_alphabetic())
            .unwrap_or(rest.len());
        if len == 0 {
            return Err(match rest.chars().next() {
                Some(c) => self.error(format!("unexpected `{c}`")),
                None => self.error("unexpected end of input"),
            });
        }
        let word = &rest[..len];
        match Generator::from_keyword(word) {
            Some(g) => {
                self.pos += len;
                Ok(Term::Gen(g))
            }
            None => Err(self.error(format!("unknown generator `{word}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    fn g(x: Generator) -> Term {
        Term::Gen(x)
    }

    #[test]
    fn parses_composition() {
        assert_eq!(parse("phi . phi").unwrap(), Term::compose(Phi, Phi));
    }

    #[test]
    fn parses_tensor_under_composition() {
        assert_eq!(
            parse("mul . (theta * theta)").unwrap(),
            Term::compose(Mul, Term::tensor(Theta, Theta))
        );
        // `*` binds tighter than `.`
        assert_eq!(
            parse("mul . theta * theta").unwrap(),
            parse("mul . (theta * theta)").unwrap()
        );
    }

    #[test]
    fn composition_is_left_nested() {
        assert_eq!(
            parse("counit . mul . comul").unwrap(),
            Term::compose(Term::compose(Counit, Mul), Comul)
        );
    }

    #[test]
    fn unbalanced_parenthesis() {
        let err = parse("mul . (unit * id").unwrap_err();
        assert!(
            matches!(err, TermError::Syntax { offset: 16, .. }),
            "{err:?}"
        );
    }

    #[test]
    fn syntax_error_offsets() {
        assert!(matches!(
            parse("mul . + id"),
            Err(TermError::Syntax { offset: 6, .. })
        ));
        assert!(matches!(
            parse("mull"),
            Err(TermError::Syntax { offset: 0, .. })
        ));
        assert!(matches!(
            parse("id id"),
            Err(TermError::Syntax { offset: 3, .. })
        ));
        assert!(matches!(
            parse(""),
            Err(TermError::Syntax { offset: 0, .. })
        ));
        assert!(matches!(
            parse("id . "),
            Err(TermError::Syntax { offset: 5, .. })
        ));
    }

    #[test]
    fn arity_mismatch_names_composition() {
        assert!(parse("counit . mul").is_ok());
        match parse("mul . counit").unwrap_err() {
            TermError::ArityMismatch {
                outer,
                inner,
                produced,
                expected,
            } => {
                assert_eq!((outer.as_str(), inner.as_str()), ("mul", "counit"));
                assert_eq!((produced, expected), (0, 2));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn arities() {
        assert_eq!(Mul.arity(), Arity::new(2, 1));
        assert_eq!(Term::tensor(Id, Id).arity().unwrap(), Arity::new(2, 2));
        assert_eq!(
            Term::compose(Mul, Term::tensor(Theta, Id)).arity().unwrap(),
            Arity::new(1, 1)
        );
        assert_eq!(g(Empty).arity().unwrap(), Arity::new(0, 0));
    }

    #[test]
    fn renders_fully_parenthesized() {
        assert_eq!(Term::compose(Phi, Phi).render(), "(phi . phi)");
        assert_eq!(Term::tensor(Theta, Theta).render(), "(theta * theta)");
        assert_eq!(
            Term::compose(Mul, Term::tensor(Phi, Id)).render(),
            "(mul . (phi * id))"
        );
    }

    #[test]
    fn whitespace_is_insignificant() {
        assert_eq!(
            parse("  mul.(phi*id)\n.comul . unit ").unwrap(),
            parse("mul . (phi * id) . comul . unit").unwrap()
        );
    }

    #[test]
    fn ids_and_substitution() {
        assert_eq!(Term::ids(0), g(Empty));
        assert_eq!(Term::ids(3).arity().unwrap(), Arity::new(3, 3));
        let t = parse("mul . (phi * phi)").unwrap();
        assert_eq!(t.substitute(Phi, &g(Id)), parse("mul . (id * id)").unwrap());
        assert_eq!(t.count(Phi), 2);
    }
}
