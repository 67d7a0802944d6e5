//! Search for a Möbius element `θ` completing an involutive Frobenius
//! algebra to an extended one.
//!
//! The absorption condition `φ(θ·a) = θ·a` is linear in `θ` and cuts out a
//! subspace `V`. On `V` the condition `θ·θ = k` (with `k` the punctured
//! Klein bottle element) is a system of quadratic equations, one per basis
//! coordinate. It is simplified exactly for as long as possible:
//!
//! * a constant nonzero equation has no solution;
//! * a linear equation is eliminated;
//! * a homogeneous semidefinite equation `Q(t) = 0` forces `t ∈ ker Q`;
//! * a quadratic in one variable is solved by the rational root test,
//!   branching on its roots.
//!
//! When none of these applies with two or more parameters left, the system
//! is examined over `F_p` for `p ∈ {3, 5, 7, 11}`. If the homogenized
//! system has no nonzero point mod `p`, a primitive integer solution could
//! not exist, so there is no rational solution. Otherwise a small box of
//! rationals is searched, and failing that the answer is undetermined.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::algebra::{check_extended, klein_element, FrobeniusAlgebra, Involution, ThetaElement};
use super::matrix::{format_rational, nullspace, ratio, rational, rational_sqrt, Rational};

pub const PRIMES: [u64; 4] = [3, 5, 7, 11];

const MAX_FIELD_POINTS: u64 = 2_000_000;
const MAX_BOX_POINTS: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ThetaSearch {
    /// A verified solution; the lexicographically smallest one when the
    /// solutions found are finitely many. Free parameters are set to zero.
    Found(ThetaElement),
    /// Proven: no rational `θ` exists.
    NoneOverQ,
    Undetermined {
        reason: String,
    },
}

impl fmt::Display for ThetaSearch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThetaSearch::Found(t) => {
                let parts: Vec<_> = t.0.iter().map(format_rational).collect();
                write!(f, "theta = [{}]", parts.join(", "))
            }
            ThetaSearch::NoneOverQ => f.write_str("none over Q"),
            ThetaSearch::Undetermined { reason } => write!(f, "undetermined ({reason})"),
        }
    }
}

pub fn find_theta(a: &FrobeniusAlgebra, phi: &Involution) -> ThetaSearch {
    let n = a.dim();
    let klein = match klein_element(a, phi) {
        Ok(k) => k,
        Err(e) => {
            return ThetaSearch::Undetermined {
                reason: e.to_string(),
            }
        }
    };

    // (φ − id)(e_j · e_i) for each unknown coordinate j, one block per i
    let mut rows = Vec::with_capacity(n * n);
    for i in 0..n {
        let images: Vec<Vec<Rational>> = (0..n)
            .map(|j| {
                let v = a.basis_product(j, i);
                phi.apply(v).iter().zip(v).map(|(x, y)| x - y).collect()
            })
            .collect();
        for r in 0..n {
            rows.push(images.iter().map(|img| img[r].clone()).collect());
        }
    }
    let basis = nullspace(&rows, n);

    let problem = Problem { algebra: a, klein };
    let outcome = problem.solve(Param {
        base: vec![Rational::zero(); n],
        directions: basis,
    });
    match outcome {
        Branch::Found(mut solutions) => {
            solutions.sort();
            let best = ThetaElement(solutions.swap_remove(0));
            debug_assert!(check_extended(a, phi, &best).passed());
            ThetaSearch::Found(best)
        }
        Branch::Nothing => ThetaSearch::NoneOverQ,
        Branch::Undetermined(reason) => ThetaSearch::Undetermined { reason },
    }
}

/// `θ(t) = base + Σ t_a · directions[a]`.
#[derive(Debug, Clone)]
struct Param {
    base: Vec<Rational>,
    directions: Vec<Vec<Rational>>,
}

impl Param {
    fn point(&self, t: &[Rational]) -> Vec<Rational> {
        let mut v = self.base.clone();
        for (ta, w) in t.iter().zip(&self.directions) {
            if ta.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(w) {
                *x += ta * y;
            }
        }
        v
    }

    /// Restricts to `coeffs · t = rhs`; `coeffs` must be nonzero.
    fn restrict(&self, coeffs: &[Rational], rhs: &Rational) -> Param {
        let p = coeffs
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero constraint");
        let cp = &coeffs[p];
        let wp = &self.directions[p];
        let shift = rhs / cp;
        let base = self
            .base
            .iter()
            .zip(wp)
            .map(|(b, w)| b + &shift * w)
            .collect();
        let directions = self
            .directions
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != p)
            .map(|(j, wj)| {
                let f = &coeffs[j] / cp;
                wj.iter().zip(wp).map(|(x, y)| x - &f * y).collect()
            })
            .collect();
        Param { base, directions }
    }
}

/// `Σ quad[a][b] t_a t_b + Σ lin[a] t_a + constant`.
#[derive(Debug, Clone)]
struct Quadratic {
    quad: Vec<Vec<Rational>>,
    lin: Vec<Rational>,
    constant: Rational,
}

impl Quadratic {
    fn quad_is_zero(&self) -> bool {
        self.quad.iter().flatten().all(Zero::is_zero)
    }

    fn lin_is_zero(&self) -> bool {
        self.lin.iter().all(Zero::is_zero)
    }

    /// The single variable this equation depends on, if any.
    fn univariate(&self) -> Option<usize> {
        let m = self.lin.len();
        let a = (0..m).find(|&a| !self.quad[a][a].is_zero())?;
        let others_zero = (0..m).all(|i| {
            (i == a || self.lin[i].is_zero())
                && (0..m).all(|j| (i == a && j == a) || self.quad[i][j].is_zero())
        });
        others_zero.then_some(a)
    }
}

enum Branch {
    Found(Vec<Vec<Rational>>),
    Nothing,
    Undetermined(String),
}

impl Branch {
    fn merge(branches: Vec<Branch>) -> Branch {
        let mut found = Vec::new();
        let mut undetermined = None;
        for b in branches {
            match b {
                Branch::Found(v) => found.extend(v),
                Branch::Undetermined(r) => undetermined = undetermined.or(Some(r)),
                Branch::Nothing => {}
            }
        }
        match (found.is_empty(), undetermined) {
            (false, _) => Branch::Found(found),
            (true, Some(r)) => Branch::Undetermined(r),
            (true, None) => Branch::Nothing,
        }
    }
}

struct Problem<'a> {
    algebra: &'a FrobeniusAlgebra,
    klein: Vec<Rational>,
}

impl Problem<'_> {
    fn equations(&self, p: &Param) -> Vec<Quadratic> {
        let a = self.algebra;
        let m = p.directions.len();
        let ww: Vec<Vec<Vec<Rational>>> = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| a.product(&p.directions[i], &p.directions[j]))
                    .collect()
            })
            .collect();
        let bw: Vec<Vec<Rational>> = p.directions.iter().map(|w| a.product(&p.base, w)).collect();
        let bb = a.product(&p.base, &p.base);
        let two = rational(2);
        (0..a.dim())
            .map(|k| Quadratic {
                quad: (0..m)
                    .map(|i| (0..m).map(|j| ww[i][j][k].clone()).collect())
                    .collect(),
                lin: bw.iter().map(|v| &two * &v[k]).collect(),
                constant: &bb[k] - &self.klein[k],
            })
            .collect()
    }

    fn solve(&self, p: Param) -> Branch {
        let eqs = self.equations(&p);
        let m = p.directions.len();

        if eqs
            .iter()
            .any(|e| e.quad_is_zero() && e.lin_is_zero() && !e.constant.is_zero())
        {
            return Branch::Nothing;
        }
        if let Some(e) = eqs.iter().find(|e| e.quad_is_zero() && !e.lin_is_zero()) {
            return self.solve(p.restrict(&e.lin, &-e.constant.clone()));
        }
        let forced = eqs.iter().find(|e| {
            e.lin_is_zero() && e.constant.is_zero() && !e.quad_is_zero() && semidefinite(&e.quad)
        });
        if let Some(e) = forced {
            let row = e
                .quad
                .iter()
                .find(|r| r.iter().any(|x| !x.is_zero()))
                .expect("nonzero form");
            return self.solve(p.restrict(row, &Rational::zero()));
        }
        if let Some((e, var)) = eqs.iter().find_map(|e| e.univariate().map(|v| (e, v))) {
            let roots = rational_roots(&e.quad[var][var], &e.lin[var], &e.constant);
            let mut unit = vec![Rational::zero(); m];
            unit[var] = Rational::one();
            let branches = roots
                .iter()
                .map(|r| self.solve(p.restrict(&unit, r)))
                .collect();
            return Branch::merge(branches);
        }
        if eqs.iter().all(|e| e.quad_is_zero() && e.lin_is_zero()) {
            return Branch::Found(vec![p.base.clone()]);
        }
        self.fallback(&p, &eqs)
    }

    fn fallback(&self, p: &Param, eqs: &[Quadratic]) -> Branch {
        let m = p.directions.len();
        let integral: Vec<_> = eqs.iter().map(integer_coefficients).collect();
        let mut with_points = Vec::new();
        for prime in PRIMES {
            if prime
                .checked_pow(m as u32 + 1)
                .is_none_or(|n| n > MAX_FIELD_POINTS)
            {
                continue;
            }
            if !has_projective_point(&integral, m, prime) {
                return Branch::Nothing;
            }
            with_points.push(prime.to_string());
        }

        let found = self.box_search(p);
        if !found.is_empty() {
            return Branch::Found(found);
        }
        Branch::Undetermined(format!(
            "{m} free parameters; points mod {} and no small rational solution",
            if with_points.is_empty() {
                "none checked".to_string()
            } else {
                with_points.join(", ")
            }
        ))
    }

    fn box_search(&self, p: &Param) -> Vec<Vec<Rational>> {
        let mut values = vec![Rational::zero()];
        for num in 1..=3 {
            for den in 1..=3 {
                let q = ratio(num, den);
                if !values.contains(&q) {
                    values.push(-q.clone());
                    values.push(q);
                }
            }
        }
        let m = p.directions.len();
        if values
            .len()
            .checked_pow(m as u32)
            .is_none_or(|n| n > MAX_BOX_POINTS)
        {
            return Vec::new();
        }
        let mut found: Vec<Vec<Rational>> = Vec::new();
        let mut digits = vec![0usize; m];
        loop {
            let t: Vec<_> = digits.iter().map(|&d| values[d].clone()).collect();
            let theta = p.point(&t);
            if self.algebra.product(&theta, &theta) == self.klein && !found.contains(&theta) {
                found.push(theta);
            }
            let Some(pos) = digits.iter().position(|&d| d + 1 < values.len()) else {
                break;
            };
            digits[pos] += 1;
            digits[..pos].iter_mut().for_each(|d| *d = 0);
        }
        found
    }
}

/// Rational roots of `a t² + b t + c` with `a ≠ 0`.
fn rational_roots(a: &Rational, b: &Rational, c: &Rational) -> Vec<Rational> {
    let disc = b * b - rational(4) * a * c;
    let Some(s) = rational_sqrt(&disc) else {
        return Vec::new();
    };
    let two_a = rational(2) * a;
    let mut roots = vec![(-b - &s) / &two_a, (-b + &s) / &two_a];
    roots.sort();
    roots.dedup();
    roots
}

/// Whether the symmetric form is positive or negative semidefinite, by
/// symmetric elimination.
fn semidefinite(form: &[Vec<Rational>]) -> bool {
    let mut m = form.to_vec();
    let n = m.len();
    let mut sign = None;
    loop {
        let Some(i) = (0..n).find(|&i| !m[i][i].is_zero()) else {
            return m.iter().flatten().all(Zero::is_zero);
        };
        let d = m[i][i].clone();
        let positive = d.is_positive();
        if sign.is_some_and(|s| s != positive) {
            return false;
        }
        sign = Some(positive);
        let pivot_row = m[i].clone();
        for row in m.iter_mut() {
            let f = &row[i] / &d;
            if f.is_zero() {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
        }
    }
}

/// `(quad, lin, constant)` scaled to integers.
struct IntegerQuadratic {
    quad: Vec<Vec<BigInt>>,
    lin: Vec<BigInt>,
    constant: BigInt,
}

fn integer_coefficients(e: &Quadratic) -> IntegerQuadratic {
    let lcm = e
        .quad
        .iter()
        .flatten()
        .chain(&e.lin)
        .chain([&e.constant])
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let scale = |q: &Rational| (q * Rational::from_integer(lcm.clone())).to_integer();
    IntegerQuadratic {
        quad: e
            .quad
            .iter()
            .map(|r| r.iter().map(scale).collect())
            .collect(),
        lin: e.lin.iter().map(scale).collect(),
        constant: scale(&e.constant),
    }
}

/// Whether the homogenized system has a nonzero solution over `F_p`.
fn has_projective_point(eqs: &[IntegerQuadratic], m: usize, p: u64) -> bool {
    let p = p as i64;
    let reduce = |x: &BigInt| {
        x.mod_floor(&BigInt::from(p))
            .to_i64()
            .expect("small residue")
    };
    let reduced: Vec<(Vec<Vec<i64>>, Vec<i64>, i64)> = eqs
        .iter()
        .map(|e| {
            (
                e.quad
                    .iter()
                    .map(|r| r.iter().map(reduce).collect())
                    .collect(),
                e.lin.iter().map(reduce).collect(),
                reduce(&e.constant),
            )
        })
        .collect();

    // point = (t_0, ..., t_{m-1}, s)
    let mut point = vec![0i64; m + 1];
    loop {
        let Some(pos) = point.iter().position(|&d| d + 1 < p) else {
            return false;
        };
        point[pos] += 1;
        point[..pos].iter_mut().for_each(|d| *d = 0);

        let (t, s) = point.split_at(m);
        let s = s[0];
        let vanishes = reduced.iter().all(|(q, l, c)| {
            let mut acc = s * s % p * c % p;
            for a in 0..m {
                if t[a] == 0 {
                    continue;
                }
                acc = (acc + s * l[a] % p * t[a]) % p;
                for b in 0..m {
                    acc = (acc + q[a][b] * t[a] % p * t[b]) % p;
                }
            }
            acc == 0
        });
        if vanishes {
            return true;
        }
    }
}
