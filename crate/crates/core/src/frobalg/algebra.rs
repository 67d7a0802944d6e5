use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use super::matrix::{format_rational, LinearMap, Rational};
use crate::error::AlgebraError;

/// Outcome of one axiom check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    fn push(&mut self, name: &'static str, witness: Option<String>) {
        self.checks.push(Check {
            name,
            passed: witness.is_none(),
            witness,
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn extend(&mut self, other: ValidationReport) {
        self.checks.extend(other.checks);
    }

    pub(crate) fn into_result(self) -> Result<(), AlgebraError> {
        if self.passed() {
            return Ok(());
        }
        let names: Vec<_> = self.failures().map(|c| c.name).collect();
        Err(AlgebraError::Validation(names.join(", ")))
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.checks.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{} {}", if c.passed { "pass" } else { "FAIL" }, c.name)?;
            if let Some(w) = &c.witness {
                write!(f, "  ({w})")?;
            }
        }
        Ok(())
    }
}

/// Finite-dimensional commutative algebra with counit, given by structure
/// constants: `e_i · e_j = Σ_k mul[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusAlgebra {
    basis: Vec<String>,
    mul: Vec<Vec<Vec<Rational>>>,
    unit: Vec<Rational>,
    counit: Vec<Rational>,
}

impl FrobeniusAlgebra {
    /// Checks shapes only; use [`validate_algebra`] for the axioms.
    pub fn new(
        basis: Vec<String>,
        mul: Vec<Vec<Vec<Rational>>>,
        unit: Vec<Rational>,
        counit: Vec<Rational>,
    ) -> Result<Self, AlgebraError> {
        let n = basis.len();
        if n == 0 {
            return Err(AlgebraError::Malformed("dimension must be positive".into()));
        }
        let cube = mul.len() == n
            && mul
                .iter()
                .all(|row| row.len() == n && row.iter().all(|v| v.len() == n));
        if !cube {
            return Err(AlgebraError::Malformed(format!("mul must be {n}×{n}×{n}")));
        }
        if unit.len() != n || counit.len() != n {
            return Err(AlgebraError::Malformed(format!(
                "unit and counit must have {n} entries"
            )));
        }
        Ok(FrobeniusAlgebra {
            basis,
            mul,
            unit,
            counit,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn unit(&self) -> &[Rational] {
        &self.unit
    }

    pub fn counit(&self) -> &[Rational] {
        &self.counit
    }

    pub fn structure_constants(&self) -> &[Vec<Vec<Rational>>] {
        &self.mul
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[Rational] {
        &self.mul[i][j]
    }

    pub fn product(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (i, ai) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, bj) in b.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let s = ai * bj;
                for (k, c) in self.mul[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &s * c;
                    }
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::one();
        v
    }

    pub fn counit_of(&self, a: &[Rational]) -> Rational {
        a.iter().zip(&self.counit).map(|(x, y)| x * y).sum()
    }

    /// `g[i][j] = ε(e_i · e_j)`.
    pub fn pairing(&self) -> LinearMap {
        let n = self.dim();
        LinearMap::from_fn(n, n, |i, j| self.counit_of(&self.mul[i][j]))
    }

    /// Multiplication as an `n × n²` matrix.
    pub fn mul_matrix(&self) -> LinearMap {
        let n = self.dim();
        LinearMap::from_fn(n, n * n, |k, ij| self.mul[ij / n][ij % n][k].clone())
    }

    pub fn format_vector(&self, v: &[Rational]) -> String {
        let terms: Vec<_> = v
            .iter()
            .zip(&self.basis)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, b)| format!("{}·{}", format_rational(c), b))
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// Checks commutativity, associativity, unitality and nondegeneracy of the
/// pairing. Failures carry a witness.
pub fn validate_algebra(a: &FrobeniusAlgebra) -> ValidationReport {
    let n = a.dim();
    let names = &a.basis;
    let mut report = ValidationReport::default();

    let commutative = (0..n)
        .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
        .find(|&(i, j, k)| a.mul[i][j][k] != a.mul[j][i][k])
        .map(|(i, j, k)| {
            format!(
                "c[{i}][{j}][{k}] ≠ c[{j}][{i}][{k}] for {}, {}",
                names[i], names[j]
            )
        });
    report.push("commutativity", commutative);

    let associative = (0..n)
        .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |l| (i, j, l))))
        .find(|&(i, j, l)| {
            let left = a.product(&a.mul[i][j], &a.basis_vector(l));
            let right = a.product(&a.basis_vector(i), &a.mul[j][l]);
            left != right
        })
        .map(|(i, j, l)| {
            format!(
                "({0}·{1})·{2} ≠ {0}·({1}·{2})",
                names[i], names[j], names[l]
            )
        });
    report.push("associativity", associative);

    let unital = (0..n)
        .find(|&i| a.product(&a.unit, &a.basis_vector(i)) != a.basis_vector(i))
        .map(|i| format!("1·{0} ≠ {0}", names[i]));
    report.push("unit", unital);

    let nondegenerate = a
        .pairing()
        .inverse()
        .is_none()
        .then(|| "pairing ε(e_i·e_j) is singular".to_string());
    report.push("nondegeneracy", nondegenerate);

    report
}

/// Comultiplication reconstructed from the pairing:
/// `Δ(a) = Σ_{i,j} (g⁻¹)[i][j] (a·e_i) ⊗ e_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedCoalgebra {
    /// `comul[k][i][j]` is the coefficient of `e_i ⊗ e_j` in `Δ(e_k)`.
    pub comul: Vec<Vec<Vec<Rational>>>,
    pub pairing_inverse: LinearMap,
}

impl DerivedCoalgebra {
    /// Comultiplication as an `n² × n` matrix.
    pub fn matrix(&self) -> LinearMap {
        let n = self.comul.len();
        LinearMap::from_fn(n * n, n, |ij, k| self.comul[k][ij / n][ij % n].clone())
    }
}

pub fn derive_comultiplication(a: &FrobeniusAlgebra) -> Result<DerivedCoalgebra, AlgebraError> {
    let n = a.dim();
    let ginv = a.pairing().inverse().ok_or(AlgebraError::SingularPairing)?;
    let mut comul = vec![vec![vec![Rational::zero(); n]; n]; n];
    for (k, slot) in comul.iter_mut().enumerate() {
        for i in 0..n {
            // a·e_i expanded in the basis gives the first tensor factor
            let left = a.basis_product(k, i);
            for (j, w) in (0..n).map(|j| (j, ginv.get(i, j))) {
                if w.is_zero() {
                    continue;
                }
                for (p, c) in left.iter().enumerate() {
                    if !c.is_zero() {
                        slot[p][j] += w * c;
                    }
                }
            }
        }
    }
    Ok(DerivedCoalgebra {
        comul,
        pairing_inverse: ginv,
    })
}

/// Algebra self-map, stored as a matrix whose column `c` is `φ(e_c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Involution {
    matrix: LinearMap,
}

impl Involution {
    pub fn new(matrix: LinearMap) -> Result<Self, AlgebraError> {
        if matrix.rows() != matrix.cols() {
            return Err(AlgebraError::Malformed("involution must be square".into()));
        }
        Ok(Involution { matrix })
    }

    pub fn identity(dim: usize) -> Self {
        Involution {
            matrix: LinearMap::identity(dim),
        }
    }

    /// The involution exchanging basis vectors according to `perm`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        Involution {
            matrix: LinearMap::from_fn(n, n, |r, c| {
                if perm[c] == r {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }),
        }
    }

    pub fn matrix(&self) -> &LinearMap {
        &self.matrix
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.matrix.apply(v)
    }
}

/// Image of the Möbius band.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ThetaElement(pub Vec<Rational>);

/// The five involution identities. The multiplicativity condition is read
/// as `m ∘ (φ ⊗ φ) = φ ∘ m`.
pub fn validate_involution(a: &FrobeniusAlgebra, phi: &Involution) -> ValidationReport {
    let n = a.dim();
    let mut report = ValidationReport::default();
    if phi.matrix.rows() != n {
        report.push(
            "dimension",
            Some(format!(
                "involution is {0}×{0}, algebra has dimension {n}",
                phi.matrix.rows()
            )),
        );
        return report;
    }
    let p = &phi.matrix;
    let names = &a.basis;

    let square = (0..n)
        .find(|&i| p.apply(&p.column_vec(i)) != a.basis_vector(i))
        .map(|i| format!("φ(φ({})) ≠ {}", names[i], names[i]));
    report.push("φ∘φ = id", square);

    let multiplicative = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| {
            a.product(&p.column_vec(i), &p.column_vec(j)) != p.apply(a.basis_product(i, j))
        })
        .map(|(i, j)| format!("φ({0})·φ({1}) ≠ φ({0}·{1})", names[i], names[j]));
    report.push("m∘(φ⊗φ) = φ∘m", multiplicative);

    let unit = (p.apply(&a.unit) != a.unit)
        .then(|| format!("φ(1) = {}", a.format_vector(&p.apply(&a.unit))));
    report.push("φ∘u = u", unit);

    let comul = match derive_comultiplication(a) {
        Ok(d) => {
            let dm = d.matrix();
            let lhs = dm.compose(p);
            let rhs = p.kron(p).compose(&dm);
            (0..n)
                .find(|&i| lhs.column_vec(i) != rhs.column_vec(i))
                .map(|i| format!("Δ(φ({0})) ≠ (φ⊗φ)(Δ({0}))", names[i]))
        }
        Err(e) => Some(e.to_string()),
    };
    report.push("Δ∘φ = (φ⊗φ)∘Δ", comul);

    let counit = (0..n)
        .find(|&i| a.counit_of(&p.column_vec(i)) != a.counit[i])
        .map(|i| {
            format!(
                "ε(φ({})) = {} ≠ {}",
                names[i],
                format_rational(&a.counit_of(&p.column_vec(i))),
                format_rational(&a.counit[i])
            )
        });
    report.push("ε∘φ = ε", counit);

    report
}

/// `m ∘ (φ ⊗ id) ∘ Δ ∘ u`, the punctured Klein bottle as an element.
pub fn klein_element(
    a: &FrobeniusAlgebra,
    phi: &Involution,
) -> Result<Vec<Rational>, AlgebraError> {
    let d = derive_comultiplication(a)?.matrix();
    let k = a
        .mul_matrix()
        .compose(&phi.matrix.kron(&LinearMap::identity(a.dim())))
        .compose(&d)
        .apply(&a.unit);
    Ok(k)
}

/// Checks `φ(θ·e_i) = θ·e_i` for every basis vector and `θ·θ` equal to
/// the punctured Klein bottle element.
pub fn check_extended(
    a: &FrobeniusAlgebra,
    phi: &Involution,
    theta: &ThetaElement,
) -> ValidationReport {
    let n = a.dim();
    let mut report = ValidationReport::default();
    if theta.0.len() != n {
        report.push(
            "dimension",
            Some(format!(
                "theta has {} entries, algebra has dimension {n}",
                theta.0.len()
            )),
        );
        return report;
    }
    let absorbs = (0..n)
        .find(|&i| {
            let v = a.product(&theta.0, &a.basis_vector(i));
            phi.apply(&v) != v
        })
        .map(|i| format!("φ(θ·{0}) ≠ θ·{0}", a.basis[i]));
    report.push("m∘(θ⊗id) = φ∘m∘(θ⊗id)", absorbs);

    let square = match klein_element(a, phi) {
        Ok(k) => {
            let sq = a.product(&theta.0, &theta.0);
            (sq != k).then(|| {
                format!(
                    "θ·θ = {} but m∘(φ⊗id)∘Δ∘u = {}",
                    a.format_vector(&sq),
                    a.format_vector(&k)
                )
            })
        }
        Err(e) => Some(e.to_string()),
    };
    report.push("m∘(θ⊗θ) = m∘(φ⊗id)∘Δ∘u", square);
    report
}
