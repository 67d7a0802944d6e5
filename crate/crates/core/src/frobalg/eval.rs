use num_traits::One;

use super::algebra::{
    check_extended, derive_comultiplication, validate_algebra, validate_involution,
    FrobeniusAlgebra, Involution, ThetaElement,
};
use super::matrix::{LinearMap, Rational};
use crate::error::{AlgebraError, Result};
use crate::term::{Generator, Term};

/// A validated involutive (optionally extended) Frobenius algebra with the
/// matrices of every generator precomputed.
#[derive(Debug, Clone)]
pub struct Tqft {
    dim: usize,
    mul: LinearMap,
    unit: LinearMap,
    comul: LinearMap,
    counit: LinearMap,
    swap: LinearMap,
    phi: LinearMap,
    theta: Option<LinearMap>,
}

impl Tqft {
    /// Validates the algebra, the involution and, when given, the theta
    /// element.
    pub fn new(
        algebra: &FrobeniusAlgebra,
        phi: &Involution,
        theta: Option<&ThetaElement>,
    ) -> Result<Self, AlgebraError> {
        let mut report = validate_algebra(algebra);
        if report.passed() {
            report.extend(validate_involution(algebra, phi));
        }
        if let Some(t) = theta.filter(|_| report.passed()) {
            report.extend(check_extended(algebra, phi, t));
        }
        report.into_result()?;

        let n = algebra.dim();
        let comul = derive_comultiplication(algebra)?.matrix();
        Ok(Tqft {
            dim: n,
            mul: algebra.mul_matrix(),
            unit: LinearMap::column(algebra.unit()),
            comul,
            counit: LinearMap::from_rows(vec![algebra.counit().to_vec()]),
            swap: LinearMap::from_fn(n * n, n * n, |r, c| {
                if r == (c % n) * n + c / n {
                    Rational::one()
                } else {
                    Rational::default()
                }
            }),
            phi: phi.matrix().clone(),
            theta: theta.map(|t| LinearMap::column(&t.0)),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn has_theta(&self) -> bool {
        self.theta.is_some()
    }

    pub fn generator(&self, g: Generator) -> Result<LinearMap, AlgebraError> {
        Ok(match g {
            Generator::Mul => self.mul.clone(),
            Generator::Unit => self.unit.clone(),
            Generator::Comul => self.comul.clone(),
            Generator::Counit => self.counit.clone(),
            Generator::Swap => self.swap.clone(),
            Generator::Phi => self.phi.clone(),
            Generator::Theta => self.theta.clone().ok_or(AlgebraError::MissingTheta)?,
            Generator::Id => LinearMap::identity(self.dim),
            Generator::Empty => LinearMap::identity(1),
        })
    }

    /// Matrix of `t`, of shape `dim^outputs × dim^inputs`.
    pub fn evaluate(&self, t: &Term) -> Result<LinearMap> {
        t.arity()?;
        if t.contains(Generator::Theta) && self.theta.is_none() {
            return Err(AlgebraError::MissingTheta.into());
        }
        Ok(self.eval(t))
    }

    fn eval(&self, t: &Term) -> LinearMap {
        match t {
            Term::Gen(g) => self.generator(*g).expect("theta presence checked"),
            Term::Compose(f, g) => self.eval(f).compose(&self.eval(g)),
            Term::Tensor(a, b) => self.eval(a).kron(&self.eval(b)),
        }
    }
}

/// One-shot evaluation; validates the data on every call.
pub fn evaluate(
    t: &Term,
    algebra: &FrobeniusAlgebra,
    phi: &Involution,
    theta: Option<&ThetaElement>,
) -> Result<LinearMap> {
    Tqft::new(algebra, phi, theta)?.evaluate(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::frobalg::examples::{cp1, qq_swap, rationals};
    use crate::frobalg::matrix::rational;
    use crate::term::parse;

    fn t(s: &str) -> Term {
        parse(s).unwrap()
    }

    #[test]
    fn identity_and_torus() {
        let z = Tqft::new(&cp1(), &Involution::identity(2), None).unwrap();
        assert_eq!(z.evaluate(&t("id")).unwrap(), LinearMap::identity(2));
        let torus = z.evaluate(&t("counit . mul . comul . unit")).unwrap();
        assert_eq!(torus, LinearMap::from_rows(vec![vec![rational(2)]]));
        let klein = z
            .evaluate(&t("counit . mul . (phi*id) . comul . unit"))
            .unwrap();
        assert_eq!(klein, torus);
    }

    #[test]
    fn swap_is_transposition() {
        let z = Tqft::new(&cp1(), &Involution::identity(2), None).unwrap();
        let s = z.generator(Generator::Swap).unwrap();
        // e_0 ⊗ e_1 (index 1) goes to e_1 ⊗ e_0 (index 2)
        assert_eq!(s.get(2, 1), &rational(1));
        assert_eq!(s.compose(&s), LinearMap::identity(4));
    }

    #[test]
    fn theta_required() {
        let z = Tqft::new(&rationals(), &Involution::identity(1), None).unwrap();
        assert!(matches!(
            z.evaluate(&t("theta")),
            Err(Error::Algebra(AlgebraError::MissingTheta))
        ));
        let z = Tqft::new(
            &rationals(),
            &Involution::identity(1),
            Some(&ThetaElement(vec![rational(-1)])),
        )
        .unwrap();
        assert_eq!(
            z.evaluate(&t("counit . theta")).unwrap().get(0, 0),
            &rational(-1)
        );
    }

    #[test]
    fn invalid_data_rejected() {
        let bad_theta = ThetaElement(vec![rational(0), rational(0)]);
        let err = Tqft::new(&cp1(), &Involution::identity(2), Some(&bad_theta)).unwrap_err();
        assert!(
            matches!(err, AlgebraError::Validation(ref s) if s.contains("θ⊗θ")),
            "{err}"
        );
        let (a, _) = qq_swap();
        let neg = Involution::new(LinearMap::from_rows(vec![
            vec![rational(1), rational(0)],
            vec![rational(0), rational(-1)],
        ]))
        .unwrap();
        assert!(Tqft::new(&a, &neg, None).is_err());
    }

    #[test]
    fn twisted_pants_differ_under_swap_involution() {
        let (a, phi) = qq_swap();
        let z = Tqft::new(
            &a,
            &phi,
            Some(&ThetaElement(vec![rational(0), rational(0)])),
        )
        .unwrap();
        let left = z.evaluate(&t("mul . (phi * id)")).unwrap();
        let right = z.evaluate(&t("mul . (id * phi)")).unwrap();
        assert_ne!(left, right);
        assert_eq!(
            z.evaluate(&t("mul . swap")).unwrap(),
            z.evaluate(&t("mul")).unwrap()
        );
    }

    #[test]
    fn empty_is_scalar_one() {
        let z = Tqft::new(&cp1(), &Involution::identity(2), None).unwrap();
        assert_eq!(z.evaluate(&t("empty")).unwrap(), LinearMap::identity(1));
    }
}
