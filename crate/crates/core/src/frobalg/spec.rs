//! JSON algebra files.
//!
//! ```json
//! {"dim":2,"basis":["1","x"],"unit":["1","0"],"counit":["0","1"],
//!  "mul":[[["1","0"],["0","1"]],[["0","1"],["0","0"]]],
//!  "involution":[["1","0"],["0","1"]],"theta":["0","0"]}
//! ```
//!
//! Rationals are strings `"p"` or `"p/q"`. `mul[i][j][k]` is the
//! coefficient of `e_k` in `e_i · e_j`. `involution[r][c]` is the
//! coefficient of `e_r` in `φ(e_c)`; it defaults to the identity.
//! `theta` is optional.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::algebra::{FrobeniusAlgebra, Involution, ThetaElement};
use super::matrix::{format_rational, parse_rational, LinearMap, Rational};
use crate::error::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<String>,
    pub counit: Vec<String>,
    pub mul: Vec<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub involution: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<Vec<String>>,
}

/// The decoded contents of an algebra file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraData {
    pub algebra: FrobeniusAlgebra,
    pub involution: Involution,
    pub theta: Option<ThetaElement>,
}

fn vector(v: &[String]) -> Result<Vec<Rational>, AlgebraError> {
    v.iter().map(|s| parse_rational(s)).collect()
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

impl AlgebraSpec {
    pub fn from_json(text: &str) -> Result<Self, AlgebraError> {
        serde_json::from_str(text).map_err(|e| AlgebraError::Malformed(e.to_string()))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, AlgebraError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| AlgebraError::Malformed(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serializes")
    }

    pub fn decode(&self) -> Result<AlgebraData, AlgebraError> {
        if self.dim != self.basis.len() {
            return Err(AlgebraError::Malformed(format!(
                "dim is {} but {} basis labels given",
                self.dim,
                self.basis.len()
            )));
        }
        let mul = self
            .mul
            .iter()
            .map(|row| row.iter().map(|v| vector(v)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let algebra = FrobeniusAlgebra::new(
            self.basis.clone(),
            mul,
            vector(&self.unit)?,
            vector(&self.counit)?,
        )?;
        let involution = match &self.involution {
            Some(rows) => {
                let rows = rows
                    .iter()
                    .map(|r| vector(r))
                    .collect::<Result<Vec<_>, _>>()?;
                if rows.len() != self.dim || rows.iter().any(|r| r.len() != self.dim) {
                    return Err(AlgebraError::Malformed(format!(
                        "involution must be {0}×{0}",
                        self.dim
                    )));
                }
                Involution::new(LinearMap::from_rows(rows))?
            }
            None => Involution::identity(self.dim),
        };
        let theta = match &self.theta {
            Some(v) if v.len() != self.dim => {
                return Err(AlgebraError::Malformed(format!(
                    "theta must have {} entries",
                    self.dim
                )))
            }
            Some(v) => Some(ThetaElement(vector(v)?)),
            None => None,
        };
        Ok(AlgebraData {
            algebra,
            involution,
            theta,
        })
    }

    pub fn encode(
        algebra: &FrobeniusAlgebra,
        involution: Option<&Involution>,
        theta: Option<&ThetaElement>,
    ) -> Self {
        AlgebraSpec {
            dim: algebra.dim(),
            basis: algebra.basis().to_vec(),
            unit: strings(algebra.unit()),
            counit: strings(algebra.counit()),
            mul: algebra
                .structure_constants()
                .iter()
                .map(|row| row.iter().map(|v| strings(v)).collect())
                .collect(),
            involution: involution.map(|p| p.matrix().to_strings()),
            theta: theta.map(|t| strings(&t.0)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobalg::examples::cp1;
    use crate::frobalg::matrix::rational;

    const CP1: &str = r#"{"dim":2,"basis":["1","x"],"unit":["1","0"],"counit":["0","1"],"mul":[[["1","0"],["0","1"]],[["0","1"],["0","0"]]],"involution":[["1","0"],["0","1"]],"theta":["0","0"]}"#;

    #[test]
    fn decodes_cp1() {
        let data = AlgebraSpec::from_json(CP1).unwrap().decode().unwrap();
        assert_eq!(data.algebra, cp1());
        assert_eq!(data.involution, Involution::identity(2));
        assert_eq!(
            data.theta,
            Some(ThetaElement(vec![rational(0), rational(0)]))
        );
    }

    #[test]
    fn encode_round_trip() {
        let spec = AlgebraSpec::from_json(CP1).unwrap();
        let data = spec.decode().unwrap();
        let again = AlgebraSpec::encode(&data.algebra, Some(&data.involution), data.theta.as_ref());
        assert_eq!(again, spec);
        assert_eq!(again.to_json(), CP1);
    }

    #[test]
    fn optional_fields_and_errors() {
        let minimal = r#"{"dim":1,"basis":["1"],"unit":["1"],"counit":["1/2"],"mul":[[["1"]]]}"#;
        let data = AlgebraSpec::from_json(minimal).unwrap().decode().unwrap();
        assert_eq!(data.involution, Involution::identity(1));
        assert_eq!(data.theta, None);

        let bad = minimal.replace("1/2", "1/0");
        assert!(matches!(
            AlgebraSpec::from_json(&bad).unwrap().decode(),
            Err(AlgebraError::BadRational(_))
        ));
        let wrong_dim = minimal.replace(r#""dim":1"#, r#""dim":2"#);
        assert!(AlgebraSpec::from_json(&wrong_dim)
            .unwrap()
            .decode()
            .is_err());
        assert!(AlgebraSpec::from_json("{").is_err());
        assert!(AlgebraSpec::from_json(r#"{"dim":1}"#).is_err());
    }
}
