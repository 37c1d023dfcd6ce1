//! Exact linear algebra over `Q(q)` for finite inertia-invariant submodules
//! spanned by named classes.

mod eigen;
mod matrix;

pub use eigen::EigenDecomposition;
pub use matrix::{Filtration, MatrixJson, OperatorMatrix};

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::qfield::{PolynomialQ, QFieldError, RationalFunctionQ};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("label {0:?} is not in the basis")]
    UnknownLabel(String),
    #[error("unknown fixture {0:?} (expected bgl2, bn or bgl3)")]
    UnknownFixture(String),
    #[error("the column of {0} is only known on the diagonal; projectors cannot be computed")]
    PartialFixture(String),
    #[error("operator is not diagonalizable: verification failed at eigenvalue {eigenvalue}")]
    NotDiagonalizable { eigenvalue: String },
    #[error("matrix is not triangular under any stored order")]
    NotTriangular,
    #[error("invalid matrix: {0}")]
    Invalid(String),
    #[error(transparent)]
    Field(#[from] QFieldError),
}

/// Name of a basis class, e.g. `BGL2` or `BGm^2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BasisLabel(pub String);

impl BasisLabel {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for BasisLabel {
    fn from(s: &str) -> Self {
        Self(s.to_string())
    }
}

/// Sparse vector over `Q(q)`; zero entries are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KStVector {
    entries: BTreeMap<BasisLabel, RationalFunctionQ>,
}

impl KStVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis_vector(label: impl Into<BasisLabel>) -> Self {
        let mut v = Self::zero();
        v.set(label.into(), RationalFunctionQ::one());
        v
    }

    pub fn set(&mut self, label: BasisLabel, value: RationalFunctionQ) {
        if value.is_zero() {
            self.entries.remove(&label);
        } else {
            self.entries.insert(label, value);
        }
    }

    pub fn get(&self, label: &str) -> RationalFunctionQ {
        self.entries
            .get(&BasisLabel::from(label))
            .cloned()
            .unwrap_or_else(RationalFunctionQ::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&BasisLabel, &RationalFunctionQ)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn scale(&self, c: &RationalFunctionQ) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.entries {
            out.set(k.clone(), v * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.entries {
            let sum = &out.get(k.as_str()) + v;
            out.set(k.clone(), sum);
        }
        out
    }

    /// Positive multiple whose entries are polynomials with integer
    /// coefficients, obtained by clearing polynomial and then integer
    /// denominators.
    pub fn clear_denominators(&self) -> Self {
        let mut l = PolynomialQ::one();
        for v in self.entries.values() {
            let g = l.gcd(v.denom());
            l = (&l * v.denom())
                .exact_div(&g)
                .expect("gcd divides the product")
                .monic();
        }
        let cleared = self.scale(&RationalFunctionQ::from(l));
        let mut d = BigInt::one();
        for v in cleared.entries.values() {
            for c in v.numer().coeffs() {
                d = d.lcm(c.denom());
            }
        }
        cleared.scale(&RationalFunctionQ::from_rational(
            BigRational::from_integer(d),
        ))
    }

    /// Parse `label=value` pairs separated by `;`, e.g. `BGL2=1; X=q-1`. A bare
    /// label means coefficient 1.
    pub fn parse(src: &str) -> Result<Self, LinalgError> {
        let mut out = Self::zero();
        for part in src.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (label, value) = match part.split_once('=') {
                Some((l, v)) => (l.trim(), v.trim().parse::<RationalFunctionQ>()?),
                None => (part, RationalFunctionQ::one()),
            };
            let label = BasisLabel::from(label);
            let sum = &out.get(label.as_str()) + &value;
            out.set(label, sum);
        }
        Ok(out)
    }
}

impl fmt::Display for KStVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(k, v)| format!("({v})[{k}]"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// One of the built-in worked matrices: `bgl2`, `bn` or `bgl3`.
pub fn fixture(name: &str) -> Result<OperatorMatrix, LinalgError> {
    let text = match name {
        "bgl2" => include_str!("../../fixtures/bgl2.json"),
        "bn" => include_str!("../../fixtures/bn.json"),
        "bgl3" => include_str!("../../fixtures/bgl3.json"),
        _ => return Err(LinalgError::UnknownFixture(name.to_string())),
    };
    let json: MatrixJson =
        serde_json::from_str(text).map_err(|e| LinalgError::Invalid(e.to_string()))?;
    OperatorMatrix::from_json(&json)
}

pub const FIXTURE_NAMES: [&str; 3] = ["bgl2", "bn", "bgl3"];
