use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{PolynomialQ, QFieldError};

/// An integer partition recorded by multiplicities: `lambda[i - 1]` is the
/// number of blocks of size `i`.
///
/// Ordered by weight, then by number of blocks, then lexicographically on the
/// multiplicity vector. Under this order the twist type of a split torus is
/// the largest partition of its rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    lambda: Vec<usize>,
}

impl Partition {
    /// Build from multiplicities `[λ_1, λ_2, …]`. Trailing zeros are kept up to
    /// the weight so that `(2, 0)` and `(2)` both denote the trivial partition of 2.
    pub fn from_multiplicities(lambda: Vec<usize>) -> Self {
        let mut p = Self { lambda };
        p.normalize();
        p
    }

    /// Build from a list of block sizes, e.g. orbit sizes.
    pub fn from_blocks(blocks: impl IntoIterator<Item = usize>) -> Result<Self, QFieldError> {
        let mut lambda = Vec::new();
        for b in blocks {
            if b == 0 {
                return Err(QFieldError::InvalidPartition("block of size zero".into()));
            }
            if lambda.len() < b {
                lambda.resize(b, 0);
            }
            lambda[b - 1] += 1;
        }
        Ok(Self::from_multiplicities(lambda))
    }

    /// Validate against a declared weight.
    pub fn with_weight(lambda: Vec<usize>, weight: usize) -> Result<Self, QFieldError> {
        let p = Self::from_multiplicities(lambda);
        if p.weight() != weight {
            return Err(QFieldError::InvalidPartition(format!(
                "{p} has weight {}, expected {weight}",
                p.weight()
            )));
        }
        Ok(p)
    }

    fn normalize(&mut self) {
        let w = self.weight();
        while self.lambda.len() > w.max(1) && self.lambda.last() == Some(&0) {
            self.lambda.pop();
        }
        if self.lambda.len() < w {
            self.lambda.resize(w, 0);
        }
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.lambda
    }

    pub fn multiplicity(&self, size: usize) -> usize {
        size.checked_sub(1)
            .and_then(|i| self.lambda.get(i))
            .copied()
            .unwrap_or(0)
    }

    /// `Σ i·λ_i`.
    pub fn weight(&self) -> usize {
        self.lambda
            .iter()
            .enumerate()
            .map(|(i, m)| (i + 1) * m)
            .sum()
    }

    /// `Σ λ_i`.
    pub fn blocks(&self) -> usize {
        self.lambda.iter().sum()
    }

    /// Block sizes with multiplicity, ascending.
    pub fn block_sizes(&self) -> Vec<usize> {
        self.lambda
            .iter()
            .enumerate()
            .flat_map(|(i, &m)| std::iter::repeat_n(i + 1, m))
            .collect()
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then(self.blocks().cmp(&other.blocks()))
            .then_with(|| self.lambda.cmp(&other.lambda))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.lambda
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = QFieldError;

    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Ok(Self::from_multiplicities(v))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, m) in self.lambda.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, ")")
    }
}

/// `∏_i (q^i − 1)^{λ_i}`, the eigenvalue polynomial attached to a twist type.
pub fn q_lambda(p: &Partition) -> PolynomialQ {
    p.lambda
        .iter()
        .enumerate()
        .fold(PolynomialQ::one(), |acc, (i, &m)| {
            &acc * &PolynomialQ::q_pow_minus_one(i + 1).pow(m)
        })
}
