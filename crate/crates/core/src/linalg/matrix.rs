use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::{BasisLabel, KStVector, LinalgError};
use crate::qfield::{Partition, RationalFunctionQ};

/// Position in the filtration: central rank, split central degree, twist
/// type. Compared in that order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Filtration(pub usize, pub usize, pub Partition);

/// Square matrix of an operator in a named basis. `entries[i][j]` is the
/// coefficient of `basis[i]` in the image of `basis[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorMatrix {
    basis: Vec<BasisLabel>,
    entries: Vec<Vec<RationalFunctionQ>>,
    /// Columns known only on the diagonal.
    partial: Vec<bool>,
    filtration: Option<BTreeMap<BasisLabel, Filtration>>,
    note: Option<String>,
}

/// Serialized form; see the files under `fixtures/`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub basis: Vec<BasisLabel>,
    pub columns: BTreeMap<BasisLabel, BTreeMap<BasisLabel, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub filtration: Option<BTreeMap<BasisLabel, Filtration>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub partial: Vec<BasisLabel>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

pub(super) type Dense = Vec<Vec<RationalFunctionQ>>;

pub(super) fn identity(n: usize) -> Dense {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        RationalFunctionQ::one()
                    } else {
                        RationalFunctionQ::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub(super) fn mat_mul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n)
                        .filter(|&k| !a[i][k].is_zero() && !b[k][j].is_zero())
                        .fold(RationalFunctionQ::zero(), |acc, k| {
                            acc + &a[i][k] * &b[k][j]
                        })
                })
                .collect()
        })
        .collect()
}

impl OperatorMatrix {
    pub fn new(basis: Vec<BasisLabel>, entries: Dense) -> Result<Self, LinalgError> {
        let n = basis.len();
        if entries.len() != n || entries.iter().any(|row| row.len() != n) {
            return Err(LinalgError::Invalid(
                "matrix is not square over its basis".into(),
            ));
        }
        let mut seen = std::collections::HashSet::new();
        for b in &basis {
            if !seen.insert(b) {
                return Err(LinalgError::Invalid(format!("duplicate basis label {b}")));
            }
        }
        Ok(Self {
            basis,
            entries,
            partial: vec![false; n],
            filtration: None,
            note: None,
        })
    }

    pub fn identity(basis: Vec<BasisLabel>) -> Result<Self, LinalgError> {
        let n = basis.len();
        Self::new(basis, identity(n))
    }

    pub fn from_json(j: &MatrixJson) -> Result<Self, LinalgError> {
        let n = j.basis.len();
        let mut m = Self::new(j.basis.clone(), vec![vec![RationalFunctionQ::zero(); n]; n])?;
        for (col, entries) in &j.columns {
            let c = m.index(col.as_str())?;
            for (row, value) in entries {
                let r = m.index(row.as_str())?;
                m.entries[r][c] = value.parse()?;
            }
        }
        for p in &j.partial {
            let c = m.index(p.as_str())?;
            m.partial[c] = true;
            if (0..n).any(|r| r != c && !m.entries[r][c].is_zero()) {
                return Err(LinalgError::Invalid(format!(
                    "partial column {p} has off-diagonal entries"
                )));
            }
        }
        if let Some(f) = &j.filtration {
            for label in f.keys() {
                m.index(label.as_str())?;
            }
            if f.len() != n {
                return Err(LinalgError::Invalid(
                    "filtration must cover the whole basis".into(),
                ));
            }
        }
        m.filtration = j.filtration.clone();
        m.note = j.note.clone();
        Ok(m)
    }

    pub fn to_json(&self) -> MatrixJson {
        let columns = self
            .basis
            .iter()
            .enumerate()
            .map(|(c, col)| {
                let entries = self
                    .basis
                    .iter()
                    .enumerate()
                    .filter(|(r, _)| !self.entries[*r][c].is_zero())
                    .map(|(r, row)| (row.clone(), self.entries[r][c].to_string()))
                    .collect();
                (col.clone(), entries)
            })
            .collect();
        MatrixJson {
            basis: self.basis.clone(),
            columns,
            filtration: self.filtration.clone(),
            partial: self
                .basis
                .iter()
                .zip(&self.partial)
                .filter(|(_, &p)| p)
                .map(|(b, _)| b.clone())
                .collect(),
            note: self.note.clone(),
        }
    }

    pub fn basis(&self) -> &[BasisLabel] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn note(&self) -> Option<&str> {
        self.note.as_deref()
    }

    pub fn filtration(&self) -> Option<&BTreeMap<BasisLabel, Filtration>> {
        self.filtration.as_ref()
    }

    pub fn is_partial(&self) -> bool {
        self.partial.iter().any(|&p| p)
    }

    pub fn partial_columns(&self) -> Vec<&BasisLabel> {
        self.basis
            .iter()
            .zip(&self.partial)
            .filter(|(_, &p)| p)
            .map(|(b, _)| b)
            .collect()
    }

    pub fn index(&self, label: &str) -> Result<usize, LinalgError> {
        self.basis
            .iter()
            .position(|b| b.as_str() == label)
            .ok_or_else(|| LinalgError::UnknownLabel(label.to_string()))
    }

    pub fn entry(&self, row: &str, col: &str) -> Result<&RationalFunctionQ, LinalgError> {
        Ok(&self.entries[self.index(row)?][self.index(col)?])
    }

    pub(super) fn dense(&self) -> &Dense {
        &self.entries
    }

    /// The image of a basis class.
    pub fn column(&self, label: &str) -> Result<KStVector, LinalgError> {
        let c = self.index(label)?;
        if self.partial[c] {
            return Err(LinalgError::PartialFixture(label.to_string()));
        }
        let mut v = KStVector::zero();
        for (r, b) in self.basis.iter().enumerate() {
            v.set(b.clone(), self.entries[r][c].clone());
        }
        Ok(v)
    }

    pub fn diagonal(&self) -> Vec<RationalFunctionQ> {
        (0..self.dim())
            .map(|i| self.entries[i][i].clone())
            .collect()
    }

    pub(super) fn to_dense_vector(
        &self,
        v: &KStVector,
    ) -> Result<Vec<RationalFunctionQ>, LinalgError> {
        let mut out = vec![RationalFunctionQ::zero(); self.dim()];
        for (k, x) in v.entries() {
            out[self.index(k.as_str())?] = x.clone();
        }
        Ok(out)
    }

    pub(super) fn vector_from_dense(&self, v: &[RationalFunctionQ]) -> KStVector {
        let mut out = KStVector::zero();
        for (b, x) in self.basis.iter().zip(v) {
            out.set(b.clone(), x.clone());
        }
        out
    }

    pub fn apply(&self, v: &KStVector) -> Result<KStVector, LinalgError> {
        let x = self.to_dense_vector(v)?;
        for (c, xc) in x.iter().enumerate() {
            if self.partial[c] && !xc.is_zero() {
                return Err(LinalgError::PartialFixture(self.basis[c].to_string()));
            }
        }
        let y: Vec<RationalFunctionQ> = (0..self.dim())
            .map(|r| {
                (0..self.dim())
                    .filter(|&c| !x[c].is_zero())
                    .fold(RationalFunctionQ::zero(), |acc, c| {
                        acc + &self.entries[r][c] * &x[c]
                    })
            })
            .collect();
        Ok(self.vector_from_dense(&y))
    }

    /// True iff every column's support lies at or after its own label in
    /// `order`. Labels missing from `order` are an error.
    pub fn is_triangular(&self, order: &[&str]) -> Result<bool, LinalgError> {
        if order.len() != self.dim() {
            return Err(LinalgError::Invalid(
                "order must list every basis label once".into(),
            ));
        }
        let pos: HashMap<usize, usize> = order
            .iter()
            .enumerate()
            .map(|(p, l)| self.index(l).map(|i| (i, p)))
            .collect::<Result<_, _>>()?;
        if pos.len() != self.dim() {
            return Err(LinalgError::Invalid("order repeats a label".into()));
        }
        Ok((0..self.dim())
            .all(|c| (0..self.dim()).all(|r| self.entries[r][c].is_zero() || pos[&r] >= pos[&c])))
    }

    /// Basis labels sorted by filtration (stable, so ties keep basis order).
    pub fn filtration_order(&self) -> Option<Vec<&str>> {
        let f = self.filtration.as_ref()?;
        let mut labels: Vec<&BasisLabel> = self.basis.iter().collect();
        labels.sort_by(|a, b| f[*a].cmp(&f[*b]));
        Some(labels.into_iter().map(BasisLabel::as_str).collect())
    }

    /// An order under which the matrix is triangular: the filtration order if
    /// stored and valid, else the basis order.
    pub fn triangular_order(&self) -> Option<Vec<&str>> {
        let candidates = self.filtration_order().into_iter().chain(std::iter::once(
            self.basis.iter().map(BasisLabel::as_str).collect(),
        ));
        candidates
            .into_iter()
            .find(|o| self.is_triangular(o).unwrap_or(false))
    }

    /// Distinct diagonal values in order of first appearance along the
    /// basis, each with its multiplicity.
    pub fn eigenvalues(&self) -> Result<Vec<(RationalFunctionQ, usize)>, LinalgError> {
        if self.triangular_order().is_none() {
            return Err(LinalgError::NotTriangular);
        }
        let mut out: Vec<(RationalFunctionQ, usize)> = Vec::new();
        for d in self.diagonal() {
            match out.iter_mut().find(|(v, _)| *v == d) {
                Some((_, m)) => *m += 1,
                None => out.push((d, 1)),
            }
        }
        Ok(out)
    }
}
