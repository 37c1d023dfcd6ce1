use super::matrix::{identity, mat_mul, Dense};
use super::{KStVector, LinalgError, OperatorMatrix};
use crate::qfield::RationalFunctionQ;

/// Distinct eigenvalues with their spectral projectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<RationalFunctionQ>,
    pub multiplicities: Vec<usize>,
    projectors: Vec<Dense>,
}

fn sub_scalar(m: &Dense, c: &RationalFunctionQ) -> Dense {
    let mut out = m.clone();
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = &row[i] - c;
    }
    out
}

fn scale(m: &Dense, c: &RationalFunctionQ) -> Dense {
    m.iter()
        .map(|row| row.iter().map(|x| x * c).collect())
        .collect()
}

fn add(a: &Dense, b: &Dense) -> Dense {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect())
        .collect()
}

fn is_zero(m: &Dense) -> bool {
    m.iter()
        .all(|row| row.iter().all(RationalFunctionQ::is_zero))
}

impl OperatorMatrix {
    /// Projectors `P_i = ∏_{j≠i} (M − λ_j)/(λ_i − λ_j)` over the distinct
    /// diagonal values, checked to be a complete family of orthogonal
    /// idempotents with `M = Σ λ_i P_i`.
    pub fn eigen_decompose(&self) -> Result<EigenDecomposition, LinalgError> {
        if let Some(p) = self.partial_columns().first() {
            return Err(LinalgError::PartialFixture(p.to_string()));
        }
        let (eigenvalues, multiplicities): (Vec<_>, Vec<_>) =
            self.eigenvalues()?.into_iter().unzip();
        let m = self.dense();
        let n = self.dim();
        let mut projectors = Vec::with_capacity(eigenvalues.len());
        for (i, li) in eigenvalues.iter().enumerate() {
            let mut p = identity(n);
            for (j, lj) in eigenvalues.iter().enumerate() {
                if i != j {
                    let factor = sub_scalar(m, lj);
                    let denom = (li - lj).recip()?;
                    p = scale(&mat_mul(&p, &factor), &denom);
                }
            }
            projectors.push(p);
        }

        let fail = |k: usize| LinalgError::NotDiagonalizable {
            eigenvalue: eigenvalues[k].to_string(),
        };
        let mut total = vec![vec![RationalFunctionQ::zero(); n]; n];
        let mut recombined = total.clone();
        for (i, p) in projectors.iter().enumerate() {
            if mat_mul(p, p) != *p {
                return Err(fail(i));
            }
            for (j, q) in projectors.iter().enumerate() {
                if i != j && !is_zero(&mat_mul(p, q)) {
                    return Err(fail(i));
                }
            }
            total = add(&total, p);
            recombined = add(&recombined, &scale(p, &eigenvalues[i]));
        }
        if total != identity(n) || recombined != *m {
            return Err(fail(0));
        }
        Ok(EigenDecomposition {
            eigenvalues,
            multiplicities,
            projectors,
        })
    }

    /// Nonzero eigencomponents of `v`, in eigenvalue order.
    pub fn eigen_components(
        &self,
        v: &KStVector,
    ) -> Result<Vec<(RationalFunctionQ, KStVector)>, LinalgError> {
        let d = self.eigen_decompose()?;
        let x = self.to_dense_vector(v)?;
        let mut out = Vec::new();
        for (lambda, p) in d.eigenvalues.iter().zip(&d.projectors) {
            let y: Vec<RationalFunctionQ> = p
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(&x)
                        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                        .fold(RationalFunctionQ::zero(), |acc, (a, b)| acc + a * b)
                })
                .collect();
            let comp = self.vector_from_dense(&y);
            if !comp.is_zero() {
                out.push((lambda.clone(), comp));
            }
        }
        Ok(out)
    }
}

impl EigenDecomposition {
    pub fn projector(&self, i: usize) -> &[Vec<RationalFunctionQ>] {
        &self.projectors[i]
    }
}
