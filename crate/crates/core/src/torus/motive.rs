use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{flag_orbits, orbit_partition, PermAction, TorusError};
use crate::group::{parse_generators, Permutation};
use crate::qfield::{parse_polynomial, q_lambda, Partition, PolynomialQ};

/// A correction term `c·[X̄/H]` for a proper stabilizer `H ⊊ Γ`. `H` is the
/// least conjugate of the literal stabilizer, as a sorted element list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverTerm {
    pub stabilizer: Vec<Permutation>,
    pub coefficient: PolynomialQ,
}

impl CoverTerm {
    /// `1` for the trivial subgroup, otherwise its elements in one-based
    /// cycle notation.
    pub fn stabilizer_label(&self) -> String {
        if self.stabilizer.len() == 1 {
            return "1".into();
        }
        let els: Vec<String> = self
            .stabilizer
            .iter()
            .map(|p| p.to_cycle_string(1))
            .collect();
        format!("{{{}}}", els.join(", "))
    }
}

/// `base·[X] + Σ c_H·[X̄/H]`, where `X` is the torus class of the split form
/// and `X̄` the cover on which `Γ` acts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MotiveExpr {
    pub lambda: Partition,
    pub base_coefficient: PolynomialQ,
    pub cover_terms: Vec<CoverTerm>,
}

fn conjugacy_canonical(a: &PermAction, h: &[Permutation]) -> Vec<Permutation> {
    a.elements()
        .iter()
        .map(|g| {
            let gi = g.inverse();
            let mut c: Vec<Permutation> = h.iter().map(|x| g.compose(x).compose(&gi)).collect();
            c.sort();
            c
        })
        .min()
        .expect("Γ contains the identity")
}

fn sign_q_power(length: usize, size: usize) -> PolynomialQ {
    let c = if length.is_multiple_of(2) { 1 } else { -1 };
    PolynomialQ::from_int(c).shift_up(size)
}

pub fn torus_motive(a: &PermAction, flag_cap: usize) -> Result<MotiveExpr, TorusError> {
    let lambda = orbit_partition(a);
    let mut base = PolynomialQ::zero();
    let mut covers: BTreeMap<(usize, Vec<Permutation>), PolynomialQ> = BTreeMap::new();
    for orbit in flag_orbits(a, flag_cap)? {
        let f = &orbit.representative;
        let term = sign_q_power(f.length(), f.i_max_size());
        if orbit.stabilizer.len() == a.order() {
            base = base + term;
        } else {
            let h: Vec<Permutation> = orbit
                .stabilizer
                .iter()
                .map(|&i| a.elements()[i].clone())
                .collect();
            let key = conjugacy_canonical(a, &h);
            let slot = covers.entry((key.len(), key)).or_default();
            *slot = &*slot + &term;
        }
    }
    assert_eq!(
        base,
        q_lambda(&lambda),
        "fixed-flag sum differs from Q_lambda"
    );
    let cover_terms = covers
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((_, stabilizer), coefficient)| CoverTerm {
            stabilizer,
            coefficient,
        })
        .collect();
    Ok(MotiveExpr {
        lambda,
        base_coefficient: base,
        cover_terms,
    })
}

impl fmt::Display for MotiveExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})[X]", self.base_coefficient)?;
        for t in &self.cover_terms {
            write!(f, " + ({})[X̄/{}]", t.coefficient, t.stabilizer_label())?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverTermJson {
    pub stabilizer_order: usize,
    /// One-based cycle notation, `()` for the identity.
    pub stabilizer_elements: Vec<String>,
    pub coefficient: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MotiveJson {
    pub lambda: Partition,
    pub base_coefficient: String,
    pub cover_terms: Vec<CoverTermJson>,
}

impl MotiveExpr {
    pub fn to_json(&self) -> MotiveJson {
        MotiveJson {
            lambda: self.lambda.clone(),
            base_coefficient: self.base_coefficient.to_string(),
            cover_terms: self
                .cover_terms
                .iter()
                .map(|t| CoverTermJson {
                    stabilizer_order: t.stabilizer.len(),
                    stabilizer_elements: t
                        .stabilizer
                        .iter()
                        .map(|p| p.to_cycle_string(1))
                        .collect(),
                    coefficient: t.coefficient.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &MotiveJson) -> Result<Self, String> {
        let r = j.lambda.weight();
        let cover_terms = j
            .cover_terms
            .iter()
            .map(|t| {
                let stabilizer = t
                    .stabilizer_elements
                    .iter()
                    .map(|s| {
                        parse_generators(s, true, Some(r))
                            .map_err(|e| e.to_string())?
                            .pop()
                            .ok_or_else(|| format!("empty stabilizer element {s:?}"))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if stabilizer.len() != t.stabilizer_order {
                    return Err(format!(
                        "stabilizer order {} does not match its elements",
                        t.stabilizer_order
                    ));
                }
                Ok(CoverTerm {
                    stabilizer,
                    coefficient: parse_polynomial(&t.coefficient).map_err(|e| e.to_string())?,
                })
            })
            .collect::<Result<Vec<_>, String>>()?;
        Ok(Self {
            lambda: j.lambda.clone(),
            base_coefficient: parse_polynomial(&j.base_coefficient).map_err(|e| e.to_string())?,
            cover_terms,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::torus::DEFAULT_FLAG_CAP;

    fn motive(r: usize, gens: &str) -> MotiveExpr {
        torus_motive(&PermAction::parse(r, gens).unwrap(), DEFAULT_FLAG_CAP).unwrap()
    }

    fn poly(s: &str) -> PolynomialQ {
        parse_polynomial(s).unwrap()
    }

    #[test]
    fn split_tori() {
        for r in 1..=5 {
            let m = motive(r, "");
            assert_eq!(m.base_coefficient, poly("q - 1").pow(r));
            assert!(m.cover_terms.is_empty());
        }
    }

    #[test]
    fn swap_rank_two() {
        let m = motive(2, "(1 2)");
        assert_eq!(m.base_coefficient, poly("q^2 - 1"));
        assert_eq!(m.cover_terms.len(), 1);
        assert_eq!(m.cover_terms[0].stabilizer.len(), 1);
        assert_eq!(m.cover_terms[0].coefficient, poly("1 - q"));
        assert_eq!(m.to_string(), "(q^2 - 1)[X] + (-q + 1)[X̄/1]");
    }

    #[test]
    fn s3_rank_three() {
        let m = motive(3, "(1 2 3), (1 2)");
        assert_eq!(m.base_coefficient, poly("q^3 - 1"));
        // conjugate stabilizers merge: the three transposition subgroups give one term
        let orders: Vec<usize> = m.cover_terms.iter().map(|t| t.stabilizer.len()).collect();
        let mut dedup = m
            .cover_terms
            .iter()
            .map(|t| t.stabilizer.clone())
            .collect::<Vec<_>>();
        dedup.dedup();
        assert_eq!(dedup.len(), orders.len());
        assert!(orders.iter().all(|&o| o < 6));
    }

    #[test]
    fn json_round_trip() {
        for (r, g) in [
            (2, "(1 2)"),
            (3, "(1 2 3), (1 2)"),
            (4, "(1 2)(3 4)"),
            (3, ""),
        ] {
            let m = motive(r, g);
            let text = serde_json::to_string(&m.to_json()).unwrap();
            let back: MotiveJson = serde_json::from_str(&text).unwrap();
            assert_eq!(MotiveExpr::from_json(&back).unwrap(), m);
            assert_eq!(serde_json::to_string(&back).unwrap(), text);
        }
    }
}
