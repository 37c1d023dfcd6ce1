//! Finite groups as explicit Cayley tables.
//!
//! Every algorithm here is exhaustive over the element set. Groups are
//! immutable once built; subgroups carry their embedding into the parent.

mod catalog;
mod classes;
mod iso;
mod perm;
mod registry;

use std::collections::{HashMap, VecDeque};
use std::fmt;

pub use catalog::{builtin, parse_group_spec, BuiltinGroup};
pub use classes::{
    center, centralizer, commuting_tuple_orbits, commuting_tuple_orbits_with_repeats,
    conjugacy_classes, CommutingTupleOrbit, ConjugacyClass,
};
pub use iso::{are_isomorphic, find_isomorphism, fingerprint, Fingerprint};
pub use perm::{parse_generators, Permutation};
pub use registry::{canonical_key, registered_groups, resolve_label, GroupKey};

use crate::DEFAULT_ORDER_CAP;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("group order exceeds the enumeration cap of {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("generators have different degrees ({0} and {1})")]
    DegreeMismatch(usize, usize),
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("unknown group {0:?}")]
    UnknownGroup(String),
    #[error("element index {0} out of range")]
    ElementOutOfRange(usize),
    #[error("could not read {path}: {reason}")]
    Io { path: String, reason: String },
}

/// A finite group given by its full multiplication table.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    identity: usize,
    inverses: Vec<usize>,
    name: Option<String>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("name", &self.name)
            .finish_non_exhaustive()
    }
}

impl FiniteGroup {
    pub fn trivial() -> Self {
        Self::from_fn_unchecked(1, |_, _| 0)
    }

    /// Build from a multiplication rule known to define a group with
    /// identity 0. Used by the catalog constructors.
    pub(crate) fn from_fn_unchecked(order: usize, mul: impl Fn(usize, usize) -> usize) -> Self {
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                table.push(mul(a, b) as u32);
            }
        }
        Self::from_flat_table(order, table, 0)
    }

    fn from_flat_table(order: usize, table: Vec<u32>, identity: usize) -> Self {
        let mut inverses = vec![usize::MAX; order];
        for a in 0..order {
            for b in 0..order {
                if table[a * order + b] as usize == identity {
                    inverses[a] = b;
                    break;
                }
            }
        }
        Self {
            order,
            table,
            identity,
            inverses,
            name: None,
        }
    }

    /// Closure of a set of permutations, with the default order cap.
    pub fn from_generators(generators: &[Permutation]) -> Result<Self, GroupError> {
        Self::from_generators_capped(generators, DEFAULT_ORDER_CAP)
    }

    /// Closure of a set of permutations under composition. Element 0 is the
    /// identity; the product `a·b` is the composite "apply `b`, then `a`".
    pub fn from_generators_capped(
        generators: &[Permutation],
        cap: usize,
    ) -> Result<Self, GroupError> {
        let degree = generators.first().map_or(1, Permutation::degree);
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(GroupError::DegreeMismatch(degree, g.degree()));
        }
        let elements = permutation_closure(generators, degree, cap)?;
        let index: HashMap<&Permutation, usize> =
            elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                table.push(index[&a.compose(b)] as u32);
            }
        }
        Ok(Self::from_flat_table(n, table, 0))
    }

    /// Validate a square table of element indices.
    pub fn from_cayley_table(rows: &[Vec<usize>]) -> Result<Self, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::InvalidTable("empty table".into()));
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::InvalidTable(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::InvalidTable(format!(
                        "entry ({i}, {j}) = {v} is out of range"
                    )));
                }
                table.push(v as u32);
            }
        }
        let at = |a: usize, b: usize| table[a * n + b] as usize;
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| at(e, a) == a && at(a, e) == a))
            .ok_or_else(|| GroupError::InvalidTable("no two-sided identity".into()))?;
        for a in 0..n {
            if !(0..n).any(|b| at(a, b) == identity && at(b, a) == identity) {
                return Err(GroupError::InvalidTable(format!(
                    "element {a} has no inverse"
                )));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(GroupError::InvalidTable(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(Self::from_flat_table(n, table, identity))
    }

    /// Parse a CSV Cayley table: row `i`, column `j` holds the index of `i·j`.
    pub fn from_csv(text: &str) -> Result<Self, GroupError> {
        let rows = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| {
                l.split(',')
                    .map(|v| {
                        v.trim().parse::<usize>().map_err(|_| GroupError::Parse {
                            input: l.to_string(),
                            reason: format!("bad entry {v:?}"),
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_cayley_table(&rows)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g·x·g⁻¹`.
    #[inline]
    pub fn conjugate(&self, x: usize, by: usize) -> usize {
        self.mul(self.mul(by, x), self.inverses[by])
    }

    #[inline]
    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.commute(a, b)))
    }

    pub fn cayley_rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(|r| r.iter().map(|&v| v as usize).collect())
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in self.cayley_rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    /// Subgroup generated by `gens`, as a sorted list of elements.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        let mut out = vec![self.identity];
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// The commutator subgroup.
    pub fn derived_subgroup(&self) -> Vec<usize> {
        let mut comms = Vec::new();
        let mut seen = vec![false; self.order];
        for a in 0..self.order {
            for b in 0..self.order {
                let c = self.mul(self.mul(a, b), self.mul(self.inverses[a], self.inverses[b]));
                if !std::mem::replace(&mut seen[c], true) {
                    comms.push(c);
                }
            }
        }
        self.generated_subgroup(&comms)
    }

    /// The subgroup on `elements`, which must be closed under the product.
    pub fn subgroup(&self, elements: &[usize]) -> Subgroup {
        let mut embedding: Vec<usize> = elements.to_vec();
        embedding.sort_unstable();
        embedding.dedup();
        // Identity first so the subgroup's identity index is 0.
        let pos = embedding
            .iter()
            .position(|&e| e == self.identity)
            .expect("subgroup contains the identity");
        embedding.remove(pos);
        embedding.insert(0, self.identity);
        let local: HashMap<usize, usize> =
            embedding.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let n = embedding.len();
        let group = Self::from_fn_unchecked(n, |a, b| local[&self.mul(embedding[a], embedding[b])]);
        Subgroup { group, embedding }
    }

    pub fn direct_product(&self, other: &Self) -> Result<Self, GroupError> {
        self.direct_product_capped(other, DEFAULT_ORDER_CAP)
    }

    /// Componentwise product; element `(g, h)` has index `g·|H| + h`.
    pub fn direct_product_capped(&self, other: &Self, cap: usize) -> Result<Self, GroupError> {
        let n = self
            .order
            .checked_mul(other.order)
            .filter(|&n| n <= cap)
            .ok_or(GroupError::OrderCapExceeded { cap })?;
        let m = other.order;
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let g = self.mul(a / m, b / m);
                let h = other.mul(a % m, b % m);
                table.push((g * m + h) as u32);
            }
        }
        let identity = self.identity * m + other.identity;
        Ok(Self::from_flat_table(n, table, identity))
    }
}

/// A subgroup together with its embedding into the parent group:
/// local element `i` is parent element `embedding[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    pub group: FiniteGroup,
    pub embedding: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Parent-group elements, ascending.
    pub fn parent_elements(&self) -> Vec<usize> {
        let mut v = self.embedding.clone();
        v.sort_unstable();
        v
    }
}

pub(crate) fn permutation_closure(
    generators: &[Permutation],
    degree: usize,
    cap: usize,
) -> Result<Vec<Permutation>, GroupError> {
    let id = Permutation::identity(degree);
    let mut elements = vec![id.clone()];
    let mut seen: HashMap<Permutation, ()> = HashMap::from([(id, ())]);
    let mut frontier = 0;
    while frontier < elements.len() {
        let x = elements[frontier].clone();
        frontier += 1;
        for g in generators {
            let y = x.compose(g);
            if seen.insert(y.clone(), ()).is_none() {
                if elements.len() >= cap {
                    return Err(GroupError::OrderCapExceeded { cap });
                }
                elements.push(y);
            }
        }
    }
    Ok(elements)
}
