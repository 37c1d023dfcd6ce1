//! Motivic classes of quasi-split tori from a permutation action on a basis
//! of the character lattice, by equivariant inclusion–exclusion over flags
//! of subsets.

mod flags;
mod motive;

pub use flags::{enumerate_flags, flag_orbits, Flag, FlagOrbit};
pub use motive::{torus_motive, CoverTerm, CoverTermJson, MotiveExpr, MotiveJson};

use crate::group::{parse_generators, permutation_closure, GroupError, Permutation};
use crate::qfield::Partition;

/// Default bound on the rank for flag enumeration.
pub const DEFAULT_FLAG_CAP: usize = 8;

const MAX_ACTION_ORDER: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TorusError {
    #[error("rank {r} exceeds the flag enumeration cap of {cap}")]
    FlagCapExceeded { r: usize, cap: usize },
    #[error("rank must be positive")]
    ZeroRank,
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A finite group acting on `{1, …, r}`, stored as its full list of
/// permutations (zero-based internally), sorted with the identity first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermAction {
    r: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl PermAction {
    pub fn new(r: usize, generators: Vec<Permutation>) -> Result<Self, TorusError> {
        if r == 0 {
            return Err(TorusError::ZeroRank);
        }
        for g in &generators {
            if g.degree() != r {
                return Err(GroupError::DegreeMismatch(r, g.degree()).into());
            }
        }
        if r >= 32 {
            return Err(TorusError::FlagCapExceeded { r, cap: 31 });
        }
        let mut elements = permutation_closure(&generators, r, MAX_ACTION_ORDER)?;
        elements.sort();
        Ok(Self {
            r,
            generators,
            elements,
        })
    }

    /// Parse one-based cycle notation, e.g. `"(1 2 3), (1 2)"`. The empty
    /// string is the trivial action.
    pub fn parse(r: usize, gens: &str) -> Result<Self, TorusError> {
        if r == 0 {
            return Err(TorusError::ZeroRank);
        }
        let gens = if gens.trim().is_empty() {
            Vec::new()
        } else {
            parse_generators(gens, true, Some(r))?
        };
        Self::new(r, gens)
    }

    pub fn trivial(r: usize) -> Result<Self, TorusError> {
        Self::new(r, Vec::new())
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Image of a subset, as a bitmask over zero-based points.
    pub fn apply_mask(&self, g: &Permutation, mask: u32) -> u32 {
        (0..self.r)
            .filter(|&i| mask >> i & 1 == 1)
            .fold(0, |acc, i| acc | 1 << g.apply(i))
    }
}

/// Orbit sizes of `Γ` on `{1, …, r}` as a partition of `r`.
pub fn orbit_partition(a: &PermAction) -> Partition {
    let mut seen = vec![false; a.rank()];
    let mut sizes = Vec::new();
    for i in 0..a.rank() {
        if seen[i] {
            continue;
        }
        let mut size = 0;
        for g in a.elements() {
            let j = g.apply(i);
            if !seen[j] {
                seen[j] = true;
                size += 1;
            }
        }
        sizes.push(size);
    }
    Partition::from_blocks(sizes).expect("orbits are nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_partitions() {
        let p = |r, g: &str| orbit_partition(&PermAction::parse(r, g).unwrap());
        assert_eq!(p(3, "").multiplicities(), &[3, 0, 0]);
        assert_eq!(p(2, "(1 2)").multiplicities(), &[0, 1]);
        assert_eq!(p(3, "(1 2 3), (1 2)").multiplicities(), &[0, 0, 1]);
        assert_eq!(p(3, "(1 2)").multiplicities(), &[1, 1, 0]);
    }

    #[test]
    fn closure_and_errors() {
        let a = PermAction::parse(3, "(1 2 3), (1 2)").unwrap();
        assert_eq!(a.order(), 6);
        assert!(a.elements()[0].is_identity());
        assert!(PermAction::parse(2, "(1 3)").is_err());
        assert!(PermAction::parse(0, "").is_err());
        assert!(PermAction::parse(3, "(1 2").is_err());
    }
}
