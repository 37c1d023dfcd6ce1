//! Permutations and cycle-notation input.

use std::fmt;

use super::GroupError;

/// A bijection of `{0, …, degree − 1}` stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(GroupError::NotAPermutation(format!("{images:?}")));
            }
        }
        Ok(Self { images })
    }

    /// Build from disjoint or overlapping cycles on `degree` points; cycles are
    /// composed left to right as written, each applied after the previous.
    pub fn from_cycles(cycles: &[Vec<usize>], degree: usize) -> Result<Self, GroupError> {
        let mut perm = Self::identity(degree);
        for cycle in cycles {
            let mut c = Self::identity(degree);
            let mut seen = vec![false; degree];
            for (k, &a) in cycle.iter().enumerate() {
                if a >= degree {
                    return Err(GroupError::NotAPermutation(format!(
                        "point {a} outside degree {degree}"
                    )));
                }
                if std::mem::replace(&mut seen[a], true) {
                    return Err(GroupError::NotAPermutation(format!(
                        "point {a} repeated in cycle {cycle:?}"
                    )));
                }
                c.images[a] = cycle[(k + 1) % cycle.len()];
            }
            perm = c.compose(&perm);
        }
        Ok(perm)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Self {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Self { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Extend to a larger degree by fixing the new points.
    pub fn padded(&self, degree: usize) -> Self {
        let mut images = self.images.clone();
        images.extend(self.images.len()..degree);
        Self { images }
    }

    /// Nontrivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut i = self.images[start];
            while i != start {
                seen[i] = true;
                cycle.push(i);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle notation with points shifted by `offset` (1 for one-based output).
    pub fn to_cycle_string(&self, offset: usize) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".into();
        }
        cycles
            .iter()
            .map(|c| {
                let pts: Vec<String> = c.iter().map(|p| (p + offset).to_string()).collect();
                format!("({})", pts.join(" "))
            })
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string(0))
    }
}

/// Parse a comma-separated list of generators in cycle notation, e.g.
/// `"(0 1 2)(3 4), (0 1)"`. Inside a cycle, points may be separated by spaces
/// or commas. With `one_based`, points are read as `1..=n`. The degree is
/// `degree` if given, otherwise one more than the largest point mentioned.
pub fn parse_generators(
    src: &str,
    one_based: bool,
    degree: Option<usize>,
) -> Result<Vec<Permutation>, GroupError> {
    let err = |reason: &str| GroupError::Parse {
        input: src.to_string(),
        reason: reason.to_string(),
    };
    let mut gens: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut current: Vec<Vec<usize>> = Vec::new();
    let mut cycle: Option<Vec<usize>> = None;
    let mut number = String::new();
    let mut started = false;

    let flush_number =
        |number: &mut String, cycle: &mut Option<Vec<usize>>| -> Result<(), GroupError> {
            if number.is_empty() {
                return Ok(());
            }
            let v: usize = number.parse().map_err(|_| err("bad number"))?;
            number.clear();
            let v = if one_based {
                v.checked_sub(1)
                    .ok_or_else(|| err("point 0 in one-based notation"))?
            } else {
                v
            };
            cycle
                .as_mut()
                .ok_or_else(|| err("number outside a cycle"))?
                .push(v);
            Ok(())
        };

    for ch in src.chars() {
        match ch {
            '(' => {
                if cycle.is_some() {
                    return Err(err("nested parenthesis"));
                }
                cycle = Some(Vec::new());
                started = true;
            }
            ')' => {
                flush_number(&mut number, &mut cycle)?;
                let c = cycle.take().ok_or_else(|| err("unbalanced ')'"))?;
                if c.len() > 1 {
                    current.push(c);
                }
            }
            ',' if cycle.is_none() => {
                if !started {
                    return Err(err("empty generator"));
                }
                gens.push(std::mem::take(&mut current));
                started = false;
            }
            ',' | ' ' | '\t' => flush_number(&mut number, &mut cycle)?,
            d if d.is_ascii_digit() => {
                if cycle.is_none() {
                    return Err(err("number outside a cycle"));
                }
                number.push(d);
            }
            _ => return Err(err("unexpected character")),
        }
    }
    if cycle.is_some() {
        return Err(err("unclosed cycle"));
    }
    if started {
        gens.push(current);
    } else if !gens.is_empty() {
        return Err(err("trailing comma"));
    }

    let max_point = gens.iter().flatten().flatten().copied().max();
    let degree = match (degree, max_point) {
        (Some(d), Some(m)) if m >= d => {
            return Err(err("point exceeds the declared degree"));
        }
        (Some(d), _) => d,
        (None, Some(m)) => m + 1,
        (None, None) => 1,
    };
    gens.iter()
        .map(|cycles| Permutation::from_cycles(cycles, degree))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_cycles() {
        let gens = parse_generators("(0 1 2)(3 4), (0 1)", false, None).unwrap();
        assert_eq!(gens.len(), 2);
        assert_eq!(gens[0].images(), &[1, 2, 0, 4, 3]);
        assert_eq!(gens[1].images(), &[1, 0, 2, 3, 4]);
    }

    #[test]
    fn one_based_with_degree() {
        let gens = parse_generators("(1 2)", true, Some(3)).unwrap();
        assert_eq!(gens[0].images(), &[1, 0, 2]);
        assert_eq!(gens[0].to_cycle_string(1), "(1 2)");
        assert!(parse_generators("(1 4)", true, Some(3)).is_err());
        assert!(parse_generators("(0 1)", true, None).is_err());
    }

    #[test]
    fn empty_and_identity() {
        assert!(parse_generators("", false, None).unwrap().is_empty());
        assert!(parse_generators("  ", true, Some(3)).unwrap().is_empty());
        let id = parse_generators("()", false, Some(2)).unwrap();
        assert!(id[0].is_identity());
    }

    #[test]
    fn gap_style_commas_inside_cycles() {
        let gens = parse_generators("(1,2,3),(1,2)", true, None).unwrap();
        assert_eq!(gens.len(), 2);
        assert_eq!(gens[0].images(), &[1, 2, 0]);
    }

    #[test]
    fn rejects_malformed() {
        for bad in [
            "(0 1", "0 1)", "((0 1))", "(0 1),", ",(0 1)", "(0 0)", "(a b)",
        ] {
            assert!(parse_generators(bad, false, None).is_err(), "{bad}");
        }
        assert!(Permutation::from_images(vec![0, 0]).is_err());
    }

    #[test]
    fn compose_and_invert() {
        let a = Permutation::from_images(vec![1, 2, 0]).unwrap();
        assert!(a.compose(&a.inverse()).is_identity());
        assert_eq!(a.compose(&a).images(), &[2, 0, 1]);
        assert_eq!(a.to_string(), "(0 1 2)");
    }
}
