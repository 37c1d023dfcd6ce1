//! Built-in groups and the group-spec grammar used by the CLI.

use std::fmt;
use std::str::FromStr;

use super::{parse_generators, FiniteGroup, GroupError};

/// Named groups the catalog can build and recognize.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BuiltinGroup {
    Trivial,
    /// Cyclic group of order n.
    Cyclic(usize),
    /// Dihedral group of order 2n.
    Dihedral(usize),
    /// Symmetric group on n letters, n ≤ 6.
    Symmetric(usize),
    Quaternion,
    /// Direct product of cyclic groups, factors as given.
    Abelian(Vec<usize>),
}

const MAX_SYMMETRIC: usize = 6;

impl BuiltinGroup {
    pub fn order(&self) -> usize {
        match self {
            Self::Trivial => 1,
            Self::Cyclic(n) => *n,
            Self::Dihedral(n) => 2 * n,
            Self::Symmetric(n) => (1..=*n).product(),
            Self::Quaternion => 8,
            Self::Abelian(f) => f.iter().product(),
        }
    }

    pub fn build(&self) -> FiniteGroup {
        let g = match self {
            Self::Trivial => FiniteGroup::trivial(),
            Self::Cyclic(n) => cyclic(*n),
            Self::Dihedral(n) => dihedral(*n),
            Self::Symmetric(n) => symmetric(*n),
            Self::Quaternion => quaternion(),
            Self::Abelian(f) => abelian(f),
        };
        g.with_name(self.to_string())
    }
}

impl fmt::Display for BuiltinGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Trivial => write!(f, "trivial"),
            Self::Cyclic(n) => write!(f, "Z{n}"),
            Self::Dihedral(n) => write!(f, "D{n}"),
            Self::Symmetric(n) => write!(f, "S{n}"),
            Self::Quaternion => write!(f, "Q8"),
            Self::Abelian(factors) => {
                let parts: Vec<String> = factors.iter().map(|n| format!("Z{n}")).collect();
                write!(f, "{}", parts.join(" x "))
            }
        }
    }
}

impl FromStr for BuiltinGroup {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || GroupError::UnknownGroup(s.to_string());
        let t = s.trim();
        if t == "trivial" || t == "1" {
            return Ok(Self::Trivial);
        }
        if t == "Q8" {
            return Ok(Self::Quaternion);
        }
        let factors: Vec<&str> = t.split(['x', '×']).map(str::trim).collect();
        if factors.len() > 1 {
            let ns = factors
                .iter()
                .map(|f| {
                    f.strip_prefix('Z')
                        .and_then(|n| n.parse::<usize>().ok())
                        .filter(|&n| n >= 1)
                        .ok_or_else(unknown)
                })
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(Self::Abelian(ns));
        }
        let (head, rest) = t.split_at(t.chars().next().map_or(0, char::len_utf8));
        let n: usize = rest.parse().map_err(|_| unknown())?;
        match (head, n) {
            ("Z", n) if n >= 1 => Ok(Self::Cyclic(n)),
            ("D", n) if n >= 1 => Ok(Self::Dihedral(n)),
            ("S", n) if (1..=MAX_SYMMETRIC).contains(&n) => Ok(Self::Symmetric(n)),
            _ => Err(unknown()),
        }
    }
}

/// Build a catalog group by name, e.g. `D4`, `S3`, `Z2 x Z2`.
pub fn builtin(name: &str) -> Result<FiniteGroup, GroupError> {
    Ok(name.parse::<BuiltinGroup>()?.build())
}

fn cyclic(n: usize) -> FiniteGroup {
    FiniteGroup::from_fn_unchecked(n, |a, b| (a + b) % n)
}

fn abelian(factors: &[usize]) -> FiniteGroup {
    let order: usize = factors.iter().product();
    let digits = |mut x: usize| {
        factors
            .iter()
            .map(|&m| {
                let d = x % m;
                x /= m;
                d
            })
            .collect::<Vec<_>>()
    };
    FiniteGroup::from_fn_unchecked(order, |a, b| {
        let (da, db) = (digits(a), digits(b));
        factors
            .iter()
            .enumerate()
            .rev()
            .fold(0, |acc, (i, &m)| acc * m + (da[i] + db[i]) % m)
    })
}

/// Element `i + n·j` is `r^i s^j`, with `s r s = r⁻¹`.
fn dihedral(n: usize) -> FiniteGroup {
    FiniteGroup::from_fn_unchecked(2 * n, |a, b| {
        let (i, j) = (a % n, a / n);
        let (k, l) = (b % n, b / n);
        let rot = if j == 0 { (i + k) % n } else { (i + n - k) % n };
        rot + n * ((j + l) % 2)
    })
}

fn symmetric(n: usize) -> FiniteGroup {
    let src = match n {
        0 | 1 => String::new(),
        2 => "(0 1)".into(),
        _ => {
            let cycle: Vec<String> = (0..n).map(|i| i.to_string()).collect();
            format!("({}), (0 1)", cycle.join(" "))
        }
    };
    let gens = parse_generators(&src, false, Some(n.max(1))).expect("well-formed generators");
    FiniteGroup::from_generators(&gens).expect("within the default cap")
}

/// Units `±1, ±i, ±j, ±k`; element `u + 4·s` is `(−1)^s · unit[u]`.
fn quaternion() -> FiniteGroup {
    // unit product table: (unit, sign flip)
    const T: [[(usize, usize); 4]; 4] = [
        [(0, 0), (1, 0), (2, 0), (3, 0)],
        [(1, 0), (0, 1), (3, 0), (2, 1)],
        [(2, 0), (3, 1), (0, 1), (1, 0)],
        [(3, 0), (2, 0), (1, 1), (0, 1)],
    ];
    FiniteGroup::from_fn_unchecked(8, |a, b| {
        let (u, s) = (a % 4, a / 4);
        let (v, t) = (b % 4, b / 4);
        let (w, f) = T[u][v];
        w + 4 * ((s + t + f) % 2)
    })
}

/// Parse a group spec: a builtin name, `perm:<cycles>` (zero-based points),
/// `perm1:<cycles>` (one-based), or `cayley:<path to CSV>`.
pub fn parse_group_spec(spec: &str, order_cap: usize) -> Result<FiniteGroup, GroupError> {
    let spec = spec.trim();
    if let Some(rest) = spec.strip_prefix("perm:") {
        let gens = parse_generators(unquote(rest), false, None)?;
        return FiniteGroup::from_generators_capped(&gens, order_cap);
    }
    if let Some(rest) = spec.strip_prefix("perm1:") {
        let gens = parse_generators(unquote(rest), true, None)?;
        return FiniteGroup::from_generators_capped(&gens, order_cap);
    }
    if let Some(path) = spec.strip_prefix("cayley:") {
        let path = unquote(path);
        let text = std::fs::read_to_string(path).map_err(|e| GroupError::Io {
            path: path.to_string(),
            reason: e.to_string(),
        })?;
        let g = FiniteGroup::from_csv(&text)?;
        if g.order() > order_cap {
            return Err(GroupError::OrderCapExceeded { cap: order_cap });
        }
        return Ok(g);
    }
    let b: BuiltinGroup = spec.parse()?;
    if b.order() > order_cap {
        return Err(GroupError::OrderCapExceeded { cap: order_cap });
    }
    Ok(b.build())
}

fn unquote(s: &str) -> &str {
    let s = s.trim();
    s.strip_prefix('"')
        .and_then(|t| t.strip_suffix('"'))
        .unwrap_or(s)
}

#[cfg(test)]
mod tests {
    use super::super::{are_isomorphic, center};
    use super::*;

    #[test]
    fn names_round_trip() {
        for name in ["trivial", "Z5", "D4", "S3", "Q8", "Z2 x Z4", "Z2 x Z2 x Z2"] {
            let b: BuiltinGroup = name.parse().unwrap();
            assert_eq!(b.to_string(), name);
            assert_eq!(b.build().order(), b.order());
        }
        assert_eq!(
            "Z2×Z3".parse::<BuiltinGroup>().unwrap(),
            BuiltinGroup::Abelian(vec![2, 3])
        );
    }

    #[test]
    fn unknown_names() {
        for bad in ["S7", "Z0", "X4", "D", "Z2 x", "Q16", ""] {
            assert!(bad.parse::<BuiltinGroup>().is_err(), "{bad}");
        }
    }

    #[test]
    fn catalog_tables_are_groups() {
        for name in ["Z6", "D5", "D4", "S4", "Q8", "Z2 x Z4", "D1", "D2"] {
            let g = builtin(name).unwrap();
            let rows = g.cayley_rows();
            assert!(FiniteGroup::from_cayley_table(&rows).is_ok(), "{name}");
        }
    }

    #[test]
    fn catalog_matches_permutation_models() {
        let perm = |s: &str| parse_group_spec(&format!("perm:{s}"), 1000).unwrap();
        assert!(are_isomorphic(
            &builtin("D4").unwrap(),
            &perm("(0 1 2 3), (0 2)")
        ));
        assert!(are_isomorphic(
            &builtin("S3").unwrap(),
            &builtin("D3").unwrap()
        ));
        assert!(are_isomorphic(
            &builtin("D2").unwrap(),
            &builtin("Z2 x Z2").unwrap()
        ));
        assert!(are_isomorphic(
            &builtin("Q8").unwrap(),
            &perm("(0 1 2 3)(4 5 6 7), (0 4 2 6)(1 7 3 5)")
        ));
        assert_eq!(center(&builtin("Q8").unwrap()).order(), 2);
        assert!(!builtin("Q8").unwrap().is_abelian());
    }

    #[test]
    fn specs() {
        assert_eq!(
            parse_group_spec("perm:\"(0 1 2 3), (0 1)\"", 100)
                .unwrap()
                .order(),
            24
        );
        assert_eq!(
            parse_group_spec("perm:(1 2 3), (1 2)", 100)
                .unwrap()
                .order(),
            6
        );
        assert_eq!(
            parse_group_spec("perm1:(1 2 3), (1 2)", 100)
                .unwrap()
                .order(),
            6
        );
        assert!(matches!(
            parse_group_spec("S5", 100),
            Err(GroupError::OrderCapExceeded { cap: 100 })
        ));
        assert!(matches!(
            parse_group_spec("cayley:/nonexistent.csv", 100),
            Err(GroupError::Io { .. })
        ));
    }
}
