use std::collections::HashSet;

use super::{PermAction, TorusError};

/// A strict chain `I_0 = {1..r} ⊋ I_1 ⊋ … ⊋ I_ℓ` of subsets, as bitmasks
/// over zero-based points. `chain[0]` is always the full set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flag {
    pub chain: Vec<u32>,
}

impl Flag {
    /// Number of proper steps.
    pub fn length(&self) -> usize {
        self.chain.len() - 1
    }

    /// The smallest subset of the chain.
    pub fn i_max(&self) -> u32 {
        *self.chain.last().expect("chain starts at the full set")
    }

    pub fn i_max_size(&self) -> usize {
        self.i_max().count_ones() as usize
    }

    /// One-based set notation, e.g. `{1,2} > {1} > {}`.
    pub fn to_notation(&self) -> String {
        self.chain
            .iter()
            .map(|&m| {
                let pts: Vec<String> = (0..32)
                    .filter(|i| m >> i & 1 == 1)
                    .map(|i| (i + 1).to_string())
                    .collect();
                format!("{{{}}}", pts.join(","))
            })
            .collect::<Vec<_>>()
            .join(" > ")
    }
}

fn check_cap(r: usize, cap: usize) -> Result<(), TorusError> {
    if r > cap || r >= 32 {
        return Err(TorusError::FlagCapExceeded {
            r,
            cap: cap.min(31),
        });
    }
    Ok(())
}

/// All flags of `{1..r}`, in depth-first order with smaller subsets first.
pub fn enumerate_flags(r: usize, cap: usize) -> Result<Vec<Flag>, TorusError> {
    if r == 0 {
        return Err(TorusError::ZeroRank);
    }
    check_cap(r, cap)?;
    let full = (1u32 << r) - 1;
    let mut out = Vec::new();
    let mut chain = vec![full];
    extend(&mut chain, &mut out);
    Ok(out)
}

fn extend(chain: &mut Vec<u32>, out: &mut Vec<Flag>) {
    out.push(Flag {
        chain: chain.clone(),
    });
    let last = *chain.last().unwrap();
    // proper subsets of `last`, ascending
    let mut subs = Vec::new();
    let mut s = last;
    while s != 0 {
        s = (s - 1) & last;
        subs.push(s);
    }
    subs.sort_unstable();
    for sub in subs {
        chain.push(sub);
        extend(chain, out);
        chain.pop();
    }
}

/// A `Γ`-orbit of flags: the smallest member, its stabilizer as indices into
/// [`PermAction::elements`], and the orbit size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagOrbit {
    pub representative: Flag,
    pub stabilizer: Vec<usize>,
    pub orbit_size: usize,
}

pub fn flag_orbits(a: &PermAction, cap: usize) -> Result<Vec<FlagOrbit>, TorusError> {
    let flags = enumerate_flags(a.rank(), cap)?;
    let mut seen: HashSet<Flag> = HashSet::new();
    let mut out = Vec::new();
    for f in flags {
        if seen.contains(&f) {
            continue;
        }
        let mut orbit: Vec<Flag> = Vec::new();
        let mut stabilizer = Vec::new();
        for (i, g) in a.elements().iter().enumerate() {
            let image = Flag {
                chain: f.chain.iter().map(|&m| a.apply_mask(g, m)).collect(),
            };
            if image == f {
                stabilizer.push(i);
            }
            orbit.push(image);
        }
        orbit.sort();
        orbit.dedup();
        let orbit_size = orbit.len();
        let representative = orbit[0].clone();
        seen.extend(orbit);
        out.push(FlagOrbit {
            representative,
            stabilizer,
            orbit_size,
        });
    }
    out.sort_by(|x, y| x.representative.cmp(&y.representative));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::torus::DEFAULT_FLAG_CAP;

    /// Number of flags of an r-set: ordered set partitions of a subset's
    /// complement, counted directly by recursion on the first step.
    fn flag_count(r: usize) -> usize {
        // f(n) = 1 + Σ_{k<n} C(n,k) f(k)
        let mut f = vec![0usize; r + 1];
        for n in 0..=r {
            let mut binom = 1usize;
            f[n] = 1;
            for k in 0..n {
                f[n] += binom * f[k];
                binom = binom * (n - k) / (k + 1);
            }
        }
        f[r]
    }

    #[test]
    fn flag_counts() {
        let counts: Vec<usize> = (1..=4)
            .map(|r| enumerate_flags(r, DEFAULT_FLAG_CAP).unwrap().len())
            .collect();
        assert_eq!(counts, vec![2, 6, 26, 150]);
        for r in 1..=6 {
            let flags = enumerate_flags(r, DEFAULT_FLAG_CAP).unwrap();
            assert_eq!(flags.len(), flag_count(r));
            assert_eq!(flags.iter().filter(|f| f.length() == 0).count(), 1);
            let distinct: HashSet<&Flag> = flags.iter().collect();
            assert_eq!(distinct.len(), flags.len());
            for f in &flags {
                assert!(f
                    .chain
                    .windows(2)
                    .all(|w| w[1] & !w[0] == 0 && w[1] != w[0]));
            }
        }
        assert!(matches!(
            enumerate_flags(9, DEFAULT_FLAG_CAP),
            Err(TorusError::FlagCapExceeded { .. })
        ));
    }

    #[test]
    fn swap_orbits() {
        let a = PermAction::parse(2, "(1 2)").unwrap();
        let orbits = flag_orbits(&a, DEFAULT_FLAG_CAP).unwrap();
        assert_eq!(orbits.len(), 4);
        let fixed = orbits.iter().filter(|o| o.orbit_size == 1).count();
        let free = orbits.iter().filter(|o| o.orbit_size == 2).count();
        assert_eq!((fixed, free), (2, 2));
        for o in &orbits {
            assert_eq!(o.orbit_size * o.stabilizer.len(), a.order());
        }
    }

    #[test]
    fn notation() {
        let f = Flag {
            chain: vec![0b11, 0b01, 0],
        };
        assert_eq!(f.to_notation(), "{1,2} > {1} > {}");
    }
}
