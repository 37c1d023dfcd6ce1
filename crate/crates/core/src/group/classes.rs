//! Conjugacy classes, centralizers, and orbits of commuting tuples.

use super::{FiniteGroup, Subgroup};

#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    /// Smallest element index in the class.
    pub representative: usize,
    /// Members, ascending.
    pub members: Vec<usize>,
    pub centralizer: Subgroup,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// An orbit of ordered tuples of pairwise-commuting elements under
/// simultaneous conjugation.
#[derive(Clone, Debug)]
pub struct CommutingTupleOrbit {
    /// Lexicographically smallest tuple in the orbit.
    pub representative: Vec<usize>,
    pub orbit_size: usize,
    /// Simultaneous centralizer of the representative.
    pub stabilizer: Subgroup,
}

fn centralizer_elements(g: &FiniteGroup, within: &[usize], of: &[usize]) -> Vec<usize> {
    within
        .iter()
        .copied()
        .filter(|&h| of.iter().all(|&s| g.commute(h, s)))
        .collect()
}

/// `{h : hs = sh for all s ∈ S}`.
pub fn centralizer(g: &FiniteGroup, s: &[usize]) -> Subgroup {
    let all: Vec<usize> = g.elements().collect();
    g.subgroup(&centralizer_elements(g, &all, s))
}

pub fn center(g: &FiniteGroup) -> Subgroup {
    let all: Vec<usize> = g.elements().collect();
    g.subgroup(&centralizer_elements(g, &all, &all))
}

/// Orbits of `acting` on `points` by conjugation, each as (min element,
/// members ascending). `points` must be a union of orbits.
fn conjugation_orbits(g: &FiniteGroup, acting: &[usize], points: &[usize]) -> Vec<Vec<usize>> {
    let mut assigned = vec![false; g.order()];
    let mut sorted = points.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    for &x in &sorted {
        if assigned[x] {
            continue;
        }
        let mut orbit = Vec::new();
        for &h in acting {
            let y = g.conjugate(x, h);
            if !assigned[y] {
                assigned[y] = true;
                orbit.push(y);
            }
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

/// Conjugacy classes sorted by (element order of the representative, class
/// size, representative), each with the centralizer of its representative.
pub fn conjugacy_classes(g: &FiniteGroup) -> Vec<ConjugacyClass> {
    let all: Vec<usize> = g.elements().collect();
    let mut classes: Vec<ConjugacyClass> = conjugation_orbits(g, &all, &all)
        .into_iter()
        .map(|members| {
            let representative = members[0];
            ConjugacyClass {
                representative,
                centralizer: centralizer(g, &[representative]),
                members,
            }
        })
        .collect();
    classes.sort_by_key(|c| {
        (
            g.element_order(c.representative),
            c.size(),
            c.representative,
        )
    });
    classes
}

/// Orbits of ordered `r`-tuples of pairwise-distinct, pairwise-commuting
/// elements under simultaneous conjugation, sorted by representative.
///
/// `r = 0` gives the single empty tuple with stabilizer `G`. Tuples may
/// contain the identity.
pub fn commuting_tuple_orbits(g: &FiniteGroup, r: usize) -> Vec<CommutingTupleOrbit> {
    tuple_orbits(g, r, true)
}

/// As [`commuting_tuple_orbits`] but entries may repeat. These orbits index
/// the strata of the `r`-fold iterated inertia.
pub fn commuting_tuple_orbits_with_repeats(g: &FiniteGroup, r: usize) -> Vec<CommutingTupleOrbit> {
    tuple_orbits(g, r, false)
}

fn tuple_orbits(g: &FiniteGroup, r: usize, distinct: bool) -> Vec<CommutingTupleOrbit> {
    // The stabilizer of a tuple prefix S is C = Z_G(S), and every admissible
    // next entry lies in C. Orbits of the extended tuples with prefix S are
    // the C-conjugation orbits on C (minus S when entries are distinct).
    // Taking the smallest orbit member at every step yields the
    // lexicographically smallest tuple in each G-orbit.
    let all: Vec<usize> = g.elements().collect();
    let mut layer: Vec<(Vec<usize>, Vec<usize>)> = vec![(Vec::new(), all)];
    for _ in 0..r {
        let mut next = Vec::new();
        for (tuple, stab) in &layer {
            let points: Vec<usize> = if distinct {
                stab.iter()
                    .copied()
                    .filter(|x| !tuple.contains(x))
                    .collect()
            } else {
                stab.clone()
            };
            for orbit in conjugation_orbits(g, stab, &points) {
                let x = orbit[0];
                let mut t = tuple.clone();
                t.push(x);
                next.push((t, centralizer_elements(g, stab, &[x])));
            }
        }
        layer = next;
    }
    let mut out: Vec<CommutingTupleOrbit> = layer
        .into_iter()
        .map(|(representative, stab)| CommutingTupleOrbit {
            orbit_size: g.order() / stab.len(),
            stabilizer: g.subgroup(&stab),
            representative,
        })
        .collect();
    out.sort_by(|a, b| a.representative.cmp(&b.representative));
    out
}

#[cfg(test)]
mod tests {
    use super::super::{parse_generators, FiniteGroup};
    use super::*;
    use std::collections::{BTreeMap, HashSet};

    fn group(src: &str) -> FiniteGroup {
        FiniteGroup::from_generators(&parse_generators(src, false, None).unwrap()).unwrap()
    }

    fn s3() -> FiniteGroup {
        group("(0 1 2), (0 1)")
    }

    fn d4() -> FiniteGroup {
        group("(0 1 2 3), (0 2)")
    }

    /// All ordered commuting tuples, enumerated directly.
    fn brute_tuples(g: &FiniteGroup, r: usize, distinct: bool) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..r {
            let mut next = Vec::new();
            for t in &out {
                for x in g.elements() {
                    if distinct && t.contains(&x) {
                        continue;
                    }
                    if t.iter().all(|&y| g.commute(x, y)) {
                        let mut t2 = t.clone();
                        t2.push(x);
                        next.push(t2);
                    }
                }
            }
            out = next;
        }
        out
    }

    /// Orbits by direct conjugation of whole tuples: multiset of
    /// (orbit size, stabilizer order).
    fn brute_orbit_profile(
        g: &FiniteGroup,
        r: usize,
        distinct: bool,
    ) -> BTreeMap<(usize, usize), usize> {
        let tuples = brute_tuples(g, r, distinct);
        let mut seen = HashSet::new();
        let mut profile = BTreeMap::new();
        for t in tuples {
            if seen.contains(&t) {
                continue;
            }
            let orbit: HashSet<Vec<usize>> = g
                .elements()
                .map(|h| t.iter().map(|&x| g.conjugate(x, h)).collect())
                .collect();
            let stab = g
                .elements()
                .filter(|&h| t.iter().all(|&x| g.commute(h, x)))
                .count();
            *profile.entry((orbit.len(), stab)).or_insert(0) += 1;
            seen.extend(orbit);
        }
        profile
    }

    fn profile(orbits: &[CommutingTupleOrbit]) -> BTreeMap<(usize, usize), usize> {
        let mut p = BTreeMap::new();
        for o in orbits {
            *p.entry((o.orbit_size, o.stabilizer.order())).or_insert(0) += 1;
        }
        p
    }

    #[test]
    fn s3_classes() {
        let g = s3();
        let classes = conjugacy_classes(&g);
        let sizes: Vec<usize> = classes.iter().map(ConjugacyClass::size).collect();
        let cents: Vec<usize> = classes.iter().map(|c| c.centralizer.order()).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        assert_eq!(cents, vec![6, 2, 3]);
    }

    #[test]
    fn d4_classes() {
        let g = d4();
        let cents: Vec<usize> = conjugacy_classes(&g)
            .iter()
            .map(|c| c.centralizer.order())
            .collect();
        assert_eq!(cents, vec![8, 8, 4, 4, 4]);
    }

    #[test]
    fn abelian_classes_are_singletons() {
        let g = group("(0 1 2 3)(4 5)");
        let classes = conjugacy_classes(&g);
        assert_eq!(classes.len(), g.order());
        assert!(classes
            .iter()
            .all(|c| c.size() == 1 && c.centralizer.order() == g.order()));
    }

    #[test]
    fn class_equation() {
        for g in [
            s3(),
            d4(),
            group("(0 1 2 3 4), (0 1)"),
            group("(0 1 2), (1 2 3)"),
        ] {
            let classes = conjugacy_classes(&g);
            assert_eq!(
                classes.iter().map(ConjugacyClass::size).sum::<usize>(),
                g.order()
            );
            for c in &classes {
                assert_eq!(g.order() % c.size(), 0);
                assert_eq!(c.size() * c.centralizer.order(), g.order());
            }
            let central = classes.iter().filter(|c| c.size() == 1).count();
            assert_eq!(center(&g).order(), central);
        }
    }

    #[test]
    fn centralizers() {
        let g = d4();
        assert_eq!(centralizer(&g, &[g.identity()]).order(), 8);
        let r = g.elements().find(|&a| g.element_order(a) == 4).unwrap();
        let zr = centralizer(&g, &[r]);
        assert_eq!(zr.order(), 4);
        assert!(zr.group.elements().any(|a| zr.group.element_order(a) == 4));
        let h = s3();
        let t = h.elements().find(|&a| h.element_order(a) == 2).unwrap();
        assert_eq!(centralizer(&h, &[t]).order(), 2);
        assert_eq!(center(&d4()).order(), 2);
        assert_eq!(center(&s3()).order(), 1);
    }

    #[test]
    fn centralizer_is_intersection() {
        let g = group("(0 1 2 3 4), (0 1)");
        for s in [vec![1, 2], vec![3, 7, 11], vec![0, 5]] {
            let joint = centralizer(&g, &s).parent_elements();
            let mut inter: Vec<usize> = g.elements().collect();
            for &x in &s {
                let cx = centralizer(&g, &[x]).parent_elements();
                inter.retain(|h| cx.contains(h));
            }
            assert_eq!(joint, inter);
        }
    }

    #[test]
    fn s3_tuple_orbits() {
        let g = s3();
        let pairs = commuting_tuple_orbits(&g, 2);
        assert_eq!(pairs.len(), 5);
        let stabs: Vec<usize> = pairs.iter().map(|o| o.stabilizer.order()).collect();
        assert_eq!(stabs.iter().filter(|&&s| s == 2).count(), 2);
        assert_eq!(stabs.iter().filter(|&&s| s == 3).count(), 3);
        let triples = commuting_tuple_orbits(&g, 3);
        assert_eq!(triples.len(), 3);
        assert!(triples.iter().all(|o| o.stabilizer.order() == 3));
        assert!(commuting_tuple_orbits(&g, 4).is_empty());
    }

    #[test]
    fn empty_tuple() {
        let g = d4();
        let o = commuting_tuple_orbits(&g, 0);
        assert_eq!(o.len(), 1);
        assert!(o[0].representative.is_empty());
        assert_eq!(o[0].stabilizer.order(), 8);
    }

    #[test]
    fn tuple_orbits_match_brute_force() {
        for g in [
            s3(),
            d4(),
            group("(0 1 2), (1 2 3)"),
            group("(0 1 2 3), (0 1)"),
        ] {
            for r in 0..=3 {
                for distinct in [true, false] {
                    let orbits = tuple_orbits(&g, r, distinct);
                    assert_eq!(
                        profile(&orbits),
                        brute_orbit_profile(&g, r, distinct),
                        "r={r}"
                    );
                    let total: usize = orbits.iter().map(|o| o.orbit_size).sum();
                    assert_eq!(total, brute_tuples(&g, r, distinct).len());
                    for o in &orbits {
                        assert_eq!(o.orbit_size * o.stabilizer.order(), g.order());
                        let t = &o.representative;
                        for (i, &a) in t.iter().enumerate() {
                            for &b in &t[i + 1..] {
                                assert!(g.commute(a, b));
                                assert!(!distinct || a != b);
                            }
                        }
                        // Representative is the lexicographic minimum of its orbit.
                        for h in g.elements() {
                            let c: Vec<usize> = t.iter().map(|&x| g.conjugate(x, h)).collect();
                            assert!(t <= &c);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn abelian_tuple_count() {
        let g = group("(0 1 2 3 4)");
        for r in 0..=5usize {
            let orbits = commuting_tuple_orbits(&g, r);
            let falling: usize = (0..r).map(|i| 5 - i).product();
            assert_eq!(orbits.len(), falling);
            assert!(orbits.iter().all(|o| o.orbit_size == 1));
        }
    }
}
