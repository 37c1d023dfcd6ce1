//! Isomorphism testing for small groups: invariant fingerprint first, then a
//! backtracking search over images of a greedily chosen generating set.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{center, conjugacy_classes, FiniteGroup};

/// Isomorphism invariants. Equal fingerprints are necessary, not sufficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Fingerprint {
    pub order: usize,
    pub abelian: bool,
    pub element_orders: Vec<usize>,
    pub center_order: usize,
    pub class_sizes: Vec<usize>,
    pub derived_order: usize,
}

pub fn fingerprint(g: &FiniteGroup) -> Fingerprint {
    let mut element_orders: Vec<usize> = g.elements().map(|a| g.element_order(a)).collect();
    element_orders.sort_unstable();
    let mut class_sizes: Vec<usize> = conjugacy_classes(g).iter().map(|c| c.size()).collect();
    class_sizes.sort_unstable();
    Fingerprint {
        order: g.order(),
        abelian: g.is_abelian(),
        element_orders,
        center_order: center(g).order(),
        class_sizes,
        derived_order: g.derived_subgroup().len(),
    }
}

/// Greedy generating set, preferring elements of large order.
fn generating_set(g: &FiniteGroup) -> Vec<usize> {
    let mut candidates: Vec<usize> = g.elements().filter(|&a| a != g.identity()).collect();
    candidates.sort_by_key(|&a| (std::cmp::Reverse(g.element_order(a)), a));
    let mut gens = Vec::new();
    let mut span = vec![g.identity()];
    for a in candidates {
        if span.len() == g.order() {
            break;
        }
        if span.binary_search(&a).is_err() {
            gens.push(a);
            span = g.generated_subgroup(&gens);
        }
    }
    gens
}

/// Extend `images[i]` for `gens[i]` to the subgroup they generate. Returns the
/// partial map, or `None` if the assignment is not a well-defined injective
/// homomorphism on that subgroup.
fn extend(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<usize>> {
    let mut phi = vec![usize::MAX; g.order()];
    let mut used = vec![false; h.order()];
    phi[g.identity()] = h.identity();
    used[h.identity()] = true;
    let mut queue = VecDeque::from([g.identity()]);
    while let Some(x) = queue.pop_front() {
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let img = h.mul(phi[x], t);
            if phi[y] == usize::MAX {
                if used[img] {
                    return None;
                }
                used[img] = true;
                phi[y] = img;
                queue.push_back(y);
            } else if phi[y] != img {
                return None;
            }
        }
    }
    Some(phi)
}

/// An isomorphism `g → h` as an image table, if one exists.
pub fn find_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Option<Vec<usize>> {
    if fingerprint(g) != fingerprint(h) {
        return None;
    }
    let gens = generating_set(g);
    if gens.is_empty() {
        return Some(vec![h.identity()]);
    }
    // Images must match element order and centralizer order.
    let profile = |grp: &FiniteGroup, a: usize| {
        let c = grp.elements().filter(|&b| grp.commute(a, b)).count();
        (grp.element_order(a), c)
    };
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            let want = profile(g, s);
            h.elements().filter(|&t| profile(h, t) == want).collect()
        })
        .collect();

    let mut images = Vec::with_capacity(gens.len());
    search(g, h, &gens, &candidates, &mut images)
}

fn search(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let depth = images.len();
    for &t in &candidates[depth] {
        images.push(t);
        if let Some(phi) = extend(g, h, &gens[..=depth], images) {
            if depth + 1 == gens.len() {
                // The generators span g, so phi is total; injective by construction.
                return Some(phi);
            }
            if let Some(found) = search(g, h, gens, candidates, images) {
                return Some(found);
            }
        }
        images.pop();
    }
    None
}

pub fn are_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    find_isomorphism(g, h).is_some()
}

#[cfg(test)]
mod tests {
    use super::super::{parse_generators, FiniteGroup};
    use super::*;

    fn group(src: &str) -> FiniteGroup {
        FiniteGroup::from_generators(&parse_generators(src, false, None).unwrap()).unwrap()
    }

    fn cyclic(n: usize) -> FiniteGroup {
        FiniteGroup::from_fn_unchecked(n, |a, b| (a + b) % n)
    }

    fn assert_isomorphism(g: &FiniteGroup, h: &FiniteGroup, phi: &[usize]) {
        let mut seen = vec![false; h.order()];
        for &y in phi {
            assert!(!std::mem::replace(&mut seen[y], true));
        }
        for a in g.elements() {
            for b in g.elements() {
                assert_eq!(phi[g.mul(a, b)], h.mul(phi[a], phi[b]));
            }
        }
    }

    #[test]
    fn z4_vs_klein() {
        let k = group("(0 1), (2 3)");
        assert!(!are_isomorphic(&cyclic(4), &k));
    }

    #[test]
    fn d4_two_presentations() {
        let a = group("(0 1 2 3), (0 2)");
        // Same group from its Cayley table, with elements relabelled.
        let n = a.order();
        let relabel: Vec<usize> = (0..n).map(|i| (i * 3 + 5) % n).collect();
        let mut inv = vec![0; n];
        for (i, &j) in relabel.iter().enumerate() {
            inv[j] = i;
        }
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|x| (0..n).map(|y| relabel[a.mul(inv[x], inv[y])]).collect())
            .collect();
        let b = FiniteGroup::from_cayley_table(&rows).unwrap();
        let phi = find_isomorphism(&a, &b).unwrap();
        assert_isomorphism(&a, &b, &phi);
    }

    #[test]
    fn self_isomorphic() {
        for g in [
            group("(0 1 2), (0 1)"),
            group("(0 1 2 3 4), (0 1)"),
            FiniteGroup::trivial(),
        ] {
            assert!(are_isomorphic(&g, &g));
        }
    }

    #[test]
    fn product_of_coprime_cyclics_is_cyclic() {
        let z6 = cyclic(2).direct_product(&cyclic(3)).unwrap();
        let phi = find_isomorphism(&z6, &cyclic(6)).unwrap();
        assert_isomorphism(&z6, &cyclic(6), &phi);
    }

    #[test]
    fn q8_vs_d4_share_little() {
        let d4 = group("(0 1 2 3), (0 2)");
        // Q8 as a regular permutation group on 8 points.
        let q8 = group("(0 1 2 3)(4 5 6 7), (0 4 2 6)(1 7 3 5)");
        assert_eq!(q8.order(), 8);
        assert!(!are_isomorphic(&d4, &q8));
    }

    #[test]
    fn abelian_vs_nonabelian_of_order_16() {
        let a = group("(0 1 2 3), (4 5 6 7)");
        let b = group("(0 1 2 3)(4 5 6 7), (0 4 2 6)(1 7 3 5), (8 9)");
        assert_eq!(a.order(), b.order());
        assert!(!are_isomorphic(&a, &b));
    }
}
