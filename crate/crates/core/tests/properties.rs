//! Property tests for the stated invariants of each module.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use inertia::group::{
    canonical_key, center, centralizer, commuting_tuple_orbits, conjugacy_classes, FiniteGroup,
    Permutation,
};
use inertia::kgpd::{eigen_components, inertia, inertia_r, product, projection, KGpdElement};
use inertia::linalg::{fixture, KStVector, MatrixJson, OperatorMatrix};
use inertia::qfield::{
    q_lambda, spectrum_decompose, Partition, PolynomialQ, RationalFunctionQ, SpectrumFamily,
};
use inertia::torus::{enumerate_flags, orbit_partition, torus_motive, MotiveExpr, PermAction};

fn arb_perms(
    max_degree: usize,
    max_gens: usize,
) -> impl Strategy<Value = (usize, Vec<Permutation>)> {
    (2..=max_degree).prop_flat_map(move |d| {
        let perm = Just((0..d).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap());
        (Just(d), prop::collection::vec(perm, 1..=max_gens))
    })
}

fn arb_group() -> impl Strategy<Value = FiniteGroup> {
    arb_perms(5, 2).prop_map(|(_, gens)| FiniteGroup::from_generators(&gens).unwrap())
}

fn arb_rational() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=6).prop_map(|(a, b)| BigRational::new(a.into(), b.into()))
}

fn arb_element() -> impl Strategy<Value = KGpdElement> {
    prop::collection::vec((arb_group(), arb_rational()), 1..=3).prop_map(|terms| {
        let mut x = KGpdElement::zero();
        for (g, c) in terms {
            x.add_term(canonical_key(&g), c);
        }
        x
    })
}

fn arb_poly() -> impl Strategy<Value = PolynomialQ> {
    prop::collection::vec(-6i64..=6, 1..=5).prop_map(|c| PolynomialQ::from_int_coeffs(&c))
}

fn brute_force_commuting_tuples(g: &FiniteGroup, r: usize) -> usize {
    fn go(g: &FiniteGroup, r: usize, chosen: &mut Vec<usize>) -> usize {
        if chosen.len() == r {
            return 1;
        }
        let mut total = 0;
        for x in g.elements() {
            if !chosen.contains(&x) && chosen.iter().all(|&y| g.commute(x, y)) {
                chosen.push(x);
                total += go(g, r, chosen);
                chosen.pop();
            }
        }
        total
    }
    go(g, r, &mut Vec::new())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn class_equation(g in arb_group()) {
        let classes = conjugacy_classes(&g);
        prop_assert_eq!(classes.iter().map(|c| c.size()).sum::<usize>(), g.order());
        for c in &classes {
            prop_assert_eq!(g.order() % c.size(), 0);
            prop_assert_eq!(c.size() * c.centralizer.order(), g.order());
        }
        let singletons = classes.iter().filter(|c| c.size() == 1).count();
        prop_assert_eq!(center(&g).order(), singletons);
    }

    #[test]
    fn centralizer_of_a_set_is_an_intersection(g in arb_group(), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..=3)) {
        let s: Vec<usize> = picks.iter().map(|i| i.index(g.order())).collect();
        let joint = centralizer(&g, &s).parent_elements();
        let meet: Vec<usize> = g
            .elements()
            .filter(|&h| s.iter().all(|&x| centralizer(&g, &[x]).parent_elements().contains(&h)))
            .collect();
        prop_assert_eq!(joint, meet);
    }

    #[test]
    fn tuple_orbits_count_all_tuples(g in arb_group(), r in 0usize..=3) {
        let orbits = commuting_tuple_orbits(&g, r);
        for o in &orbits {
            prop_assert_eq!(o.orbit_size * o.stabilizer.order(), g.order());
        }
        let total: usize = orbits.iter().map(|o| o.orbit_size).sum();
        prop_assert_eq!(total, brute_force_commuting_tuples(&g, r));
        if g.is_abelian() {
            prop_assert!(orbits.iter().all(|o| o.orbit_size == 1));
            let falling: usize = (0..r).map(|i| g.order().saturating_sub(i)).product();
            prop_assert_eq!(orbits.len(), falling);
        }
    }

    #[test]
    fn projections_decompose_elements(x in arb_element()) {
        let comps = eigen_components(&x);
        let total: KGpdElement = comps.iter().map(|(_, p)| p.clone()).sum();
        prop_assert_eq!(&total, &x);
        for (k, p) in &comps {
            prop_assert!(*k > 0);
            prop_assert_eq!(inertia(p), p.scale(&BigRational::from_integer((*k).into())));
            prop_assert_eq!(&projection(p, *k), p);
            for r in 0..=3usize {
                let c: BigInt = (0..r).map(|i| BigInt::from(*k as i64 - i as i64)).product();
                let c = if r > *k { BigInt::from(0) } else { c };
                prop_assert_eq!(inertia_r(p, r), p.scale(&BigRational::from_integer(c)));
            }
        }
    }

    #[test]
    fn inertia_is_linear(x in arb_element(), y in arb_element(), c in arb_rational()) {
        let lhs = inertia(&(&x.scale(&c) + &y));
        let rhs = &inertia(&x).scale(&c) + &inertia(&y);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inertia_respects_products(g in arb_group(), h in arb_group()) {
        prop_assume!(g.order() * h.order() <= 200);
        let x = KGpdElement::of_group(&g);
        let y = KGpdElement::of_group(&h);
        let lhs = inertia(&product(&x, &y).unwrap());
        let rhs = product(&inertia(&x), &inertia(&y)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn element_json_round_trip(x in arb_element()) {
        let terms = x.to_json_terms();
        prop_assert_eq!(KGpdElement::from_json_terms(&terms).unwrap(), x.clone());
        prop_assert_eq!(x.to_string().parse::<KGpdElement>().unwrap(), x);
    }

    #[test]
    fn rational_functions_form_a_field(a in arb_poly(), b in arb_poly(), c in arb_poly(), d in arb_poly()) {
        prop_assume!(!b.is_zero() && !d.is_zero() && !c.is_zero());
        let x = RationalFunctionQ::new(a, b).unwrap();
        let y = RationalFunctionQ::new(c, d).unwrap();
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        prop_assert_eq!((&x * &y).checked_div(&y).unwrap(), x.clone());
        prop_assert_eq!(&x * &(&y + &x), &(&x * &y) + &(&x * &x));
    }

    #[test]
    fn spectrum_round_trip(n in 1i64..=50, u in 0usize..=4, mut rs in prop::collection::vec(1usize..=5, 0..=3)) {
        rs.sort_unstable_by(|a, b| b.cmp(a));
        let p = rs.iter().fold(
            PolynomialQ::monomial(BigRational::from_integer(n.into()), u),
            |acc, &r| &acc * &PolynomialQ::q_pow_minus_one(r),
        );
        let d = spectrum_decompose(&p, SpectrumFamily::Full).unwrap().unwrap();
        prop_assert_eq!(d.reconstruct(), p.clone());
        prop_assert_eq!(&d.r_list, &rs);
        prop_assert_eq!(d.u, u);
        let semisimple = spectrum_decompose(&p, SpectrumFamily::Semisimple).unwrap();
        prop_assert_eq!(semisimple.is_some(), u == 0);
        let unipotent = spectrum_decompose(&p, SpectrumFamily::Unipotent).unwrap();
        prop_assert_eq!(unipotent.is_some(), n == 1 && rs.is_empty());
    }

    #[test]
    fn q_lambda_is_semisimple(blocks in prop::collection::vec(1usize..=4, 1..=4)) {
        let p = Partition::from_blocks(blocks.clone()).unwrap();
        let d = spectrum_decompose(&q_lambda(&p), SpectrumFamily::Semisimple).unwrap().unwrap();
        prop_assert_eq!(d.n, BigInt::from(1));
        let mut want = blocks;
        want.sort_unstable_by(|a, b| b.cmp(a));
        prop_assert_eq!(d.r_list, want);
    }

    #[test]
    fn torus_base_is_q_lambda((r, gens) in arb_perms(6, 2)) {
        let a = PermAction::new(r, gens).unwrap();
        let m = torus_motive(&a, 8).unwrap();
        prop_assert_eq!(&m.base_coefficient, &q_lambda(&orbit_partition(&a)));
        prop_assert_eq!(MotiveExpr::from_json(&m.to_json()).unwrap(), m);
    }

    #[test]
    fn fixture_components_are_eigenvectors(name in prop::sample::select(vec!["bgl2", "bn"]), coeffs in prop::collection::vec(-3i64..=3, 4)) {
        let m = fixture(name).unwrap();
        let mut v = KStVector::zero();
        for (b, c) in m.basis().iter().zip(coeffs) {
            v.set(b.clone(), RationalFunctionQ::from_int(c));
        }
        let comps = m.eigen_components(&v).unwrap();
        let total = comps.iter().fold(KStVector::zero(), |acc, (_, c)| acc.add(c));
        prop_assert_eq!(total, v);
        for (l, c) in &comps {
            prop_assert_eq!(m.apply(c).unwrap(), c.scale(l));
        }
    }
}

#[test]
fn trivial_action_gives_split_torus() {
    for r in 1..=6 {
        let m = torus_motive(&PermAction::trivial(r).unwrap(), 8).unwrap();
        assert_eq!(
            m.base_coefficient,
            PolynomialQ::from_int_coeffs(&[-1, 1]).pow(r)
        );
        assert!(m.cover_terms.is_empty());
    }
}

#[test]
fn flag_counts() {
    let counts: Vec<usize> = (1..=5)
        .map(|r| enumerate_flags(r, 8).unwrap().len())
        .collect();
    assert_eq!(counts, [2, 6, 26, 150, 1082]);
    assert!(enumerate_flags(9, 8).is_err());
}

#[test]
fn fixture_json_round_trip() {
    for name in ["bgl2", "bn", "bgl3"] {
        let m = fixture(name).unwrap();
        let text = serde_json::to_string(&m.to_json()).unwrap();
        let back: MatrixJson = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
        assert_eq!(OperatorMatrix::from_json(&back).unwrap(), m);
    }
}
