use num_bigint::BigUint;
use num_integer::Integer;
use permgroup::classify::falling_factorial;
use permgroup::families::{affine_1, alternating, pgl2, symmetric};
use permgroup::{
    blichfeldt_check, build_engine, frobenius_analysis, is_sharply_k_transitive, moments_direct,
    moments_recursive, transitivity_degree, Filter, GroupEngine, Permutation,
};
use proptest::prelude::*;

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(&images).unwrap())
}

fn group() -> impl Strategy<Value = GroupEngine> {
    (1usize..=7)
        .prop_flat_map(|n| prop::collection::vec(permutation(n), 1..=3))
        .prop_map(|gens| build_engine(&gens).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn element_stream_is_the_group(g in group()) {
        let elements: Vec<Permutation> = g.elements(&g.order()).unwrap().collect();
        prop_assert_eq!(BigUint::from(elements.len()), g.order());
        let distinct: std::collections::HashSet<_> = elements.iter().collect();
        prop_assert_eq!(distinct.len(), elements.len());
        for e in &elements {
            prop_assert!(g.contains(e).unwrap());
        }
    }

    #[test]
    fn lagrange_for_stabilizers(g in group(), point in 1usize..=7) {
        let point = (point - 1) % g.degree() + 1;
        let stabilizer = g.point_stabilizer(point).unwrap();
        let (_, r) = g.order().div_rem(&stabilizer.order());
        prop_assert_eq!(r, BigUint::from(0u32));
        let index = g.order() / stabilizer.order();
        prop_assert_eq!(index, BigUint::from(g.orbit(point).unwrap().len()));
    }

    #[test]
    fn conjugate_stabilizers_have_equal_order(g in group(), point in 1usize..=7, pick in 0usize..3) {
        let point = (point - 1) % g.degree() + 1;
        let x = &g.generators()[pick % g.generators().len()];
        let here = g.point_stabilizer(point).unwrap();
        let there = g.point_stabilizer(x.image(point)).unwrap();
        prop_assert_eq!(here.order(), there.order());
        for s in here.generators() {
            prop_assert!(there.contains(&s.conjugate_by(x)).unwrap());
        }
    }

    #[test]
    fn moments_agree(g in group()) {
        prop_assert_eq!(moments_direct(&g, 5).unwrap(), moments_recursive(&g, 5));
    }

    #[test]
    fn blichfeldt_holds_for_element_filters(g in group()) {
        for filter in [Filter::AllNontrivialElements, Filter::PrimePowerOrder] {
            prop_assert!(blichfeldt_check(&g, filter).unwrap().divides);
        }
    }
}

#[test]
fn symmetric_and_alternating_sharpness() {
    for n in 4..=8 {
        let g = symmetric(n).unwrap();
        assert!(is_sharply_k_transitive(&g, n), "S{n}");
        assert!(is_sharply_k_transitive(&g, n - 1), "S{n}");
    }
    for n in 6..=9 {
        let g = alternating(n).unwrap();
        assert!(is_sharply_k_transitive(&g, n - 2), "A{n}");
        assert!(!is_sharply_k_transitive(&g, n - 1), "A{n}");
    }
}

#[test]
fn affine_groups_are_frobenius_with_abelian_kernel() {
    for (p, m) in [
        (2, 1),
        (3, 1),
        (5, 1),
        (7, 1),
        (2, 2),
        (2, 3),
        (3, 2),
        (5, 2),
    ] {
        let g = affine_1(p, m).unwrap();
        let q = (p as usize).pow(m);
        assert_eq!(g.order(), BigUint::from(q * (q - 1)));
        assert!(is_sharply_k_transitive(&g, 2));
        // Aff(1,2) and Aff(1,3) are the full symmetric groups
        let expected = if q <= 3 { q } else { 2 };
        assert_eq!(transitivity_degree(&g), expected, "q = {q}");
        let f = frobenius_analysis(&g).unwrap();
        if q > 2 {
            assert!(f.is_frobenius && f.kernel_is_abelian && f.kernel_is_normal);
            assert_eq!(f.kernel_size, q);
        }
    }
}

#[test]
fn pgl2_sharply_three_transitive() {
    for q in [2u64, 3, 4, 5, 7, 8, 9, 16] {
        let g = pgl2(q).unwrap();
        let n = q as usize + 1;
        assert_eq!(g.order(), falling_factorial(n, 3), "q = {q}");
        assert!(is_sharply_k_transitive(&g, 3), "q = {q}");
    }
}

#[test]
fn family_engines_satisfy_blichfeldt() {
    for entry in permgroup::default_corpus().unwrap() {
        let r = blichfeldt_check(&entry.engine, Filter::AllNontrivialElements).unwrap();
        assert!(r.divides, "{}", entry.name);
    }
}
