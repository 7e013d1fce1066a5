//! Structural invariants across modules, including property-based checks.

use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use diracpoint::{
    analyze, build_aiii, is_regular, Catalog, ClassicalFamily, EntryKind, Rational, RootSystem,
    SpaceDescriptor, SymmetricPair, WeightVector,
};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| diracpoint::ratio(n, d))
}

fn weight_vector(dim: usize) -> impl Strategy<Value = WeightVector> {
    prop::collection::vec(small_rational(), dim).prop_map(WeightVector::new)
}

proptest! {
    #[test]
    fn inner_is_symmetric_and_positive_definite(
        u in weight_vector(4),
        v in weight_vector(4),
    ) {
        prop_assert_eq!(u.inner(&v).unwrap(), v.inner(&u).unwrap());
        if !u.is_zero() {
            prop_assert!(u.norm_sq().is_positive());
        }
    }

    #[test]
    fn inner_is_bilinear(
        u in weight_vector(3),
        v in weight_vector(3),
        w in weight_vector(3),
        c in small_rational(),
    ) {
        let lhs = (&u + &v.scale(&c)).inner(&w).unwrap();
        let rhs = u.inner(&w).unwrap() + c * v.inner(&w).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reflection_is_an_isometric_involution(
        v in weight_vector(3),
        root_index in 0usize..8,
    ) {
        let c3 = RootSystem::build_classical(ClassicalFamily::C, 3).unwrap();
        let alpha = &c3.roots()[root_index % c3.roots().len()];
        let reflected = v.reflect(alpha).unwrap();
        prop_assert_eq!(reflected.norm_sq(), v.norm_sq());
        prop_assert_eq!(reflected.reflect(alpha).unwrap(), v);
    }

    #[test]
    fn regularity_ignores_root_signs(v in weight_vector(3)) {
        let a2 = RootSystem::build_classical(ClassicalFamily::A, 2).unwrap();
        let neg: Vec<WeightVector> = a2.roots().iter().map(|r| -r).collect();
        prop_assert_eq!(is_regular(&v, a2.roots()), is_regular(&v, &neg));
    }

    #[test]
    fn rational_strings_round_trip(n in -1000i64..1000, d in 1i64..500) {
        let r = diracpoint::ratio(n, d);
        let s = diracpoint::format_rational(&r);
        prop_assert_eq!(diracpoint::parse_rational(&s).unwrap(), r);
    }
}

fn catalog_pairs(max_rank: usize) -> Vec<(String, SymmetricPair)> {
    Catalog::default_catalog()
        .entries()
        .iter()
        .filter(|e| e.rank_g <= max_rank)
        .filter_map(|e| match &e.kind {
            EntryKind::Pair(p) => Some((e.name.clone(), (**p).clone())),
            EntryKind::Stub(_) => None,
        })
        .collect()
}

#[test]
fn rho_pairs_to_one_with_every_simple_coroot() {
    let mut systems: Vec<RootSystem> = vec![
        RootSystem::build_classical(ClassicalFamily::A, 3).unwrap(),
        RootSystem::build_classical(ClassicalFamily::B, 3).unwrap(),
        RootSystem::build_classical(ClassicalFamily::C, 4).unwrap(),
        RootSystem::build_classical(ClassicalFamily::D, 4).unwrap(),
    ];
    for (_, pair) in catalog_pairs(7) {
        systems.push(pair.g().clone());
    }
    for rs in &systems {
        for alpha in rs.simple() {
            let pairing =
                diracpoint::rat(2) * rs.rho().inner(alpha).unwrap() / alpha.inner(alpha).unwrap();
            assert_eq!(pairing, diracpoint::rat(1));
        }
    }
}

#[test]
fn root_systems_are_closed_and_partitioned() {
    for (family, max) in [
        (ClassicalFamily::A, 4),
        (ClassicalFamily::B, 4),
        (ClassicalFamily::C, 4),
        (ClassicalFamily::D, 4),
    ] {
        let min = if family == ClassicalFamily::D { 2 } else { 1 };
        for n in min..=max {
            let rs = RootSystem::build_classical(family, n).unwrap();
            rs.validate_closure().unwrap();
            assert_eq!(rs.roots().len(), 2 * rs.positive().len());
            // rho = half the sum of positives is part of construction; check
            // against direct summation
            let mut sum = WeightVector::zero(rs.ambient_rank());
            for r in rs.positive() {
                sum = &sum + r;
            }
            assert_eq!(&sum, &(rs.rho() + rs.rho()));
        }
    }
}

#[test]
fn weyl_group_orders_match_closed_forms() {
    let factorial = |n: usize| -> usize { (1..=n).product() };
    for n in 1..=6 {
        let a = RootSystem::build_classical(ClassicalFamily::A, n).unwrap();
        assert_eq!(a.weyl_order().unwrap(), factorial(n + 1), "A{n}");
    }
    for n in 1..=6 {
        let b = RootSystem::build_classical(ClassicalFamily::B, n).unwrap();
        assert_eq!(b.weyl_order().unwrap(), (1 << n) * factorial(n), "B{n}");
        let c = RootSystem::build_classical(ClassicalFamily::C, n).unwrap();
        assert_eq!(c.weyl_order().unwrap(), (1 << n) * factorial(n), "C{n}");
    }
    for n in 2..=6 {
        let d = RootSystem::build_classical(ClassicalFamily::D, n).unwrap();
        assert_eq!(
            d.weyl_order().unwrap(),
            (1 << (n - 1)) * factorial(n),
            "D{n}"
        );
    }
}

fn inner_multiset(rs: &RootSystem) -> Vec<Rational> {
    let mut all = Vec::new();
    for a in rs.roots() {
        for b in rs.roots() {
            all.push(a.inner(b).unwrap());
        }
    }
    all.sort();
    all
}

#[test]
fn cartan_generation_is_isometric_to_classical_realizations() {
    // C starts at rank 2: a rank-1 Cartan matrix carries no length scale, so
    // the classical C1 realization (a long root of squared length 4) cannot
    // be recovered from it.
    for (family, min) in [
        (ClassicalFamily::A, 1),
        (ClassicalFamily::C, 2),
        (ClassicalFamily::D, 2),
    ] {
        for n in min..=4 {
            let classical = RootSystem::build_classical(family, n).unwrap();
            let generated = RootSystem::build_from_cartan(&classical.cartan_matrix()).unwrap();
            assert_eq!(generated.roots().len(), classical.roots().len());
            assert_eq!(inner_multiset(&generated), inner_multiset(&classical));
        }
    }
}

#[test]
fn spinor_weights_are_dominant_and_integral() {
    for (name, pair) in catalog_pairs(5) {
        for kt in pair.spinor_decomposition().unwrap() {
            assert!(
                pair.is_k_dominant(&kt.highest_weight, false),
                "non-dominant spinor weight for {name}"
            );
            assert!(
                diracpoint::is_algebraically_integral(&kt.highest_weight, pair.k_positive()),
                "non-integral spinor weight for {name}"
            );
            assert_eq!(kt.sign, if kt.w.length() % 2 == 0 { 1 } else { -1 });
            assert_eq!(diracpoint::rat(kt.sign), kt.w.det());
        }
    }
}

#[test]
fn spinor_weights_are_lattice_admissible() {
    // each w rho_g - rho_k must be a weight of the (possibly doubled) K
    for (name, pair) in catalog_pairs(5) {
        for kt in pair.spinor_decomposition().unwrap() {
            assert!(
                pair.lattice_admits(&kt.highest_weight),
                "spinor weight escapes the lattice for {name}"
            );
        }
    }
}

#[test]
fn cone_membership_respects_the_pairing_order() {
    for (_, pair) in catalog_pairs(4) {
        if !is_regular(pair.rho_k(), pair.g().roots()) {
            continue;
        }
        let param = pair.discrete_series(pair.rho_k()).unwrap();
        let w_rho = param.witness.apply(pair.g().rho());
        for kt in pair.spinor_decomposition().unwrap() {
            if pair.ktype_cone_member(&kt.highest_weight, &param) {
                let gap = (&kt.highest_weight - &param.blattner).inner(&w_rho).unwrap();
                assert!(!gap.is_negative());
                assert_eq!(gap.is_zero(), kt.highest_weight == param.blattner);
            }
        }
    }
}

#[test]
fn hermitian_pairs_have_trivial_compact_genus_factor() {
    for (name, pair) in catalog_pairs(usize::MAX) {
        if !pair.meta().hermitian {
            continue;
        }
        let mut product = Rational::one();
        for alpha in pair.k_positive() {
            product *= pair.rho_k().inner(alpha).unwrap() / pair.rho_g().inner(alpha).unwrap();
        }
        if pair.k_positive().is_empty() {
            continue;
        }
        assert_eq!(product, Rational::one(), "compact factor not 1 for {name}");
    }
}

#[test]
fn product_genus_matches_concatenated_pair() {
    let a = build_aiii(2, 1).unwrap();
    let b = build_aiii(1, 2).unwrap();
    let direct = diracpoint::a_hat_number(&SymmetricPair::product(&[a.clone(), b.clone()]).unwrap());
    let multiplied =
        diracpoint::a_hat_product(&[diracpoint::a_hat_number(&a), diracpoint::a_hat_number(&b)]);
    assert_eq!(direct, multiplied);
}

#[test]
fn analysis_reports_round_trip_for_products() {
    let cat = Catalog::default_catalog();
    let descriptor = diracpoint::parse_space_expr(cat, "AIII:1,2 x AIII:2,3").unwrap();
    let report = analyze(&descriptor).unwrap();
    let json = serde_json::to_string(&report).unwrap();
    let back: diracpoint::AnalysisReport = serde_json::from_str(&json).unwrap();
    assert_eq!(report, back);

    let stub_descriptor = diracpoint::parse_space_expr(cat, "AI:3 x AIII:1,2").unwrap();
    let report = analyze(&stub_descriptor).unwrap();
    assert_eq!(report.verdict, diracpoint::Verdict::EmptyPointSpectrum);
    let json = serde_json::to_string(&report).unwrap();
    let back: diracpoint::AnalysisReport = serde_json::from_str(&json).unwrap();
    assert_eq!(report, back);
}

#[test]
fn exceptional_entries_respect_the_classification() {
    let cat = Catalog::default_catalog();
    for name in ["EIII", "EVII"] {
        let entry = cat.lookup(name).unwrap();
        let report = analyze(&SpaceDescriptor {
            factors: vec![entry.to_factor()],
        })
        .unwrap();
        assert_eq!(report.verdict, diracpoint::Verdict::EmptyPointSpectrum);
        assert_eq!(report.reason, diracpoint::Reason::RhoKSingular);
    }
}

#[test]
fn w_prime_of_exceptional_hermitian_pairs() {
    let cat = Catalog::default_catalog();
    let EntryKind::Pair(eiii) = &cat.lookup("EIII").unwrap().kind else {
        panic!()
    };
    assert_eq!(eiii.enumerate_w_prime().unwrap().len(), 27);
    let EntryKind::Pair(evii) = &cat.lookup("EVII").unwrap().kind else {
        panic!()
    };
    assert_eq!(evii.enumerate_w_prime().unwrap().len(), 56);
}
