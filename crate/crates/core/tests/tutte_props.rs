mod common;

use common::catalog_all;
use itg_core::catalog;
use itg_core::tutte::{
    big_g_count, bracket_normalize, build_tm2, build_tmi0, g_count, has_fano_type_minor,
    inner_invariants, tutte_group_invariants, verify_isomorphism, verify_isomorphism_with,
    CircuitOrder, Method, S4Equations,
};
use itg_core::{GeneratorSymbol, Int, TutteError};
use proptest::prelude::*;

const SMALL: [&str; 6] = ["U_2(4)", "U_3(5)", "M(K4)", "W3", "F7*", "(F7-)*"];

#[test]
fn methods_agree_on_catalog() {
    for (name, m) in catalog_all() {
        let invs: Vec<_> = Method::ALL
            .iter()
            .map(|&k| inner_invariants::<Int>(&m, k))
            .collect();
        assert!(invs.windows(2).all(|w| w[0] == w[1]), "{name}: {invs:?}");
    }
}

#[test]
fn machine_integers_give_the_same_invariants() {
    for name in SMALL {
        let m = catalog::get(name).unwrap();
        for k in Method::ALL {
            let small = inner_invariants::<i64>(&m, k);
            let large = inner_invariants::<Int>(&m, k);
            assert_eq!(small.to_string(), large.to_string(), "{name} {k}");
        }
    }
}

#[test]
fn eta_and_xi_have_order_dividing_two() {
    for (name, m) in catalog_all() {
        let order = CircuitOrder::canonical(&m);
        let fano = has_fano_type_minor(&m);
        let tm2 = build_tm2::<Int>(&order, fano);
        let tmi0 = build_tmi0::<Int>(&order, fano, S4Equations::Corrected);
        assert!(
            tm2.is_identity(&tm2.vector(&[(GeneratorSymbol::Xi, 2)])),
            "{name}"
        );
        assert!(
            tmi0.is_identity(&tmi0.vector(&[(GeneratorSymbol::Eta, 2)])),
            "{name}"
        );
        assert_eq!(
            tm2.is_identity(&tm2.vector(&[(GeneratorSymbol::Xi, 1)])),
            fano,
            "{name}"
        );
        assert_eq!(
            tmi0.is_identity(&tmi0.vector(&[(GeneratorSymbol::Eta, 1)])),
            fano,
            "{name}"
        );
    }
}

#[test]
fn fano_type_matroids_have_trivial_inner_group() {
    for name in ["F7", "F7*"] {
        let m = catalog::get(name).unwrap();
        assert!(has_fano_type_minor(&m));
        for k in Method::ALL {
            assert!(inner_invariants::<Int>(&m, k).is_trivial(), "{name} {k}");
        }
    }
}

#[test]
fn decomposition_holds_on_catalog() {
    for (name, m) in catalog_all() {
        let inner = inner_invariants::<Int>(&m, Method::Kernel);
        let extra = m.ground_size() - m.num_components();
        assert_eq!(
            tutte_group_invariants::<Int>(&m),
            inner.with_extra_free_rank(extra),
            "{name}"
        );
    }
}

#[test]
fn isomorphism_verifies_on_catalog() {
    for (name, m) in catalog_all() {
        let report = verify_isomorphism::<Int>(&m).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(
            report.invariants,
            inner_invariants::<Int>(&m, Method::Kernel),
            "{name}"
        );
    }
}

#[test]
fn uncorrected_five_circuit_equations_fail() {
    let m = catalog::get("U_3(5)").unwrap();
    let order = CircuitOrder::canonical(&m);
    match verify_isomorphism_with::<Int>(&order, S4Equations::Uncorrected) {
        Err(TutteError::VerificationFailure { by_family, .. }) => {
            assert!(by_family.iter().any(|(f, _)| f == "VS4"), "{by_family:?}");
        }
        other => panic!("expected a VS4 failure, got {other:?}"),
    }
}

#[test]
fn bracket_rejects_invalid_configurations() {
    let m = catalog::uniform(2, 4);
    let order = CircuitOrder::canonical(&m);
    assert!(bracket_normalize(&order, [0, 1, 2, 9]).is_err());
    assert!(bracket_normalize(&order, [0, 1, 1, 2]).is_err());
    let k4 = catalog::complete_graph_k4();
    let order = CircuitOrder::canonical(&k4);
    // Three triangles of K4 cover every edge and span a plane, not a line.
    let all: Vec<usize> = (0..order.len()).collect();
    let plane = all
        .iter()
        .copied()
        .filter(|&i| order.circuit(i).len() == 3)
        .take(3)
        .collect::<Vec<_>>();
    assert_eq!(order.dim(&plane), 2);
    assert!(bracket_normalize(&order, [plane[0], plane[1], plane[2], plane[2]]).is_err());
}

fn shuffled(name: &'static str) -> impl Strategy<Value = (&'static str, Vec<usize>)> {
    let n = catalog::get(name).unwrap().circuits().len();
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(move |p| (name, p))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn presentations_do_not_depend_on_circuit_order(
        (name, perm) in prop_oneof![
            shuffled("U_2(4)"),
            shuffled("U_3(5)"),
            shuffled("M(K4)"),
            shuffled("W3"),
            shuffled("F7-"),
            shuffled("(F7-)*"),
        ]
    ) {
        let m = catalog::get(name).unwrap();
        let canonical = CircuitOrder::canonical(&m);
        let order = CircuitOrder::permuted(&m, &perm);
        prop_assert_eq!(big_g_count(&order), big_g_count(&canonical));
        prop_assert_eq!(g_count(&order), g_count(&canonical));
        let fano = has_fano_type_minor(&m);
        let expected = inner_invariants::<Int>(&m, Method::Kernel);
        prop_assert_eq!(build_tm2::<Int>(&order, fano).invariants(), expected.clone());
        prop_assert_eq!(
            build_tmi0::<Int>(&order, fano, S4Equations::Corrected).invariants(),
            expected.clone()
        );
        let report = verify_isomorphism_with::<Int>(&order, S4Equations::Corrected);
        prop_assert!(report.is_ok(), "{}: {:?}", name, report.err());
    }
}
