mod common;

use std::collections::HashMap;

use common::{catalog_all, column_matroid, compress, iso_classes, labelled, relabel};
use itg_core::catalog;
use itg_core::element_set::ElementSet;
use itg_core::matroid::{direct_sum, is_isomorphic, Matroid};
use proptest::prelude::*;

/// Matroids on up to six elements (all labelled ones) plus the catalog.
fn small_and_catalog() -> impl Iterator<Item = Matroid> {
    labelled()
        .iter()
        .flatten()
        .cloned()
        .chain(catalog_all().into_iter().map(|(_, m)| m))
}

/// Isomorphism representatives up to six elements plus the catalog.
fn reps_and_catalog() -> impl Iterator<Item = Matroid> {
    iso_classes()
        .iter()
        .flatten()
        .cloned()
        .chain(catalog_all().into_iter().map(|(_, m)| m))
}

#[test]
fn enumeration_matches_known_counts() {
    let labelled_counts: Vec<usize> = labelled().iter().map(Vec::len).collect();
    assert_eq!(labelled_counts, [1, 2, 5, 16, 68, 406, 3807]);
    let class_counts: Vec<usize> = iso_classes().iter().map(Vec::len).collect();
    assert_eq!(class_counts, [1, 2, 4, 8, 17, 38, 98]);
}

fn check_dual_rank(m: &Matroid) {
    let d = m.dual();
    let e = m.ground();
    for a in e.subsets() {
        let expected = m.rank_of(e.difference(a)) + a.len() - m.rank();
        assert_eq!(d.rank_of(a), expected, "{m:?} at {a}");
    }
}

#[test]
fn dual_is_an_involution() {
    for m in small_and_catalog() {
        assert_eq!(m.dual().dual(), m);
    }
}

#[test]
fn rank_duality_formula() {
    for m in small_and_catalog() {
        check_dual_rank(&m);
    }
}

#[test]
fn greedy_rank_matches_table() {
    for m in small_and_catalog() {
        for s in m.ground().subsets() {
            assert_eq!(m.greedy_rank(s), m.rank_of(s), "{m:?} at {s}");
        }
    }
}

fn check_minors(m: &Matroid) {
    let e = m.ground();
    for s in e.subsets() {
        for t in e.difference(s).subsets() {
            let direct = m.minor(s, t);
            let contract_first = m.contract(t).delete(compress(s, e.difference(t)));
            let delete_first = m.delete(s).contract(compress(t, e.difference(s)));
            assert_eq!(contract_first, delete_first, "{m:?} \\ {s} / {t}");
            assert_eq!(direct, delete_first);
            // rk_{M\S/T}(A) = rk(A ∪ T) - rk(T)
            let keep = e.difference(s).difference(t);
            for a in keep.subsets() {
                assert_eq!(
                    direct.rank_of(compress(a, keep)),
                    m.rank_of(a.union(t)) - m.rank_of(t)
                );
            }
        }
    }
}

#[test]
fn minors_commute_on_all_small_matroids() {
    for level in &labelled()[..=5] {
        for m in level {
            check_minors(m);
        }
    }
    for m in &iso_classes()[6] {
        check_minors(m);
    }
}

#[test]
fn minors_commute_on_seven_element_catalog() {
    for (_, m) in catalog_all() {
        if m.ground_size() == 7 {
            check_minors(&m);
        }
    }
}

/// Length of a longest chain of nonempty circuit unions ending in each
/// circuit union of `m`.
fn chain_lengths(m: &Matroid) -> HashMap<ElementSet, isize> {
    let mut unions: Vec<ElementSet> = m.circuits().to_vec();
    let mut i = 0;
    while i < unions.len() {
        for j in 0..m.circuits().len() {
            let u = unions[i].union(m.circuits()[j]);
            if !unions.contains(&u) {
                unions.push(u);
            }
        }
        i += 1;
    }
    unions.sort_by_key(|u| u.len());
    let mut len: HashMap<ElementSet, isize> = HashMap::new();
    for &u in &unions {
        let best = unions
            .iter()
            .filter(|&&v| v != u && v.is_subset(u))
            .map(|v| len[v] + 1)
            .max()
            .unwrap_or(0);
        len.insert(u, best);
    }
    len
}

#[test]
fn dimension_agrees_with_chain_length() {
    for m in reps_and_catalog() {
        for (u, d) in chain_lengths(&m) {
            assert_eq!(m.dim(u), d, "{m:?} at {u}");
        }
    }
}

#[test]
fn circuit_union_dimensions() {
    let u24 = catalog::uniform(2, 4);
    assert_eq!(u24.dim_of_union(&[0]), 0);
    assert_eq!(u24.dim_of_union(&[0, 1]), 1);
    let k4 = catalog::complete_graph_k4();
    let all: Vec<usize> = (0..k4.circuits().len()).collect();
    assert_eq!(k4.dim_of_union(&all), 2);
}

fn check_orthogonality(m: &Matroid) {
    for &c in m.circuits() {
        for d in m.cocircuits() {
            assert_ne!(c.intersection(d).len(), 1, "{m:?}: {c} and {d}");
        }
    }
}

#[test]
fn circuits_and_cocircuits_are_orthogonal() {
    for m in small_and_catalog() {
        check_orthogonality(&m);
    }
}

fn is_valid_isomorphism(a: &Matroid, b: &Matroid, f: &[usize]) -> bool {
    let mut image: Vec<ElementSet> = a.circuits().iter().map(|c| c.map(|e| f[e])).collect();
    image.sort();
    image == b.circuits()
}

#[test]
fn isomorphism_is_reflexive_on_catalog() {
    for (name, m) in catalog_all() {
        let f = is_isomorphic(&m, &m).unwrap_or_else(|| panic!("{name}"));
        assert!(is_valid_isomorphism(&m, &m, &f), "{name}");
    }
}

#[test]
fn isomorphism_classes_are_distinct_and_symmetric() {
    for level in iso_classes() {
        for (i, a) in level.iter().enumerate() {
            for (j, b) in level.iter().enumerate() {
                assert_eq!(is_isomorphic(a, b).is_some(), i == j);
            }
        }
    }
    for level in &labelled()[..=5] {
        for (a, b) in level.iter().zip(level.iter().skip(1)) {
            let ab = is_isomorphic(a, b);
            assert_eq!(ab.is_some(), is_isomorphic(b, a).is_some());
            if let Some(f) = ab {
                assert!(is_valid_isomorphism(a, b, &f));
            }
        }
    }
}

#[test]
fn catalog_entries_are_pairwise_non_isomorphic() {
    let all = catalog_all();
    for (i, (na, a)) in all.iter().enumerate() {
        for (nb, b) in &all[i + 1..] {
            assert!(is_isomorphic(a, b).is_none(), "{na} and {nb}");
        }
    }
}

#[test]
fn components_add_under_direct_sum() {
    let small: Vec<_> = catalog_all()
        .into_iter()
        .filter(|(_, m)| m.ground_size() <= 7)
        .collect();
    for (na, a) in &small {
        for (nb, b) in &small {
            if a.ground_size() + b.ground_size() > 12 {
                continue;
            }
            let s = direct_sum(a, b).unwrap();
            assert_eq!(
                s.num_components(),
                a.num_components() + b.num_components(),
                "{na} + {nb}"
            );
            assert_eq!(s.rank(), a.rank() + b.rank());
        }
    }
}

#[test]
fn fano_minor_flags() {
    use itg_core::matroid::{has_dual_fano_minor, has_fano_minor};
    let expect = [
        ("F7", true, false),
        ("F7*", false, true),
        ("F7-", false, false),
        ("(F7-)*", false, false),
        ("P7", false, false),
        ("U_3(6)", false, false),
    ];
    for (name, f, fd) in expect {
        let m = catalog::get(name).unwrap();
        assert_eq!(
            (has_fano_minor(&m), has_dual_fano_minor(&m)),
            (f, fd),
            "{name}"
        );
    }
}

fn matrix(p: u8, max_rows: usize, max_cols: usize) -> impl Strategy<Value = Vec<Vec<u8>>> {
    (1..=max_rows, 1..=max_cols)
        .prop_flat_map(move |(r, n)| prop::collection::vec(prop::collection::vec(0..p, n), r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn binary_matroids_satisfy_duality(rows in matrix(2, 4, 8)) {
        let m = column_matroid(&rows, 2);
        prop_assert_eq!(m.dual().dual(), m.clone());
        check_dual_rank(&m);
        check_orthogonality(&m);
    }

    #[test]
    fn ternary_matroids_satisfy_duality(rows in matrix(3, 4, 8)) {
        let m = column_matroid(&rows, 3);
        prop_assert_eq!(m.dual().dual(), m.clone());
        check_dual_rank(&m);
        check_orthogonality(&m);
    }

    #[test]
    fn ternary_dimension_oracle(rows in matrix(3, 3, 7)) {
        let m = column_matroid(&rows, 3);
        for (u, d) in chain_lengths(&m) {
            prop_assert_eq!(m.dim(u), d);
        }
    }

    #[test]
    fn relabelled_matroids_are_isomorphic(
        rows in matrix(3, 3, 7),
        perm in Just((0..7).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let m = column_matroid(&rows, 3);
        let perm: Vec<usize> = perm.into_iter().filter(|&e| e < m.ground_size()).collect();
        let r = relabel(&m, &perm);
        let f = is_isomorphic(&m, &r).expect("relabelling is an isomorphism");
        prop_assert!(is_valid_isomorphism(&m, &r, &f));
        prop_assert!(is_isomorphic(&r, &m).is_some());
    }
}
