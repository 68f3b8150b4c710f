//! Worked instances of the constructions, formulas and solvers.

use egstab::algorithms::{
    circumference_len, clique_number, contains_subgraph, count_cliques, cycle_through_edge_at_least, disintegration,
    is_star_forest, longest_cycle_through_edge,
};
use egstab::families::{
    build_e, build_f_ell, build_gnk3, build_h, build_special, build_z, enumerate_family, enumerate_k_family, HParams,
    KFamilySpec, SpecialTag,
};
use egstab::formulas::{bound_pair_max, conjecture_bound, eg_bound, f_s, fan_bound, g_s, h_s, Rational};
use egstab::graph::{canonical_form, graph6_decode, graph6_encode, induced_subgraph, is_two_connected};
use egstab::{Error, Graph, VertexSet};

#[test]
fn graph6_by_hand() {
    let g = graph6_decode("D?{").unwrap();
    assert_eq!(g.n(), 5);
    // Six zero bits, then 111100: every edge into vertex 4.
    assert_eq!(g.edges(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
    assert_eq!(graph6_encode(&Graph::empty(1).unwrap()), "@");
}

#[test]
fn h_construction() {
    let g = build_h(9, 9, 3).unwrap();
    assert_eq!(g.edge_count(), 15 + 9);
    let (a, _, c) = HParams::new(9, 9, 3).unwrap().parts();
    let (k6, _) = induced_subgraph(&g, a.union(c)).unwrap();
    assert_eq!(canonical_form(&k6), canonical_form(&Graph::complete(6)));

    for k in 5..=14 {
        for a in 2..=(k - 1) / 2 {
            for n in k..=14 {
                assert_eq!(circumference_len(&build_h(n, k, a).unwrap()), k - 1, "H({n},{k},{a})");
            }
        }
    }

    let h = build_h(12, 9, 3).unwrap();
    assert_eq!(circumference_len(&h), 8);
    assert_eq!(count_cliques(&h, 3), 38);
    let (a, _, c) = HParams::new(12, 9, 3).unwrap().parts();
    assert_eq!(disintegration(&h, 3), a.union(c));
    // C is a triangle when k - 2a = 3, so removing A alone is not enough.
    let rest = h.vertices().difference(a);
    assert!(!is_star_forest(&induced_subgraph(&h, rest).unwrap().0));
    assert!(is_star_forest(&induced_subgraph(&h, rest.difference(c)).unwrap().0));
}

#[test]
fn formula_values() {
    for n in 9..=30 {
        assert_eq!(h_s(n, 9, 3, 2).unwrap(), 3 * n as u128 - 3);
    }
    assert_eq!(h_s(15, 9, 3, 2).unwrap(), 42);
    assert_eq!(h_s(12, 9, 3, 3).unwrap(), 20 + 6 * 3);
    assert_eq!(h_s(9, 9, 3, 7).unwrap(), 0);
    assert_eq!(f_s(12, 9, 2, 2).unwrap(), 32);
    assert_eq!(h_s(12, 9, 3, 2).unwrap(), 33);
    // 2*C(5,2) - C(3,2) + 3*(C(5,2) - C(3,2)), plus C(4,2) when n - k + 3 is odd.
    assert_eq!(g_s(13, 10, 2).unwrap(), 38);
    assert_eq!(g_s(14, 10, 2).unwrap(), 44);
    assert_eq!(bound_pair_max(20, 9, 3, 2, 2).unwrap(), 57);
    assert_eq!(fan_bound(6, 10).unwrap(), Rational::from_integer(29));
    assert_eq!(eg_bound(5, 11).unwrap(), Rational::from_integer(20));
    assert_eq!(conjecture_bound(10, 6, 2).unwrap(), 26);
}

#[test]
fn gnk3_matches_g_s_for_even_parity() {
    let g = build_gnk3(13, 10).unwrap();
    assert_eq!(g.n(), 13);
    for s in 2..=4 {
        assert_eq!(count_cliques(&g, s), g_s(13, 10, s as i64).unwrap());
    }
}

#[test]
fn z_construction() {
    let z = build_z(12, 9, 3).unwrap();
    assert_eq!(circumference_len(&z), 8);
    assert!(is_two_connected(&z));
    for (a, b) in z.edges() {
        assert!(contains_subgraph(&z, &z.without_edge(a, b)).is_some());
    }
    assert!(matches!(build_z(11, 9, 3), Err(Error::InvalidParameters(_))));
    let alone = build_z(6, 9, 3).unwrap();
    assert_eq!(canonical_form(&alone), canonical_form(&Graph::complete(6)));
}

#[test]
fn small_constructions() {
    let f = build_f_ell(4).unwrap();
    assert_eq!((f.n(), f.edge_count()), (10, 6 + 12));
    assert!(circumference_len(&f) <= 9);
    let e = build_e(5).unwrap();
    assert_eq!((e.n(), e.edge_count()), (5, 2));
}

#[test]
fn petersen() {
    let outer: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    let inner: Vec<(usize, usize)> = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5)).collect();
    let spokes: Vec<(usize, usize)> = (0..5).map(|i| (i, i + 5)).collect();
    let g = Graph::from_edges(10, &[outer, inner, spokes].concat()).unwrap();
    assert_eq!(circumference_len(&g), 9);
    assert_eq!(clique_number(&g), 2);
}

#[test]
fn special_members() {
    let (d, f0) = build_special(SpecialTag::F0, 12, 12, 3).unwrap();
    assert_eq!(f0.n(), 12);
    assert_eq!((d.a.len(), d.b.len(), d.c.len(), d.d.len()), (3, 3, 3, 3));
    let v = d.labels["v"];
    assert_eq!(VertexSet::from_slice(&d.d).intersection(f0.neighbors(v)).len(), 0);
    let v1 = d.labels["v1"];
    let (len, _) = longest_cycle_through_edge(&f0, v, v1).unwrap().unwrap();
    assert_eq!(len, 10);

    let (_, f4) = build_special(SpecialTag::F4, 13, 12, 3).unwrap();
    assert_eq!(f4.n(), 13);
    assert!(circumference_len(&f4) < 12);

    let (d, f2) = build_special(SpecialTag::F2, 12, 12, 3).unwrap();
    let (y, y1) = (d.labels["y"], d.labels["y1"]);
    for &a in d.a.iter().filter(|&&a| a != y1) {
        assert!(!f2.has_edge(a, y));
        assert!(cycle_through_edge_at_least(&f2.with_edge(a, y), a, y, 11).unwrap());
    }

    assert!(build_special(SpecialTag::F5, 10, 10, 3).is_err());
}

#[test]
fn family_edges() {
    for k in 9..=12 {
        let l = (k - 1) / 2;
        for r in 1..=l - 2 {
            assert!(enumerate_family(k + 2, k, r).unwrap().is_empty());
        }
    }
    let names: Vec<String> = enumerate_k_family(&KFamilySpec {
        k: 10,
        alpha: 1,
        m_max: Some(11),
    })
    .unwrap()
    .into_iter()
    .map(|m| m.name)
    .collect();
    assert!(names.iter().any(|n| n.starts_with("F5(10,10,2)")), "{names:?}");
    assert!(names.iter().any(|n| n == "F(4)"), "{names:?}");
}

#[test]
fn edges_into_y2_stop_at_k_minus_2() {
    for (k, r) in [(10, 2), (12, 2), (12, 3)] {
        for (d, g) in enumerate_family(k, k, r).unwrap() {
            let (Some(&y1), Some(&y2)) = (d.labels.get("y1"), d.labels.get("y2")) else {
                continue;
            };
            for &a in d.a.iter().filter(|&&a| a != y1 && g.has_edge(a, y2)) {
                let (len, _) = longest_cycle_through_edge(&g, a, y2).unwrap().unwrap();
                assert_eq!(len, k - 2, "k={k} r={r} {}", d.cd_layout);
            }
        }
    }
}
