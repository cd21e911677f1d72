mod common;

use derangement_lab::constructions::{build_example6, build_fourell, build_mq};
use derangement_lab::dgraph::*;
use derangement_lab::gf::make_field;
use derangement_lab::perm::PermGroup;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn decomposition(g: &PermGroup) -> Option<MultipartiteDecomposition> {
    let dg = DerangementGraph::build(g, 20_000).unwrap();
    complete_multipartite_decomposition(g, &dg)
        .unwrap()
        .multipartite()
        .cloned()
}

#[test]
fn g2_is_k444() {
    let g = common::gq(2);
    let dg = DerangementGraph::build(&g, 100).unwrap();
    let m = decomposition(&g).unwrap();
    assert_eq!((m.part_count, m.part_size), (3, 4));
    assert_eq!(dg.graph().edge_count(), 3 * 4 * 4);
    assert_eq!(dg.valency(), 8);
}

#[test]
fn decomposition_examples() {
    let m = decomposition(&common::gq(3)).unwrap();
    assert_eq!((m.part_count, m.part_size), (4, 18));
    let f = build_fourell(3, 1000).unwrap();
    let m = decomposition(&f.group).unwrap();
    assert_eq!((m.part_count, m.part_size), (6, 4));
}

#[test]
fn mq_is_intersecting() {
    let s = make_field(3, 1).unwrap();
    let g = common::gq(3);
    let mq = build_mq(&s).unwrap();
    let idx: Vec<usize> = mq
        .elements()
        .iter()
        .map(|x| g.index_of(x).unwrap())
        .collect();
    assert!(is_intersecting_set(&g, &idx));
}

#[test]
fn identity_part_is_union_of_stabilizers() {
    for g in common::test_matrix() {
        if let Some(m) = decomposition(&g) {
            assert_eq!(m.part_size * m.part_count, g.order());
            let union: Vec<usize> = (0..g.order())
                .filter(|&i| g.element(i).has_fixed_point())
                .collect();
            assert_eq!(m.parts[0], union, "{}", g.name());
            let fix = g.fix_subgroup().unwrap();
            assert_eq!(fix.order(), m.part_size);
        }
    }
}

#[test]
fn derangements_are_closed() {
    for g in common::test_matrix()
        .into_iter()
        .filter(|g| g.order() <= 2000)
    {
        let der = derangement_set(&g);
        for &d in &der {
            let x = g.element(d);
            assert!(x.inverse().is_derangement());
            for y in g.elements() {
                assert!(x.conjugate_by(y).unwrap().is_derangement());
            }
        }
    }
}

#[test]
fn edge_rules_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for g in common::test_matrix() {
        let dg = DerangementGraph::build(&g, 20_000).unwrap();
        let n = g.order();
        let pairs: Vec<(usize, usize)> = if n <= 500 {
            (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).collect()
        } else {
            (0..20_000)
                .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
                .collect()
        };
        for (u, v) in pairs {
            let a = adjacent_pointwise(&g, u, v);
            assert_eq!(a, adjacent_by_quotient(&g, u, v));
            assert_eq!(a, dg.adjacent(u, v), "{} at ({u},{v})", g.name());
        }
    }
}

#[test]
fn bipartite_only_in_degree_two() {
    for g in common::test_matrix() {
        let dg = DerangementGraph::build(&g, 20_000).unwrap();
        assert_eq!(dg.is_bipartite(), g.degree() <= 2, "{}", g.name());
    }
}

#[test]
fn exports_round_trip() {
    let g = build_example6();
    let dg = DerangementGraph::build(&g, 100).unwrap();
    let bytes = to_bitmap(dg.graph());
    assert_eq!(&from_bitmap(&bytes).unwrap(), dg.graph());
    assert!(from_bitmap(&bytes[..bytes.len() - 1]).is_err());
    let m = decomposition(&g).unwrap();
    let dot = to_dot(&g, dg.graph(), Some(&m.parts));
    assert!(dot.starts_with("graph \"example6\" {"));
    assert_eq!(dot.matches("fillcolor=").count(), 1 + 12);
}
