#![allow(dead_code)]

use derangement_lab::constructions::*;
use derangement_lab::dgraph::Graph;
use derangement_lab::gf::make_field;
use derangement_lab::perm::{GroupFile, PermGroup};

/// Clique number by dynamic programming over all vertex subsets: a set is a
/// clique iff removing its lowest vertex leaves a clique inside that
/// vertex's neighbourhood.
pub fn exhaustive_clique_number(adj: &[u32]) -> usize {
    let n = adj.len();
    assert!(n <= 24, "oracle limited to 24 vertices");
    let mut is_clique = vec![false; 1usize << n];
    is_clique[0] = true;
    let mut best = 0;
    for s in 1usize..(1 << n) {
        let low = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        if is_clique[rest] && (rest as u32) & !adj[low] == 0 {
            is_clique[s] = true;
            best = best.max(s.count_ones() as usize);
        }
    }
    best
}

pub fn adjacency_masks(g: &Graph) -> Vec<u32> {
    (0..g.vertex_count())
        .map(|u| g.neighbors(u).iter().fold(0u32, |m, v| m | 1 << v))
        .collect()
}

pub fn complement_masks(adj: &[u32]) -> Vec<u32> {
    let n = adj.len();
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    adj.iter()
        .enumerate()
        .map(|(u, &m)| !m & all & !(1 << u))
        .collect()
}

pub fn data_group(file: &str) -> PermGroup {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(file);
    GroupFile::read(&path).unwrap().to_group(1_000_000).unwrap()
}

pub fn gq(q: u64) -> PermGroup {
    let s = derangement_lab::gf::FieldSpec::of_order(q).unwrap();
    build_gq(&s, 1_000_000).unwrap()
}

/// Transitive groups of degree 2p, p in {3, 5, 7}.
pub fn two_p_groups() -> Vec<(usize, PermGroup)> {
    let cap = 1_000_000;
    vec![
        (3, build_example6()),
        (3, build_cyclic_regular(6).unwrap()),
        (3, build_dihedral(6).unwrap()),
        (3, build_cyclic_wreath_c2(3).unwrap()),
        (3, build_psl2(5, cap).unwrap()),
        (3, build_pgl2(5, cap).unwrap()),
        (3, build_alternating(6, cap).unwrap()),
        (3, build_symmetric(6, cap).unwrap()),
        (5, build_cyclic_regular(10).unwrap()),
        (5, build_dihedral(10).unwrap()),
        (5, build_cyclic_wreath_c2(5).unwrap()),
        (5, data_group("alt5_pairs.json")),
        (5, data_group("sym5_pairs.json")),
        (7, build_cyclic_regular(14).unwrap()),
        (7, build_dihedral(14).unwrap()),
        (7, build_cyclic_wreath_c2(7).unwrap()),
        (7, build_psl2(13, cap).unwrap()),
    ]
}

/// Transitive groups of order at most 5000 exercised by the structural
/// suites.
pub fn test_matrix() -> Vec<PermGroup> {
    let cap = 1_000_000;
    let mut v = vec![build_cyclic_regular(2).unwrap()];
    for n in 3..=12 {
        v.push(build_cyclic_regular(n).unwrap());
    }
    for n in 3..=8 {
        v.push(build_dihedral(n).unwrap());
    }
    for n in 3..=6 {
        v.push(build_symmetric(n, cap).unwrap());
    }
    for n in 4..=6 {
        v.push(build_alternating(n, cap).unwrap());
    }
    v.push(build_example6());
    for q in [2, 3, 4, 5, 7, 8] {
        v.push(gq(q));
    }
    for ell in [3, 5, 7, 9] {
        v.push(build_fourell(ell, cap).unwrap().group);
    }
    for q in [(2, 1), (3, 1)] {
        v.push(build_agl2(&make_field(q.0, q.1).unwrap(), cap).unwrap());
    }
    for p in [3, 5, 7] {
        v.push(build_cyclic_wreath_c2(p).unwrap());
    }
    for p in [5, 7, 13] {
        v.push(build_psl2(p, cap).unwrap());
    }
    v.push(build_pgl2(5, cap).unwrap());
    v.push(data_group("alt5_pairs.json"));
    v.push(data_group("sym5_pairs.json"));
    v.retain(|g| g.order() <= 5000);
    v
}
