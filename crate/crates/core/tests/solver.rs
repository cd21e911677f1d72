mod common;

use derangement_lab::constructions::{build_agl2, build_example6, build_symmetric};
use derangement_lab::dgraph::DerangementGraph;
use derangement_lab::gf::make_field;
use derangement_lab::perm::PermGroup;
use derangement_lab::solver::*;
use derangement_lab::Caps;

fn sym3() -> PermGroup {
    build_symmetric(3, 10).unwrap()
}

#[test]
fn clique_and_coclique_examples() {
    let caps = Caps::default();
    let cases: [(PermGroup, usize, usize); 4] = [
        (common::gq(2), 3, 4),
        (sym3(), 3, 2),
        (build_example6(), 3, 4),
        (common::gq(3), 4, 18),
    ];
    for (g, omega, alpha) in cases {
        let dg = DerangementGraph::build(&g, 1000).unwrap();
        let c = derangement_clique(&dg, &caps);
        let i = derangement_coclique(&dg, &caps);
        assert_eq!((c.size, i.size), (omega, alpha), "{}", g.name());
        assert!(dg.graph().is_clique(&c.witness));
        assert!(derangement_lab::dgraph::is_intersecting_set(&g, &i.witness));
        let b = clique_coclique_check(dg.graph(), &c, &i);
        assert!(b.holds && b.equality);
        assert_eq!(b.witness_meet, Some(1));
    }
}

#[test]
fn witnesses_are_lexicographically_least() {
    let g = sym3();
    let dg = DerangementGraph::build(&g, 100).unwrap();
    let caps = Caps::default();
    let c = derangement_clique(&dg, &caps);
    let mut best: Option<Vec<usize>> = None;
    for mask in 0u32..64 {
        let s: Vec<usize> = (0..6).filter(|&i| mask >> i & 1 == 1).collect();
        if s.len() == c.size && dg.graph().is_clique(&s) && best.as_ref().is_none_or(|b| s < *b) {
            best = Some(s);
        }
    }
    assert_eq!(Some(c.witness), best);
}

#[test]
fn density_examples() {
    let caps = Caps::default();
    assert_eq!(
        intersection_density(&build_example6(), &caps).unwrap().rho,
        Rational { num: 2, den: 1 }
    );
    assert_eq!(
        intersection_density(&common::gq(5), &caps).unwrap().rho,
        Rational { num: 5, den: 1 }
    );
    let f5 = derangement_lab::constructions::build_fourell(5, 10_000).unwrap();
    assert_eq!(
        intersection_density(&f5.group, &caps).unwrap().rho,
        Rational { num: 2, den: 1 }
    );
}

#[test]
fn density_of_non_transitive_group_is_flagged() {
    // <(1 2)> on three points: orbits {1,2} and {3}.
    let t = derangement_lab::perm::Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
    let g = PermGroup::generate(&[t], "C2 on 3", 10).unwrap();
    let d = intersection_density(&g, &Caps::default()).unwrap();
    assert!(!d.transitive);
    assert_eq!(d.stabilizer_size, 2);
    let r = analyze(&g, &Caps::default()).unwrap();
    assert!(!r.transitive && r.strict_ekr.is_none());
}

#[test]
fn no_homomorphism_examples() {
    let caps = Caps::default();
    let s = make_field(3, 1).unwrap();
    let agl = build_agl2(&s, 10_000).unwrap();
    let g3 = common::gq(3);
    let r = no_homomorphism_bound(&agl, &g3, &caps).unwrap();
    assert!(r.alpha_holds && r.rho_holds);
    assert_eq!(r.rho_h, Rational { num: 3, den: 1 });
    let rho: num_rational::Ratio<u64> = r.rho_g.into();
    assert!(rho <= num_rational::Ratio::from_integer(3));
    assert!(no_homomorphism_bound(&g3, &agl, &caps).is_err());
}

#[test]
fn enumeration_finds_all_stabilizer_cosets_for_sym4() {
    let g = build_symmetric(4, 100).unwrap();
    let dg = DerangementGraph::build(&g, 100).unwrap();
    let caps = Caps::default();
    let a = derangement_coclique(&dg, &caps);
    assert_eq!(a.size, 6);
    let v = ekr_check(&g, &dg, &a, &caps).unwrap();
    assert_eq!(
        (v.ekr, v.strict_ekr, v.max_cocliques),
        (true, Some(true), Some(16))
    );
}

#[test]
fn solver_cap_gives_flagged_lower_bound() {
    let caps = Caps {
        max_solver_vertices: 10,
        ..Caps::default()
    };
    let r = analyze(&build_symmetric(4, 100).unwrap(), &caps).unwrap();
    assert!(r.lower_bound);
    assert!(r.alpha >= 1 && r.omega >= 1);
}
