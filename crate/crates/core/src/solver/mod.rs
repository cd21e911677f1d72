//! Exact clique and coclique numbers of derangement graphs and the
//! invariants built from them.

mod clique;
mod report;
mod twop;

pub use clique::{
    enumerate_max_cliques, max_clique, max_coclique, CliqueResult, Enumeration, SolverOptions,
};
pub use report::{analyze, AnalysisReport, Check, GroupSummary, MultipartiteSummary, Rational};
pub use twop::{two_p_clique, TwoPOutcome, TwoPRoute};

use num_rational::Ratio;
use serde::Serialize;

use crate::dgraph::{DerangementGraph, Graph};
use crate::perm::PermGroup;
use crate::{Caps, Error, Result};

fn options(caps: &Caps, upper_bound: Option<usize>) -> SolverOptions {
    SolverOptions {
        max_vertices: caps.max_solver_vertices,
        vertex_transitive: true,
        upper_bound,
    }
}

/// Maximum clique of a derangement graph. Cayley graphs are vertex
/// transitive, so the search is rooted at the identity.
pub fn derangement_clique(dg: &DerangementGraph, caps: &Caps) -> CliqueResult {
    max_clique(dg.graph(), options(caps, None))
}

/// Maximum coclique. An exact clique number, when supplied, caps the search
/// through `α ω ≤ |V|`.
pub fn derangement_coclique_bounded(
    dg: &DerangementGraph,
    caps: &Caps,
    clique: Option<&CliqueResult>,
) -> CliqueResult {
    let upper = clique
        .filter(|c| c.exact && c.size > 0)
        .map(|c| dg.vertex_count() / c.size);
    max_coclique(dg.graph(), options(caps, upper))
}

pub fn derangement_coclique(dg: &DerangementGraph, caps: &Caps) -> CliqueResult {
    derangement_coclique_bounded(dg, caps, Some(&derangement_clique(dg, caps)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub alpha: usize,
    pub omega: usize,
    pub vertices: usize,
    pub holds: bool,
    pub equality: bool,
    /// With equality, the number of common vertices of the two witnesses
    /// (must be one).
    pub witness_meet: Option<usize>,
}

pub fn clique_coclique_check(
    graph: &Graph,
    clique: &CliqueResult,
    coclique: &CliqueResult,
) -> BoundReport {
    let vertices = graph.vertex_count();
    let product = clique.size * coclique.size;
    let equality = product == vertices;
    let witness_meet = equality.then(|| {
        clique
            .witness
            .iter()
            .filter(|v| coclique.witness.binary_search(v).is_ok())
            .count()
    });
    BoundReport {
        alpha: coclique.size,
        omega: clique.size,
        vertices,
        holds: product <= vertices && witness_meet.is_none_or(|m| m == 1),
        equality,
        witness_meet,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Density {
    pub alpha: usize,
    pub stabilizer_size: usize,
    pub rho: Rational,
    pub transitive: bool,
    /// False when α is only a lower bound.
    pub exact: bool,
}

pub fn density_from_alpha(g: &PermGroup, alpha: usize, exact: bool) -> Density {
    let stabilizer_size = g.max_stabilizer_size();
    Density {
        alpha,
        stabilizer_size,
        rho: Ratio::new(alpha as u64, stabilizer_size as u64).into(),
        transitive: g.is_transitive(),
        exact,
    }
}

/// Largest intersecting family over the largest point stabilizer.
pub fn intersection_density(g: &PermGroup, caps: &Caps) -> Result<Density> {
    let dg = DerangementGraph::build(g, caps.max_graph_order)?;
    let alpha = match crate::dgraph::complete_multipartite_decomposition(g, &dg)?.multipartite() {
        Some(m) => CliqueResult {
            size: m.part_size,
            witness: m.parts[0].clone(),
            exact: true,
        },
        None => derangement_coclique(&dg, caps),
    };
    Ok(density_from_alpha(g, alpha.size, alpha.exact))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EkrVerdict {
    pub ekr: bool,
    /// `None` when not applicable or over the strict cap.
    pub strict_ekr: Option<bool>,
    pub max_cocliques: Option<usize>,
}

/// The sets `{x : x(i) = j}`, as sorted index lists.
pub fn stabilizer_cosets(g: &PermGroup) -> Vec<Vec<usize>> {
    let n = g.degree();
    let mut cosets = vec![Vec::new(); n * n];
    for (idx, x) in g.elements().iter().enumerate() {
        for i in 0..n {
            cosets[i * n + x.image(i)].push(idx);
        }
    }
    cosets.retain(|c| !c.is_empty());
    cosets.sort();
    cosets.dedup();
    cosets
}

pub fn ekr_check(
    g: &PermGroup,
    dg: &DerangementGraph,
    alpha: &CliqueResult,
    caps: &Caps,
) -> Result<EkrVerdict> {
    if !g.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let ekr = alpha.exact && alpha.size * g.degree() == g.order();
    if !ekr || g.order() > caps.strict_cap {
        return Ok(EkrVerdict {
            ekr,
            strict_ekr: None,
            max_cocliques: None,
        });
    }
    let all = enumerate_max_cliques(&dg.graph().complement(), alpha.size, caps.enumeration_cap);
    if all.truncated {
        return Ok(EkrVerdict {
            ekr,
            strict_ekr: None,
            max_cocliques: None,
        });
    }
    let cosets = stabilizer_cosets(g);
    let strict = all.cliques.iter().all(|c| cosets.binary_search(c).is_ok());
    Ok(EkrVerdict {
        ekr,
        strict_ekr: Some(strict),
        max_cocliques: Some(all.cliques.len()),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NoHomReport {
    pub order_g: usize,
    pub order_h: usize,
    pub alpha_g: usize,
    pub alpha_h: usize,
    /// `α(Γ_H) |G| / |H|`.
    pub bound: Rational,
    pub alpha_holds: bool,
    pub rho_g: Rational,
    pub rho_h: Rational,
    pub rho_holds: bool,
}

/// For a transitive subgroup `h` of `g`, `α(Γ_G) ≤ α(Γ_H)|G|/|H|` and
/// hence `ρ(G) ≤ ρ(H)`.
pub fn no_homomorphism_bound(g: &PermGroup, h: &PermGroup, caps: &Caps) -> Result<NoHomReport> {
    if !h.is_subgroup_of(g) {
        return Err(Error::NotSubgroup(format!(
            "{} is not contained in {}",
            h.name(),
            g.name()
        )));
    }
    if !g.is_transitive() || !h.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let dg = intersection_density(g, caps)?;
    let dh = intersection_density(h, caps)?;
    if !dg.exact || !dh.exact {
        return Err(Error::CapExceeded {
            what: "solver vertices",
            cap: caps.max_solver_vertices,
        });
    }
    let bound = Ratio::new((dh.alpha * g.order()) as u64, h.order() as u64);
    let rho_g: Ratio<u64> = dg.rho.into();
    let rho_h: Ratio<u64> = dh.rho.into();
    Ok(NoHomReport {
        order_g: g.order(),
        order_h: h.order(),
        alpha_g: dg.alpha,
        alpha_h: dh.alpha,
        bound: bound.into(),
        alpha_holds: Ratio::from_integer(dg.alpha as u64) <= bound,
        rho_g: dg.rho,
        rho_h: dh.rho,
        rho_holds: rho_g <= rho_h,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_cyclic_regular, build_example6, build_gq};
    use crate::gf::make_field;
    use crate::perm::Permutation;

    fn sym3() -> PermGroup {
        let gens = [
            Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap(),
            Permutation::from_cycles(3, &[&[1, 2]]).unwrap(),
        ];
        PermGroup::generate(&gens, "Sym(3)", 10).unwrap()
    }

    #[test]
    fn densities() {
        let caps = Caps::default();
        assert_eq!(
            intersection_density(&build_example6(), &caps).unwrap().rho,
            Rational { num: 2, den: 1 }
        );
        let s = make_field(5, 1).unwrap();
        assert_eq!(
            intersection_density(&build_gq(&s, 10_000).unwrap(), &caps)
                .unwrap()
                .rho,
            Rational { num: 5, den: 1 }
        );
        let d = intersection_density(&sym3(), &caps).unwrap();
        assert_eq!((d.alpha, d.rho), (2, Rational { num: 1, den: 1 }));
    }

    #[test]
    fn ekr_examples() {
        let caps = Caps::default();
        for (g, expect) in [
            (sym3(), (true, Some(true))),
            (build_cyclic_regular(5).unwrap(), (true, Some(true))),
            (build_example6(), (false, None)),
        ] {
            let dg = DerangementGraph::build(&g, 1000).unwrap();
            let a = derangement_coclique(&dg, &caps);
            let v = ekr_check(&g, &dg, &a, &caps).unwrap();
            assert_eq!((v.ekr, v.strict_ekr), expect, "{}", g.name());
        }
    }

    #[test]
    fn clique_coclique_examples() {
        let caps = Caps::default();
        for (g, eq) in [
            (sym3(), true),
            (build_cyclic_regular(6).unwrap(), true),
            (build_example6(), true),
        ] {
            let dg = DerangementGraph::build(&g, 1000).unwrap();
            let r = clique_coclique_check(
                dg.graph(),
                &derangement_clique(&dg, &caps),
                &derangement_coclique(&dg, &caps),
            );
            assert!(r.holds);
            assert_eq!(r.equality, eq);
        }
    }

    #[test]
    fn no_hom_sym3_over_c3() {
        let g = sym3();
        let c3 = g
            .subgroup_from_elements(
                "A3",
                g.elements()
                    .iter()
                    .filter(|x| x.is_identity() || x.is_derangement())
                    .cloned()
                    .collect(),
            )
            .unwrap();
        let r = no_homomorphism_bound(&g, &c3, &Caps::default()).unwrap();
        assert_eq!(
            (r.alpha_g, r.alpha_h, r.bound),
            (2, 1, Rational { num: 2, den: 1 })
        );
        assert!(r.alpha_holds && r.rho_holds);
        let same = no_homomorphism_bound(&g, &g, &Caps::default()).unwrap();
        assert_eq!(same.rho_g, same.rho_h);
    }
}
