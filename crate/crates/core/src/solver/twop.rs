use serde::Serialize;

use super::{density_from_alpha, derangement_coclique, Density, Rational};
use crate::dgraph::DerangementGraph;
use crate::gf::is_prime;
use crate::perm::{all_minimal_block_systems, PermGroup, Permutation};
use crate::{Caps, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TwoPRoute {
    /// The first element of order p is already a product of two p-cycles.
    DerangementElement,
    /// p-cycles on both blocks of a two-block system multiply to one.
    ImprimitiveProduct,
    /// No two-block system; some element of cycle type {p,p} exists.
    PrimitivePpElement,
    /// No suitable element; α computed directly.
    DirectAlpha,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoPOutcome {
    pub route: TwoPRoute,
    pub sigma: Option<String>,
    pub sigma_prime: Option<String>,
    /// Sorted element indices of the clique (empty on the direct route).
    pub clique: Vec<usize>,
    pub clique_valid: bool,
    /// `|Ω| / ω`, an upper bound for ρ from the clique-coclique bound.
    pub rho_bound: Option<Rational>,
    /// Set on the direct route.
    pub density: Option<Density>,
    pub anomalies: Vec<String>,
}

fn is_pp(x: &Permutation, p: usize) -> bool {
    x.cycle_type() == [p, p]
}

fn is_p_cycle(x: &Permutation, p: usize) -> bool {
    x.support().len() == p && x.order() == p as u64
}

fn cyclic_clique(g: &PermGroup, x: &Permutation, p: usize) -> Vec<usize> {
    let mut c: Vec<usize> = (0..p as u64)
        .map(|e| g.index_of(&x.pow(e)).expect("power lies in G"))
        .collect();
    c.sort_unstable();
    c
}

fn validate(g: &PermGroup, clique: &[usize], p: usize) -> bool {
    clique.len() == p
        && clique
            .iter()
            .all(|&i| g.element(i).is_identity() || is_pp(g.element(i), p))
        && clique.iter().enumerate().all(|(k, &a)| {
            clique[k + 1..]
                .iter()
                .all(|&b| g.element(a).then(&g.element(b).inverse()).is_derangement())
        })
}

/// Clique of size p in the derangement graph of a transitive group of
/// degree 2p, found by the cyclic-subgroup argument.
pub fn two_p_clique(g: &PermGroup, p: usize, caps: &Caps) -> Result<TwoPOutcome> {
    if p < 3 || !is_prime(p as u64) {
        return Err(Error::InvalidParameter(format!(
            "p = {p} is not an odd prime"
        )));
    }
    if g.degree() != 2 * p {
        return Err(Error::InvalidParameter(format!(
            "degree {} is not 2p = {}",
            g.degree(),
            2 * p
        )));
    }
    if !g.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let sigma = g
        .elements()
        .iter()
        .find(|x| x.order() == p as u64)
        .ok_or_else(|| Error::InvalidParameter(format!("no element of order {p}")))?
        .clone();
    let mut anomalies = Vec::new();
    let finish = |route,
                  sigma: &Permutation,
                  sigma_prime: Option<&Permutation>,
                  gen: &Permutation,
                  anomalies| {
        let clique = cyclic_clique(g, gen, p);
        Ok(TwoPOutcome {
            route,
            sigma: Some(sigma.to_string()),
            sigma_prime: sigma_prime.map(|s| s.to_string()),
            clique_valid: validate(g, &clique, p),
            clique,
            rho_bound: Some(Rational { num: 2, den: 1 }),
            density: None,
            anomalies,
        })
    };
    if is_pp(&sigma, p) {
        return finish(
            TwoPRoute::DerangementElement,
            &sigma,
            None,
            &sigma,
            anomalies,
        );
    }
    let systems = all_minimal_block_systems(g)?;
    if systems.iter().any(|s| s.cell_size == 2) {
        anomalies.push(format!(
            "block system with blocks of size 2 alongside the {p}-cycle {sigma}"
        ));
    }
    let support = sigma.support();
    if let Some(sys) = systems.iter().find(|s| s.cell_size == p) {
        match sys.blocks.iter().position(|b| *b == support) {
            Some(i) => {
                let other = &sys.blocks[1 - i];
                let prime = g
                    .elements()
                    .iter()
                    .find(|x| is_p_cycle(x, p) && x.support() == *other);
                match prime {
                    Some(sp) => {
                        let prod = sigma.then(sp);
                        return finish(
                            TwoPRoute::ImprimitiveProduct,
                            &sigma,
                            Some(sp),
                            &prod,
                            anomalies,
                        );
                    }
                    None => {
                        anomalies.push(format!("no {p}-cycle supported on the block {other:?}"))
                    }
                }
            }
            None => anomalies.push(format!("support of {sigma} is not a block")),
        }
    }
    if let Some(x) = g.elements().iter().find(|x| is_pp(x, p)) {
        return finish(TwoPRoute::PrimitivePpElement, &sigma, None, x, anomalies);
    }
    let dg = DerangementGraph::build(g, caps.max_graph_order)?;
    let alpha = derangement_coclique(&dg, caps);
    let density = density_from_alpha(g, alpha.size, alpha.exact);
    Ok(TwoPOutcome {
        route: TwoPRoute::DirectAlpha,
        sigma: Some(sigma.to_string()),
        sigma_prime: None,
        clique: vec![],
        clique_valid: false,
        rho_bound: None,
        density: Some(density),
        anomalies,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_cyclic_regular, build_example6};

    #[test]
    fn example6_uses_its_generator() {
        let g = build_example6();
        let r = two_p_clique(&g, 3, &Caps::default()).unwrap();
        assert_eq!(r.route, TwoPRoute::DerangementElement);
        assert!(r.clique_valid);
        let elems: Vec<String> = r.clique.iter().map(|&i| g.element(i).to_string()).collect();
        assert!(elems.contains(&"()".to_string()));
        assert!(elems.contains(&"(1 3 5)(2 4 6)".to_string()));
    }

    #[test]
    fn cyclic_regular() {
        for p in [3, 5, 7] {
            let g = build_cyclic_regular(2 * p).unwrap();
            let r = two_p_clique(&g, p, &Caps::default()).unwrap();
            assert!(r.clique_valid);
            assert_eq!(r.clique.len(), p);
        }
    }

    #[test]
    fn wreath_product_needs_two_cycles() {
        // C3 wr C2: p-cycles on {1,2,3} and {4,5,6} and the swap.
        let gens = [
            Permutation::from_cycles(6, &[&[1, 2, 3]]).unwrap(),
            Permutation::from_cycles(6, &[&[1, 4], &[2, 5], &[3, 6]]).unwrap(),
        ];
        let g = PermGroup::generate(&gens, "C3wrC2", 100).unwrap();
        let r = two_p_clique(&g, 3, &Caps::default()).unwrap();
        assert_eq!(r.route, TwoPRoute::ImprimitiveProduct);
        assert!(r.clique_valid && r.anomalies.is_empty());
    }

    #[test]
    fn rejects_bad_parameters() {
        let g = build_example6();
        assert!(two_p_clique(&g, 5, &Caps::default()).is_err());
        assert!(two_p_clique(&g, 2, &Caps::default()).is_err());
    }
}
