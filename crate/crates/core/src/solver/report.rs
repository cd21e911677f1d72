use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::{
    clique_coclique_check, density_from_alpha, derangement_clique, derangement_coclique,
    derangement_coclique_bounded, ekr_check, CliqueResult,
};
use crate::dgraph::{complete_multipartite_decomposition, is_intersecting_set, DerangementGraph};
use crate::perm::{all_minimal_block_systems, PermGroup};
use crate::{Caps, Result, FORMAT_VERSION};

/// Reduced fraction with a stable JSON shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rational {
    pub num: u64,
    pub den: u64,
}

impl From<Ratio<u64>> for Rational {
    fn from(r: Ratio<u64>) -> Self {
        Rational {
            num: *r.numer(),
            den: *r.denom(),
        }
    }
}

impl From<Rational> for Ratio<u64> {
    fn from(r: Rational) -> Self {
        Ratio::new(r.num, r.den)
    }
}

impl std::fmt::Display for Rational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupSummary {
    pub name: String,
    pub degree: usize,
    pub order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultipartiteSummary {
    pub parts: usize,
    pub part_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockSummary {
    pub cell_size: usize,
    pub cell_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub format: u32,
    pub group: GroupSummary,
    pub transitive: bool,
    pub stabilizer_size: usize,
    pub derangements: usize,
    pub alpha: usize,
    pub omega: usize,
    /// α or ω is a greedy lower bound because the solver cap was exceeded.
    pub lower_bound: bool,
    pub rho: Rational,
    pub rho_is_integer: bool,
    pub ekr: bool,
    pub strict_ekr: Option<bool>,
    pub multipartite: Option<MultipartiteSummary>,
    pub fix_order: usize,
    pub rank: Option<usize>,
    pub block_systems: Vec<BlockSummary>,
    pub clique_witness: Vec<usize>,
    pub coclique_witness: Vec<usize>,
    pub clique_witness_elements: Vec<String>,
    pub coclique_witness_elements: Vec<String>,
    pub checks: Vec<Check>,
}

impl AnalysisReport {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn csv_header() -> &'static str {
        "name,degree,order,stabilizer_size,alpha,omega,rho,ekr,strict_ekr,parts,part_size,rank,lower_bound"
    }

    pub fn csv_row(&self) -> String {
        let opt = |o: Option<String>| o.unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.group.name.replace(',', ";"),
            self.group.degree,
            self.group.order,
            self.stabilizer_size,
            self.alpha,
            self.omega,
            self.rho,
            self.ekr,
            opt(self.strict_ekr.map(|b| b.to_string())),
            opt(self.multipartite.as_ref().map(|m| m.parts.to_string())),
            opt(self.multipartite.as_ref().map(|m| m.part_size.to_string())),
            opt(self.rank.map(|r| r.to_string())),
            self.lower_bound
        )
    }
}

fn group_checks(
    g: &PermGroup,
    dg: &DerangementGraph,
    fix: &PermGroup,
    checks: &mut Vec<Check>,
) -> Result<()> {
    let der = dg.derangements();
    let inv_closed = der.iter().all(|&i| g.element(i).inverse().is_derangement());
    checks.push(Check::new(
        "derangements_inverse_closed",
        inv_closed,
        format!("{} derangements", der.len()),
    ));
    let mut conj_closed = true;
    for &i in der {
        for x in g.generators() {
            conj_closed &= g.element(i).conjugate_by(x)?.is_derangement();
        }
    }
    checks.push(Check::new(
        "derangements_conjugation_closed",
        conj_closed,
        "conjugated by every generator",
    ));
    let orbit_stab = g.orbits(None).iter().all(|orbit| {
        let w = orbit[0];
        orbit.len() * g.elements().iter().filter(|x| x.image(w) == w).count() == g.order()
    });
    checks.push(Check::new(
        "orbit_stabilizer",
        orbit_stab,
        "|orbit| * |stabilizer| = |G| on every orbit",
    ));
    let normal = g.is_normal(fix)?;
    checks.push(Check::new(
        "fix_normal",
        normal,
        format!("|Fix(G)| = {}", fix.order()),
    ));
    let valency_ok = (0..dg.vertex_count()).all(|u| dg.graph().degree(u) == der.len());
    checks.push(Check::new(
        "graph_regular",
        valency_ok,
        format!("valency {}", der.len()),
    ));
    Ok(())
}

fn witness_elements(g: &PermGroup, w: &[usize]) -> Vec<String> {
    w.iter().map(|&i| g.element(i).to_string()).collect()
}

/// Builds the derangement graph and computes every invariant in the report.
pub fn analyze(g: &PermGroup, caps: &Caps) -> Result<AnalysisReport> {
    let dg = DerangementGraph::build(g, caps.max_graph_order)?;
    let decomposition = complete_multipartite_decomposition(g, &dg)?;
    let fix = g.fix_subgroup()?;
    let mut checks = Vec::new();
    group_checks(g, &dg, &fix, &mut checks)?;

    let (clique, coclique) = match decomposition.multipartite() {
        Some(m) => {
            let clique = CliqueResult {
                size: m.part_count,
                witness: m.parts.iter().map(|p| p[0]).collect(),
                exact: true,
            };
            let coclique = CliqueResult {
                size: m.part_size,
                witness: m.parts[0].clone(),
                exact: true,
            };
            if g.order() <= caps.max_solver_vertices {
                let bc = derangement_clique(&dg, caps);
                let ba = derangement_coclique(&dg, caps);
                let agree = bc == clique && ba == coclique;
                checks.push(Check::new(
                    "search_matches_decomposition",
                    agree,
                    format!("search found omega {} and alpha {}", bc.size, ba.size),
                ));
            }
            (clique, coclique)
        }
        None => {
            let clique = derangement_clique(&dg, caps);
            let coclique = derangement_coclique_bounded(&dg, caps, Some(&clique));
            (clique, coclique)
        }
    };
    let lower_bound = !clique.exact || !coclique.exact;

    let bound = clique_coclique_check(dg.graph(), &clique, &coclique);
    checks.push(Check::new(
        "clique_coclique_bound",
        bound.holds,
        format!(
            "{} * {} vs {}{}",
            bound.alpha,
            bound.omega,
            bound.vertices,
            if bound.equality { " (equality)" } else { "" }
        ),
    ));
    checks.push(Check::new(
        "clique_witness_valid",
        dg.graph().is_clique(&clique.witness),
        format!("{} vertices", clique.size),
    ));
    checks.push(Check::new(
        "coclique_witness_intersecting",
        is_intersecting_set(g, &coclique.witness),
        format!("{} vertices", coclique.size),
    ));

    let density = density_from_alpha(g, coclique.size, coclique.exact);
    let transitive = density.transitive;
    let rho: Ratio<u64> = density.rho.into();
    let n = g.degree() as u64;
    if transitive {
        let in_range =
            rho >= Ratio::from_integer(1) && (n < 3 || rho * 3 <= Ratio::from_integer(n));
        checks.push(Check::new(
            "rho_in_range",
            in_range,
            format!("rho = {} with degree {n}", density.rho),
        ));
        if g.degree() >= 3 {
            let tri = dg.find_triangle();
            checks.push(Check::new(
                "has_triangle",
                tri.is_some() && !dg.is_bipartite(),
                format!("{tri:?}"),
            ));
        } else if g.degree() == 2 {
            checks.push(Check::new("bipartite_k2", dg.is_bipartite(), "degree 2"));
        }
    }
    let ekr = if transitive {
        Some(ekr_check(g, &dg, &coclique, caps)?)
    } else {
        None
    };
    let block_systems = if transitive {
        all_minimal_block_systems(g)?
            .into_iter()
            .map(|b| BlockSummary {
                cell_size: b.cell_size,
                cell_count: b.cell_count,
            })
            .collect()
    } else {
        vec![]
    };
    let rank = if transitive {
        g.rank_on_pairs(caps.max_pairs).ok()
    } else {
        None
    };

    Ok(AnalysisReport {
        format: FORMAT_VERSION,
        group: GroupSummary {
            name: g.name().to_string(),
            degree: g.degree(),
            order: g.order(),
        },
        transitive,
        stabilizer_size: density.stabilizer_size,
        derangements: dg.valency(),
        alpha: coclique.size,
        omega: clique.size,
        lower_bound,
        rho: density.rho,
        rho_is_integer: rho.is_integer(),
        ekr: ekr.as_ref().is_some_and(|e| e.ekr),
        strict_ekr: ekr.and_then(|e| e.strict_ekr),
        multipartite: decomposition.multipartite().map(|m| MultipartiteSummary {
            parts: m.part_count,
            part_size: m.part_size,
        }),
        fix_order: fix.order(),
        rank,
        block_systems,
        clique_witness_elements: witness_elements(g, &clique.witness),
        coclique_witness_elements: witness_elements(g, &coclique.witness),
        clique_witness: clique.witness,
        coclique_witness: coclique.witness,
        checks,
    })
}
