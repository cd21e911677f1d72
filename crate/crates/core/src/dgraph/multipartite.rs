use std::collections::HashMap;

use serde::Serialize;

use super::DerangementGraph;
use crate::bits::BitSet;
use crate::perm::PermGroup;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultipartiteDecomposition {
    /// Cosets of `Fix(G)`, each sorted, ordered by least member.
    pub parts: Vec<Vec<usize>>,
    pub part_count: usize,
    pub part_size: usize,
    pub fix_order: usize,
    /// `Fix(G)` is trivial, so the graph is complete.
    pub complete_graph: bool,
}

/// Evidence that the graph is not complete multipartite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Two elements of the same coset of `Fix(G)` are adjacent.
    IntraPartEdge {
        u: usize,
        v: usize,
        derangement_in_fix: Option<usize>,
    },
    /// Two elements of different cosets are not adjacent.
    MissingCrossEdge { u: usize, v: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Decomposition {
    Multipartite(MultipartiteDecomposition),
    NotMultipartite {
        witness: Witness,
        fix_order: usize,
        /// `Fix(G) = G`, which forces a derangement inside `Fix(G)`.
        fix_is_whole_group: bool,
    },
}

impl Decomposition {
    pub fn multipartite(&self) -> Option<&MultipartiteDecomposition> {
        match self {
            Decomposition::Multipartite(m) => Some(m),
            _ => None,
        }
    }
}

fn coset_labels(g: &PermGroup, fix: &PermGroup) -> Vec<Vec<usize>> {
    let mut label = vec![usize::MAX; g.order()];
    let mut parts = Vec::new();
    for x in 0..g.order() {
        if label[x] != usize::MAX {
            continue;
        }
        let mut part: Vec<usize> = fix
            .elements()
            .iter()
            .map(|f| {
                g.index_of(&f.then(g.element(x)))
                    .expect("coset member lies in G")
            })
            .collect();
        part.sort_unstable();
        for &u in &part {
            label[u] = parts.len();
        }
        parts.push(part);
    }
    parts
}

fn first_violation(graph: &DerangementGraph, parts: &[Vec<usize>]) -> Option<(usize, usize, bool)> {
    let n = graph.vertex_count();
    let mut part_of = vec![0; n];
    for (i, p) in parts.iter().enumerate() {
        for &u in p {
            part_of[u] = i;
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            let same = part_of[u] == part_of[v];
            if same == graph.adjacent(u, v) {
                return Some((u, v, same));
            }
        }
    }
    None
}

/// Non-adjacency is an equivalence relation exactly when the graph is
/// complete multipartite; the classes are then the parts.
fn structural_parts(graph: &DerangementGraph) -> Option<Vec<Vec<usize>>> {
    let n = graph.vertex_count();
    let mut classes: HashMap<BitSet, usize> = HashMap::new();
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for u in 0..n {
        let closed = graph.graph().neighbors(u).complement();
        let next = parts.len();
        let id = *classes.entry(closed).or_insert(next);
        if id == next {
            parts.push(Vec::new());
        }
        parts[id].push(u);
    }
    for (set, &id) in &classes {
        if set.count() != parts[id].len() || !parts[id].iter().all(|&u| set.contains(u)) {
            return None;
        }
    }
    Some(parts)
}

/// Decides whether the derangement graph is complete multipartite, using
/// the subgroup generated by the elements with fixed points. The answer is
/// cross-checked against the graph structure itself.
pub fn complete_multipartite_decomposition(
    g: &PermGroup,
    graph: &DerangementGraph,
) -> Result<Decomposition> {
    if graph.vertex_count() != g.order() {
        return Err(Error::InvalidParameter(
            "graph does not belong to this group".into(),
        ));
    }
    let fix = g.fix_subgroup()?;
    let derangement_in_fix = fix
        .elements()
        .iter()
        .find(|x| x.is_derangement())
        .map(|x| g.index_of(x).unwrap());
    let algebraic = derangement_in_fix.is_none();
    let parts = coset_labels(g, &fix);
    let violation = first_violation(graph, &parts);
    let structural = structural_parts(graph);
    if algebraic != violation.is_none() || algebraic != structural.is_some() {
        return Err(Error::Internal("multipartite routes disagree".into()));
    }
    if let Some(sp) = &structural {
        if *sp != parts {
            return Err(Error::Internal(
                "structural parts differ from cosets of Fix(G)".into(),
            ));
        }
    }
    let fix_order = fix.order();
    Ok(match violation {
        None => Decomposition::Multipartite(MultipartiteDecomposition {
            part_count: parts.len(),
            part_size: fix_order,
            parts,
            fix_order,
            complete_graph: fix_order == 1,
        }),
        Some((u, v, same)) => Decomposition::NotMultipartite {
            witness: if same {
                Witness::IntraPartEdge {
                    u,
                    v,
                    derangement_in_fix,
                }
            } else {
                Witness::MissingCrossEdge { u, v }
            },
            fix_order,
            fix_is_whole_group: fix_order == g.order(),
        },
    })
}
