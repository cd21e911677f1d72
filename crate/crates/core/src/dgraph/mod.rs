//! Derangement graphs: the Cayley graph of a permutation group whose
//! connection set is the set of derangements. Cocliques are exactly the
//! intersecting families.

mod export;
mod graph;
mod multipartite;

pub use export::{from_bitmap, to_bitmap, to_dot};
pub use graph::Graph;
pub use multipartite::{
    complete_multipartite_decomposition, Decomposition, MultipartiteDecomposition, Witness,
};

use rayon::prelude::*;

use crate::bits::BitSet;
use crate::perm::{PermGroup, Permutation};
use crate::{Error, Result};

/// Indices of the elements without fixed points.
pub fn derangement_set(g: &PermGroup) -> Vec<usize> {
    (0..g.order())
        .filter(|&i| g.element(i).is_derangement())
        .collect()
}

/// Two permutations intersect when they agree on some point.
pub fn intersects(a: &Permutation, b: &Permutation) -> bool {
    a.images().iter().zip(b.images()).any(|(x, y)| x == y)
}

pub fn is_intersecting_family(members: &[&Permutation]) -> bool {
    members
        .iter()
        .enumerate()
        .all(|(i, a)| members[i + 1..].iter().all(|b| intersects(a, b)))
}

/// Pairwise-intersecting test on element indices of `g`.
pub fn is_intersecting_set(g: &PermGroup, set: &[usize]) -> bool {
    let members: Vec<&Permutation> = set.iter().map(|&i| g.element(i)).collect();
    is_intersecting_family(&members)
}

#[derive(Clone, Debug)]
pub struct DerangementGraph {
    graph: Graph,
    derangements: Vec<usize>,
}

impl DerangementGraph {
    /// Vertices are the elements of `g` in canonical order; `u ~ v` iff
    /// `u v^-1` is a derangement, i.e. `u` and `v` disagree everywhere.
    pub fn build(g: &PermGroup, max_order: usize) -> Result<Self> {
        let order = g.order();
        if order > max_order {
            return Err(Error::CapExceeded {
                what: "group order for the derangement graph",
                cap: max_order,
            });
        }
        let n = g.degree();
        // agree[w * n + j] = elements sending w to j
        let mut agree = vec![BitSet::new(order); n * n];
        for (idx, x) in g.elements().iter().enumerate() {
            for w in 0..n {
                agree[w * n + x.image(w)].insert(idx);
            }
        }
        let rows: Vec<BitSet> = g
            .elements()
            .par_iter()
            .map(|x| {
                let mut meets = BitSet::new(order);
                for w in 0..n {
                    meets.union_with(&agree[w * n + x.image(w)]);
                }
                meets.complement()
            })
            .collect();
        let graph = Graph::from_rows(rows);
        let derangements = derangement_set(g);
        let valency = derangements.len();
        if (0..order).any(|u| graph.degree(u) != valency) {
            return Err(Error::Internal("derangement graph is not regular".into()));
        }
        Ok(DerangementGraph {
            graph,
            derangements,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn derangements(&self) -> &[usize] {
        &self.derangements
    }

    /// Valency, equal to the number of derangements.
    pub fn valency(&self) -> usize {
        self.derangements.len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.graph.adjacent(u, v)
    }

    pub fn is_bipartite(&self) -> bool {
        self.graph.is_bipartite()
    }

    pub fn find_triangle(&self) -> Option<[usize; 3]> {
        self.graph.find_triangle()
    }
}

/// Edge rule evaluated pointwise.
pub fn adjacent_pointwise(g: &PermGroup, u: usize, v: usize) -> bool {
    !intersects(g.element(u), g.element(v))
}

/// Edge rule evaluated through `u v^-1` and the derangement set.
pub fn adjacent_by_quotient(g: &PermGroup, u: usize, v: usize) -> bool {
    g.element(u).then(&g.element(v).inverse()).is_derangement()
}
