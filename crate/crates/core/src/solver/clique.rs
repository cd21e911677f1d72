use serde::Serialize;

use crate::bits::BitSet;
use crate::dgraph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueResult {
    pub size: usize,
    /// Sorted vertex list.
    pub witness: Vec<usize>,
    /// False when the vertex cap was exceeded and only a greedy lower bound
    /// was computed.
    pub exact: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct SolverOptions {
    pub max_vertices: usize,
    /// Every vertex lies in a maximum clique, so the search may be rooted at
    /// vertex 0 without losing the lexicographically least witness.
    pub vertex_transitive: bool,
    /// Known upper bound on the answer; the search stops once a clique of
    /// this size is found.
    pub upper_bound: Option<usize>,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            max_vertices: 5_000,
            vertex_transitive: false,
            upper_bound: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub cliques: Vec<Vec<usize>>,
    pub truncated: bool,
}

enum Mode {
    Max,
    Enumerate {
        target: usize,
        cap: usize,
        found: Vec<Vec<usize>>,
        truncated: bool,
    },
}

struct Search<'a> {
    graph: &'a Graph,
    best: Vec<usize>,
    colour: Vec<u32>,
    upper: usize,
    mode: Mode,
}

impl Search<'_> {
    fn threshold(&self) -> usize {
        match &self.mode {
            Mode::Max => self.best.len(),
            Mode::Enumerate { target, .. } => target - 1,
        }
    }

    fn done(&self) -> bool {
        match self.mode {
            Mode::Max => self.best.len() >= self.upper,
            Mode::Enumerate { truncated, .. } => truncated,
        }
    }

    /// Sequential colouring: each class is grown from the highest uncoloured
    /// vertex. Returns the candidates in ascending order with, for each
    /// position, the number of colours used by that suffix.
    fn suffix_bounds(&mut self, cand: &BitSet) -> (Vec<usize>, Vec<usize>) {
        let mut uncoloured = cand.clone();
        let mut c = 0u32;
        while !uncoloured.is_empty() {
            let mut q = uncoloured.clone();
            while let Some(v) = q.last() {
                self.colour[v] = c;
                q.remove(v);
                q.difference_with(self.graph.neighbors(v));
                uncoloured.remove(v);
            }
            c += 1;
        }
        let order: Vec<usize> = cand.iter().collect();
        let mut seen = vec![false; c as usize];
        let mut bound = vec![0; order.len()];
        let mut distinct = 0;
        for i in (0..order.len()).rev() {
            let col = self.colour[order[i]] as usize;
            if !seen[col] {
                seen[col] = true;
                distinct += 1;
            }
            bound[i] = distinct;
        }
        (order, bound)
    }

    fn leaf(&mut self, clique: &[usize]) {
        match &mut self.mode {
            Mode::Max => {
                if clique.len() > self.best.len() {
                    self.best = clique.to_vec();
                }
            }
            Mode::Enumerate {
                target,
                cap,
                found,
                truncated,
            } => {
                if clique.len() == *target {
                    if found.len() == *cap {
                        *truncated = true;
                    } else {
                        found.push(clique.to_vec());
                    }
                }
            }
        }
    }

    fn expand(&mut self, clique: &mut Vec<usize>, cand: BitSet) {
        if cand.is_empty() {
            self.leaf(clique);
            return;
        }
        let (order, bound) = self.suffix_bounds(&cand);
        let mut rest = cand;
        for (i, &v) in order.iter().enumerate() {
            if clique.len() + bound[i] <= self.threshold() || self.done() {
                break;
            }
            rest.remove(v);
            let next = rest.intersection(self.graph.neighbors(v));
            clique.push(v);
            self.expand(clique, next);
            clique.pop();
        }
    }
}

fn greedy(graph: &Graph) -> Vec<usize> {
    let mut clique = Vec::new();
    let mut cand = BitSet::full(graph.vertex_count());
    while let Some(v) = cand.first() {
        clique.push(v);
        cand.intersect_with(graph.neighbors(v));
    }
    clique
}

/// Exact maximum clique by branch and bound with a colouring bound.
/// Branching follows ascending vertex index, so the first maximum clique
/// reached is the lexicographically least one.
pub fn max_clique(graph: &Graph, opts: SolverOptions) -> CliqueResult {
    let n = graph.vertex_count();
    if n == 0 {
        return CliqueResult {
            size: 0,
            witness: vec![],
            exact: true,
        };
    }
    if n > opts.max_vertices {
        let witness = greedy(graph);
        return CliqueResult {
            size: witness.len(),
            witness,
            exact: false,
        };
    }
    let upper = opts.upper_bound.unwrap_or(n).min(n);
    let mut search = Search {
        graph,
        best: vec![],
        colour: vec![0; n],
        upper,
        mode: Mode::Max,
    };
    if opts.vertex_transitive {
        search.expand(&mut vec![0], graph.neighbors(0).clone());
    } else {
        search.expand(&mut vec![], BitSet::full(n));
    }
    CliqueResult {
        size: search.best.len(),
        witness: search.best,
        exact: true,
    }
}

/// Maximum independent set, solved as a clique in the complement.
pub fn max_coclique(graph: &Graph, opts: SolverOptions) -> CliqueResult {
    max_clique(&graph.complement(), opts)
}

/// All cliques of size `size` in lexicographic order, stopping after `cap`.
/// Meaningful when `size` is the clique number.
pub fn enumerate_max_cliques(graph: &Graph, size: usize, cap: usize) -> Enumeration {
    let n = graph.vertex_count();
    if size == 0 {
        return Enumeration {
            cliques: vec![vec![]],
            truncated: false,
        };
    }
    let mut search = Search {
        graph,
        best: vec![],
        colour: vec![0; n],
        upper: n,
        mode: Mode::Enumerate {
            target: size,
            cap,
            found: vec![],
            truncated: false,
        },
    };
    search.expand(&mut vec![], BitSet::full(n));
    match search.mode {
        Mode::Enumerate {
            found, truncated, ..
        } => Enumeration {
            cliques: found,
            truncated,
        },
        Mode::Max => unreachable!(),
    }
}
