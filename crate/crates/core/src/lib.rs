//! Derangement graphs of transitive permutation groups.
//!
//! The crate builds a few families of transitive groups (the affine-line
//! groups `G_q(A)` and `AGL(2,q)`, the degree `4l` semidirect products and a
//! handful of reference groups), forms their derangement graphs, and computes
//! the Erdős–Ko–Rado style invariants of those graphs exactly: maximum
//! cocliques and cliques, the subgroup `Fix(G)`, complete multipartite
//! structure and the intersection density.
//!
//! Permutations act on the right: `compose(a, b)` applies `a` first, then `b`.

pub mod bits;
pub mod cli;
pub mod constructions;
pub mod dgraph;
mod error;
pub mod gf;
pub mod perm;
pub mod solver;

pub use error::{Error, Result};

/// Version tag written into every JSON artifact.
pub const FORMAT_VERSION: u32 = 1;

/// Size limits shared by the pipeline. Exceeding any of them is an error,
/// never a silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest group closure that may be generated.
    pub max_order: usize,
    /// Largest group whose derangement graph may be materialised.
    pub max_graph_order: usize,
    /// Largest vertex count handed to the exact clique solver.
    pub max_solver_vertices: usize,
    /// Largest group for which strict-EKR enumeration is attempted.
    pub strict_cap: usize,
    /// Largest number of maximum cocliques enumerated in strict-EKR mode.
    pub enumeration_cap: usize,
    /// Largest `n^2` for the orbital count.
    pub max_pairs: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_order: 1_000_000,
            max_graph_order: 20_000,
            max_solver_vertices: 5_000,
            strict_cap: 500,
            enumeration_cap: 100_000,
            max_pairs: 1_000_000,
        }
    }
}
