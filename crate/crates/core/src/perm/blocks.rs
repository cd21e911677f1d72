//! Blocks of imprimitivity by union-find refinement.

use serde::Serialize;

use super::PermGroup;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockSystem {
    /// Cells sorted internally and ordered by least point.
    pub blocks: Vec<Vec<usize>>,
    pub cell_size: usize,
    pub cell_count: usize,
}

impl BlockSystem {
    fn from_labels(labels: &[usize]) -> Self {
        let n = labels.len();
        let mut cells: Vec<Vec<usize>> = vec![vec![]; n];
        for (x, &r) in labels.iter().enumerate() {
            cells[r].push(x);
        }
        let mut blocks: Vec<Vec<usize>> = cells.into_iter().filter(|c| !c.is_empty()).collect();
        blocks.sort();
        let cell_size = blocks[0].len();
        let cell_count = blocks.len();
        BlockSystem {
            blocks,
            cell_size,
            cell_count,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.cell_size == 1 || self.cell_count == 1
    }

    /// Every generator maps each cell onto a cell.
    pub fn is_preserved_by(&self, g: &PermGroup) -> bool {
        let n = g.degree();
        let mut cell_of = vec![usize::MAX; n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &x in b {
                cell_of[x] = i;
            }
        }
        if cell_of.contains(&usize::MAX) || self.blocks.iter().any(|b| b.len() != self.cell_size) {
            return false;
        }
        g.generators().iter().all(|s| {
            self.blocks.iter().all(|b| {
                let target = cell_of[s.image(b[0])];
                b.iter().all(|&x| cell_of[s.image(x)] == target)
            })
        })
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }
}

/// Finest block system in which `alpha` and `beta` share a cell.
fn minimal_partition(g: &PermGroup, alpha: usize, beta: usize) -> Result<BlockSystem> {
    let n = g.degree();
    if !g.is_transitive() {
        return Err(Error::NotTransitive);
    }
    if alpha >= n || beta >= n || alpha == beta {
        return Err(Error::InvalidParameter("need two distinct points".into()));
    }
    let mut uf = UnionFind {
        parent: (0..n).collect(),
    };
    let mut pending = vec![(alpha, beta)];
    uf.parent[beta] = alpha;
    while let Some((a, b)) = pending.pop() {
        for s in g.generators() {
            let (x, y) = (uf.find(s.image(a)), uf.find(s.image(b)));
            if x != y {
                uf.parent[y] = x;
                pending.push((x, y));
            }
        }
    }
    let labels: Vec<usize> = (0..n).map(|x| uf.find(x)).collect();
    Ok(BlockSystem::from_labels(&labels))
}

/// Smallest block containing both points.
pub fn minimal_block(g: &PermGroup, alpha: usize, beta: usize) -> Result<Vec<usize>> {
    let system = minimal_partition(g, alpha, beta)?;
    Ok(system
        .blocks
        .into_iter()
        .find(|b| b.contains(&alpha))
        .expect("alpha lies in some cell"))
}

/// Nontrivial block systems obtained as minimal blocks of `{1, b}`,
/// deduplicated by the cell containing point 1, smallest cells first.
pub fn all_minimal_block_systems(g: &PermGroup) -> Result<Vec<BlockSystem>> {
    let n = g.degree();
    let mut out: Vec<BlockSystem> = vec![];
    for beta in 1..n {
        let s = minimal_partition(g, 0, beta)?;
        if s.cell_count > 1 && !out.iter().any(|o| o.blocks[0] == s.blocks[0]) {
            out.push(s);
        }
    }
    out.sort_by(|a, b| (a.cell_size, &a.blocks).cmp(&(b.cell_size, &b.blocks)));
    Ok(out)
}
