use std::fmt::Write;

use super::Graph;
use crate::bits::BitSet;
use crate::perm::PermGroup;
use crate::{Error, Result};

/// Graphviz rendering. Vertices are labelled by element index, with the
/// cycle notation as a tooltip; when
/// `parts` is given each part gets its own fill colour.
pub fn to_dot(g: &PermGroup, graph: &Graph, parts: Option<&[Vec<usize>]>) -> String {
    let mut colour = vec![None; graph.vertex_count()];
    if let Some(parts) = parts {
        for (i, p) in parts.iter().enumerate() {
            for &u in p {
                colour[u] = Some(i % 12 + 1);
            }
        }
    }
    let mut out = String::new();
    let _ = writeln!(out, "graph \"{}\" {{", g.name().replace('"', "'"));
    let _ = writeln!(
        out,
        "  node [colorscheme=set312, style=filled, fillcolor=white];"
    );
    for (u, fill) in colour.iter().enumerate() {
        let label = g.element(u).to_string();
        match fill {
            Some(c) => {
                let _ = writeln!(
                    out,
                    "  {u} [label=\"{u}\", tooltip=\"{label}\", fillcolor={c}];"
                );
            }
            None => {
                let _ = writeln!(out, "  {u} [label=\"{u}\", tooltip=\"{label}\"];");
            }
        }
    }
    for u in 0..graph.vertex_count() {
        for v in graph.neighbors(u).iter().filter(|&v| v > u) {
            let _ = writeln!(out, "  {u} -- {v};");
        }
    }
    out.push_str("}\n");
    out
}

/// Adjacency bitmap: little-endian `u32` valency, little-endian `u32`
/// vertex count, then one row per vertex packed into `ceil(n/8)` bytes,
/// least significant bit first.
pub fn to_bitmap(graph: &Graph) -> Vec<u8> {
    let n = graph.vertex_count();
    let valency = if n == 0 { 0 } else { graph.degree(0) };
    let row_bytes = n.div_ceil(8);
    let mut out = Vec::with_capacity(8 + n * row_bytes);
    out.extend_from_slice(&(valency as u32).to_le_bytes());
    out.extend_from_slice(&(n as u32).to_le_bytes());
    for u in 0..n {
        for (i, w) in graph.neighbors(u).words().iter().enumerate() {
            let take = (row_bytes - i * 8).min(8);
            out.extend_from_slice(&w.to_le_bytes()[..take]);
        }
    }
    out
}

pub fn from_bitmap(bytes: &[u8]) -> Result<Graph> {
    let bad = |m: &str| Error::InvalidParameter(format!("bitmap: {m}"));
    if bytes.len() < 8 {
        return Err(bad("truncated header"));
    }
    let n = u32::from_le_bytes(bytes[4..8].try_into().unwrap()) as usize;
    let row_bytes = n.div_ceil(8);
    if bytes.len() != 8 + n * row_bytes {
        return Err(bad("length does not match vertex count"));
    }
    let mut rows = Vec::with_capacity(n);
    for u in 0..n {
        let row = &bytes[8 + u * row_bytes..8 + (u + 1) * row_bytes];
        let set = BitSet::from_indices(n, (0..n).filter(|&v| row[v / 8] >> (v % 8) & 1 == 1));
        if set.contains(u) {
            return Err(bad("loop"));
        }
        rows.push(set);
    }
    for u in 0..n {
        if rows[u].iter().any(|v| !rows[v].contains(u)) {
            return Err(bad("asymmetric rows"));
        }
    }
    Ok(Graph::from_rows(rows))
}
