//! Exact chromatic index by backtracking, and the coloring checker.
//!
//! Deciding between `max_degree` and `max_degree + 1` colors is NP-complete,
//! so the search is exponential and only meant for small instances. It tries
//! `k = max_degree` first and falls back to `k = max_degree + 1`, which
//! always succeeds for simple graphs.

use std::sync::Arc;

use thiserror::Error;

use crate::coloring::{ColorId, ColoringError, EdgeColoring};
use crate::graph::{Edge, Graph};
pub use crate::verdict::{Verdict, Violation};

/// Default edge-count cap for [`exact_chromatic_index`].
pub const DEFAULT_MAX_EDGES: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {edges} edges, oracle cap is {cap}")]
    TooLarge { edges: usize, cap: usize },
    #[error("no coloring with {0} colors found; the graph is not simple")]
    NoColoring(usize),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

#[derive(Debug, Clone)]
pub struct ChromaticIndex {
    /// Least number of colors in a complete proper edge coloring; 0 when
    /// the graph has no edges.
    pub value: usize,
    /// A coloring with exactly `value` colors (palette `max(value, 1)`).
    pub witness: EdgeColoring,
}

/// Checks `c` against `g`: properness, completeness and the palette bound.
pub fn verify_coloring(g: &Graph, c: &EdgeColoring) -> Result<Verdict, ColoringError> {
    if c.vertex_count() != g.vertex_count() {
        return Err(ColoringError::DimensionMismatch {
            expected: g.vertex_count(),
            found: c.vertex_count(),
        });
    }
    Ok(c.verdict_against(g))
}

pub fn exact_chromatic_index(
    g: impl Into<Arc<Graph>>,
    max_edges: usize,
) -> Result<ChromaticIndex, OracleError> {
    let g = g.into();
    let edges = g.edge_set();
    if edges.len() > max_edges {
        return Err(OracleError::TooLarge {
            edges: edges.len(),
            cap: max_edges,
        });
    }
    if edges.is_empty() {
        return Ok(ChromaticIndex {
            value: 0,
            witness: EdgeColoring::empty(g, 1)?,
        });
    }
    let delta = g.max_degree();
    for k in [delta, delta + 1] {
        if let Some(colors) = search(g.vertex_count(), &edges, k) {
            let mut witness = EdgeColoring::empty(g.clone(), k)?;
            for (e, col) in edges.iter().zip(colors) {
                witness.set_edge_color(*e, Some(col))?;
            }
            return Ok(ChromaticIndex { value: k, witness });
        }
    }
    Err(OracleError::NoColoring(delta + 1))
}

/// Depth-first assignment of colors `0..k` to `edges` in order, with the
/// first edge pinned to color 0. Returns one color per edge.
fn search(n: usize, edges: &[Edge], k: usize) -> Option<Vec<ColorId>> {
    assert!(k <= 64, "oracle colors are tracked in a u64 mask");
    let mut used = vec![0u64; n];
    let mut colors: Vec<ColorId> = Vec::with_capacity(edges.len());
    // next color to try at each depth
    let mut cursor = vec![0usize; edges.len() + 1];
    let mut depth = 0;
    loop {
        if depth == edges.len() {
            return Some(colors);
        }
        let Edge { u, v } = edges[depth];
        let limit = if depth == 0 { 1 } else { k };
        let busy = used[u] | used[v];
        match (cursor[depth]..limit).find(|&col| busy & (1 << col) == 0) {
            Some(col) => {
                cursor[depth] = col + 1;
                used[u] |= 1 << col;
                used[v] |= 1 << col;
                colors.push(col as ColorId);
                depth += 1;
                cursor[depth] = 0;
            }
            None => {
                if depth == 0 {
                    return None;
                }
                depth -= 1;
                let col = colors.pop().unwrap();
                let Edge { u, v } = edges[depth];
                used[u] &= !(1 << col);
                used[v] &= !(1 << col);
            }
        }
    }
}
