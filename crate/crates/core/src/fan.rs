//! Fans around a vertex and color rotation along them.
//!
//! A fan on center `x` is a nonempty sequence `f_1..f_k` of distinct
//! neighbors of `x` such that for every consecutive pair the color of
//! `{x, f_{i+1}}` is a real color free on `f_i`.

use thiserror::Error;

use crate::coloring::{Color, ColorId, ColoringError, EdgeColoring};
use crate::graph::{Edge, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FanError {
    #[error("{0} is not an edge of the graph")]
    NotAnEdge(Edge),
    #[error("edge {0} is already colored")]
    EdgeAlreadyColored(Edge),
    #[error("fan is empty")]
    Empty,
    #[error("vertex {0} appears twice in the fan")]
    Duplicate(Vertex),
    #[error("vertex {vertex} is not a neighbor of center {center}")]
    NotANeighbor { center: Vertex, vertex: Vertex },
    #[error("fan color property fails between positions {0} and {1}")]
    ColorProperty(usize, usize),
    #[error("first fan edge {0} must be uncolored before rotating")]
    FirstEdgeColored(Edge),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    center: Vertex,
    seq: Vec<Vertex>,
}

impl Fan {
    /// Wraps a raw sequence without checking anything; see [`check_fan`].
    pub fn from_parts(center: Vertex, seq: Vec<Vertex>) -> Self {
        Fan { center, seq }
    }

    pub fn center(&self) -> Vertex {
        self.center
    }

    pub fn seq(&self) -> &[Vertex] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn first(&self) -> Vertex {
        self.seq[0]
    }

    pub fn last(&self) -> Vertex {
        *self.seq.last().expect("fans are nonempty")
    }

    /// The first `len` elements, as a fan on the same center.
    pub fn prefix(&self, len: usize) -> Fan {
        Fan {
            center: self.center,
            seq: self.seq[..len].to_vec(),
        }
    }
}

fn require_edge(c: &EdgeColoring, x: Vertex, y: Vertex) -> Result<Edge, FanError> {
    let e = Edge::new(x, y);
    if x != y && c.graph().has_edge(x, y) {
        Ok(e)
    } else {
        Err(FanError::NotAnEdge(e))
    }
}

pub fn singleton_fan(c: &EdgeColoring, x: Vertex, y: Vertex) -> Result<Fan, FanError> {
    require_edge(c, x, y)?;
    Ok(Fan {
        center: x,
        seq: vec![y],
    })
}

/// Greedy maximal fan on `x` starting at `y`: repeatedly append the first
/// remaining neighbor of `x` (in adjacency order) whose edge color is free
/// on the current last element. Uncolored edges never qualify.
pub fn maximal_fan(c: &EdgeColoring, x: Vertex, y: Vertex) -> Result<Fan, FanError> {
    let e = require_edge(c, x, y)?;
    if c.cell(x, y).is_some() {
        return Err(FanError::EdgeAlreadyColored(e));
    }
    let mut seq = vec![y];
    let mut remaining: Vec<Vertex> = c
        .graph()
        .nbors(x)
        .iter()
        .copied()
        .filter(|&z| z != y)
        .collect();
    while let Some(pos) = {
        let last = *seq.last().unwrap();
        remaining
            .iter()
            .position(|&z| matches!(c.cell(x, z), Some(col) if c.is_free(last, col)))
    } {
        seq.push(remaining.remove(pos));
    }
    Ok(Fan { center: x, seq })
}

/// Full check of the fan invariants on `c`.
pub fn check_fan(c: &EdgeColoring, f: &Fan) -> Result<(), FanError> {
    let x = f.center;
    if f.seq.is_empty() {
        return Err(FanError::Empty);
    }
    for (i, &v) in f.seq.iter().enumerate() {
        if v == x || !c.graph().has_edge(x, v) {
            return Err(FanError::NotANeighbor {
                center: x,
                vertex: v,
            });
        }
        if f.seq[..i].contains(&v) {
            return Err(FanError::Duplicate(v));
        }
    }
    for (i, w) in f.seq.windows(2).enumerate() {
        if !fan_step_ok(c, x, w[0], w[1]) {
            return Err(FanError::ColorProperty(i, i + 1));
        }
    }
    Ok(())
}

fn fan_step_ok(c: &EdgeColoring, x: Vertex, prev: Vertex, next: Vertex) -> bool {
    matches!(c.cell(x, next), Some(col) if c.is_free(prev, col))
}

/// No neighbor of the center outside the fan can be appended.
pub fn is_maximal_fan(c: &EdgeColoring, f: &Fan) -> bool {
    let x = f.center;
    let last = f.last();
    c.graph()
        .nbors(x)
        .iter()
        .filter(|z| !f.seq.contains(z))
        .all(|&z| !fan_step_ok(c, x, last, z))
}

/// Colors `{x, f_k}` with `a`, then `{x, f_{k-1}}` with the color `{x, f_k}`
/// had, and so on down to `{x, f_1}`. The net effect shifts every fan color
/// one edge toward `f_1` and gives the last edge `a`.
///
/// The fan and `a` are validated before anything is written, so on `Err`
/// the coloring is untouched.
pub fn rotate_fan(c: &mut EdgeColoring, f: &Fan, a: Color) -> Result<(), FanError> {
    check_fan(c, f)?;
    let x = f.center;
    let first = Edge::new(x, f.first());
    if c.cell(x, f.first()).is_some() {
        return Err(FanError::FirstEdgeColored(first));
    }
    let last = Edge::new(x, f.last());
    if !c.edge_color_valid(last, a)? {
        return Err(ColoringError::InvalidColor {
            edge: last,
            color: a,
        }
        .into());
    }
    let mut carry = a;
    for &v in f.seq.iter().rev() {
        carry = c.set_edge_color(Edge::new(x, v), carry)?;
    }
    debug_assert_eq!(carry, None);
    Ok(())
}

/// Colors of the fan edges in fan order.
pub fn fan_colors(c: &EdgeColoring, f: &Fan) -> Vec<Option<ColorId>> {
    f.seq.iter().map(|&v| c.cell(f.center, v)).collect()
}
