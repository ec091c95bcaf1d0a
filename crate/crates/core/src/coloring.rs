//! Partial proper edge colorings over a fixed palette.
//!
//! The coloring is an `n x n` matrix of optional color ids, symmetric, with
//! an empty diagonal. Every mutation goes through [`EdgeColoring::set_edge_color`],
//! which refuses any change that would break properness, so colorings built
//! that way are always proper. [`EdgeColoring::set_cell_raw`] bypasses all
//! checks and exists for checkers and tests that need broken matrices.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use thiserror::Error;

use crate::graph::{Edge, Graph, Vertex};
use crate::verdict::{Verdict, Violation};

pub type ColorId = u32;

/// `None` is an uncolored edge.
pub type Color = Option<ColorId>;

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("palette size must be at least 1")]
    BadPalette,
    #[error("vertex {0} out of range")]
    VertexOutOfRange(Vertex),
    #[error("{0} is not an edge of the graph")]
    NotAnEdge(Edge),
    #[error("color {color:?} is not valid for edge {edge}")]
    InvalidColor { edge: Edge, color: Color },
    #[error("coloring is over {found} vertices, graph has {expected}")]
    DimensionMismatch { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    graph: Arc<Graph>,
    palette: usize,
    cells: Vec<u32>,
}

#[inline]
fn decode(raw: u32) -> Color {
    (raw != NONE).then_some(raw)
}

#[inline]
fn encode(c: Color) -> u32 {
    c.unwrap_or(NONE)
}

impl EdgeColoring {
    /// All edges uncolored.
    pub fn empty(graph: Arc<Graph>, palette: usize) -> Result<Self, ColoringError> {
        if palette == 0 {
            return Err(ColoringError::BadPalette);
        }
        let n = graph.vertex_count();
        Ok(EdgeColoring {
            graph,
            palette,
            cells: vec![NONE; n * n],
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn graph_arc(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// Number of stored matrix cells, always `n * n`.
    pub fn matrix_cells(&self) -> usize {
        self.cells.len()
    }

    #[inline]
    pub(crate) fn cell(&self, u: Vertex, v: Vertex) -> Color {
        decode(self.cells[u * self.vertex_count() + v])
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), ColoringError> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(ColoringError::VertexOutOfRange(v))
        }
    }

    /// Color of the pair `(u, v)`; `None` for uncolored edges and non-edges.
    pub fn color_of(&self, u: Vertex, v: Vertex) -> Result<Color, ColoringError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.cell(u, v))
    }

    /// `true` if no edge at `v` carries `color`. Reads only the cells of
    /// `v`'s graph edges.
    pub fn is_free(&self, v: Vertex, color: ColorId) -> bool {
        self.graph
            .nbors(v)
            .iter()
            .all(|&w| self.cell(v, w) != Some(color))
    }

    /// The neighbor `w` with `color(v, w) == color`, if any.
    pub fn neighbor_via(&self, v: Vertex, color: ColorId) -> Option<Vertex> {
        self.graph
            .nbors(v)
            .iter()
            .copied()
            .find(|&w| self.cell(v, w) == Some(color))
    }

    fn incident_mask(&self, v: Vertex) -> Vec<bool> {
        let mut used = vec![false; self.palette];
        for &w in self.graph.nbors(v) {
            if let Some(c) = self.cell(v, w) {
                if let Some(slot) = used.get_mut(c as usize) {
                    *slot = true;
                }
            }
        }
        used
    }

    /// Palette colors absent from the edges at `v`, ascending.
    pub fn free_colors_on(&self, v: Vertex) -> Result<Vec<ColorId>, ColoringError> {
        self.check_vertex(v)?;
        let used = self.incident_mask(v);
        Ok((0..self.palette as ColorId)
            .filter(|&c| !used[c as usize])
            .collect())
    }

    /// Colors present on the edges at `v`, ascending.
    pub fn incident_colors(&self, v: Vertex) -> Result<Vec<ColorId>, ColoringError> {
        self.check_vertex(v)?;
        let set: BTreeSet<_> = self
            .graph
            .nbors(v)
            .iter()
            .filter_map(|&w| self.cell(v, w))
            .collect();
        Ok(set.into_iter().collect())
    }

    /// Smallest free color on `v`. Always `Some` when the palette exceeds
    /// the degree of `v`.
    pub fn min_free(&self, v: Vertex) -> Option<ColorId> {
        self.incident_mask(v)
            .iter()
            .position(|&used| !used)
            .map(|c| c as ColorId)
    }

    /// `a` is `None`, or an in-palette color free at both endpoints.
    pub fn edge_color_valid(&self, e: Edge, a: Color) -> Result<bool, ColoringError> {
        self.check_edge(e)?;
        Ok(self.valid_unchecked(e, a))
    }

    fn valid_unchecked(&self, e: Edge, a: Color) -> bool {
        match a {
            None => true,
            Some(c) => (c as usize) < self.palette && self.is_free(e.u, c) && self.is_free(e.v, c),
        }
    }

    fn check_edge(&self, e: Edge) -> Result<(), ColoringError> {
        self.check_vertex(e.u)?;
        self.check_vertex(e.v)?;
        if self.graph.has_edge(e.u, e.v) {
            Ok(())
        } else {
            Err(ColoringError::NotAnEdge(e))
        }
    }

    /// Colors `e` with `a` in both orientations and returns the previous
    /// color. The coloring is modified in place; `&mut self` makes the old
    /// value unobservable, so the operation behaves as value replacement.
    pub fn set_edge_color(&mut self, e: Edge, a: Color) -> Result<Color, ColoringError> {
        self.check_edge(e)?;
        if !self.valid_unchecked(e, a) {
            return Err(ColoringError::InvalidColor { edge: e, color: a });
        }
        let prev = self.cell(e.u, e.v);
        self.write(e.u, e.v, a);
        self.write(e.v, e.u, a);
        Ok(prev)
    }

    #[inline]
    fn write(&mut self, u: Vertex, v: Vertex, a: Color) {
        let n = self.vertex_count();
        self.cells[u * n + v] = encode(a);
    }

    /// Writes one matrix cell with no validation whatsoever. The result may
    /// violate every invariant; use [`EdgeColoring::is_proper`] to find out.
    pub fn set_cell_raw(&mut self, u: Vertex, v: Vertex, a: Color) -> Result<(), ColoringError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.write(u, v, a);
        Ok(())
    }

    /// How many cells of row `v` hold `color`.
    pub fn count_in_row(&self, v: Vertex, color: ColorId) -> usize {
        let n = self.vertex_count();
        self.cells[v * n..(v + 1) * n]
            .iter()
            .filter(|&&c| c == color)
            .count()
    }

    /// Number of colored pairs `u < v`.
    pub fn count_colored(&self) -> usize {
        let n = self.vertex_count();
        (0..n)
            .map(|u| (u + 1..n).filter(|&v| self.cell(u, v).is_some()).count())
            .sum()
    }

    /// Number of distinct color ids anywhere in the matrix.
    pub fn colors_used(&self) -> usize {
        self.cells
            .iter()
            .filter(|&&c| c != NONE)
            .collect::<BTreeSet<_>>()
            .len()
    }

    /// Colored edges in canonical edge order of the graph.
    pub fn colored_edges(&self) -> impl Iterator<Item = (Edge, ColorId)> + '_ {
        self.graph
            .edge_set()
            .into_iter()
            .filter_map(|e| self.cell(e.u, e.v).map(|c| (e, c)))
    }

    /// Full scan of the coloring invariants against its own graph.
    pub fn is_proper(&self) -> Verdict {
        self.verdict_against(&self.graph)
    }

    /// Full scan of the coloring invariants, the palette bound, and
    /// completeness, all judged against `g`.
    pub fn verdict_against(&self, g: &Graph) -> Verdict {
        let n = self.vertex_count();
        let proper_violation = self.proper_violation(g);
        let mut bound_violation = None;
        'outer: for u in 0..n {
            for v in 0..n {
                if let Some(c) = self.cell(u, v) {
                    if c as usize >= self.palette {
                        bound_violation = Some(Violation::OutOfPalette {
                            edge: Edge::new(u, v).canonical(),
                            color: c,
                            palette: self.palette,
                        });
                        break 'outer;
                    }
                }
            }
        }
        let uncolored = g
            .edge_set()
            .into_iter()
            .filter(|e| e.u < n && e.v < n)
            .find(|e| self.cell(e.u, e.v).is_none() || self.cell(e.v, e.u).is_none())
            .map(|edge| Violation::Uncolored { edge });
        Verdict {
            proper: proper_violation.is_none(),
            complete: uncolored.is_none(),
            colors_used: self.colors_used(),
            palette: self.palette,
            bound_ok: bound_violation.is_none(),
            first_violation: proper_violation.or(bound_violation).or(uncolored),
        }
    }

    fn proper_violation(&self, g: &Graph) -> Option<Violation> {
        let n = self.vertex_count();
        for v in 0..n {
            if let Some(color) = self.cell(v, v) {
                return Some(Violation::Diagonal { vertex: v, color });
            }
        }
        for u in 0..n {
            for v in u + 1..n {
                let (forward, backward) = (self.cell(u, v), self.cell(v, u));
                let edge = Edge::new(u, v);
                if forward != backward {
                    return Some(Violation::Asymmetric {
                        edge,
                        forward,
                        backward,
                    });
                }
                if let Some(color) = forward {
                    if !g.has_edge(u, v) {
                        return Some(Violation::NonEdge { edge, color });
                    }
                }
            }
        }
        for u in 0..n {
            let mut seen: HashMap<ColorId, Vertex> = HashMap::new();
            for v in 0..n {
                if let Some(color) = self.cell(u, v) {
                    if let Some(&w) = seen.get(&color) {
                        return Some(Violation::Conflict {
                            vertex: u,
                            color,
                            first: Edge::new(u, w).canonical(),
                            second: Edge::new(u, v).canonical(),
                        });
                    }
                    seen.insert(color, v);
                }
            }
        }
        None
    }
}
