//! Structured results of a full coloring check.

use std::fmt;

use serde::Serialize;

use crate::coloring::ColorId;
use crate::graph::{Edge, Vertex};

/// The first thing found wrong with a coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// A vertex is colored against itself.
    Diagonal { vertex: Vertex, color: ColorId },
    /// `matrix[u][v] != matrix[v][u]`.
    Asymmetric {
        edge: Edge,
        forward: Option<ColorId>,
        backward: Option<ColorId>,
    },
    /// A color on a pair that is not an edge of the graph.
    NonEdge { edge: Edge, color: ColorId },
    /// Two edges at `vertex` share `color`.
    Conflict {
        vertex: Vertex,
        color: ColorId,
        first: Edge,
        second: Edge,
    },
    /// A color id outside `0..palette`.
    OutOfPalette {
        edge: Edge,
        color: ColorId,
        palette: usize,
    },
    /// An edge of the graph with no color.
    Uncolored { edge: Edge },
}

impl Violation {
    /// Which verdict flag this violation falsifies.
    pub fn category(&self) -> &'static str {
        match self {
            Violation::Diagonal { .. }
            | Violation::Asymmetric { .. }
            | Violation::NonEdge { .. }
            | Violation::Conflict { .. } => "improper",
            Violation::OutOfPalette { .. } => "bound",
            Violation::Uncolored { .. } => "incomplete",
        }
    }
}

/// Edges and colors print 1-indexed, matching the file formats.
impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e1 = |e: &Edge| format!("{} {}", e.u + 1, e.v + 1);
        let c1 = |c: &Option<ColorId>| match c {
            Some(c) => (c + 1).to_string(),
            None => "none".to_string(),
        };
        write!(f, "{}: ", self.category())?;
        match self {
            Violation::Diagonal { vertex, color } => {
                write!(
                    f,
                    "vertex {} colored {} against itself",
                    vertex + 1,
                    color + 1
                )
            }
            Violation::Asymmetric {
                edge,
                forward,
                backward,
            } => write!(
                f,
                "edge {} has color {} one way and {} the other",
                e1(edge),
                c1(forward),
                c1(backward)
            ),
            Violation::NonEdge { edge, color } => {
                write!(f, "non-edge {} colored {}", e1(edge), color + 1)
            }
            Violation::Conflict {
                vertex,
                color,
                first,
                second,
            } => write!(
                f,
                "edges {} and {} share color {} at vertex {}",
                e1(first),
                e1(second),
                color + 1,
                vertex + 1
            ),
            Violation::OutOfPalette {
                edge,
                color,
                palette,
            } => write!(
                f,
                "edge {} has color {} beyond palette {}",
                e1(edge),
                color + 1,
                palette
            ),
            Violation::Uncolored { edge } => write!(f, "edge {} uncolored", e1(edge)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub proper: bool,
    pub complete: bool,
    pub colors_used: usize,
    pub palette: usize,
    /// Every color id lies in `0..palette` (so `colors_used <= palette`).
    pub bound_ok: bool,
    /// Present iff one of the flags above is false. Properness problems are
    /// reported before palette problems, which come before missing colors.
    pub first_violation: Option<Violation>,
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        self.proper && self.complete && self.bound_ok
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yn = |b: bool| if b { "yes" } else { "no" };
        write!(
            f,
            "proper={} complete={} bound={} colors_used={} palette={}",
            yn(self.proper),
            yn(self.complete),
            yn(self.bound_ok),
            self.colors_used,
            self.palette
        )
    }
}
