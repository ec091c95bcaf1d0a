//! Alternating (Kempe) paths and their inversion.
//!
//! An alternating path on `x` with colors `(a, b)` is a sequence of distinct
//! vertices `p_1 = x, p_2, ...` whose consecutive edges are colored
//! `a, b, a, b, ...`. Paths are grown forward from `x` only; when `b` is
//! free on `x` there is nothing to extend on the other side.

use thiserror::Error;

use crate::coloring::{Color, ColorId, ColoringError, EdgeColoring};
use crate::graph::{Edge, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("path colors must differ, got {0} twice")]
    SameColors(ColorId),
    #[error("color {0} is outside the palette")]
    ColorOutOfPalette(ColorId),
    #[error("color {color} is not free on start vertex {vertex}")]
    NotFreeAtStart { vertex: Vertex, color: ColorId },
    #[error("path is empty")]
    Empty,
    #[error("vertex {0} appears twice in the path")]
    Duplicate(Vertex),
    #[error("path edge at position {0} breaks the color alternation")]
    NotAlternating(usize),
    #[error("path can still be extended")]
    NotMaximal,
    #[error("extension candidate {0} is already on the path")]
    RevisitedVertex(Vertex),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AltPath {
    a: ColorId,
    b: ColorId,
    seq: Vec<Vertex>,
}

impl AltPath {
    /// Wraps raw parts without checking; see [`check_path`].
    pub fn from_parts(a: ColorId, b: ColorId, seq: Vec<Vertex>) -> Self {
        AltPath { a, b, seq }
    }

    pub fn colors(&self) -> (ColorId, ColorId) {
        (self.a, self.b)
    }

    pub fn start(&self) -> Vertex {
        self.seq[0]
    }

    pub fn seq(&self) -> &[Vertex] {
        &self.seq
    }

    pub fn last(&self) -> Vertex {
        *self.seq.last().expect("paths are nonempty")
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.seq.contains(&v)
    }

    /// Both orientations of every consecutive pair.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        all_adjacent_pairs(&self.seq)
    }

    /// The color the next appended edge must have.
    pub fn next_color(&self) -> ColorId {
        next_color(self.a, self.b, &self.seq)
    }
}

/// `p` evaluated on consecutive elements of `vs` gives `a, b, a, ...`.
pub fn alternates<V, C, F>(p: F, a: C, b: C, vs: &[V]) -> bool
where
    V: Copy,
    C: PartialEq + Copy,
    F: Fn(V, V) -> C,
{
    let (mut want, mut other) = (a, b);
    for w in vs.windows(2) {
        if p(w[0], w[1]) != want {
            return false;
        }
        std::mem::swap(&mut want, &mut other);
    }
    true
}

/// The value `p(last(vs), w)` must take for `vs ++ [w]` to keep alternating:
/// `b` for the empty list, then `a`, `b`, ... as the list grows.
pub fn next_color<V, C: Copy>(a: C, b: C, vs: &[V]) -> C {
    if vs.len().is_multiple_of(2) {
        b
    } else {
        a
    }
}

/// `u` and `v` sit next to each other in `xs`, in either order.
pub fn adjacent<T: PartialEq>(u: &T, v: &T, xs: &[T]) -> bool {
    xs.windows(2)
        .any(|w| (&w[0] == u && &w[1] == v) || (&w[0] == v && &w[1] == u))
}

/// `[(x1, x2), (x2, x1), (x2, x3), (x3, x2), ...]`.
pub fn all_adjacent_pairs<T: Copy>(xs: &[T]) -> Vec<(T, T)> {
    xs.windows(2)
        .flat_map(|w| [(w[0], w[1]), (w[1], w[0])])
        .collect()
}

fn alternates_on(c: &EdgeColoring, a: ColorId, b: ColorId, vs: &[Vertex]) -> bool {
    alternates(|u, v| c.cell(u, v), Some(a), Some(b), vs)
}

/// The first neighbor `z` of the last path vertex (adjacency order) with
/// `color(last, z) == next_color`.
pub fn next_vertex(c: &EdgeColoring, p: &AltPath) -> Option<Vertex> {
    c.neighbor_via(p.last(), p.next_color())
}

/// Next color is free on the last vertex, so no edge can be appended.
pub fn is_maximal_path(c: &EdgeColoring, p: &AltPath) -> bool {
    c.is_free(p.last(), p.next_color())
}

/// Full check of the path invariants on `c`, including that `b` is free on
/// the start vertex.
pub fn check_path(c: &EdgeColoring, p: &AltPath) -> Result<(), PathError> {
    check_colors(c, p.a, p.b)?;
    let x = *p.seq.first().ok_or(PathError::Empty)?;
    if x >= c.vertex_count() {
        return Err(ColoringError::VertexOutOfRange(x).into());
    }
    if !c.is_free(x, p.b) {
        return Err(PathError::NotFreeAtStart {
            vertex: x,
            color: p.b,
        });
    }
    for (i, &v) in p.seq.iter().enumerate() {
        if v >= c.vertex_count() {
            return Err(ColoringError::VertexOutOfRange(v).into());
        }
        if p.seq[..i].contains(&v) {
            return Err(PathError::Duplicate(v));
        }
    }
    if !alternates_on(c, p.a, p.b, &p.seq) {
        let bad = (0..p.seq.len() - 1)
            .find(|&i| !alternates_on(c, p.a, p.b, &p.seq[..i + 2]))
            .unwrap_or(0);
        return Err(PathError::NotAlternating(bad));
    }
    Ok(())
}

fn check_colors(c: &EdgeColoring, a: ColorId, b: ColorId) -> Result<(), PathError> {
    if a == b {
        return Err(PathError::SameColors(a));
    }
    for col in [a, b] {
        if col as usize >= c.palette() {
            return Err(PathError::ColorOutOfPalette(col));
        }
    }
    Ok(())
}

/// Grows `[x]` forward until no neighbor of the last vertex carries the next
/// color. Requires `a != b` and `b` free on `x`.
///
/// Every candidate is checked against the vertices already on the path;
/// a hit means the coloring was not proper and is reported, never skipped.
pub fn maximal_path(
    c: &EdgeColoring,
    a: ColorId,
    b: ColorId,
    x: Vertex,
) -> Result<AltPath, PathError> {
    check_colors(c, a, b)?;
    if x >= c.vertex_count() {
        return Err(ColoringError::VertexOutOfRange(x).into());
    }
    if !c.is_free(x, b) {
        return Err(PathError::NotFreeAtStart {
            vertex: x,
            color: b,
        });
    }
    let mut on_path = vec![false; c.vertex_count()];
    on_path[x] = true;
    let mut p = AltPath { a, b, seq: vec![x] };
    while let Some(z) = next_vertex(c, &p) {
        if std::mem::replace(&mut on_path[z], true) {
            return Err(PathError::RevisitedVertex(z));
        }
        p.seq.push(z);
    }
    Ok(p)
}

/// One edge whose color `invert` swapped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Flip {
    pub edge: Edge,
    pub old: ColorId,
    pub new: ColorId,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InversionReport {
    pub flipped: Vec<Flip>,
}

/// Swaps `a` and `b` along a maximal path.
///
/// Works in two passes: first every path edge is uncolored, which leaves
/// both `a` and `b` free on every path vertex, then the edges are recolored
/// from the start with `b, a, b, ...`. Each write in the second pass is
/// therefore a valid single-edge recoloring.
///
/// The path is checked (invariants and maximality) before anything is
/// written, so on `Err` the coloring is untouched.
pub fn invert(c: &mut EdgeColoring, p: &AltPath) -> Result<InversionReport, PathError> {
    check_path(c, p)?;
    if !is_maximal_path(c, p) {
        return Err(PathError::NotMaximal);
    }
    let mut report = InversionReport::default();
    for w in p.seq.windows(2) {
        let edge = Edge::new(w[0], w[1]);
        let old = c
            .set_edge_color(edge, None)?
            .expect("alternating path edges are colored");
        report.flipped.push(Flip {
            edge,
            old,
            new: if old == p.a { p.b } else { p.a },
        });
    }
    let (mut cur, mut other) = (p.b, p.a);
    for w in p.seq.windows(2) {
        c.set_edge_color(Edge::new(w[0], w[1]), Some(cur))?;
        std::mem::swap(&mut cur, &mut other);
    }
    Ok(report)
}

/// `after` equals `before` off the path, and on the path every `a` became
/// `b` and every `b` became `a`.
pub fn is_inverted(before: &EdgeColoring, after: &EdgeColoring, p: &AltPath) -> bool {
    if before.vertex_count() != after.vertex_count() {
        return false;
    }
    let swap = |col: Color| match col {
        Some(x) if x == p.a => Some(p.b),
        Some(x) if x == p.b => Some(p.a),
        other => other,
    };
    let n = before.vertex_count();
    (0..n).all(|u| {
        (0..n).all(|v| {
            let (old, new) = (before.cell(u, v), after.cell(u, v));
            if adjacent(&u, &v, &p.seq) {
                new == swap(old)
            } else {
                new == old
            }
        })
    })
}
