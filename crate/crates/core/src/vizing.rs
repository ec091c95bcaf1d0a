//! The Misra-Gries main loop.
//!
//! Edges are colored one at a time in canonical edge order. For an uncolored
//! edge `{x, y}` (`x < y`):
//!
//! 1. build the greedy maximal fan `F` on `x` starting at `y`;
//! 2. let `a` be the smallest free color on the last fan vertex and `b` the
//!    smallest free color on `x`;
//! 3. if `a == b`, rotate `F` with `a`;
//! 4. otherwise invert the maximal `(a, b)` path from `x` (after which `a`
//!    is free on `x`), cut `F` down to the subfan whose last vertex has `a`
//!    free, and rotate that subfan with `a`.
//!
//! Each step colors exactly one more edge and keeps the coloring proper.

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::altpath::{self, AltPath, PathError};
use crate::coloring::{ColorId, ColoringError, EdgeColoring};
use crate::fan::{self, Fan, FanError};
use crate::graph::{Edge, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VizingError {
    #[error("palette {palette} is too small for max degree {max_degree}")]
    PaletteTooSmall { palette: usize, max_degree: usize },
    #[error("edge {0} to extend is already colored")]
    EdgeAlreadyColored(Edge),
    #[error("no subfan with color {color} free on its last vertex (edge {edge})")]
    SubfanNotFound { edge: Edge, color: ColorId },
    #[error("invariant violated: {0}")]
    InvariantViolated(String),
    #[error(transparent)]
    Fan(#[from] FanError),
    #[error(transparent)]
    Path(#[from] PathError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Options {
    /// Run full-scan checks after every step: properness, the remaining
    /// edges being uncolored, maximality of fan and path, the inversion
    /// contract, and the subfan rule against the pre-inversion coloring.
    /// Never changes the result.
    pub debug_checks: bool,
}

/// One iteration of the main loop. Vertices and colors are 0-indexed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepTrace {
    pub iteration: usize,
    pub edge: (usize, usize),
    pub fan: Vec<usize>,
    /// Smallest free color on the last fan vertex.
    pub a: ColorId,
    /// Smallest free color on the fan center.
    pub b: ColorId,
    /// Inverted path, empty when `a == b`.
    pub path: Vec<usize>,
    pub subfan_len: usize,
    pub colored_before: usize,
    pub colored_after: usize,
    pub remaining_before: usize,
    pub remaining_after: usize,
}

/// Picks the prefix of `f` to rotate after the `(a, b)` path `p` from the
/// fan center has been inverted into `after`.
///
/// Before the inversion, the only `a`-edge at the center was the first path
/// edge `{x, p_2}`. If `p_2 = f_i` for some fan index `i`, and `f_{i-1}` is
/// not on the path, the answer is `f_1..f_{i-1}`; in every other case it is
/// the whole fan. The result is checked to be a fan on `after` with `a` free
/// on its last vertex and on the center.
pub fn find_subfan(
    after: &EdgeColoring,
    f: &Fan,
    p: &AltPath,
    a: ColorId,
) -> Result<Fan, VizingError> {
    let x = f.center();
    let not_found = || VizingError::SubfanNotFound {
        edge: Edge::new(x, f.first()),
        color: a,
    };
    let hit = p
        .seq()
        .get(1)
        .and_then(|&p2| f.seq().iter().position(|&v| v == p2));
    let sub = match hit {
        None => f.clone(),
        Some(0) => return Err(not_found()),
        Some(i) if p.contains(f.seq()[i - 1]) => f.clone(),
        Some(i) => f.prefix(i),
    };
    fan::check_fan(after, &sub).map_err(|_| not_found())?;
    if !after.is_free(sub.last(), a) || !after.is_free(x, a) {
        return Err(not_found());
    }
    Ok(sub)
}

/// The subfan rule stated on the pre-inversion coloring: find the first fan
/// edge colored `a` in `before`.
fn subfan_from_pre_colors(before: &EdgeColoring, f: &Fan, p: &AltPath, a: ColorId) -> Fan {
    let x = f.center();
    match f
        .seq()
        .iter()
        .position(|&v| before.color_of(x, v).ok().flatten() == Some(a))
    {
        Some(i) if i > 0 && !p.contains(f.seq()[i - 1]) => f.prefix(i),
        _ => f.clone(),
    }
}

fn colored_edges(c: &EdgeColoring) -> usize {
    c.colored_edges().count()
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), VizingError> {
    if cond {
        Ok(())
    } else {
        Err(VizingError::InvariantViolated(what()))
    }
}

/// Colors every edge of `edges`, which must all be uncolored in `c`.
pub fn extend_coloring(
    edges: &[Edge],
    c: &mut EdgeColoring,
    opts: &Options,
) -> Result<(), VizingError> {
    run(edges, c, opts, None)
}

/// Like [`extend_coloring`], calling `observer` after every iteration.
pub fn extend_coloring_traced(
    edges: &[Edge],
    c: &mut EdgeColoring,
    opts: &Options,
    observer: &mut dyn FnMut(&StepTrace),
) -> Result<(), VizingError> {
    run(edges, c, opts, Some(observer))
}

fn run(
    edges: &[Edge],
    c: &mut EdgeColoring,
    opts: &Options,
    mut observer: Option<&mut dyn FnMut(&StepTrace)>,
) -> Result<(), VizingError> {
    let max_degree = c.graph().max_degree();
    if c.palette() <= max_degree {
        return Err(VizingError::PaletteTooSmall {
            palette: c.palette(),
            max_degree,
        });
    }
    for &e in edges {
        if c.color_of(e.u, e.v)?.is_some() {
            return Err(VizingError::EdgeAlreadyColored(e));
        }
        if !c.graph().has_edge(e.u, e.v) {
            return Err(ColoringError::NotAnEdge(e).into());
        }
    }
    if opts.debug_checks {
        let v = c.is_proper();
        ensure(v.proper, || format!("input coloring not proper: {v}"))?;
    }

    for (i, &e) in edges.iter().enumerate() {
        let Edge { u: x, v: y } = e.canonical();
        if opts.debug_checks {
            ensure(
                edges[i..].iter().all(|r| c.cell(r.u, r.v).is_none()),
                || format!("iteration {i}: a remaining edge is colored"),
            )?;
        }
        let colored_before = observer.as_ref().map(|_| colored_edges(c));

        let f = fan::maximal_fan(c, x, y)?;
        let a = c.min_free(f.last()).expect("palette exceeds every degree");
        let b = c.min_free(x).expect("palette exceeds every degree");
        if opts.debug_checks {
            fan::check_fan(c, &f)?;
            ensure(fan::is_maximal_fan(c, &f), || {
                format!("fan {f:?} not maximal")
            })?;
        }

        let (path, sub) = if a == b {
            fan::rotate_fan(c, &f, Some(a))?;
            (Vec::new(), f.len())
        } else {
            let p = altpath::maximal_path(c, a, b, x)?;
            let before = opts.debug_checks.then(|| c.clone());
            altpath::invert(c, &p)?;
            let sub = find_subfan(c, &f, &p, a)?;
            if let Some(before) = &before {
                check_inversion_step(before, c, &f, &p, &sub, a)?;
            }
            fan::rotate_fan(c, &sub, Some(a))?;
            (p.seq().to_vec(), sub.len())
        };

        if opts.debug_checks {
            let v = c.is_proper();
            ensure(v.proper, || format!("iteration {i}: {v}"))?;
            ensure(c.cell(x, y).is_some(), || {
                format!("iteration {i}: {e} still uncolored")
            })?;
        }
        if let (Some(obs), Some(colored_before)) = (observer.as_mut(), colored_before) {
            obs(&StepTrace {
                iteration: i,
                edge: (x, y),
                fan: f.seq().to_vec(),
                a,
                b,
                path,
                subfan_len: sub,
                colored_before,
                colored_after: colored_edges(c),
                remaining_before: edges.len() - i,
                remaining_after: edges.len() - i - 1,
            });
        }
    }
    Ok(())
}

fn check_inversion_step(
    before: &EdgeColoring,
    after: &EdgeColoring,
    f: &Fan,
    p: &AltPath,
    sub: &Fan,
    a: ColorId,
) -> Result<(), VizingError> {
    let x = f.center();
    ensure(altpath::is_inverted(before, after, p), || {
        format!("path {:?} not inverted", p.seq())
    })?;
    let v = after.is_proper();
    ensure(v.proper, || format!("inversion broke properness: {v}"))?;
    // no a- or b-edge at x lies off the path
    let (pa, pb) = p.colors();
    ensure(
        before.graph().nbors(x).iter().all(|&z| {
            !matches!(before.cell(x, z), Some(col) if col == pa || col == pb)
                || altpath::adjacent(&x, &z, p.seq())
        }),
        || format!("path {:?} misses an (a, b) edge at its start", p.seq()),
    )?;
    ensure(*sub == subfan_from_pre_colors(before, f, p, a), || {
        format!("subfan {sub:?} disagrees with the pre-inversion rule")
    })
}

/// Complete proper coloring of `g` with palette `max_degree + 1`.
pub fn mk_edge_coloring(g: impl Into<Arc<Graph>>) -> EdgeColoring {
    color_graph(g, &Options::default())
        .expect("the Misra-Gries invariants hold for every simple graph")
}

pub fn color_graph(g: impl Into<Arc<Graph>>, opts: &Options) -> Result<EdgeColoring, VizingError> {
    let g = g.into();
    let mut c = EdgeColoring::empty(g.clone(), g.max_degree() + 1)?;
    extend_coloring(&g.edge_set(), &mut c, opts)?;
    Ok(c)
}

pub fn color_graph_traced(
    g: impl Into<Arc<Graph>>,
    opts: &Options,
    observer: &mut dyn FnMut(&StepTrace),
) -> Result<EdgeColoring, VizingError> {
    let g = g.into();
    let mut c = EdgeColoring::empty(g.clone(), g.max_degree() + 1)?;
    extend_coloring_traced(&g.edge_set(), &mut c, opts, observer)?;
    Ok(c)
}
