//! Shared helpers for the integration suites. Everything here is built from
//! the raw matrix and the public checkers only, so it stays independent of
//! the code paths under test.

#![allow(dead_code)]

use std::sync::Arc;

use edgecolor::altpath::AltPath;
use edgecolor::fan::Fan;
use edgecolor::generate;
use edgecolor::{Color, ColorId, Edge, EdgeColoring, Graph};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random graph with n in `lo..=hi` and a density drawn from `ps`.
pub fn random_graph(rng: &mut ChaCha8Rng, lo: usize, hi: usize, ps: &[f64]) -> Graph {
    let n = rng.random_range(lo..=hi);
    let p = *ps.choose(rng).unwrap();
    generate::gnp(n, p, rng.random()).unwrap()
}

/// A proper partial coloring with palette `max_degree + 1`, reached from the
/// empty coloring by `steps` random mutation attempts (colorings and
/// uncolorings); invalid attempts are skipped.
pub fn random_partial_coloring(g: Graph, rng: &mut ChaCha8Rng, steps: usize) -> EdgeColoring {
    let palette = g.max_degree() + 1;
    let edges = g.edge_set();
    let mut c = EdgeColoring::empty(Arc::new(g), palette).unwrap();
    if edges.is_empty() {
        return c;
    }
    for _ in 0..steps {
        let e = *edges.choose(rng).unwrap();
        let a: Color = if rng.random_bool(0.15) {
            None
        } else {
            Some(rng.random_range(0..palette as ColorId))
        };
        if c.edge_color_valid(e, a).unwrap() {
            c.set_edge_color(e, a).unwrap();
        }
    }
    c
}

pub fn uncolored_edges(c: &EdgeColoring) -> Vec<Edge> {
    c.graph()
        .edge_set()
        .into_iter()
        .filter(|e| c.color_of(e.u, e.v).unwrap().is_none())
        .collect()
}

/// Writes both orientations of a cell, no validation.
pub fn put(c: &mut EdgeColoring, u: usize, v: usize, a: Color) {
    c.set_cell_raw(u, v, a).unwrap();
    c.set_cell_raw(v, u, a).unwrap();
}

/// The two-step formulation of rotation: shift every fan color one edge
/// down, uncolor the last fan edge, then color it with `a`. Raw writes, so
/// the transient states may be improper.
pub fn rotate_by_shift(c: &EdgeColoring, f: &Fan, a: Color) -> EdgeColoring {
    let x = f.center();
    let seq = f.seq();
    let old: Vec<Color> = seq.iter().map(|&v| c.color_of(x, v).unwrap()).collect();
    let mut out = c.clone();
    for i in 0..seq.len() - 1 {
        put(&mut out, x, seq[i], old[i + 1]);
    }
    put(&mut out, x, *seq.last().unwrap(), None);
    put(&mut out, x, *seq.last().unwrap(), a);
    out
}

/// Swaps the two path colors edge by edge.
pub fn swap_by_hand(c: &EdgeColoring, p: &AltPath) -> EdgeColoring {
    let (a, b) = p.colors();
    let mut out = c.clone();
    for w in p.seq().windows(2) {
        let new = match c.color_of(w[0], w[1]).unwrap() {
            Some(col) if col == a => Some(b),
            Some(col) if col == b => Some(a),
            other => other,
        };
        put(&mut out, w[0], w[1], new);
    }
    out
}

/// Free colors by scanning the full matrix row.
pub fn free_by_row(c: &EdgeColoring, v: usize) -> Vec<ColorId> {
    let n = c.vertex_count();
    (0..c.palette() as ColorId)
        .filter(|&col| (0..n).all(|w| c.color_of(v, w).unwrap() != Some(col)))
        .collect()
}

pub fn named_small_graphs() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 1..=6 {
        out.push((format!("K{n}"), generate::complete(n)));
    }
    for n in 3..=9 {
        out.push((format!("C{n}"), generate::cycle(n).unwrap()));
    }
    for k in 1..=7 {
        out.push((format!("star{k}"), generate::star(k)));
    }
    out.push(("petersen".into(), generate::petersen()));
    out
}
