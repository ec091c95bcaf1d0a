//! Text formats. Both are 1-indexed on the wire.
//!
//! Graphs (DIMACS edge format):
//!
//! ```text
//! c comment
//! p edge <n> <m>
//! e <u> <v>        (m lines, 1 <= u, v <= n)
//! ```
//!
//! Colorings:
//!
//! ```text
//! s <n> <m> <palette> <colors_used>
//! e <u> <v> <color + 1>   (one per colored edge)
//! ```

use std::collections::HashSet;
use std::fmt::Write as _;
use std::sync::Arc;

use thiserror::Error;

use crate::coloring::{ColorId, EdgeColoring};
use crate::graph::{Edge, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing `{0}` header line")]
    MissingHeader(&'static str),
    #[error("header declares {declared} edge lines, found {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error("coloring is for a graph with {found}, expected {expected}")]
    DimensionMismatch { expected: String, found: String },
}

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        msg: msg.into(),
    }
}

/// Non-blank, non-comment lines with 1-based line numbers.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let fields: Vec<&str> = l.split_whitespace().collect();
        match fields.first() {
            None | Some(&"c") => None,
            Some(_) => Some((i + 1, fields)),
        }
    })
}

fn num(line: usize, s: &str, what: &str) -> Result<usize, FormatError> {
    s.parse()
        .map_err(|_| syntax(line, format!("{what} is not a nonnegative integer: {s:?}")))
}

fn vertex(line: usize, s: &str, n: usize) -> Result<usize, FormatError> {
    let v = num(line, s, "vertex")?;
    if v == 0 || v > n {
        return Err(syntax(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    for (line, f) in records(text) {
        match f[0] {
            "p" => {
                if header.is_some() {
                    return Err(syntax(line, "second `p` header"));
                }
                if f.len() != 4 || f[1] != "edge" {
                    return Err(syntax(line, "expected `p edge <n> <m>`"));
                }
                header = Some((num(line, f[2], "n")?, num(line, f[3], "m")?));
            }
            "e" => {
                let (n, _) = header.ok_or_else(|| syntax(line, "edge before `p` header"))?;
                if f.len() != 3 {
                    return Err(syntax(line, "expected `e <u> <v>`"));
                }
                let (u, v) = (vertex(line, f[1], n)?, vertex(line, f[2], n)?);
                if u == v {
                    return Err(syntax(line, format!("self-loop on vertex {}", u + 1)));
                }
                if !seen.insert(Edge::new(u, v).canonical()) {
                    return Err(syntax(line, format!("duplicate edge {} {}", u + 1, v + 1)));
                }
                edges.push((u, v));
            }
            other => return Err(syntax(line, format!("unknown line type {other:?}"))),
        }
    }
    let (n, m) = header.ok_or(FormatError::MissingHeader("p edge"))?;
    if edges.len() != m {
        return Err(FormatError::EdgeCount {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(Graph::new(n, edges).expect("edges validated while parsing"))
}

/// Canonical serialization: header, then `edge_set` order.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edge_set() {
        writeln!(out, "e {} {}", e.u + 1, e.v + 1).unwrap();
    }
    out
}

pub fn write_coloring(c: &EdgeColoring) -> String {
    let g = c.graph();
    let mut out = format!(
        "s {} {} {} {}\n",
        g.vertex_count(),
        g.edge_count(),
        c.palette(),
        c.colors_used()
    );
    for (e, col) in c.colored_edges() {
        writeln!(out, "e {} {} {}", e.u + 1, e.v + 1, col + 1).unwrap();
    }
    out
}

/// Reads a coloring of `g` without judging it: colors beyond the palette,
/// conflicts and non-edges are stored as written so that a checker can
/// report them. Only malformed lines and header mismatches are errors.
pub fn parse_coloring(text: &str, g: Arc<Graph>) -> Result<EdgeColoring, FormatError> {
    let mut coloring: Option<EdgeColoring> = None;
    let mut seen = HashSet::new();
    let n = g.vertex_count();
    for (line, f) in records(text) {
        match f[0] {
            "s" => {
                if coloring.is_some() {
                    return Err(syntax(line, "second `s` header"));
                }
                if f.len() != 5 {
                    return Err(syntax(line, "expected `s <n> <m> <palette> <colors_used>`"));
                }
                let (hn, hm) = (num(line, f[1], "n")?, num(line, f[2], "m")?);
                let palette = num(line, f[3], "palette")?;
                num(line, f[4], "colors_used")?;
                if (hn, hm) != (n, g.edge_count()) {
                    return Err(FormatError::DimensionMismatch {
                        expected: format!("n={n} m={}", g.edge_count()),
                        found: format!("n={hn} m={hm}"),
                    });
                }
                let c = EdgeColoring::empty(g.clone(), palette)
                    .map_err(|e| syntax(line, e.to_string()))?;
                coloring = Some(c);
            }
            "e" => {
                let c = coloring
                    .as_mut()
                    .ok_or_else(|| syntax(line, "edge before `s` header"))?;
                if f.len() != 4 {
                    return Err(syntax(line, "expected `e <u> <v> <color>`"));
                }
                let (u, v) = (vertex(line, f[1], n)?, vertex(line, f[2], n)?);
                let col = num(line, f[3], "color")?;
                if col == 0 || col > ColorId::MAX as usize - 1 {
                    return Err(syntax(
                        line,
                        format!("color {col} out of range (colors start at 1)"),
                    ));
                }
                if !seen.insert(Edge::new(u, v).canonical()) {
                    return Err(syntax(
                        line,
                        format!("edge {} {} listed twice", u + 1, v + 1),
                    ));
                }
                let col = Some((col - 1) as ColorId);
                c.set_cell_raw(u, v, col).expect("vertices checked");
                c.set_cell_raw(v, u, col).expect("vertices checked");
            }
            other => return Err(syntax(line, format!("unknown line type {other:?}"))),
        }
    }
    coloring.ok_or(FormatError::MissingHeader("s"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vizing::mk_edge_coloring;

    const K3: &str = "c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n";

    #[test]
    fn parse_k3() {
        let g = parse_graph(K3).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.neighbors(0).unwrap(), &[1, 2]);
        assert_eq!(write_graph(&g), "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let cases = [
            ("p edge 3\n", 1),
            ("p edge 3 1\ne 1 4\n", 2),
            ("c x\np edge 3 1\ne 2 2\n", 3),
            ("p edge 3 2\ne 1 2\ne 2 1\n", 3),
            ("e 1 2\np edge 3 1\n", 1),
            ("p edge 3 1\np edge 3 1\n", 2),
            ("p edge 3 1\nx 1 2\n", 2),
            ("p edge 3 1\ne 0 1\n", 2),
        ];
        for (text, line) in cases {
            match parse_graph(text) {
                Err(FormatError::Syntax { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
        assert_eq!(
            parse_graph("c nothing\n"),
            Err(FormatError::MissingHeader("p edge"))
        );
        assert_eq!(
            parse_graph("p edge 3 2\ne 1 2\n"),
            Err(FormatError::EdgeCount {
                declared: 2,
                found: 1
            })
        );
    }

    #[test]
    fn coloring_roundtrip() {
        let g = Arc::new(parse_graph(K3).unwrap());
        let c = mk_edge_coloring(g.clone());
        let text = write_coloring(&c);
        assert!(text.starts_with("s 3 3 3 3\n"));
        assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 3);
        assert_eq!(parse_coloring(&text, g).unwrap(), c);
    }

    #[test]
    fn coloring_keeps_bad_colors_for_the_checker() {
        let g = Arc::new(parse_graph(K3).unwrap());
        let c = parse_coloring("s 3 3 3 3\ne 1 2 9\n", g.clone()).unwrap();
        assert_eq!(c.color_of(0, 1).unwrap(), Some(8));
        assert!(!c.is_proper().bound_ok);
        assert!(matches!(
            parse_coloring("s 4 3 3 3\n", g.clone()),
            Err(FormatError::DimensionMismatch { .. })
        ));
        assert!(matches!(
            parse_coloring("s 3 3 3 3\ne 1 2 0\n", g.clone()),
            Err(FormatError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_coloring("s 3 3 3 3\ne 1 2 1\ne 2 1 2\n", g.clone()),
            Err(FormatError::Syntax { line: 3, .. })
        ));
        assert_eq!(parse_coloring("", g), Err(FormatError::MissingHeader("s")));
    }
}
