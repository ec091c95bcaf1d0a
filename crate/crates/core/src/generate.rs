//! Seeded graph families.
//!
//! `gnp` draws one `f64` per vertex pair `(u, v)`, `u < v`, in lexicographic
//! order from a ChaCha8 stream seeded with `seed_from_u64(seed)`; the pair is
//! an edge when the draw is `< p`. The graph is therefore a pure function of
//! `(n, p, seed)`.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    /// Center vertex 0 with the given number of leaves.
    Star(usize),
    Petersen,
    Gnp {
        n: usize,
        p: f64,
    },
}

impl Family {
    /// Parses a family name plus its positional parameters, e.g.
    /// `("gnp", ["10", "0.5"])`.
    pub fn parse(name: &str, params: &[String]) -> Result<Family, GraphError> {
        let bad = |msg: String| GraphError::BadParams(msg);
        let count = |want: usize| {
            if params.len() == want {
                Ok(())
            } else {
                Err(bad(format!(
                    "{name} takes {want} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let int =
            |s: &str| usize::from_str(s).map_err(|_| bad(format!("not a vertex count: {s:?}")));
        match name {
            "complete" => count(1).and_then(|_| Ok(Family::Complete(int(&params[0])?))),
            "cycle" => count(1).and_then(|_| Ok(Family::Cycle(int(&params[0])?))),
            "path" => count(1).and_then(|_| Ok(Family::Path(int(&params[0])?))),
            "star" => count(1).and_then(|_| Ok(Family::Star(int(&params[0])?))),
            "petersen" => count(0).map(|_| Family::Petersen),
            "gnp" => {
                count(2)?;
                let n = int(&params[0])?;
                let p = f64::from_str(&params[1])
                    .map_err(|_| bad(format!("not a probability: {:?}", params[1])))?;
                Ok(Family::Gnp { n, p })
            }
            other => Err(bad(format!("unknown family {other:?}"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(n) => write!(f, "complete {n}"),
            Family::Cycle(n) => write!(f, "cycle {n}"),
            Family::Path(n) => write!(f, "path {n}"),
            Family::Star(k) => write!(f, "star {k}"),
            Family::Petersen => write!(f, "petersen"),
            Family::Gnp { n, p } => write!(f, "gnp {n} {p}"),
        }
    }
}

pub fn generate(family: Family, seed: u64) -> Result<Graph, GraphError> {
    match family {
        Family::Complete(n) => Ok(complete(n)),
        Family::Cycle(n) => cycle(n),
        Family::Path(n) => Ok(path(n)),
        Family::Star(k) => Ok(star(k)),
        Family::Petersen => Ok(petersen()),
        Family::Gnp { n, p } => gnp(n, p, seed),
    }
}

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::new(n, edges).expect("complete graph is simple")
}

/// `C_n`; needs `n >= 3` to be simple.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::BadParams(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
}

pub fn star(leaves: usize) -> Graph {
    Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star is simple")
}

/// Outer 5-cycle `0..5`, spokes `i -- i+5`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::new(10, outer.chain(spokes).chain(inner)).expect("petersen is simple")
}

pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GraphError::BadParams(format!(
            "p must be in [0, 1], got {p}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}
