//! Immutable simple undirected graphs.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Vertex identifier, `0..n`.
pub type Vertex = usize;

/// An undirected edge. Edge sets and files always use the canonical
/// orientation `u < v`; internal code may hold either orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
}

impl Edge {
    pub fn new(u: Vertex, v: Vertex) -> Self {
        Edge { u, v }
    }

    /// The same edge with `u < v`.
    pub fn canonical(self) -> Self {
        if self.u <= self.v {
            self
        } else {
            Edge {
                u: self.v,
                v: self.u,
            }
        }
    }

    pub fn reversed(self) -> Self {
        Edge {
            u: self.v,
            v: self.u,
        }
    }
}

impl From<(Vertex, Vertex)> for Edge {
    fn from((u, v): (Vertex, Vertex)) -> Self {
        Edge { u, v }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(Vertex),
    #[error("asymmetric adjacency: {1} listed under {0} but not the reverse")]
    Asymmetric(Vertex, Vertex),
    #[error("bad generator parameters: {0}")]
    BadParams(String),
}

/// A simple undirected graph over vertices `0..n`.
///
/// Neighbor lists keep the order in which edges were first mentioned at
/// construction. That order is the tie-breaker for every greedy choice made
/// by the coloring algorithm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, repeated edges
    /// (in either orientation) and out-of-range endpoints.
    pub fn new<I, E>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut seen = HashSet::new();
        for e in edges {
            let Edge { u, v } = e.into();
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange(w));
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !seen.insert(Edge::new(u, v).canonical()) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Graph { adj })
    }

    /// `n` isolated vertices.
    pub fn edgeless(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: Vertex) -> Result<&[Vertex], GraphError> {
        self.adj
            .get(v)
            .map(Vec::as_slice)
            .ok_or(GraphError::VertexOutOfRange(v))
    }

    /// Unchecked variant of [`Graph::neighbors`] for hot loops.
    pub(crate) fn nbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> Result<usize, GraphError> {
        self.neighbors(v).map(<[Vertex]>::len)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        match (self.adj.get(u), self.adj.get(v)) {
            // scan the shorter list
            (Some(a), Some(b)) if a.len() <= b.len() => a.contains(&v),
            (Some(_), Some(b)) => b.contains(&u),
            _ => false,
        }
    }

    /// Every edge once, as `u < v`, ascending by `u` and then by the
    /// insertion order of `v` in `u`'s neighbor list.
    pub fn edge_set(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nb) in self.adj.iter().enumerate() {
            out.extend(nb.iter().filter(|&&v| u < v).map(|&v| Edge::new(u, v)));
        }
        out
    }

    /// Full scan of the structural invariants. Returns the first violation.
    pub fn check_invariants(&self) -> Result<(), GraphError> {
        let n = self.vertex_count();
        for (u, nb) in self.adj.iter().enumerate() {
            let mut seen = HashSet::with_capacity(nb.len());
            for &v in nb {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange(v));
                }
                if v == u {
                    return Err(GraphError::SelfLoop(u));
                }
                if !seen.insert(v) {
                    return Err(GraphError::DuplicateEdge(u, v));
                }
                if !self.adj[v].contains(&u) {
                    return Err(GraphError::Asymmetric(u, v));
                }
            }
        }
        Ok(())
    }

    /// Renumbers vertices: vertex `v` becomes `perm[v]`. Edge insertion order
    /// follows this graph's canonical edge order.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph, GraphError> {
        let n = self.vertex_count();
        if perm.len() != n {
            return Err(GraphError::BadParams(format!(
                "permutation has length {}, graph has {n} vertices",
                perm.len()
            )));
        }
        let mut hit = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut hit[p], true) {
                return Err(GraphError::BadParams("not a permutation".into()));
            }
        }
        Graph::new(
            n,
            self.edge_set().into_iter().map(|e| (perm[e.u], perm[e.v])),
        )
    }
}
