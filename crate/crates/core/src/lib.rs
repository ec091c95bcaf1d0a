//! Misra-Gries edge coloring: every simple graph with maximum degree `D`
//! gets a complete proper edge coloring with at most `D + 1` colors.
//!
//! The building blocks ([`fan`], [`altpath`]) are exposed with checkers for
//! their invariants so the correctness argument can be tested step by step,
//! and [`oracle`] provides an exact exponential-time chromatic index for
//! cross-checking small instances.

pub mod altpath;
pub mod cli;
pub mod coloring;
pub mod fan;
pub mod generate;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod verdict;
pub mod vizing;

pub use coloring::{Color, ColorId, ColoringError, EdgeColoring};
pub use graph::{Edge, Graph, GraphError, Vertex};
pub use oracle::{exact_chromatic_index, verify_coloring};
pub use verdict::{Verdict, Violation};
pub use vizing::{mk_edge_coloring, Options, StepTrace};
