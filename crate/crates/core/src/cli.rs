//! Command-line front end.
//!
//! Exit codes: 0 valid, 1 invalid coloring, 2 input error, 3 resource cap.

use std::ffi::OsString;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand};

use crate::generate::{self, Family};
use crate::graph::Graph;
use crate::io as fmt;
use crate::oracle::{self, OracleError};
use crate::vizing::{self, Options};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_CAP: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "edgecolor",
    version,
    about = "Misra-Gries (max degree + 1) edge coloring"
)]
pub struct Cli {
    /// Seed for every random choice (graph generation).
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Run full invariant checks after every algorithm step.
    #[arg(long, global = true)]
    pub debug_checks: bool,
    /// Write one JSON line per algorithm iteration to this file.
    #[arg(long, global = true, value_name = "PATH")]
    pub trace: Option<PathBuf>,
    /// Output file (stdout when omitted).
    #[arg(short = 'o', long = "output", global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Color a graph and write the coloring.
    Color { graph: PathBuf },
    /// Check a coloring against a graph.
    Check { graph: PathBuf, coloring: PathBuf },
    /// Exact chromatic index by backtracking (small graphs only).
    Oracle {
        graph: PathBuf,
        #[arg(long, default_value_t = oracle::DEFAULT_MAX_EDGES)]
        max_edges: usize,
    },
    /// Generate a graph: complete N | cycle N | path N | star LEAVES | petersen | gnp N P
    Gen { family: String, params: Vec<String> },
    /// Print `n m delta`.
    Stats { graph: PathBuf },
}

struct Failure {
    code: u8,
    msg: String,
}

fn input_err(msg: impl ToString) -> Failure {
    Failure {
        code: EXIT_INPUT,
        msg: msg.to_string(),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input_err(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    fmt::parse_graph(&read(path)?).map_err(|e| input_err(format!("{}: {e}", path.display())))
}

fn emit(output: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), Failure> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| input_err(format!("{}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(input_err),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            f.code
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8, Failure> {
    let opts = Options {
        debug_checks: cli.debug_checks,
    };
    let output = cli.output.as_deref();
    match &cli.command {
        Command::Color { graph } => {
            let g = Arc::new(load_graph(graph)?);
            let start = Instant::now();
            let coloring = match &cli.trace {
                None => vizing::color_graph(g.clone(), &opts),
                Some(path) => {
                    let file = fs::File::create(path)
                        .map_err(|e| input_err(format!("{}: {e}", path.display())))?;
                    let mut w = BufWriter::new(file);
                    let mut io_err = None;
                    let res = vizing::color_graph_traced(g.clone(), &opts, &mut |step| {
                        if io_err.is_none() {
                            if let Err(e) = serde_json::to_writer(&mut w, step)
                                .map_err(std::io::Error::from)
                                .and_then(|_| w.write_all(b"\n"))
                            {
                                io_err = Some(e);
                            }
                        }
                    });
                    if let Some(e) = io_err.or_else(|| w.flush().err()) {
                        return Err(input_err(format!("{}: {e}", path.display())));
                    }
                    res
                }
            }
            .map_err(|e| Failure {
                code: EXIT_INVALID,
                msg: format!("algorithm invariant failed: {e}"),
            })?;
            let elapsed = start.elapsed().as_millis();
            let text = fmt::write_coloring(&coloring);
            let summary = format!(
                "{} {} {} {} {} {}\n",
                g.vertex_count(),
                g.edge_count(),
                g.max_degree(),
                coloring.palette(),
                coloring.colors_used(),
                elapsed
            );
            match output {
                Some(_) => {
                    emit(output, &text, out)?;
                    out.write_all(summary.as_bytes()).map_err(input_err)?;
                }
                None => {
                    emit(None, &text, out)?;
                    err.write_all(summary.as_bytes()).map_err(input_err)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Check { graph, coloring } => {
            let g = Arc::new(load_graph(graph)?);
            let c = fmt::parse_coloring(&read(coloring)?, g.clone())
                .map_err(|e| input_err(format!("{}: {e}", coloring.display())))?;
            let verdict = oracle::verify_coloring(&g, &c).map_err(input_err)?;
            let mut text = format!("{verdict}\n");
            match &verdict.first_violation {
                None => text.push_str("VALID\n"),
                Some(v) => text.push_str(&format!("INVALID {v}\n")),
            }
            emit(output, &text, out)?;
            Ok(if verdict.is_valid() {
                EXIT_OK
            } else {
                EXIT_INVALID
            })
        }
        Command::Oracle { graph, max_edges } => {
            let g = load_graph(graph)?;
            match oracle::exact_chromatic_index(g, *max_edges) {
                Ok(r) => {
                    emit(output, &format!("chi_prime {}\n", r.value), out)?;
                    Ok(EXIT_OK)
                }
                Err(e @ OracleError::TooLarge { .. }) => Err(Failure {
                    code: EXIT_CAP,
                    msg: e.to_string(),
                }),
                Err(e) => Err(input_err(e)),
            }
        }
        Command::Gen { family, params } => {
            let g = Family::parse(family, params)
                .and_then(|f| generate::generate(f, cli.seed))
                .map_err(input_err)?;
            emit(output, &fmt::write_graph(&g), out)?;
            Ok(EXIT_OK)
        }
        Command::Stats { graph } => {
            let g = load_graph(graph)?;
            let text = format!(
                "{} {} {}\n",
                g.vertex_count(),
                g.edge_count(),
                g.max_degree()
            );
            emit(output, &text, out)?;
            Ok(EXIT_OK)
        }
    }
}
