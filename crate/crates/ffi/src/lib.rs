//! C ABI over `edgecolor`.
//!
//! Graphs and colorings cross the boundary as opaque handles that must be
//! released with their `_free` function. Every fallible call returns an
//! [`EcStatus`]; on failure a message is available from
//! [`ec_last_error_message`] until the next failing call on the same thread.
//! Vertices and colors are 0-indexed here, unlike the text formats.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;
use std::slice;
use std::sync::Arc;

use edgecolor::generate::{self, Family};
use edgecolor::oracle::{self, OracleError};
use edgecolor::vizing::{self, Options};
use edgecolor::{io, EdgeColoring, Graph};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    TooLarge = 4,
    Internal = 5,
}

/// Opaque graph handle.
pub struct EcGraph {
    inner: Arc<Graph>,
}

/// Opaque edge coloring handle.
pub struct EcColoring {
    inner: EdgeColoring,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EcVerdict {
    pub proper: bool,
    pub complete: bool,
    pub bound_ok: bool,
    pub colors_used: usize,
    pub palette: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn fail(status: EcStatus, msg: impl ToString) -> EcStatus {
    let msg = CString::new(msg.to_string().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
    status
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, EcStatus> {
    if p.is_null() {
        return Err(fail(EcStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(EcStatus::InvalidArgument, "string is not UTF-8"))
}

macro_rules! deref {
    ($p:expr) => {
        match $p.as_ref() {
            Some(v) => v,
            None => return fail(EcStatus::NullPointer, concat!("null ", stringify!($p))),
        }
    };
}

macro_rules! out_ptr {
    ($p:expr) => {
        if $p.is_null() {
            return fail(EcStatus::NullPointer, concat!("null ", stringify!($p)));
        }
    };
}

fn boxed_graph(g: Graph) -> *mut EcGraph {
    Box::into_raw(Box::new(EcGraph { inner: Arc::new(g) }))
}

/// Message of the last failing call on this thread, or NULL. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ec_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Builds a graph on `n` vertices from `m` edges given as `2 * m` vertex ids
/// (`u0, v0, u1, v1, ...`). `edges` may be NULL when `m == 0`.
#[no_mangle]
pub unsafe extern "C" fn ec_graph_new(
    n: usize,
    edges: *const u32,
    m: usize,
    out: *mut *mut EcGraph,
) -> EcStatus {
    out_ptr!(out);
    let pairs: &[u32] = if m == 0 {
        &[]
    } else if edges.is_null() {
        return fail(EcStatus::NullPointer, "null edges with m > 0");
    } else {
        slice::from_raw_parts(edges, 2 * m)
    };
    match Graph::new(
        n,
        pairs
            .chunks_exact(2)
            .map(|p| (p[0] as usize, p[1] as usize)),
    ) {
        Ok(g) => {
            *out = boxed_graph(g);
            EcStatus::Ok
        }
        Err(e) => fail(EcStatus::InvalidArgument, e),
    }
}

/// Parses DIMACS `p edge` text.
#[no_mangle]
pub unsafe extern "C" fn ec_graph_parse_dimacs(
    text: *const c_char,
    out: *mut *mut EcGraph,
) -> EcStatus {
    out_ptr!(out);
    let text = match str_arg(text) {
        Ok(t) => t,
        Err(s) => return s,
    };
    match io::parse_graph(text) {
        Ok(g) => {
            *out = boxed_graph(g);
            EcStatus::Ok
        }
        Err(e) => fail(EcStatus::ParseError, e),
    }
}

/// Generates a named family, e.g. `"petersen"`, `"cycle 5"`, `"gnp 10 0.5"`.
#[no_mangle]
pub unsafe extern "C" fn ec_graph_generate(
    family: *const c_char,
    seed: u64,
    out: *mut *mut EcGraph,
) -> EcStatus {
    out_ptr!(out);
    let family = match str_arg(family) {
        Ok(t) => t,
        Err(s) => return s,
    };
    let mut words = family.split_whitespace();
    let name = words.next().unwrap_or("");
    let params: Vec<String> = words.map(str::to_owned).collect();
    match Family::parse(name, &params).and_then(|f| generate::generate(f, seed)) {
        Ok(g) => {
            *out = boxed_graph(g);
            EcStatus::Ok
        }
        Err(e) => fail(EcStatus::InvalidArgument, e),
    }
}

#[no_mangle]
pub unsafe extern "C" fn ec_graph_free(g: *mut EcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count; 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn ec_graph_vertex_count(g: *const EcGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.vertex_count())
}

/// Edge count; 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn ec_graph_edge_count(g: *const EcGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.edge_count())
}

/// Maximum degree; 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn ec_graph_max_degree(g: *const EcGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.max_degree())
}

/// Runs the coloring algorithm with palette `max_degree + 1`.
#[no_mangle]
pub unsafe extern "C" fn ec_color(
    g: *const EcGraph,
    debug_checks: bool,
    out: *mut *mut EcColoring,
) -> EcStatus {
    let g = deref!(g);
    out_ptr!(out);
    match vizing::color_graph(g.inner.clone(), &Options { debug_checks }) {
        Ok(c) => {
            *out = Box::into_raw(Box::new(EcColoring { inner: c }));
            EcStatus::Ok
        }
        Err(e) => fail(EcStatus::Internal, e),
    }
}

/// Parses coloring text for `g`. Invalid colorings parse fine; use
/// [`ec_verify`] to judge them.
#[no_mangle]
pub unsafe extern "C" fn ec_coloring_parse(
    g: *const EcGraph,
    text: *const c_char,
    out: *mut *mut EcColoring,
) -> EcStatus {
    let g = deref!(g);
    out_ptr!(out);
    let text = match str_arg(text) {
        Ok(t) => t,
        Err(s) => return s,
    };
    match io::parse_coloring(text, g.inner.clone()) {
        Ok(c) => {
            *out = Box::into_raw(Box::new(EcColoring { inner: c }));
            EcStatus::Ok
        }
        Err(e) => fail(EcStatus::ParseError, e),
    }
}

#[no_mangle]
pub unsafe extern "C" fn ec_coloring_free(c: *mut EcColoring) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Color of `{u, v}`: writes the color id, or -1 when uncolored or not an
/// edge.
#[no_mangle]
pub unsafe extern "C" fn ec_coloring_color_of(
    c: *const EcColoring,
    u: usize,
    v: usize,
    out: *mut i64,
) -> EcStatus {
    let c = deref!(c);
    out_ptr!(out);
    match c.inner.color_of(u, v) {
        Ok(col) => {
            *out = col.map_or(-1, i64::from);
            EcStatus::Ok
        }
        Err(e) => fail(EcStatus::InvalidArgument, e),
    }
}

#[no_mangle]
pub unsafe extern "C" fn ec_coloring_palette(c: *const EcColoring) -> usize {
    c.as_ref().map_or(0, |c| c.inner.palette())
}

#[no_mangle]
pub unsafe extern "C" fn ec_coloring_colors_used(c: *const EcColoring) -> usize {
    c.as_ref().map_or(0, |c| c.inner.colors_used())
}

#[no_mangle]
pub unsafe extern "C" fn ec_coloring_count_colored(c: *const EcColoring) -> usize {
    c.as_ref().map_or(0, |c| c.inner.count_colored())
}

/// Coloring text (`s` header plus `e` lines). Free with [`ec_string_free`].
/// NULL when `c` is NULL.
#[no_mangle]
pub unsafe extern "C" fn ec_coloring_to_text(c: *const EcColoring) -> *mut c_char {
    match c.as_ref() {
        Some(c) => {
            CString::new(io::write_coloring(&c.inner)).map_or(ptr::null_mut(), CString::into_raw)
        }
        None => ptr::null_mut(),
    }
}

#[no_mangle]
pub unsafe extern "C" fn ec_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Judges `c` against `g`.
#[no_mangle]
pub unsafe extern "C" fn ec_verify(
    g: *const EcGraph,
    c: *const EcColoring,
    out: *mut EcVerdict,
) -> EcStatus {
    let g = deref!(g);
    let c = deref!(c);
    out_ptr!(out);
    match oracle::verify_coloring(&g.inner, &c.inner) {
        Ok(v) => {
            *out = EcVerdict {
                proper: v.proper,
                complete: v.complete,
                bound_ok: v.bound_ok,
                colors_used: v.colors_used,
                palette: v.palette,
            };
            EcStatus::Ok
        }
        Err(e) => fail(EcStatus::InvalidArgument, e),
    }
}

/// Exact chromatic index by backtracking; refuses graphs with more than
/// `max_edges` edges.
#[no_mangle]
pub unsafe extern "C" fn ec_exact_chromatic_index(
    g: *const EcGraph,
    max_edges: usize,
    out: *mut usize,
) -> EcStatus {
    let g = deref!(g);
    out_ptr!(out);
    match oracle::exact_chromatic_index(g.inner.clone(), max_edges) {
        Ok(r) => {
            *out = r.value;
            EcStatus::Ok
        }
        Err(e @ OracleError::TooLarge { .. }) => fail(EcStatus::TooLarge, e),
        Err(e) => fail(EcStatus::Internal, e),
    }
}
