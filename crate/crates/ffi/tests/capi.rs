use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use edgecolor_ffi::*;

fn last_error() -> String {
    let p = ec_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

fn graph(pairs: &[u32], n: usize) -> *mut EcGraph {
    let mut g = ptr::null_mut();
    let st = unsafe { ec_graph_new(n, pairs.as_ptr(), pairs.len() / 2, &mut g) };
    assert_eq!(st, EcStatus::Ok);
    g
}

fn color(g: *const EcGraph) -> *mut EcColoring {
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { ec_color(g, true, &mut c) }, EcStatus::Ok);
    c
}

#[test]
fn color_and_verify_triangle() {
    let g = graph(&[0, 1, 1, 2, 0, 2], 3);
    unsafe {
        assert_eq!(ec_graph_vertex_count(g), 3);
        assert_eq!(ec_graph_edge_count(g), 3);
        assert_eq!(ec_graph_max_degree(g), 2);
        let c = color(g);
        assert_eq!(ec_coloring_palette(c), 3);
        assert_eq!(ec_coloring_colors_used(c), 3);
        assert_eq!(ec_coloring_count_colored(c), 3);
        let mut v = EcVerdict::default();
        assert_eq!(ec_verify(g, c, &mut v), EcStatus::Ok);
        assert!(v.proper && v.complete && v.bound_ok);
        let mut col = -2;
        assert_eq!(ec_coloring_color_of(c, 0, 1, &mut col), EcStatus::Ok);
        assert!((0..3).contains(&col));
        assert_eq!(ec_coloring_color_of(c, 0, 0, &mut col), EcStatus::Ok);
        assert_eq!(col, -1);
        assert_eq!(
            ec_coloring_color_of(c, 0, 7, &mut col),
            EcStatus::InvalidArgument
        );
        ec_coloring_free(c);
        ec_graph_free(g);
    }
}

#[test]
fn null_pointers_are_reported() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(
            ec_graph_new(2, ptr::null(), 1, &mut g),
            EcStatus::NullPointer
        );
        assert!(g.is_null());
        assert!(last_error().contains("null"));
        assert_eq!(
            ec_graph_new(2, ptr::null(), 0, ptr::null_mut()),
            EcStatus::NullPointer
        );
        assert_eq!(
            ec_graph_parse_dimacs(ptr::null(), &mut g),
            EcStatus::NullPointer
        );
        let mut c = ptr::null_mut();
        assert_eq!(ec_color(ptr::null(), false, &mut c), EcStatus::NullPointer);
        let mut v = EcVerdict::default();
        assert_eq!(
            ec_verify(ptr::null(), ptr::null(), &mut v),
            EcStatus::NullPointer
        );
        assert_eq!(ec_graph_vertex_count(ptr::null()), 0);
        assert_eq!(ec_coloring_palette(ptr::null()), 0);
        assert!(ec_coloring_to_text(ptr::null()).is_null());
        ec_graph_free(ptr::null_mut());
        ec_coloring_free(ptr::null_mut());
        ec_string_free(ptr::null_mut());
    }
}

#[test]
fn invalid_graphs_are_rejected() {
    unsafe {
        let mut g = ptr::null_mut();
        let self_loop = [1u32, 1];
        assert_eq!(
            ec_graph_new(3, self_loop.as_ptr(), 1, &mut g),
            EcStatus::InvalidArgument
        );
        assert!(!last_error().is_empty());
        let dup = [0u32, 1, 1, 0];
        assert_eq!(
            ec_graph_new(3, dup.as_ptr(), 2, &mut g),
            EcStatus::InvalidArgument
        );
        let bad = CString::new("p edge 2 1\ne 1 5\n").unwrap();
        assert_eq!(
            ec_graph_parse_dimacs(bad.as_ptr(), &mut g),
            EcStatus::ParseError
        );
        assert!(last_error().contains("line 2"));
        let family = CString::new("gnp 5 2.0").unwrap();
        assert_eq!(
            ec_graph_generate(family.as_ptr(), 1, &mut g),
            EcStatus::InvalidArgument
        );
        assert!(g.is_null());
    }
}

#[test]
fn parse_and_judge_a_bad_coloring() {
    unsafe {
        let text = CString::new("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(ec_graph_parse_dimacs(text.as_ptr(), &mut g), EcStatus::Ok);
        let col = CString::new("s 3 3 3 2\ne 1 2 1\ne 2 3 1\n").unwrap();
        let mut c = ptr::null_mut();
        assert_eq!(ec_coloring_parse(g, col.as_ptr(), &mut c), EcStatus::Ok);
        let mut v = EcVerdict::default();
        assert_eq!(ec_verify(g, c, &mut v), EcStatus::Ok);
        assert!(!v.proper && !v.complete);
        ec_coloring_free(c);
        let mismatch = CString::new("s 4 3 3 3\n").unwrap();
        assert_eq!(
            ec_coloring_parse(g, mismatch.as_ptr(), &mut c),
            EcStatus::ParseError
        );
        ec_graph_free(g);
    }
}

#[test]
fn text_round_trip() {
    unsafe {
        let family = CString::new("gnp 20 0.4").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(ec_graph_generate(family.as_ptr(), 9, &mut g), EcStatus::Ok);
        let c = color(g);
        let text = ec_coloring_to_text(c);
        let mut back = ptr::null_mut();
        assert_eq!(ec_coloring_parse(g, text, &mut back), EcStatus::Ok);
        let again = ec_coloring_to_text(back);
        assert_eq!(CStr::from_ptr(text), CStr::from_ptr(again));
        ec_string_free(text);
        ec_string_free(again);
        ec_coloring_free(back);
        ec_coloring_free(c);
        ec_graph_free(g);
    }
}

#[test]
fn oracle_and_cap() {
    unsafe {
        let family = CString::new("cycle 5").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(ec_graph_generate(family.as_ptr(), 0, &mut g), EcStatus::Ok);
        let mut chi = 0;
        assert_eq!(ec_exact_chromatic_index(g, 30, &mut chi), EcStatus::Ok);
        assert_eq!(chi, 3);
        assert_eq!(ec_exact_chromatic_index(g, 4, &mut chi), EcStatus::TooLarge);
        assert!(last_error().contains('5'));
        ec_graph_free(g);
    }
}

fn ffi_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(ffi_dir().join("include/edgecolor.h")).unwrap();
    assert!(header.contains("#ifndef EDGECOLOR_H"));
    for name in [
        "EC_STATUS_OK = 0",
        "EC_STATUS_TOO_LARGE",
        "typedef struct EcGraph EcGraph",
        "typedef struct EcColoring EcColoring",
        "ec_last_error_message",
        "ec_graph_new",
        "ec_graph_parse_dimacs",
        "ec_graph_generate",
        "ec_graph_free",
        "ec_color",
        "ec_coloring_parse",
        "ec_coloring_color_of",
        "ec_coloring_to_text",
        "ec_string_free",
        "ec_verify",
        "ec_exact_chromatic_index",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}

/// Directory holding the static library built alongside this test binary.
fn lib_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    let deps = exe.parent().unwrap();
    deps.parent().unwrap().to_path_buf()
}

fn cc() -> String {
    std::env::var("CC").unwrap_or_else(|_| "cc".into())
}

#[test]
fn c_program_links_against_header_and_staticlib() {
    let lib = lib_dir().join("libedgecolor_ffi.a");
    assert!(lib.exists(), "{} missing", lib.display());
    let dir = tempfile::tempdir().unwrap();
    let exe = dir.path().join("smoke");
    let out = Command::new(cc())
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(ffi_dir().join("include"))
        .arg(ffi_dir().join("tests/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&exe)
        .output()
        .expect("C compiler not found");
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let run = Command::new(Path::new(&exe)).output().unwrap();
    assert_eq!(run.status.code(), Some(0));
    let text = String::from_utf8(run.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 15);
}
