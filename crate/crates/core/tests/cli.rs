use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const K3: &str = "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n";
const C5: &str = "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n";

fn edgecolor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edgecolor"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn e_lines(text: &str) -> usize {
    text.lines().filter(|l| l.starts_with("e ")).count()
}

#[test]
fn color_k3() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "k3.col", K3);
    let o = edgecolor(&["color", s(&g)]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(e_lines(&text), 3);
    assert!(text.starts_with("s 3 3 3 3\n"), "{text}");
    // summary: n m delta palette colors_used time_ms
    let err = stderr(&o);
    let summary: Vec<&str> = err.split_whitespace().collect();
    assert_eq!(&summary[..5], ["3", "3", "2", "3", "3"]);
}

#[test]
fn summary_goes_to_stdout_with_output_file() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "k3.col", K3);
    let out = dir.path().join("out.txt");
    let o = edgecolor(&["color", s(&g), "-o", s(&out)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("3 3 2 3 3 "));
    assert_eq!(e_lines(&fs::read_to_string(out).unwrap()), 3);
}

#[test]
fn color_edgeless() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "empty.col", "p edge 4 0\n");
    let o = edgecolor(&["color", s(&g)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(e_lines(&stdout(&o)), 0);
}

#[test]
fn malformed_input_exits_2() {
    let dir = TempDir::new().unwrap();
    for (name, text) in [
        ("bad_header.col", "p edge three 3\n"),
        ("loop.col", "p edge 2 1\ne 1 1\n"),
        ("range.col", "p edge 2 1\ne 1 3\n"),
        ("count.col", "p edge 3 2\ne 1 2\n"),
    ] {
        let g = file(&dir, name, text);
        let o = edgecolor(&["color", s(&g)]);
        assert_eq!(o.status.code(), Some(2), "{name}");
        assert!(stderr(&o).contains("error:"), "{name}");
    }
    let o = edgecolor(&["color", "/nonexistent/graph.col"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(edgecolor(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn check_accepts_algorithm_output() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "k3.col", K3);
    let out = dir.path().join("k3.txt");
    assert_eq!(
        edgecolor(&["color", s(&g), "-o", s(&out)]).status.code(),
        Some(0)
    );
    let o = edgecolor(&["check", s(&g), s(&out)]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("proper=yes complete=yes bound=yes"), "{text}");
    assert!(text.ends_with("VALID\n"));
}

#[test]
fn check_reports_missing_edge() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "k3.col", K3);
    let c = file(&dir, "partial.txt", "s 3 3 3 3\ne 1 2 1\ne 2 3 2\n");
    let o = edgecolor(&["check", s(&g), s(&c)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("INVALID incomplete"), "{}", stdout(&o));
}

#[test]
fn check_reports_color_beyond_palette() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "k3.col", K3);
    let c = file(&dir, "wide.txt", "s 3 3 3 4\ne 1 2 1\ne 2 3 2\ne 1 3 4\n");
    let o = edgecolor(&["check", s(&g), s(&c)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("INVALID bound"), "{}", stdout(&o));
}

#[test]
fn check_reports_conflict() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "k3.col", K3);
    let c = file(&dir, "clash.txt", "s 3 3 3 2\ne 1 2 1\ne 2 3 1\ne 1 3 2\n");
    let o = edgecolor(&["check", s(&g), s(&c)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("INVALID improper"), "{}", stdout(&o));
}

#[test]
fn check_rejects_mismatched_coloring() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "k3.col", K3);
    let c = file(&dir, "other.txt", "s 4 3 3 3\n");
    assert_eq!(edgecolor(&["check", s(&g), s(&c)]).status.code(), Some(2));
}

#[test]
fn oracle_c5() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "c5.col", C5);
    let o = edgecolor(&["oracle", s(&g)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "chi_prime 3\n");
}

#[test]
fn oracle_cap_exits_3() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "c5.col", C5);
    let o = edgecolor(&["oracle", s(&g), "--max-edges", "4"]);
    assert_eq!(o.status.code(), Some(3));
    let o = edgecolor(&["gen", "complete", "9"]);
    let k9 = file(&dir, "k9.col", &stdout(&o));
    assert_eq!(edgecolor(&["oracle", s(&k9)]).status.code(), Some(3));
}

#[test]
fn gen_complete_4() {
    let o = edgecolor(&["gen", "complete", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("p edge 4 6\n"));
    assert_eq!(e_lines(&text), 6);
    assert!(edgecolor::io::parse_graph(&text).is_ok());
}

#[test]
fn gen_rejects_bad_parameters() {
    for args in [
        &["gen", "gnp", "10", "1.5"][..],
        &["gen", "cycle", "2"],
        &["gen", "complete"],
        &["gen", "hypercube", "3"],
    ] {
        assert_eq!(edgecolor(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn gen_gnp_depends_only_on_seed() {
    let a = stdout(&edgecolor(&["--seed", "11", "gen", "gnp", "30", "0.2"]));
    let b = stdout(&edgecolor(&["gen", "gnp", "30", "0.2", "--seed", "11"]));
    let c = stdout(&edgecolor(&["--seed", "12", "gen", "gnp", "30", "0.2"]));
    assert_eq!(a, b);
    assert_ne!(a, c);
}

#[test]
fn stats_petersen() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "p.col", &stdout(&edgecolor(&["gen", "petersen"])));
    let o = edgecolor(&["stats", s(&g)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "10 15 3\n");
}

#[test]
fn gen_color_check_round_trip() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("g.col");
    let c = dir.path().join("c.txt");
    let o = edgecolor(&["--seed", "3", "gen", "gnp", "60", "0.3", "-o", s(&g)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        edgecolor(&["color", s(&g), "-o", s(&c)]).status.code(),
        Some(0)
    );
    let o = edgecolor(&["check", s(&g), s(&c)]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn debug_checks_do_not_change_output() {
    let dir = TempDir::new().unwrap();
    let g = file(
        &dir,
        "g.col",
        &stdout(&edgecolor(&["--seed", "5", "gen", "gnp", "40", "0.4"])),
    );
    let plain = edgecolor(&["color", s(&g)]);
    let checked = edgecolor(&["--debug-checks", "color", s(&g)]);
    assert_eq!(checked.status.code(), Some(0));
    assert_eq!(plain.stdout, checked.stdout);
}

#[test]
fn trace_is_json_lines() {
    let dir = TempDir::new().unwrap();
    let g = file(
        &dir,
        "g.col",
        &stdout(&edgecolor(&["--seed", "8", "gen", "gnp", "25", "0.3"])),
    );
    let m: usize = stdout(&edgecolor(&["stats", s(&g)]))
        .split_whitespace()
        .nth(1)
        .unwrap()
        .parse()
        .unwrap();
    let trace = dir.path().join("trace.jsonl");
    let o = edgecolor(&["color", s(&g), "--trace", s(&trace)]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(trace).unwrap();
    let steps: Vec<serde_json::Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(steps.len(), m);
    for (i, st) in steps.iter().enumerate() {
        assert_eq!(st["iteration"], i);
        assert_eq!(st["colored_after"], i + 1);
        assert_eq!(st["remaining_after"], m - i - 1);
        assert!(st["fan"].as_array().is_some_and(|f| !f.is_empty()));
    }
}

#[test]
fn help_and_version_exit_0() {
    assert_eq!(edgecolor(&["--help"]).status.code(), Some(0));
    assert_eq!(edgecolor(&["--version"]).status.code(), Some(0));
}
