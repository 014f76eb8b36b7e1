//! End-to-end runs of the `sparsekit` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn sk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sparsekit")).args(args).output().expect("binary runs")
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

const K4: &str = "p hyp 4 6\n1 2 0\n1 3 0\n1 4 0\n2 3 0\n2 4 0\n3 4 0\n";

#[test]
fn sparsify_k4_meets_bound() {
    let dir = tempfile::tempdir().unwrap();
    let (input, out, report) = (dir.path().join("k4.hyp"), dir.path().join("out.hyp"), dir.path().join("r.json"));
    fs::write(&input, K4).unwrap();
    let o = sk(&["sparsify", p(&input), p(&out), "--exact", "--report", p(&report)]);
    assert_eq!(o.status.code(), Some(0));
    let kernel = fs::read_to_string(&out).unwrap();
    assert!(kernel.starts_with("p hyp 4 4\n"), "{kernel}");
    let report = fs::read_to_string(&report).unwrap();
    assert!(report.contains("\"bounds_hold\": true"));
    assert!(report.contains("\"mode\": \"exact\""));

    let o = sk(&["solve", "2col", p(&out)]);
    assert_eq!(o.status.code(), Some(20));
    assert!(stdout(&o).starts_with("no\n"));
}

#[test]
fn stats_prints_histogram_and_bounds() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("k4.hyp");
    fs::write(&input, K4).unwrap();
    let o = sk(&["stats", p(&input), "--exact"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "format: hyp\nn=4, edges: r=2:6\nkernel (exact): r=2:4 (bound 4), total 4 (bound 8)\n");
}

#[test]
fn solve_and_check_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let (cnf, cert) = (dir.path().join("f.cnf"), dir.path().join("c.json"));
    fs::write(&cnf, "p cnf 3 2\n1 2 -3 0\n-1 3 0\n").unwrap();
    let o = sk(&["solve", "nae", p(&cnf), "--cert", p(&cert)]);
    assert_eq!(o.status.code(), Some(10));
    assert!(stdout(&o).contains("nodes "));
    assert_eq!(sk(&["check", "nae", p(&cnf), p(&cert)]).status.code(), Some(0));

    fs::write(&cert, "{\"kind\":\"assignment\",\"values\":[1,1,0]}").unwrap();
    let o = sk(&["check", "nae", p(&cnf), p(&cert)]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "invalid\n");
}

#[test]
fn reduce_preserves_answer() {
    let dir = tempfile::tempdir().unwrap();
    let (cnf, hyp, trace) = (dir.path().join("f.cnf"), dir.path().join("f.hyp"), dir.path().join("t.json"));
    for seed in 0..6 {
        let seed = seed.to_string();
        let o = sk(&["gen", "cnf", "--seed", &seed, "--n", "5", "--m", "14", "--d", "3", "--out", p(&cnf)]);
        assert_eq!(o.status.code(), Some(0));
        let o = sk(&["reduce", "nae-to-hyp", p(&cnf), p(&hyp), "--trace", p(&trace)]);
        assert_eq!(o.status.code(), Some(0));
        assert!(fs::read_to_string(&trace).unwrap().contains("\"name\""));
        let a = sk(&["solve", "nae", p(&cnf)]).status.code();
        let b = sk(&["solve", "2col", p(&hyp)]).status.code();
        assert_eq!(a, b, "seed {seed}");
    }
}

#[test]
fn reduce_without_trace_writes_it_to_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let (d, g) = (dir.path().join("d.arc"), dir.path().join("g.edge"));
    fs::write(&d, "p arc 3 3\na 1 2\na 2 3\na 3 1\n").unwrap();
    let o = sk(&["reduce", "dhc-to-hc", p(&d), p(&g)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("\"output_vertices\": 9"));
    assert_eq!(sk(&["solve", "hc", p(&g)]).status.code(), Some(10));
}

#[test]
fn gen_is_deterministic() {
    for kind in ["cnf", "hyp", "digraph", "tsd", "bipham", "colrbds"] {
        let a = sk(&["gen", kind, "--seed", "17"]);
        let b = sk(&["gen", kind, "--seed", "17"]);
        assert_eq!(a.status.code(), Some(0), "{kind}");
        assert_eq!(a.stdout, b.stdout, "{kind}");
    }
    assert_eq!(sk(&["gen", "bipham", "--m", "2", "--n", "4"]).status.code(), Some(2));
}

#[test]
fn compose_four_coloring_batch() {
    let dir = tempfile::tempdir().unwrap();
    let inputs = dir.path().join("in");
    fs::create_dir(&inputs).unwrap();
    for i in 0..4 {
        let o = sk(&["gen", "tsd", "--seed", &i.to_string(), "--m", "3", "--n", "2"]);
        fs::write(inputs.join(format!("{i}.json")), &o.stdout).unwrap();
    }
    let out = dir.path().join("g.edge");
    let o = sk(&["compose", "4col", "--inputs", p(&inputs), "--out", p(&out)]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    // 4 inputs with 3 independent vertices and 2 triangles each, q = log2(4).
    assert!(fs::read_to_string(&out).unwrap().starts_with(&format!("p edge {} ", 3 * 2 + 12 * 2 * 2 + 3 + 3 * 3 + 4)));

    let any_yes = (0..4).any(|i| sk(&["solve", "tsd", p(&inputs.join(format!("{i}.json")))]).status.code() == Some(10));
    let expected = if any_yes { 10 } else { 20 };
    assert_eq!(sk(&["solve", "4col", p(&out)]).status.code(), Some(expected));
}

#[test]
fn compose_domset_records_budget() {
    let dir = tempfile::tempdir().unwrap();
    let mut files = Vec::new();
    for i in 0..2 {
        let f = dir.path().join(format!("r{i}.json"));
        let o = sk(&["gen", "colrbds", "--seed", &i.to_string(), "--k", "2", "--class-size", "2", "--n", "3"]);
        fs::write(&f, &o.stdout).unwrap();
        files.push(f);
    }
    let list = files.iter().map(|f| p(f).to_string()).collect::<Vec<_>>().join(",");
    let out = dir.path().join("g.edge");
    let o = sk(&["compose", "domset", "--inputs", &list, "--out", p(&out)]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.contains("c budget 4\n"), "{text}");
    assert!(text.contains("c problem ds\n"));

    let any_yes = files.iter().any(|f| sk(&["solve", "colrbds", p(f)]).status.code() == Some(10));
    let code = sk(&["solve", "ds", p(&out)]).status.code();
    assert_eq!(code, Some(if any_yes { 10 } else { 20 }));
}

#[test]
fn malformed_input_exits_2_with_line() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.edge");
    fs::write(&f, "p edge 2 1\nc fine\ne 1 x\n").unwrap();
    let o = sk(&["solve", "4col", p(&f)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    assert_eq!(sk(&["solve", "4col", "/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(sk(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(sk(&["solve", "sat", p(&f)]).status.code(), Some(2));
}

#[test]
fn solve_timeout_and_refusal_exit_30() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.edge");
    let o = sk(&["gen", "hyp", "--seed", "3", "--n", "40", "--m", "600", "--d", "2"]);
    let text = String::from_utf8_lossy(&o.stdout).replace("p hyp", "p edge");
    let edges: String = text.lines().skip(1).map(|l| format!("e {}\n", l.trim_end_matches(" 0"))).collect();
    let header = text.lines().next().unwrap();
    fs::write(&g, format!("{header}\n{edges}")).unwrap();
    let o = sk(&["solve", "hc", p(&g), "--node-budget", "10"]);
    assert_eq!(o.status.code(), Some(30), "{}", stdout(&o));

    let f = dir.path().join("big.cnf");
    let o = sk(&["gen", "cnf", "--n", "40", "--m", "60", "--out", p(&f)]);
    assert_eq!(o.status.code(), Some(0));
    let o = sk(&["solve", "nae", p(&f), "--var-cap", "10"]);
    assert_eq!(o.status.code(), Some(30));
    assert!(stdout(&o).starts_with("refused"));
}

#[test]
fn verify_reports_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for r in [&a, &b] {
        let o = sk(&["verify", "reduce-nae-hyp", "--trials", "20", "--seed", "5", "--report", p(r)]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(stdout(&o).contains("20 trials, 20 agreements, 0 disagreements"));
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());

    let o = sk(&["verify", "compose-hamcycle", "--trials", "4", "--replay", "99"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains(": 1 trials"));

    assert_eq!(sk(&["verify", "compose-4col", "--t", "8"]).status.code(), Some(2));
    assert_eq!(sk(&["verify", "reduce-nae-hyp", "--n", "30", "--trials", "2"]).status.code(), Some(3));
}
