use std::process::{Command, Output};

use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lptrans")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

fn field<'a>(out: &'a str, key: &str) -> &'a str {
    out.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix('\t')))
        .unwrap_or_else(|| panic!("no {key} in {out}"))
}

#[test]
fn enum_reports_longest_paths() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "p4.txt", "4\n0 1\n1 2\n2 3\n");
    let o = run(&["enum", "--paths", &g]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(field(&out, "length"), "4");
    assert_eq!(field(&out, "count"), "1");
    let o = run(&["enum", "--cycles", &write(&dir, "k4.txt", "4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")]);
    assert_eq!(field(&stdout(&o), "count"), "3");
}

#[test]
fn exact_transversals() {
    let dir = TempDir::new().unwrap();
    let chain = run(&["gen", "triangle-chain", "--t", "3"]);
    let g = write(&dir, "chain.txt", &stdout(&chain));
    let o = run(&["lct", &g]);
    assert!(o.status.success());
    assert_eq!(field(&stdout(&o), "size"), "3");
    let o = run(&["lpt", &g, "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["size"], 1);
    assert_eq!(v["certified_minimum"], true);
}

#[test]
fn fractional_and_alpha() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c6.txt", "6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    let o = run(&["frac", &g]);
    assert!(o.status.success());
    assert_eq!(field(&stdout(&o), "within_sqrt_n"), "true");
    let o = run(&["alpha", &g, "--alpha", "5/2"]);
    assert!(o.status.success());
    assert_eq!(field(&stdout(&o), "within_bound"), "true");
    assert_eq!(run(&["alpha", &g, "--alpha", "1"]).status.code(), Some(2));
    assert_eq!(run(&["alpha", &g, "--alpha", "x"]).status.code(), Some(2));
}

#[test]
fn weave_four_block_instance() {
    let dir = TempDir::new().unwrap();
    let l = write(&dir, "fig.txt", "10\n(2,2)\n(3,4) (4,3)\n(5,8) (6,7) (7,6) (8,5)\n(9,9)\n");
    let o = run(&["weave", &l]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(field(&out, "longer"), "18");
    assert_eq!(field(&out, "sum"), "36 = 2*10 + 2*8");
    // two parallel edges in one block are not a valid block matching
    let bad = write(&dir, "bad.txt", "4\n(1,1) (2,2)\n");
    assert_eq!(run(&["weave", &bad]).status.code(), Some(2));
}

#[test]
fn separator_transversal_with_and_without_decomposition() {
    let dir = TempDir::new().unwrap();
    let td = dir.path().join("g.td");
    let o = run(&["gen", "partial-ktree", "--k", "2", "--n", "12", "--seed", "4", "--td", td.to_str().unwrap()]);
    assert!(o.status.success());
    let g = write(&dir, "g.txt", &stdout(&o));
    let o = run(&["septrans", &g, "--td", td.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(field(&stdout(&o), "size").parse::<usize>().unwrap() >= 1);
    let o = run(&["septrans", &g, "--fraction", "1/2"]);
    assert!(o.status.success());
}

#[test]
fn circular_arc_cascade() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "tri.txt", "0 0 2/5\n1 7/20 3/4\n2 7/10 1/20\n");
    for mode in ["path", "cycle"] {
        let o = run(&["circ", &m, "--mode", mode]);
        assert!(o.status.success());
        let out = stdout(&o);
        assert!(field(&out, "size").parse::<usize>().unwrap() <= 3);
        assert!(out.contains("step\t"));
    }
    let disconnected = write(&dir, "gap.txt", "0 0 1/10\n1 1/2 6/10\n");
    assert_eq!(run(&["circ", &disconnected]).status.code(), Some(2));
}

#[test]
fn experiment_writes_reports() {
    let dir = TempDir::new().unwrap();
    let cfg = write(&dir, "cfg.txt", "name = chain\nfamily = triangle-chain\nt = 3\nchecks = thomassen, thm1\n");
    let out = dir.path().join("out");
    std::fs::create_dir(&out).unwrap();
    let o = run(&["experiment", "--config", &cfg, "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(field(&stdout(&o), "failed"), "0");
    let tsv = std::fs::read_to_string(out.join("chain.tsv")).unwrap();
    assert!(tsv.lines().count() >= 3);
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out.join("chain.json")).unwrap()).unwrap();
    assert_eq!(json["summary"]["failed"], 0);
}

#[test]
fn usage_and_budget_exit_codes() {
    let dir = TempDir::new().unwrap();
    assert_eq!(run(&["lpt", "/nonexistent/graph"]).status.code(), Some(2));
    let bad = write(&dir, "bad.txt", "3\n0 3\n");
    let o = run(&["lpt", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    let k10 = run(&["gen", "random-connected", "--n", "10", "--p", "1"]);
    let g = write(&dir, "k10.txt", &stdout(&k10));
    assert_eq!(run(&["lpt", &g, "--budget", "10"]).status.code(), Some(3));
}

#[test]
fn generators_are_deterministic() {
    let a = run(&["gen", "random-arc-model", "--m", "6", "--seed", "9"]);
    let b = run(&["gen", "random-arc-model", "--m", "6", "--seed", "9"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let l = run(&["gen", "ladder", "--tau", "20", "--seed", "1"]);
    assert!(l.status.success());
}
