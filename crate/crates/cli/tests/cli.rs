use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data");
    root.join(name).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_covertool"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn ideal_of_path() {
    let o = run(&["ideal", "--t", "2", &data("p4.graph")]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "x2, x3, x1*x4\n");
}

#[test]
fn ideal_of_star_at_t1() {
    let o = run(&["ideal", "--t", "1", &data("star3.graph")]);
    assert_eq!(stdout(&o), "z, x1*x2*x3\n");
}

#[test]
fn ideal_dual_is_the_two_path_ideal() {
    let o = run(&["ideal", "--t", "2", "--dual", &data("p4.graph")]);
    assert!(stdout(&o).contains("dual: x1*x2*x3, x2*x3*x4"));
}

#[test]
fn unit_ideal_warns_and_succeeds() {
    let o = run(&["ideal", "--t", "3", &data("p4.graph")]);
    assert!(o.status.success());
    assert!(stderr(&o).contains("unit ideal"));
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn parse_errors_name_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.graph");
    std::fs::write(&path, "vertices: a b\nedge: a c\n").unwrap();
    let o = run(&["ideal", "--t", "1", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
}

#[test]
fn ass_with_prediction_on_path() {
    let o = run(&[
        "ass",
        "--t",
        "2",
        "--s",
        "1",
        "--predict",
        &data("p4.graph"),
    ]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("<x1, x2, x3>") && out.contains("<x2, x3, x4>"));
    assert!(out.contains("2 primes"));
    assert!(out.trim_end().ends_with("MATCH"));
}

#[test]
fn ass_with_prediction_on_star() {
    let o = run(&[
        "ass",
        "--t",
        "2",
        "--s",
        "2",
        "--predict",
        "--mode",
        "both",
        &data("star3.graph"),
    ]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("4 primes"));
    assert!(out.contains("<z, x1, x2, x3>"));
    assert!(out.contains("localized: MATCH"));
}

#[test]
fn prediction_refused_on_cycles() {
    let o = run(&[
        "ass",
        "--t",
        "2",
        "--s",
        "1",
        &data("c4.graph"),
        "--predict",
    ]);
    assert_ne!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("closed form proven only for trees"));
}

#[test]
fn stability_of_star_is_certified() {
    let o = run(&["stability", "--t", "2", "--smax", "4", &data("star4.graph")]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("astab: 3 (certified)"));
    assert!(out.contains("persistence: OK"));
}

#[test]
fn stability_at_t1_is_one() {
    let o = run(&[
        "stability",
        "--t",
        "1",
        "--smax",
        "3",
        &data("spider.graph"),
    ]);
    assert!(stdout(&o).contains("astab: 1 (certified)"));
}

#[test]
fn stability_of_cycle_is_uncertified() {
    let o = run(&["stability", "--t", "2", "--smax", "3", &data("c5.graph")]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(!out.contains("certified)") || out.contains("uncertified"));
    assert!(out.contains("not determined") || out.contains("uncertified"));
}

#[test]
fn witness_examples() {
    let o = run(&["witness", "--n", "3", "--t", "2", "--s", "2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("T = x1*x2*x3\n"));
    assert_eq!(out.matches("PASS").count(), 3);

    let o = run(&["witness", "--n", "3", "--t", "2", "--s", "3"]);
    assert!(stdout(&o).contains("T = z*x1*x2*x3\n"));

    let o = run(&["witness", "--n", "4", "--t", "2", "--s", "1"]);
    assert_ne!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("s(t-1) >= n-1"));
}

#[test]
fn gap_examples() {
    for (m, astab) in [(1, 2), (2, 3)] {
        let o = run(&["gap", "--m", &m.to_string()]);
        assert!(o.status.success());
        let out = stdout(&o);
        assert!(out.contains("chi(H_m) = 2"));
        assert!(out.contains(&format!("astab(J(H_m)) = {astab}")));
        assert!(out.contains("HOLDS (equality)"));
    }
    let o = run(&["gap", "--m", "9"]);
    assert_ne!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("cap exceeded (override with --force)"));
}

#[test]
fn caps_apply_to_powers() {
    let o = run(&["ass", "--t", "2", "--s", "7", &data("p4.graph")]);
    assert!(stderr(&o).contains("cap exceeded"));
}

#[test]
fn json_is_deterministic_and_versioned() {
    let args = [
        "ass",
        "--t",
        "2",
        "--s",
        "2",
        "--predict",
        "--format",
        "json",
        &data("star3.graph"),
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["method"], "oracle");
    assert_eq!(v["primes"].as_array().unwrap().len(), 4);
    assert_eq!(v["checks"]["matches_prediction"], true);
    assert_eq!(v["graph"]["vertices"][0], "z");

    let s1 = run(&[
        "sweep",
        "--format",
        "json",
        "--mode",
        "both",
        &data("spider.graph"),
    ]);
    let s2 = run(&[
        "sweep",
        "--format",
        "json",
        "--mode",
        "both",
        &data("spider.graph"),
    ]);
    assert_eq!(s1.stdout, s2.stdout);
    let v: serde_json::Value = serde_json::from_slice(&s1.stdout).unwrap();
    assert_eq!(v["ok"], true);
}

#[test]
fn hypergraph_input() {
    let o = run(&["ideal", "--hyper", &data("h1.hgraph")]);
    let out = stdout(&o);
    assert!(out.starts_with("z, x1*x2, x1*x3, x2*x3\n"));
    assert!(out.contains("chromatic number: 2"));
}

#[test]
fn sweep_of_builtin_tree_corpus_restricted_to_one_t() {
    let o = run(&["sweep", "--t", "3"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("all OK"));
}
