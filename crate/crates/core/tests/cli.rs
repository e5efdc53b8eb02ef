use std::path::{Path, PathBuf};
use std::process::Command;

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn qtense(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qtense")).args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p: PathBuf = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn validate_fig1_reports_the_table_violations() {
    let (code, out, _) = qtense(&["validate", &data("fig1.alg")]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("(E1)-(E4)                                certified"));
    assert!(out.contains("(Q3) x <= y but d(x) > d(y) at (a, 5b)"));
    assert!(out.contains("(Q5) d(z)=c not below x·y=4b at (c, 5b, 5b)"));
    assert!(out.contains("4b       1        2b"));
}

#[test]
fn validate_bundled_chain_with_grid() {
    let (code, out, _) = qtense(&["validate", "L5", "--grid", "4"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("on the 2^-4 grid"));
}

#[test]
fn classify_fig1_names_the_missing_join() {
    let (code, out, _) = qtense(&["classify", "fig1"]);
    assert_eq!(code, 0);
    assert!(out.contains("is_lattice: false"));
    assert!(out.contains("(a, b) has no join"));
    let (_, out, _) = qtense(&["classify", "L5"]);
    assert!(out.contains("is_mv: true") && out.contains("is_linear: true"));
    let (_, out, _) = qtense(&["classify", "MO2"]);
    assert!(out.contains("rdp: false"));
}

#[test]
fn canonical_check_tense_is_certified() {
    let (code, out, _) = qtense(&["canonical", "--chain", "L5", "--frame", &data("f.frame"), "--check-tense"]);
    assert_eq!(code, 0, "{out}");
    for t in ["(T1)", "(T2)", "(T3)", "(T4)", "(T5)"] {
        assert!(out.lines().any(|l| l.contains(t) && l.ends_with("certified")), "{t}");
    }
    assert!(out.contains("R transitive"));
}

#[test]
fn canonical_rejects_non_chains() {
    let (code, out, _) = qtense(&["canonical", "--chain", "B2", "--frame", &data("f.frame")]);
    assert_eq!(code, 2, "{out}");
    assert!(out.contains("inapplicable"));
}

#[test]
fn represent_prints_the_relation_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("r.json");
    let (code, out, _) = qtense(&[
        "represent",
        "--algebra",
        &data("prod.alg"),
        "--tense",
        &data("gh.map"),
        "--json",
        json.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("R   t0 t1"));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(v[0]["verdict"]["verdict"], "certified");
    assert_eq!(v[0]["data"]["relation"], serde_json::json!(["s0~t0"]));
}

#[test]
fn galois_check_reports_gq2_witnesses() {
    let (code, out, _) = qtense(&["galois-check", "--maps", &data("floor.map")]);
    assert_eq!(code, 1);
    assert!(out.contains("g(q(1/4)) != q(g(1/4))"));
    let dir = tempfile::tempdir().unwrap();
    let id = write(dir.path(), "id.map", "algebra: L3\nf: 0->0, 1/2->1/2, 1->1\ng: 0->0, 1/2->1/2, 1->1\n");
    assert_eq!(qtense(&["galois-check", "--maps", &id]).0, 0);
}

#[test]
fn tense_check_needs_its_algebra() {
    let (code, _, err) = qtense(&["tense-check", "--maps", &data("gh.map")]);
    assert_eq!(code, 3);
    assert!(err.contains("unknown algebra `prod`"), "{err}");
    let (code, out, _) = qtense(&["tense-check", "--maps", &data("gh.map"), "--load", &data("prod.alg")]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn states_commands() {
    let (code, out, _) = qtense(&["states", "L2xL3", "--extreme", "--order-reflecting"]);
    assert_eq!(code, 0);
    assert!(out.contains("2 extreme q-states"));
    let (code, out, _) = qtense(&["states", "L3", "--check", &data("l3.states")]);
    assert_eq!(code, 1);
    assert!(out.contains("s1 is a q-state"));
    let (code, _, _) = qtense(&["semistate-check", "L3", "--states", &data("l3.states"), "--level", "q-semi"]);
    assert_eq!(code, 1);
    let (code, out, _) = qtense(&["semistate-check", "L3", "--states", &data("l3.states"), "--level", "strong"]);
    assert_eq!(code, 1);
    assert!(out.contains("s0 at level Strong                       certified"));
    let (code, out, _) = qtense(&["states", "fig1"]);
    assert_eq!(code, 0);
    assert!(out.contains("0 extreme q-states"));
}

#[test]
fn input_errors_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let empty = write(dir.path(), "empty.alg", "");
    let (code, _, err) = qtense(&["validate", &empty]);
    assert_eq!(code, 3);
    assert!(err.contains("no algebra defined"));
    let bad = write(dir.path(), "bad.alg", "elements: 0, 1\nzero: 0\none: 1\nsum:\n  0+0=0;\n  0+1=z;\n");
    let (code, _, err) = qtense(&["validate", &bad]);
    assert_eq!(code, 3);
    assert!(err.contains("line 6: undeclared element `z`"), "{err}");
    assert_eq!(qtense(&["frobnicate"]).0, 3);
    assert_eq!(qtense(&["validate"]).0, 3);
    assert_eq!(qtense(&["validate", "nowhere"]).0, 3);
    assert_eq!(qtense(&["represent", "--algebra", "L3"]).0, 3);
    assert_eq!(qtense(&["--help"]).0, 0);
}

#[test]
fn examples_write_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = qtense(&["examples", "--write", dir.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("L2xL3"));
    let l4 = dir.path().join("L4.alg");
    let (code, _, _) = qtense(&["validate", l4.to_str().unwrap()]);
    assert_eq!(code, 0);
    let fig1 = dir.path().join("fig1.alg");
    assert_eq!(qtense(&["validate", fig1.to_str().unwrap()]).0, 1);
}

#[test]
fn order_lists_covers() {
    let (code, out, _) = qtense(&["order", "L3"]);
    assert_eq!(code, 0);
    assert!(out.contains("covers: 0 < 1/2, 1/2 < 1"), "{out}");
}
