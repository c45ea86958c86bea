use std::path::Path;
use std::process::{Command, Output};

const XA_IN_A: &str = r#"{
  "p": 2,
  "field": "Q",
  "ambient": {"dims": [{"degree": 0, "dim": 1}, {"degree": 1, "dim": 1}], "maps": [{"from_degree": 0, "matrix": [[1]]}]},
  "sub": {"dims": [{"degree": 1, "dim": 1}]},
  "iota": [{"degree": 1, "matrix": [["1/1"]]}]
}"#;

fn wpl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wpl"))
        .args(args)
        .env_remove("WPL_SEED")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn fcy_check_for_p8() {
    let o = wpl(&["check", "--only", "fcy", "--p", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS phi^24 = I"));
}

#[test]
fn full_suite_passes() {
    let o = wpl(&["check", "--p", "2..6"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(wpl(&["check", "bogus"]).status.code(), Some(2));
    assert_eq!(wpl(&["check", "--p", "1..3"]).status.code(), Some(2));
    assert_eq!(wpl(&["table", "ade", "--wat"]).status.code(), Some(2));
    assert_eq!(wpl(&["lgroup", "normalize", "--p", "4", "--elt", "1,2"]).status.code(), Some(2));
    assert_eq!(
        wpl(&["lgroup", "pattern", "--weights", "2,4,5", "--elt", "0,0,0,0"]).status.code(),
        Some(2)
    );
    assert_eq!(wpl(&["cox", "--algebra", "poset-rect:3,3"]).status.code(), Some(2));
}

#[test]
fn tables() {
    let t1 = stdout(&wpl(&["table", "persistent-summands", "--p", "7"]));
    assert_eq!(t1.lines().count(), 7);
    assert!(t1
        .lines()
        .nth(1)
        .unwrap()
        .starts_with("0w    x1+2x2      x1          2x2         [0]"));
    let ade = stdout(&wpl(&["table", "ade", "--p", "2..9"]));
    assert_eq!(ade.lines().count(), 9);
    assert!(ade.contains("4\t10/12\t1/12\t12*\tE6"));
    assert!(ade.contains("8\t26/24\t-1/24*\t24\t<2,3,8>"));
}

#[test]
fn lgroup_and_k0() {
    assert_eq!(
        stdout(&wpl(&["lgroup", "normalize", "--p", "4", "--elt", "2,0,0,0"])),
        "0,0,0,1\tc\n"
    );
    assert_eq!(
        stdout(&wpl(&["lgroup", "structure", "--weights", "2,4,6"])),
        "free rank 1\ttorsion [2, 2]\n"
    );
    assert_eq!(
        stdout(&wpl(&["lgroup", "quotient", "--p", "4", "--v", "1,1,1,-1"])).lines().count(),
        2
    );
    let k0 = stdout(&wpl(&["k0", "class", "--p", "3", "--elt", "0,0,0,0"]));
    assert!(k0.contains("class\t1 0 0 0 0 0 0\nrank\t1\ndegree\t0"));
}

#[test]
fn coxeter_of_the_derived_pair() {
    let a = stdout(&wpl(&["cox", "--algebra", "nakayama:6,3", "--poly"]));
    let b = stdout(&wpl(&["cox", "--algebra", "poset-rect:2,3", "--poly"]));
    assert_eq!(a, b);
    assert_eq!(stdout(&wpl(&["cox", "--algebra", "nakayama:6,3", "--order"])), "order\t12\n");
}

#[test]
fn quiver_output_is_deterministic() {
    let args = ["quiver", "--p", "3", "--slices", "0..3", "--format", "dot"];
    let a = stdout(&wpl(&args));
    assert!(a.starts_with("digraph \"p3\" {"));
    assert_eq!(a, stdout(&wpl(&args)));
    let deleted = stdout(&wpl(&[
        "quiver",
        "--p",
        "3",
        "--slices",
        "0..3",
        "--format",
        "dot",
        "--delete-fading",
    ]));
    assert!(deleted.lines().count() < a.lines().count());
    assert!(!deleted.contains("dotted"));
}

#[test]
fn rep_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let x = write(dir.path(), "x.json", XA_IN_A);
    let v = wpl(&["rep", "validate", &x]);
    assert_eq!(v.status.code(), Some(0));
    assert!(stdout(&v).contains("in nil(p)"));
    let om = wpl(&["rep", "syzygy", &x]);
    assert_eq!(om.status.code(), Some(0));
    let om = write(dir.path(), "om.json", &stdout(&om));
    assert_eq!(wpl(&["rep", "validate", &om]).status.code(), Some(0));
    let back = write(dir.path(), "back.json", &stdout(&wpl(&["rep", "cosyzygy", &om])));
    assert_eq!(stdout(&wpl(&["rep", "stable-hom", &back, &x])), "1\n");
    assert_eq!(stdout(&wpl(&["rep", "hom", &x, &x])), "1\n");
}

#[test]
fn tilting_summands_decompose_trivially() {
    let dir = tempfile::tempdir().unwrap();
    let o = wpl(&["rep", "tilting", "--p", "3", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    for i in 0..4 {
        let t = dir.path().join(format!("T{i}.json"));
        let d = stdout(&wpl(&["rep", "decompose", t.to_str().unwrap(), "--seed", "1"]));
        assert_eq!(d.lines().count(), 1);
        assert!(d.starts_with("1\t"));
    }
}

#[test]
fn bad_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let cyclic = r#"{"p": 2, "ambient": {"dims": [{"degree": 0, "dim": 1}, {"degree": 1, "dim": 1}, {"degree": 2, "dim": 1}],
        "maps": [{"from_degree": 0, "matrix": [[1]]}, {"from_degree": 1, "matrix": [[1]]}]}, "sub": {"dims": []}}"#;
    let f = write(dir.path(), "bad.json", cyclic);
    let o = wpl(&["rep", "validate", &f]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL\tambient: x^2 is nonzero"));
    let g = write(dir.path(), "garbled.json", "{\"p\": 2");
    assert_eq!(wpl(&["rep", "validate", &g]).status.code(), Some(1));
    let x = write(dir.path(), "x.json", XA_IN_A);
    let seeded = Command::new(env!("CARGO_BIN_EXE_wpl"))
        .args(["rep", "decompose", &x])
        .env("WPL_SEED", "many")
        .output()
        .unwrap();
    assert_eq!(seeded.status.code(), Some(2));
}
