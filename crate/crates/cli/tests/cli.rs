use std::process::{Command, Output};

use pbw_core::assoc::{SymElement, SymTree};
use pbw_core::bipart::b_p_formula;
use pbw_core::specialize::{LieAlgebra, PolyTree, Polynomial};

fn pbw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pbw"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn bp_prints_half_bracket() {
    let o = pbw(&["bp", "-n", "1", "-m", "1", "-p", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1/2·[x1,y1]");
}

#[test]
fn bp_both_backends_agree() {
    let o = pbw(&["bp", "-n", "2", "-m", "2", "-p", "2", "--backend", "both"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().last().unwrap() == "VERDICT EQUAL");
}

#[test]
fn bp_text_and_machine_outputs_agree() {
    let text = stdout(&pbw(&["bp", "-n", "2", "-m", "1", "-p", "1"]));
    let machine = stdout(&pbw(&[
        "--format", "machine", "bp", "-n", "2", "-m", "1", "-p", "1",
    ]));
    let from_text: SymElement = text.trim().parse().unwrap();
    let json: serde_json::Value = serde_json::from_str(&machine).unwrap();
    let tree: SymTree = serde_json::from_value(json["value"].clone()).unwrap();
    let from_machine = SymElement::from_tree(&tree).unwrap();
    assert_eq!(from_text, from_machine);
    assert_eq!(from_text, b_p_formula(2, 1, 1));
}

#[test]
fn bp_rejects_p_out_of_range() {
    let o = pbw(&["bp", "-n", "1", "-m", "1", "-p", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("p out of range"));
}

#[test]
fn bp_rejects_degree_over_cap() {
    let o = pbw(&["bp", "-n", "4", "-m", "4", "-p", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn w_undefined_is_a_usage_error() {
    let o = pbw(&["w", "-n", "0", "-m", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("w undefined"));
}

#[test]
fn w_check_passes() {
    let o = pbw(&["w", "-n", "2", "-m", "1", "--check"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().last(), Some("VERDICT EQUAL"));
}

#[test]
fn ck_table() {
    let o = pbw(&["ck", "--kmax", "2", "--qmax", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("k=1\t0\t-1\t-2"), "{out}");
    assert!(out.trim_end().ends_with("lemma21 PASS"));
}

#[test]
fn verify_suites_pass() {
    for suite in ["lemma21", "thm11", "dynkin"] {
        let o = pbw(&["verify", suite, "--max-total-degree", "4"]);
        assert_eq!(o.status.code(), Some(0), "{suite}");
        let out = stdout(&o);
        assert!(
            out.lines()
                .last()
                .unwrap()
                .starts_with(&format!("PASS {suite}")),
            "{out}"
        );
    }
    let o = pbw(&[
        "--format", "machine", "verify", "lemma20", "--pq", "2", "--r", "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json[0]["pass"], serde_json::Value::Bool(true));
}

#[test]
fn star_on_heisenberg() {
    let o = pbw(&["star", "e1", "e2", "--t", "1/1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "e1 e2 + 1/2 e3");

    let machine = stdout(&pbw(&[
        "--format", "machine", "star", "e1", "e2", "--t", "1/1",
    ]));
    let json: serde_json::Value = serde_json::from_str(&machine).unwrap();
    let tree: PolyTree = serde_json::from_value(json["value"].clone()).unwrap();
    let alg = LieAlgebra::heisenberg();
    let expected = Polynomial::parse("e1 e2 + 1/2 e3", alg.names()).unwrap();
    assert_eq!(Polynomial::from_tree(&tree, 3).unwrap(), expected);
}

#[test]
fn star_reads_structure_files() {
    let dir = std::env::temp_dir().join(format!("pbw-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("so3.txt");
    std::fs::write(&path, "dim 3\nbasis a b c\n1 2 3 1\n2 3 1 1\n3 1 2 1\n").unwrap();
    let o = pbw(&[
        "star",
        "a",
        "b",
        "--t",
        "2",
        "--algebra",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "a b + c");

    std::fs::write(&path, "dim 2\nbasis a b\n1 2 1 1\n2 1 1 1\n").unwrap();
    let o = pbw(&["star", "a", "b", "--algebra", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(pbw(&["bp", "-n", "1"]).status.code(), Some(2));
    assert_eq!(pbw(&["star", "e1", "e9"]).status.code(), Some(2));
}
