use std::path::PathBuf;
use std::process::{Command, Output};

fn bimlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bimlab")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let p = std::env::temp_dir().join(format!("bimlab-{}-{name}", std::process::id()));
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn completion_dot_has_eight_nodes() {
    let o = bimlab(&["complete", "--catalog", "L3", "--out", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert_eq!(dot.lines().filter(|l| l.contains("[label=")).count(), 8);
    assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 8);
}

#[test]
fn normal_fractions_list_ten_pairs_and_projection() {
    let o = bimlab(&["fractions", "--catalog", "H5c", "--normal"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let elems: Vec<&str> = text.lines().skip(1).take_while(|l| l.starts_with("  ")).collect();
    assert_eq!(elems.len(), 10);
    assert!(text.contains("  c: 1|bot 1|a 1|b c|1 c|1"));
}

#[test]
fn bad_inputs_exit_two() {
    let bad = scratch("bad.json", r#"{"name": "x", "elements": ["a"], "leq": [["a", "q"]]}"#);
    let o = bimlab(&["validate", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown element"));
    assert_eq!(bimlab(&["validate", "/nonexistent/algebra.json"]).status.code(), Some(2));
    assert_eq!(bimlab(&["validate", "--catalog", "nosuch"]).status.code(), Some(2));
    assert_eq!(bimlab(&["clause", "--catalog", "L3", "--clause", "x <= "]).status.code(), Some(2));
    assert_eq!(bimlab(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn false_properties_exit_one_with_witness() {
    let o = bimlab(&["clause", "--catalog", "diamond_fig5", "--clause", "x = (1 ^ x)*(0 v x)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("fails at x = a"));
    assert_eq!(bimlab(&["fractions", "--catalog", "M3"]).status.code(), Some(1));
    let bad = scratch("nonassoc.json", r#"{"name": "n", "elements": ["p", "q"], "leq": [["p", "q"]],
        "mul": [["p", "q"], ["q", "p"]], "one": "p", "add": [["q", "q"], ["q", "q"]], "zero": "q"}"#);
    assert_eq!(bimlab(&["validate", bad.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn true_properties_exit_zero() {
    for args in [
        vec!["validate", "--catalog", "H5c"],
        vec!["compare", "--catalog", "H5c"],
        vec!["roundtrip", "--catalog", "chain:3:2"],
        vec!["sigma", "--catalog", "H5c"],
        vec!["clause", "--catalog", "L3", "--clause", "x <= y | y <= x"],
        vec!["catalog"],
    ] {
        assert_eq!(bimlab(&args).status.code(), Some(0), "{args:?}");
    }
}

#[test]
fn translation_and_linearization_print_clauses() {
    let o = bimlab(&["translate", "--clause", "x*y <= x v y"]);
    assert_eq!(stdout(&o), "a*f <= b+e & c*f <= d+e => a*c*f <= b+d+e\n");
    let o = bimlab(&["linearize", "--ineq", "x*x <= x"]);
    assert_eq!(stdout(&o), "x1*x2 <= x1 v x2\n");
    let o = bimlab(&["translate", "--clause", "x*x <= x"]);
    assert_eq!(stdout(&o), "a*f <= b+e & c*f <= d+e => a*c*f <= b+d+e\n");
}

#[test]
fn json_tables_reload_identically() {
    for args in [
        vec!["catalog", "H5c"],
        vec!["complete", "--catalog", "L3", "--out", "json-tables"],
        vec!["fractions", "--catalog", "H5c", "--normal", "--out", "json-tables"],
        vec!["fractions", "--catalog", "chain:3:2", "--out", "json-tables"],
    ] {
        let first = bimlab(&args);
        assert_eq!(first.status.code(), Some(0), "{args:?}");
        let first = stdout(&first);
        let path = scratch(&format!("{}.json", args.join("_").replace(':', "-")), &first);
        let again = bimlab(&["validate", path.to_str().unwrap(), "--out", "json-tables"]);
        assert_eq!(again.status.code(), Some(0), "{args:?}");
        assert_eq!(stdout(&again), first, "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    let a = stdout(&bimlab(&["complete", "--catalog", "H5one", "--jobs", "1"]));
    let b = stdout(&bimlab(&["complete", "--catalog", "H5one", "--jobs", "4"]));
    assert_eq!(a, b);
}
