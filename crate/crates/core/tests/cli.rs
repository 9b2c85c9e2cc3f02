use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chilogic")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn classify_prints_signature() {
    let o = run(&["classify", "~p"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "index 1, fixpoint ~p, class NEG, exact");
    let o = run(&["classify", "~~p -> p"]);
    assert!(stdout(&o).contains("flagged"));
}

#[test]
fn membership_and_provability_exit_codes() {
    assert_eq!(run(&["member", "~~p -> p", "--chi", "~p"]).status.code(), Some(0));
    assert_eq!(run(&["member", "q | ~q", "--chi", "p | ~p"]).status.code(), Some(1));
    assert_eq!(run(&["prove", "p -> p"]).status.code(), Some(0));
    assert_eq!(run(&["prove", "p | ~p"]).status.code(), Some(1));
    assert_eq!(run(&["cpc", "p | ~p"]).status.code(), Some(0));
    assert_eq!(run(&["equiv", "~p", "~~~p"]).status.code(), Some(0));
}

#[test]
fn chi_check_dichotomy() {
    let fig = data("five_element.json");
    assert_eq!(run(&["check", &fig, "(p->q)|(q->p)", "--chi", "p|~p"]).status.code(), Some(0));
    let o = run(&["check", &fig, "(p->q)|(q->p)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("p=a, q=b"));
}

#[test]
fn usage_errors_exit_two() {
    let o = run(&["prove", "p ->"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("end of input"));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["core", "/nonexistent.json", "p"]).status.code(), Some(2));
    assert_eq!(run(&["suite", "nonsense"]).status.code(), Some(2));
}

#[test]
fn validation_reports_witness() {
    let o = run(&["algebra", "validate", &data("nondistributive.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not distributive: x & (y | z)"));
    assert_eq!(run(&["algebra", "validate", &data("five_element.json")]).status.code(), Some(0));
}

#[test]
fn structured_output_is_one_record_per_check() {
    let o = run(&["--format", "structured", "suite", "order"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(str::to_string).collect();
    assert_eq!(lines.len(), 33);
    for line in &lines {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["suite"], "order");
    }
}

#[test]
fn corrupted_fixture_is_a_plumbing_failure() {
    let o = run(&["suite", "dense", "--max-size", "4", "--fixture", &data("nondistributive.json")]);
    assert_eq!(o.status.code(), Some(0), "a single named suite skips fixtures");
    let o = Command::new(env!("CARGO_BIN_EXE_chilogic"))
        .args(["--format", "structured", "suite", "--max-size", "3", "--fixture", &data("nondistributive.json")])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    let first = stdout(&o).lines().next().unwrap().to_string();
    assert!(first.contains("\"fixtures\"") && first.contains("not distributive"));
}

#[test]
fn golden_files_are_stable() {
    let dir = tempfile::tempdir().unwrap();
    let golden = dir.path().display().to_string();
    let args = ["suite", "wronski", "--max-size", "5", "--golden", &golden];
    assert_eq!(run(&args).status.code(), Some(0));
    let first = std::fs::read_to_string(dir.path().join("wronski.jsonl")).unwrap();
    let o = run(&args);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("matches"));
    std::fs::write(dir.path().join("wronski.jsonl"), first.replacen("pass", "fail", 1)).unwrap();
    assert_eq!(run(&args).status.code(), Some(1));
}

#[test]
fn algebra_commands() {
    let fig = data("five_element.json");
    let chain = data("chain3.json");
    assert_eq!(stdout(&run(&["core", &fig, "p | ~p"])).trim(), "{s, 1}");
    let dot = stdout(&run(&["algebra", "show", &fig, "--dot", "--chi", "~p"]));
    assert!(dot.starts_with("digraph") && dot.contains("fillcolor"));
    let q = stdout(&run(&["quotient", &chain, "--filter", "m"]));
    assert!(q.contains("filter: {m, 1}"));
    let p = stdout(&run(&["--format", "structured", "product", &chain, &chain]));
    let file: serde_json::Value = serde_json::from_str(p.trim()).unwrap();
    assert_eq!(file["elements"].as_array().unwrap().len(), 9);
    let e = stdout(&run(&["enumerate", "--max-size", "6"]));
    assert!(e.trim_end().ends_with("13 algebras"));
    let c = run(&["countermodel", "~p | ~~p", "--max-size", "5"]);
    assert_eq!(c.status.code(), Some(1));
    assert!(stdout(&c).contains("valuation: p=a"));
    assert_eq!(stdout(&run(&["iterate", "~p", "-n", "2"])).trim(), "~~p");
    assert_eq!(stdout(&run(&["ruitenburg", "p | ~p"])).trim(), "index 1, fixpoint p | ~p");
}
