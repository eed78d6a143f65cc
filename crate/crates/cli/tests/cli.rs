use std::path::PathBuf;
use std::process::{Command, Output};

fn ddrs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ddrs"))
        .args(args)
        .env_remove("DDRS_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ddrs-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn normalize_prints_compact_unary_numerals() {
    let o = ddrs(&["normalize", "--system", "z1", "(-011)+01"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "-01\n");
}

#[test]
fn normalize_respects_style_and_strategy() {
    let o = ddrs(&["normalize", "--system", "z1", "--style", "full", "--strategy", "lo", "(-011)+01"]);
    assert_eq!(stdout(&o), "(-0')\n");
    let o = ddrs(&["normalize", "--system", "d1", "(1+1)*(1+1)"]);
    assert_eq!(stdout(&o), "1+1+1+1\n");
}

#[test]
fn eval_and_convert() {
    assert_eq!(stdout(&ddrs(&["eval", "(1+1)*(1+1)"])), "4\n");
    assert_eq!(stdout(&ddrs(&["eval", "-011"])), "-2\n");
    assert_eq!(stdout(&ddrs(&["convert", "--to", "successor", "1+1"])), "S(S(0))\n");
    assert_eq!(stdout(&ddrs(&["convert", "--to", "ring", "-011"])), "-(1+1)\n");
    let o = ddrs(&["convert", "--to", "unary-nat", "-1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn redexes_in_position_then_rule_order() {
    let o = ddrs(&["redexes", "--system", "d1", "0+0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "e R1\ne R2\n");
    let o = ddrs(&["redexes", "--system", "d2", "(0*1)+0"]);
    assert_eq!(stdout(&o), "e R1\n1 R5\n");
}

#[test]
fn weight_prints_value_or_overflow() {
    assert_eq!(stdout(&ddrs(&["weight", "--system", "z1p", "P(0)"])), "7\n");
    let o = ddrs(&["weight", "--system", "d1", "0*(0*(0*(0*(0*0))))"]);
    assert_eq!(stdout(&o), "overflow\n");
}

#[test]
fn usage_and_input_errors_exit_2() {
    let o = ddrs(&["normalize", "0+1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("Usage: ddrs normalize"), "{}", stderr(&o));
    assert!(stdout(&o).is_empty());

    let o = ddrs(&["normalize", "--system", "d1", "0+)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("offset 2"));

    let o = ddrs(&["normalize", "--system", "n1", "-0"]);
    assert_eq!(o.status.code(), Some(2));

    let o = ddrs(&["show", "q9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("d2m"));

    let o = ddrs(&["check", "--suite", "everything"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn show_dumps_rules_in_table_order() {
    let o = ddrs(&["show", "d2"]);
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 12);
    assert_eq!(lines[1], "0+1 -> 1");
    assert_eq!(lines[5], "x*(y+1) -> x*y+x");
    let o = ddrs(&["show"]);
    assert_eq!(stdout(&o).lines().count(), 16);
}

#[test]
fn traces_round_trip_through_replay() {
    let path = scratch("d2.jsonl");
    let p = path.to_str().unwrap();
    let o = ddrs(&["normalize", "--system", "d2", "--trace", p, "0+1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    let step: serde_json::Value = serde_json::from_str(lines[1]).unwrap();
    assert_eq!(step["rule"], "R2'");
    assert_eq!(step["pos"], "e");

    let o = ddrs(&["replay", p]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n");

    std::fs::write(&path, text.replace("R2'", "R1")).unwrap();
    let o = ddrs(&["replay", p]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn already_normal_input_gives_header_and_footer() {
    let path = scratch("empty.jsonl");
    let p = path.to_str().unwrap();
    ddrs(&["normalize", "--system", "z2", "--trace", p, "-011"]);
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 2);
    assert!(text.contains("\"steps\":0"));
}

#[test]
fn check_fixtures_passes_and_writes_json() {
    let path = scratch("fixtures.json");
    let p = path.to_str().unwrap();
    let o = ddrs(&["check", "--suite", "fixtures", "--system", "all", "--json", p]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["suite"], "fixtures");
    assert_eq!(report["passed"], true);
    assert_eq!(report["config"]["seed"], 42);
}

#[test]
fn check_output_is_reproducible_and_seedable() {
    let args = ["check", "--suite", "soundness", "--system", "z3p", "--samples", "30"];
    assert_eq!(stdout(&ddrs(&args)), stdout(&ddrs(&args)));

    let path = scratch("seeded.json");
    let o = Command::new(env!("CARGO_BIN_EXE_ddrs"))
        .args(args)
        .args(["--json", path.to_str().unwrap()])
        .env("DDRS_SEED", "7")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["config"]["seed"], 7);
}

#[test]
fn step_limit_is_a_check_failure() {
    let o = ddrs(&["normalize", "--system", "n1", "--max-steps", "3", "011*011"]);
    assert_eq!(o.status.code(), Some(1));
}
