use std::process::{Command, Output};

fn quartic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quartic")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn coeffs(a: &str, b: &str, c: &str, d: &str) -> Vec<String> {
    ["--a", a, "--b", b, "--c", c, "--d", d].iter().map(|s| s.to_string()).collect()
}

fn run(cmd: &str, a: &str, b: &str, c: &str, d: &str, extra: &[&str]) -> Output {
    let mut args = vec![cmd.to_string()];
    args.extend(coeffs(a, b, c, d));
    args.extend(extra.iter().map(|s| s.to_string()));
    let refs: Vec<&str> = args.iter().map(String::as_str).collect();
    quartic(&refs)
}

#[test]
fn classify_json_reports_four_roots() {
    let o = run("classify", "1", "-3", "-1", "1", &["--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["case"]["label"], "1.11(ii)");
    assert_eq!(v["cubic_tier"]["count"], 4);
    assert_eq!(v["cubic_tier"]["roots"].as_array().unwrap().len(), 4);
    assert!(v["quadratic_tier"]["possible_counts"].as_array().unwrap().contains(&4.into()));
}

#[test]
fn rational_coefficients_are_accepted() {
    let o = run("classify", "1/2", "-3", "0.25", "-7/3", &["--json"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn malformed_coefficient_exits_2() {
    let o = run("classify", "1", "x", "0", "0", &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--b"));
}

#[test]
fn zero_quartic_is_a_quadruple_root() {
    let o = run("classify", "0", "0", "0", "0", &["--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["cubic_tier"]["count"], 1);
    assert_eq!(v["cubic_tier"]["roots"][0]["multiplicity"], 4);
}

#[test]
fn sweep_grid_rows() {
    let o = quartic(&["sweep", "--d=-4:4:1"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines[0].starts_with("a,b,c,d,"));
    assert_eq!(lines.len(), 10);
    assert!(lines[1..].iter().all(|l| l.ends_with(",pass")));
}

#[test]
fn sweep_empty_range_is_not_an_error() {
    let o = quartic(&["sweep", "--d=3:1:1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn sweep_random_is_deterministic() {
    let a = quartic(&["sweep", "--random", "50", "--seed", "3"]);
    let b = quartic(&["sweep", "--random", "50", "--seed", "3"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 51);
}

#[test]
fn unwritable_output_exits_3() {
    let o = run("classify", "1", "0", "0", "0", &["--out", "/nonexistent-dir/x.json"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(run("verify", "1", "-5", "-1", "1", &[]).status.code(), Some(0));
    assert_eq!(run("verify", "1", "-5", "-1", "1", &["--negative-control"]).status.code(), Some(1));
}

#[test]
fn plot_data_sections() {
    let o = run("plot-data", "1", "-3", "-1", "1", &["--samples", "11"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("# samples") && out.contains("# landmarks") && out.contains("# separators"));
    let samples = out.lines().skip_while(|l| !l.starts_with("# samples")).skip(2).take_while(|l| !l.starts_with('#') && !l.is_empty()).count();
    assert_eq!(samples, 11);
    assert_eq!(run("plot-data", "1", "0", "0", "0", &["--samples", "1"]).status.code(), Some(2));
}

#[test]
fn tune_is_deterministic() {
    let a = run("tune", "1", "-3", "-1", "1", &[]);
    let b = run("tune", "1", "-3", "-1", "1", &[]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().filter(|l| l.starts_with("stave=")).count(), 9);
}
