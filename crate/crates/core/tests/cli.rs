use std::path::Path;
use std::process::{Command, Output};

fn summa(args: &[&str]) -> Output {
    summa_in(args, None, None)
}

fn summa_in(args: &[&str], dir: Option<&Path>, env_config: Option<&Path>) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_summa"));
    c.args(args).env_remove("SUMMA_CONFIG");
    if let Some(d) = dir {
        c.current_dir(d);
    }
    if let Some(p) = env_config {
        c.env("SUMMA_CONFIG", p);
    }
    c.output().expect("summa runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn verify_passing_identity() {
    let o = summa(&["verify", "theta-3.6", "--x", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let row = text.lines().find(|l| l.starts_with("theta-3.6")).unwrap();
    let residual: f64 = row.split_whitespace().nth(2).unwrap().parse().unwrap();
    assert!(residual <= 1e-12 && row.ends_with("pass"));
}

#[test]
fn verify_failing_identity_exits_one() {
    let o = summa(&["verify", "exp-3.2", "--x", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn sieve_rows() {
    let o = summa(&["sieve", "--max", "10", "--function", "mu"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 10);
    assert_eq!((lines[0], lines[1], lines[9]), ("1,1", "2,-1", "10,1"));
    let h = summa(&["sieve", "--max", "3", "--function", "phi", "--header"]);
    assert_eq!(stdout(&h).lines().count(), 4);
}

#[test]
fn empty_filter_is_a_pass() {
    let o = summa(&["suite", "--filter", "nonexistent-*", "--json", "-"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"total\": 0"));
}

#[test]
fn errors_exit_two_with_one_line() {
    for args in [
        &["verify", "no-such-id"][..],
        &["eval", "zeta", "--arg", "1"],
        &["eval", "zeta", "--arg", "1+x"],
        &["verify", "gen-voronoi-2.34", "--s", "0.2", "--k", "3"],
        &["op", "nope", "--x", "1"],
        &["sieve", "--max", "0", "--function", "mu"],
    ] {
        let o = summa(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert_eq!(stderr(&o).lines().count(), 1, "{args:?}: {}", stderr(&o));
        assert!(stdout(&o).is_empty());
    }
    assert_eq!(summa(&["verify", "theta-3.6", "--x", "abc"]).status.code(), Some(2));
    assert_eq!(summa(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(summa(&["--help"]).status.code(), Some(0));
}

#[test]
fn numeric_output_has_error_column() {
    let e = summa(&["eval", "gamma", "--arg", "0.3+1i", "--format", "csv"]);
    assert_eq!(stdout(&e).lines().next(), Some("function,argument,re,im,error_estimate"));
    let op = summa(&["op", "voronoi", "--x", "1", "--format", "csv"]);
    assert_eq!(op.status.code(), Some(0));
    assert!(stdout(&op).starts_with("operator,function,x,value,error_estimate\n"));
    let s = summa(&["eval", "stieltjes", "--order", "2", "--format", "json"]);
    assert!(stdout(&s).contains("\"error_estimate\""));
}

#[test]
fn config_file_then_env_then_flags() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("summa.conf"), "format = csv\n").unwrap();
    let env_file = dir.path().join("other.conf");
    std::fs::write(&env_file, "format = json\nprecision = extended\n").unwrap();
    let args = ["eval", "k0", "--arg", "2"];
    let local = stdout(&summa_in(&args, Some(dir.path()), None));
    assert!(local.starts_with("function,argument"));
    let env = stdout(&summa_in(&args, Some(dir.path()), Some(&env_file)));
    assert!(env.starts_with('['));
    let flag = stdout(&summa_in(&["eval", "k0", "--arg", "2", "--format", "text"], Some(dir.path()), Some(&env_file)));
    assert!(flag.starts_with("function  argument"));
    // extended precision from the env file prints 17 significant digits
    let value = flag.lines().nth(1).unwrap().split_whitespace().nth(2).unwrap();
    assert!(value.starts_with("1.13893872749533") && value.split('e').next().unwrap().len() == 18, "{flag}");
    std::fs::write(dir.path().join("bad.conf"), "term_cap = 5\n").unwrap();
    let bad = summa_in(&args, Some(dir.path()), Some(&dir.path().join("bad.conf")));
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn output_files() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("mu.csv");
    let o = summa(&["sieve", "--max", "5", "--function", "mu", "--out", csv.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
    assert_eq!(std::fs::read_to_string(&csv).unwrap(), "1,1\n2,-1\n3,-1\n4,0\n5,-1\n");
    let json = dir.path().join("lambert.json");
    let v = summa(&["verify", "lambert", "--json", json.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0));
    let report = std::fs::read_to_string(&json).unwrap();
    assert!(report.contains("\"id\": \"lambert\"") && report.contains("\"timestamps\": null"));
}

#[test]
fn verify_json_is_deterministic() {
    let a = summa(&["verify", "ramanujan-1.8", "--json", "-"]);
    let b = summa(&["verify", "ramanujan-1.8", "--json", "-"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}
