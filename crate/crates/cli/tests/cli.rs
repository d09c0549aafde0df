use std::path::PathBuf;
use std::process::{Command, Output};

fn mmp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mmp"))
        .args(args)
        .env_remove("MMP_CONFIG")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn first_line(args: &[&str]) -> String {
    let o = mmp(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o).lines().next().unwrap_or("").to_string()
}

fn temp_config(name: &str, body: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("mmp-cli-test-{}-{name}.conf", std::process::id()));
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn poly_examples() {
    assert_eq!(first_line(&["poly", "--pattern", "3,0,0,0", "--n", "5"]), "34+6x+2x^2");
    assert_eq!(first_line(&["poly", "--pattern", "0,0,e,0", "--n", "2"]), "x+x^2");
    assert_eq!(first_line(&["poly", "--pattern", "0,0,0,0", "--n", "3"]), "5x^3");
    assert_eq!(first_line(&["poly", "--pattern", "3,0,0,0", "--n", "5", "--method", "rec"]), "34+6x+2x^2");
}

#[test]
fn series_examples() {
    assert_eq!(first_line(&["series", "--family", "k000", "--k", "2", "--order", "4", "--slice", "x0"]), "1,1,2,4,8");
    assert_eq!(first_line(&["series", "--family", "e0e0", "--order", "5", "--slice", "x0"]), "1,0,1,2,6,18");
    assert_eq!(first_line(&["series", "--family", "ook0", "--k", "1", "--order", "0"]), "1");
    assert_eq!(
        first_line(&["series", "--family", "k000", "--k", "2", "--order", "3"]),
        "1+t+2t^2+(4+x)t^3"
    );
}

#[test]
fn biject_examples() {
    let o = mmp(&["biject", "--map", "phi", "--perm", "312"]);
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("UDUUDD"));
    assert!(out.contains("heights: 1,1,1,2,2,1"));
    assert_eq!(first_line(&["biject", "--map", "x", "--perm", "4762531"]), "48726513");
    let o = mmp(&["biject", "--map", "phi", "--perm", "132"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("132"));
}

#[test]
fn sequence_examples() {
    assert_eq!(
        first_line(&["sequence", "--pattern", "0,0,2,0", "--slice", "x0", "--count", "10"]),
        "1,1,2,3,5,8,13,21,34,55"
    );
    assert_eq!(
        first_line(&["sequence", "--pattern", "2,0,0,0", "--slice", "x1", "--count", "7", "--from", "3"]),
        "1,4,12,32,80,192,448"
    );
    assert_eq!(first_line(&["sequence", "--pattern", "0,0,0,0", "--slice", "x0", "--count", "3"]), "1,0,0");
    // a pattern with no recursion goes through enumeration
    assert_eq!(first_line(&["sequence", "--pattern", "1,1,0,0", "--count", "5"]).split(',').count(), 5);
}

#[test]
fn verify_examples() {
    let o = mmp(&["verify", "--filter", "nonexistent", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(serde_json::from_slice::<serde_json::Value>(&o.stdout).unwrap(), serde_json::json!([]));

    let o = mmp(&["verify", "--filter", "constants", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let reports = v.as_array().unwrap();
    assert!(!reports.is_empty());
    assert!(reports.iter().all(|r| r["status"] == "pass"));
}

#[test]
fn verify_exit_code_follows_report() {
    let o = mmp(&["verify", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let any_failed = v.as_array().unwrap().iter().any(|r| r["status"] == "fail");
    assert_eq!(o.status.code(), Some(if any_failed { 1 } else { 0 }));
}

#[test]
fn exit_codes() {
    assert_eq!(mmp(&["poly", "--pattern", "1,0,0,0", "--n", "14"]).status.code(), Some(3));
    assert_eq!(mmp(&["poly", "--pattern", "1,0,0,0", "--n", "3", "--n-max", "16"]).status.code(), Some(3));
    assert_eq!(mmp(&["series", "--family", "k000", "--order", "65"]).status.code(), Some(3));
    assert_eq!(mmp(&["verify", "--filter", "C01", "--n-max", "1000000"]).status.code(), Some(3));
    assert_eq!(mmp(&["poly", "--pattern", "1,0,x,0", "--n", "3"]).status.code(), Some(2));
    assert_eq!(mmp(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(mmp(&["series", "--family", "ooe0", "--method", "closed"]).status.code(), Some(2));
}

#[test]
fn json_and_csv_output() {
    let o = mmp(&["poly", "--pattern", "1,0,0,0", "--n", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v, serde_json::json!({"0": 1, "1": 3, "2": 5, "3": 5}));

    let o = mmp(&["series", "--family", "k000", "--k", "1", "--order", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v, serde_json::json!([{"0": 1}, {"0": 1}, {"0": 1, "1": 1}]));

    let o = mmp(&["sequence", "--family", "e0e0", "--count", "4", "--format", "csv"]);
    assert_eq!(stdout(&o), "n,value\n0,1\n1,0\n2,1\n3,2\n");
}

#[test]
fn config_file_and_env() {
    let path = temp_config("plain", "# defaults\nnMax = 4\norder = 3\nformat = json\n");
    let p = path.to_str().unwrap();
    let o = mmp(&["--config", p, "poly", "--pattern", "1,0,0,0", "--n", "5"]);
    assert_eq!(o.status.code(), Some(3));
    let o = mmp(&["--config", p, "series", "--family", "e0e0", "--slice", "x0"]);
    assert_eq!(stdout(&o).trim(), "[1,0,1,2]");
    // command-line flags win over the file
    let o = mmp(&["--config", p, "--format", "plain", "--order", "4", "series", "--family", "e0e0", "--slice", "x0"]);
    assert_eq!(stdout(&o).trim(), "1,0,1,2,6");

    let o = Command::new(env!("CARGO_BIN_EXE_mmp"))
        .args(["series", "--family", "e0e0", "--slice", "x0"])
        .env("MMP_CONFIG", &path)
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(o.stdout).unwrap().trim(), "[1,0,1,2]");

    let bad = temp_config("bad", "colour = blue\n");
    assert_eq!(mmp(&["--config", bad.to_str().unwrap(), "series", "--family", "e0e0"]).status.code(), Some(2));
    let _ = std::fs::remove_file(path);
    let _ = std::fs::remove_file(bad);
}
