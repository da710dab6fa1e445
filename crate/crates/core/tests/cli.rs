use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("nichols-weyl-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nichols-weyl")).args(args).output().expect("binary runs")
}

fn run_on(cmd: &str, config: &str, extra: &[&str]) -> Output {
    let path = fixture(config);
    let mut args = vec![cmd, "--config", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    run(&args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn validate_exit_codes() {
    let ok = run_on("validate", "affine_z2cubed.toml", &[]);
    assert_eq!(ok.status.code(), Some(0), "{}", stderr(&ok));
    assert!(stdout(&ok).ends_with("validation: pass\n"));
    let broken = run_on("validate", "non_cocycle.toml", &[]);
    assert_eq!(broken.status.code(), Some(2));
    assert!(stderr(&broken).contains("3-cocycle identity: FAIL"));
    let unknown = run_on("validate", "unknown_module.toml", &[]);
    assert_eq!(unknown.status.code(), Some(4));
    assert!(stderr(&unknown).contains("tuple.modules[1]"));
}

#[test]
fn cartan_command() {
    let out = run_on("cartan", "affine_z2cubed.toml", &[]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "[[2,-1,-1],[-1,2,-1],[-1,-1,2]]\n");
    assert_eq!(stdout(&run_on("cartan", "diagonal_qm1.toml", &[])), "[[2]]\n");
    let cap = run_on("cartan", "cap_exceeded.toml", &[]);
    assert_eq!(cap.status.code(), Some(3));
    assert!(stderr(&cap).starts_with("cap exceeded at (1,2)"), "{}", stderr(&cap));
}

#[test]
fn graph_writes_dot_and_report() {
    let dot = scratch("graph.dot");
    let report = scratch("graph.json");
    let out = run_on("graph", "affine_z2cubed.toml", &["--dot", dot.to_str().unwrap(), "--report", report.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("closed: true\nstandard: true\nCG1/CG2: pass\n"));
    let dot = std::fs::read_to_string(dot).unwrap();
    assert!(dot.starts_with("graph cartan {"));
    assert_eq!(dot.matches(" -- ").count(), 36);
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(json["objects"].as_array().unwrap().len(), 24);
    assert_eq!(json["standard"], true);
    assert_eq!(json["status"], "ok");
}

#[test]
fn reports_are_byte_identical_across_processes() {
    let (a, b) = (scratch("roots-a.json"), scratch("roots-b.json"));
    for path in [&a, &b] {
        let out = run_on("roots", "affine_z2cubed.toml", &["--word-bound", "5", "--report", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
}

#[test]
fn titscone_summaries() {
    let out = run_on("titscone", "affine_z2cubed.toml", &["--word-bound", "10"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(
        stdout(&out).lines().next(),
        Some("affine, v=(1,1,1), half-space verified, tiling check: 0 violations")
    );
    let a2 = run_on("titscone", "abstract_a2.toml", &[]);
    assert_eq!(a2.status.code(), Some(0));
    assert!(stdout(&a2).starts_with("finite"));
    assert!(stdout(&run_on("titscone", "abstract_indefinite.toml", &[])).starts_with("indefinite"));
}

#[test]
fn hilbert_command() {
    let out = run_on("hilbert", "diagonal_qm1.toml", &["--max-deg", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("B(x) graded dimensions: 1, 1, 0, 0\n"));
    let out = run_on("hilbert", "diagonal_q1.toml", &["--max-deg", "3"]);
    assert!(stdout(&out).starts_with("B(x) graded dimensions: 1, 1, 1, 1\n"));
    let out = run_on("hilbert", "affine_z2cubed.toml", &["--module", "M1"]);
    assert_eq!(stdout(&out), "B(M1) graded dimensions: 1, 2, 1, 0, 0\npairing ranks (n >= 1): 2, 1, 0, 0 (consistent)\n");
}

#[test]
fn usage_and_io_errors_are_parse_errors() {
    assert_eq!(run(&["explode", "--config", "x.toml"]).status.code(), Some(4));
    assert_eq!(run(&["cartan"]).status.code(), Some(4));
    let missing = scratch("does-not-exist.toml");
    assert_eq!(run(&["cartan", "--config", missing.to_str().unwrap()]).status.code(), Some(4));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
