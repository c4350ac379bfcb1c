use std::process::{Command, Output};

fn multifold(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_multifold"))
        .args(args)
        .env_remove("MULTIFOLD_DEFAULT_TOL")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn compile_json_has_eight_steps() {
    let o = multifold(&["compile", "x^2-2", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["steps"].as_array().unwrap().len(), 8);
    assert_eq!(doc["metadata"]["step_count"], 8);
    assert_eq!(doc["version"], 1);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&multifold(&["compile", "5"])), 3);
    let o = multifold(&["compile", "x^^2"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 2"));
    assert_eq!(code(&multifold(&["reduce", "0"])), 3);
    assert_eq!(code(&multifold(&["simulate", "x^2-2", "--x", "-1"])), 3);
    assert_eq!(code(&multifold(&["frobnicate"])), 1);
    assert_eq!(code(&multifold(&["solve"])), 1);
    assert_eq!(code(&multifold(&["solve", "x", "--tolerance", "0"])), 1);
    assert_eq!(code(&multifold(&["solve", "x", "--format", "svg"])), 1);
    assert_eq!(code(&multifold(&["--help"])), 0);
}

#[test]
fn solve_outputs() {
    let o = multifold(&["solve", "x^2-2"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("-1.414213562373"));
    assert!(text.contains("  1.414213562373"));

    let o = multifold(&["solve", "x^2+1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("no real roots"));

    let o = multifold(&["solve", "x^2+1", "--complex", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let pairs: Vec<(String, String)> = v["complex_roots"]
        .as_array()
        .unwrap()
        .iter()
        .map(|z| {
            (
                z["re"].as_str().unwrap().into(),
                z["im"].as_str().unwrap().into(),
            )
        })
        .collect();
    assert_eq!(
        pairs,
        vec![("0".into(), "-1".into()), ("0".into(), "1".into())]
    );
}

#[test]
fn tolerance_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_multifold"))
        .args(["solve", "x^2-2"])
        .env("MULTIFOLD_DEFAULT_TOL", "1e-4")
        .output()
        .unwrap();
    let text = stdout(&o);
    assert!(
        text.contains("1.4142 ") || text.contains("1.4142  "),
        "{text}"
    );
    let o = Command::new(env!("CARGO_BIN_EXE_multifold"))
        .args(["solve", "x^2-2", "--tolerance", "1e-6"])
        .env("MULTIFOLD_DEFAULT_TOL", "1e-4")
        .output()
        .unwrap();
    assert!(stdout(&o).contains("1.414214 "));
}

#[test]
fn simulate_script_document_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let script = dir.path().join("script.json");
    let o = multifold(&[
        "compile",
        "x^2-2",
        "--format",
        "json",
        "--out",
        script.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());

    let o = multifold(&["simulate", script.to_str().unwrap(), "--x", "3/2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("final gap: 1/4\n"));

    std::fs::write(&script, "{\"version\": 1}").unwrap();
    assert_eq!(
        code(&multifold(&[
            "simulate",
            script.to_str().unwrap(),
            "--x",
            "1"
        ])),
        2
    );
}

#[test]
fn reduce_and_bound() {
    let o = multifold(&["reduce", "x-3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["q_re"], "x - 3");
    assert_eq!(v["q_im"], "x");

    let o = multifold(&["bound", "x^2-2", "--bound", "2"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
    assert!(stdout(&o).contains("\nbound: 3\n"));
}

#[test]
fn render_svg_lines() {
    let o = multifold(&["render", "x^2-2", "--x", "1"]);
    assert_eq!(code(&o), 0);
    let svg = stdout(&o);
    assert!(svg.starts_with("<?xml"));
    assert!(svg.contains("version=\"1.1\""));
    assert_eq!(svg.matches("<line ").count(), 21);
}
