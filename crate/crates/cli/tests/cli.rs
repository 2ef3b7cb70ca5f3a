use std::io::Write;
use std::process::{Command, Output, Stdio};

use jordan_strata::report::{cmd_classify, cmd_embed, cmd_reduce, EmbedKind};
use jordan_strata::verify::cmd_verify;
use jordan_strata::{json, DivisionAlgebra, JordanElement, Rational};
use serde_json::{json, Value};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_jordan-strata"));
    c.env_remove("JORDAN_STRATA_SEED");
    c
}

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut cmd = bin();
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    let mut child = cmd.spawn().unwrap();
    let mut input = child.stdin.take().unwrap();
    input.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(input);
    child.wait_with_output().unwrap()
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn classify_reads_stdin() {
    let e11 = json::jordan_to_json(&JordanElement::<Rational>::idempotent(DivisionAlgebra::O, 0));
    let o = run(&["--format", "json", "classify"], Some(&e11.to_string()));
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["verdict"], json!("pass"));
    assert_eq!(v["result"]["stratum"], json!(1));
    assert_eq!(v, cmd_classify(&e11).unwrap().to_json());
}

#[test]
fn classify_identity_text() {
    let id = json::jordan_to_json(&JordanElement::<Rational>::identity(DivisionAlgebra::H));
    let o = run(&["classify", "-"], Some(&id.to_string()));
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("PASS classify.matrix-rank"));
    assert!(text.trim_end().ends_with("verdict: pass"));
}

#[test]
fn malformed_input_is_a_usage_error() {
    let o = run(&["classify"], Some("{\"algebra\": \"R\", \"diag\": ["));
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));
    let o = run(&["classify"], Some(r#"{"algebra": "X", "diag": [0, 0, 0], "off": []}"#));
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["classify", "/nonexistent/input.json"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_arguments_are_usage_errors() {
    assert_eq!(run(&["verify", "--suite", "nope"], None).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "tkk", "--case", "nope"], None).status.code(), Some(2));
    assert_eq!(run(&["verify"], None).status.code(), Some(2));
    assert_eq!(run(&["embed", "torus"], None).status.code(), Some(2));
    assert_eq!(run(&["embed", "veronese", "[0, 0, 0]"], None).status.code(), Some(2));
    assert_eq!(run(&["--format", "xml", "verify", "--suite", "tkk"], None).status.code(), Some(2));
}

#[test]
fn reduce_oscillators() {
    let line = json!({"q": [[1, 0, 0], [0, 2, 0]], "p": [[3, 0, 0], [0, 6, 0]]});
    let o = run(&["--format", "json", "reduce"], Some(&line.to_string()));
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["result"]["zero_level"], json!(true));
    assert_eq!(v["result"]["stratum"], json!(2));
    assert_eq!(v, cmd_reduce(&line).unwrap().to_json());

    let spinning = json!({"q": [[1, 0]], "p": [[0, 1]]});
    let v = stdout_json(&run(&["--format", "json", "reduce"], Some(&spinning.to_string())));
    assert_eq!(v["result"]["zero_level"], json!(false));

    let crowd = json!({"q": [[1], [2], [3], [4]], "p": [[0], [0], [0], [0]]});
    assert_eq!(run(&["reduce"], Some(&crowd.to_string())).status.code(), Some(2));
}

#[test]
fn embeddings() {
    let v = stdout_json(&run(&["--format", "json", "embed", "veronese", "[1, 2, 3]"], None));
    assert_eq!(v["result"]["stratum"], json!(1));
    assert_eq!(v, cmd_embed(EmbedKind::Veronese, &[json!([1, 2, 3])], 1).unwrap().to_json());

    let o = run(&["embed", "segre", "[1, 0, 2]", "[0, 1, 1]"], None);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["embed", "plucker", "[1, 0, 0, 0, 0, 0]", "[0, 1, 0, 0, 0, 0]"], None);
    assert_eq!(o.status.code(), Some(0));

    let a = stdout_json(&run(&["--format", "json", "embed", "octonionic", "--seed", "5"], None));
    let b = stdout_json(&run(&["--format", "json", "embed", "octonionic", "--seed", "5"], None));
    assert_eq!(a, b);
    assert_eq!(a["result"]["stratum"], json!(1));
    assert_eq!(a, cmd_embed(EmbedKind::Octonionic, &[], 5).unwrap().to_json());
}

#[test]
fn verify_matches_library_and_honours_env_seed() {
    let args = ["--format", "json", "verify", "--suite", "division-algebra", "--samples", "5"];
    let mut with_env = bin();
    with_env.args(args).env("JORDAN_STRATA_SEED", "99");
    let from_env = with_env.output().unwrap();
    assert_eq!(from_env.status.code(), Some(0));
    let mut flagged = args.to_vec();
    flagged.extend(["--seed", "99"]);
    let from_flag = run(&flagged, None);
    assert_eq!(from_env.stdout, from_flag.stdout);
    let lib = cmd_verify("division-algebra", None, Some(5), 99).unwrap();
    assert_eq!(stdout_json(&from_flag), lib.to_json());
    assert_eq!(stdout_json(&from_flag)["seed"], json!(99));
}

#[test]
fn out_file_holds_the_full_report() {
    let dir = std::env::temp_dir().join(format!("jordan-strata-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o =
        run(&["verify", "--suite", "tkk", "--case", "sp3", "--samples", "2", "--out", path.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(0));
    let saved: Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    let names: Vec<&str> = saved["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    assert!(String::from_utf8(o.stdout).unwrap().starts_with("verify --suite tkk --case sp3 --samples 2 (seed 1)"));
    std::fs::remove_dir_all(&dir).unwrap();
}
