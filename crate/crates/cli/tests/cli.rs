use std::path::PathBuf;
use std::process::{Command, Output};

use pathtt::Error;
use pathtt_cli::CliError;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn pathtt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pathtt")).args(args).output().expect("binary runs")
}

fn with_ws(ws: &str, args: &[&str]) -> Output {
    let path = fixture(ws);
    let mut all = vec!["-w", path.as_str()];
    all.extend_from_slice(args);
    pathtt(&all)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn spectrum_counts_points() {
    let o = with_ws("z_a3.yaml", &["spectrum", "--bound", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("points: 12\n"));
    assert_eq!(out.lines().filter(|l| l.contains(" < ")).count(), 9);

    let o = with_ws("z_a3.yaml", &["--json", "spectrum", "--bound", "6"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["points"].as_array().unwrap().len(), 12);
    assert_eq!(v["certified"], true);

    let dot = stdout(&with_ws("z_a3.yaml", &["spectrum", "--bound", "6", "--dot"]));
    assert!(dot.starts_with("digraph spc {"));
    assert!(dot.contains("\"(5, 3)\" -> \"(0, 3)\";"));
}

#[test]
fn source_simple_is_not_rigid() {
    let o = with_ws("f2_a2.yaml", &["rigidity", "U1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("U1: NOT RIGID\n"), "{out}");
    // left side 0, right side U(1)
    assert!(out.contains("left chom(X, U) (x) X:\n  acyclic\n"));
    assert!(out.contains("right chom(X, X):\n  H^0: 1=Fp(2) 2=0\n"));
    assert!(stdout(&with_ws("f2_a2.yaml", &["rigidity", "U"])).starts_with("U: RIGID\n"));
}

#[test]
fn support_and_ideal_reports() {
    let out = stdout(&with_ws("z_a3.yaml", &["support", "M"]));
    assert_eq!(out, "support of M\n1: [3]\n2: [3]\n3: [5]\n");
    let out = stdout(&with_ws("z_a3.yaml", &["support", "C6"]));
    assert_eq!(out, "support of C6\n1: [2, 3]\n2: [2, 3]\n3: [2, 3]\n");

    let out = stdout(&with_ws("z_a3.yaml", &["ideal", "--from", "K2"]));
    assert!(out.contains("generators:\n  K((2)) at 2\n"));
    assert!(out.contains("  K2S: yes\n") && out.contains("  U: no\n"));

    let out = stdout(&with_ws("z_a3.yaml", &["ideal", "--set", "S"]));
    assert!(out.contains("generators:\n  U(1)\n  K((2)) at 3\n  K((3)) at 3\n"), "{out}");
    let out = stdout(&with_ws("z_a3.yaml", &["ideal", "--set", "1=all;2=all;3=[3,5]"]));
    assert!(out.contains("  M: yes\n"), "{out}");
}

#[test]
fn aisle_commands() {
    let out = stdout(&with_ws("z_a3.yaml", &["aisle", "--gen", "K2S,U"]));
    assert_eq!(out, "aisle generated by K2S, U\nbelow: 1=all 2=all 3=all\nfrom 1: 1=[] 2=[2] 3=[]\nfrom 4: 1=[] 2=[] 3=[]\n");
    for (name, verdict) in [("K2S", "IN AISLE"), ("M", "IN AISLE"), ("UM1", "NOT IN AISLE")] {
        let out = stdout(&with_ws("z_a3.yaml", &["aisle", "--member", name, "--filt", "F"]));
        assert_eq!(out, format!("{name}: {verdict}\n"));
    }
    let file = fixture("shifted_two.yaml");
    let out = stdout(&with_ws("z_a3.yaml", &["aisle", "--member", "K2S", "--filt", &file]));
    assert_eq!(out, "K2S: IN AISLE\n");
    let out = stdout(&with_ws("z_a3.yaml", &["aisle", "--member", "UM1", "--filt", &file]));
    assert_eq!(out, "UM1: NOT IN AISLE\n");
}

#[test]
fn filtration_system_verdicts() {
    let out = stdout(&with_ws("d5_tilde.yaml", &["filtsys", "1,2,3,4,5", "6"]));
    assert!(out.starts_with("filtration system: yes\ndynkin support: yes\nordering: {6} < {1,2,3,4,5}\n"), "{out}");
    let out = stdout(&with_ws("d5_tilde.yaml", &["filtsys", "1,2,3,4,5,6"]));
    assert!(out.starts_with("filtration system: yes\ndynkin support: no\n"), "{out}");
    let o = with_ws("d5_tilde.yaml", &["--json", "filtsys", "1,3", "2,4,5,6"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["is_system"], false);
}

#[test]
fn verify_suite_passes() {
    let o = pathtt(&["verify", "--seed", "1", "--cases", "100"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("PASS ")).count(), 10);
}

#[test]
fn reports_are_deterministic() {
    let a = pathtt(&["--json", "verify", "--seed", "5", "--cases", "8"]);
    let b = pathtt(&["--json", "verify", "--seed", "5", "--cases", "8"]);
    assert_eq!(a.stdout, b.stdout);
    let a = with_ws("z_a3.yaml", &["spectrum", "--bound", "7"]);
    let b = with_ws("z_a3.yaml", &["spectrum", "--bound", "7"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn parse_errors_exit_with_one() {
    for (ws, code) in [("bad.yaml", "ERR Yaml:"), ("cyclic.yaml", "ERR CyclicQuiver:")] {
        let o = with_ws(ws, &["spectrum"]);
        assert_eq!(o.status.code(), Some(1));
        assert!(stderr(&o).starts_with(code), "{}", stderr(&o));
        assert_eq!(stderr(&o).lines().count(), 1);
    }
    let o = with_ws("z_a3.yaml", &["support", "Nope"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("ERR Parse:"));
    let o = pathtt(&["spectrum"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("ERR Usage:"));
    let o = pathtt(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(pathtt(&["--help"]).status.success());
}

#[test]
fn precondition_errors_exit_with_two() {
    let o = with_ws("zmod4.yaml", &["rigidity", "T"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("ERR NonRegularRing:"), "{}", stderr(&o));
    let o = with_ws("zmod4.yaml", &["support", "T"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("ERR NotPerfect:"), "{}", stderr(&o));
    // free vertex modules resolve fine even over Z/4
    assert_eq!(with_ws("zmod4.yaml", &["rigidity", "U1"]).status.code(), Some(0));
}

#[test]
fn exit_code_contract() {
    assert_eq!(CliError::VerifyFailed("x".into()).exit_code(), 3);
    assert_eq!(CliError::Core(Error::NotPerfect("x".into())).exit_code(), 2);
    assert_eq!(CliError::Core(Error::Parse("x".into())).exit_code(), 1);
    assert_eq!(CliError::Core(Error::NotAField("Z".into())).diagnostic(), "ERR NotAField: ring is not a field: Z");
}
