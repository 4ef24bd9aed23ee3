use std::process::{Command, Output};

fn ortholog(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ortholog"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .env_remove("ORTHOLOG_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn validate_reports_properties() {
    let o = ortholog(&["validate", "fixtures/o6.json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "ok: O6 has 6 elements, distributive: no, orthomodular: no\n");
}

#[test]
fn invalid_spec_is_a_usage_error() {
    let o = ortholog(&["validate", "fixtures/n5_bad.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error: "));
}

#[test]
fn universal_summary_line() {
    let o = ortholog(&["universal", "fixtures/mo2.json", "--kappa", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("carrier=6, iso-to-input: yes, distributive: no\n"));
}

#[test]
fn carrier_limit_exits_2() {
    let o = ortholog(&["universal", "fixtures/b3.json", "--kappa", "3", "--limit-carrier", "100"]);
    assert_eq!(o.status.code(), Some(2));
    let o = ortholog(&["universal", "fixtures/mo3.json", "--kappa", "4", "--limit-poset", "100"]);
    assert_eq!(o.status.code(), Some(2));
    let o = ortholog(&["universal", "fixtures/b2.json", "--kappa", "9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("product carrier would have 19684 elements"));
}

#[test]
fn universal_json_and_dot() {
    let o = ortholog(&["universal", "fixtures/b2.json", "--kappa", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["carrier_size"], 16);
    assert_eq!(v["distributive"], true);
    let o = ortholog(&["universal", "fixtures/mo2.json", "--format", "dot"]);
    assert!(stdout(&o).starts_with("digraph"));
}

#[test]
fn tensor_with_target() {
    let o = ortholog(&["tensor", "fixtures/b2.json", "fixtures/b2.json", "--target", "fixtures/b2xb2_to_b4.json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("{(a,1)} -> ab"));
    assert!(out.contains("{(1,a')} -> bd"));
}

#[test]
fn classical_and_completion() {
    let o = ortholog(&["classical", "--ground", "2", "--kappa", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("ground=2, kappa=2: points=4, algebra=16, logic=16"));
    let o = ortholog(&["completion", "fixtures/mo3.json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("completion of MO3: carrier=8, iso-to-input: yes"));
}

#[test]
fn eval_expressions() {
    let o = ortholog(&["eval", "--logic", "fixtures/b2.json", "--kappa", "2", "-e", "star((a,1) | (1,a))"]);
    assert_eq!(stdout(&o), "{(a',a')}\n");
    let o = ortholog(&["eval", "--logic", "fixtures/b2.json", "--logic", "fixtures/mo2.json", "-e", "(a,p) & (1,p')"]);
    assert_eq!(stdout(&o), "{bottom}\n");
    let o = ortholog(&["eval", "--logic", "fixtures/b2.json", "-e", "star(a"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("1:7"));
}

#[test]
fn seed_from_environment() {
    let a = ortholog(&["check", "--suite", "s6", "--seed", "9", "--format", "json"]);
    let b = Command::new(env!("CARGO_BIN_EXE_ortholog"))
        .args(["check", "--suite", "s6", "--format", "json"])
        .env("ORTHOLOG_SEED", "9")
        .output()
        .unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
