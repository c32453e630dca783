//! Acceptance for the command-line workbench: the shipped fixture
//! documents parse and run clean, the exports are well formed, reports
//! validate against the shipped schema, the gate and failure exit codes
//! fire where they must, and parsing is the inverse of canonical printing.

use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn dualis(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dualis")).args(args).output().expect("binary runs")
}

/// Hand-rolled validation against the shipped report schema: required keys
/// with the right JSON types, recursively.
fn validate_report(value: &Value) {
    let obj = value.as_object().expect("report is an object");
    assert!(obj.contains_key("suite") && obj.contains_key("fixtures") && obj.contains_key("summary"));
    assert!(obj["suite"].is_string() || obj["suite"].is_null());
    assert!(obj["summary"].is_object());
    for fix in obj["fixtures"].as_array().expect("fixtures is an array") {
        let fix = fix.as_object().expect("fixture is an object");
        assert!(fix["name"].is_string());
        for check in fix["checks"].as_array().expect("checks is an array") {
            let check = check.as_object().expect("check is an object");
            assert!(check["id"].is_string());
            assert!(check["paper_ref"].is_string());
            assert!(check["instances"].is_u64());
            assert!(check["failures"].as_array().unwrap().iter().all(Value::is_string));
        }
    }
    // the shipped schema file stays in sync with these expectations
    let schema: Value = serde_json::from_str(
        &std::fs::read_to_string(fixture("report.schema.json")).expect("schema present"),
    )
    .expect("schema is JSON");
    for key in ["suite", "fixtures", "summary"] {
        assert!(schema["properties"].get(key).is_some(), "schema lost key {key}");
    }
}

#[test]
fn acceptance_9_cli_round_trip() {
    // every shipped positive document runs its default suite cleanly
    for doc in ["m4.duals", "positive.duals", "hilbert.duals", "heyting.duals"] {
        let json_out = std::env::temp_dir().join(format!("dualis-accept-{doc}.json"));
        let out = dualis(&[
            "check",
            fixture(doc).to_str().unwrap(),
            "--suite",
            "full-duality",
            "--json",
            json_out.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0), "{doc}: {}", String::from_utf8_lossy(&out.stderr));
        let report: Value =
            serde_json::from_str(&std::fs::read_to_string(&json_out).unwrap()).unwrap();
        validate_report(&report);
        assert_eq!(report["summary"]["failures"], 0, "{doc} reported failures");
        std::fs::remove_file(json_out).ok();
    }

    // DOT exports: the diamond has four nodes and four covering edges; its
    // dual has two isolated designated points
    let dot_m4 = std::env::temp_dir().join("dualis-accept-m4.dot");
    let dot_dual = std::env::temp_dir().join("dualis-accept-m4-dual.dot");
    let out = dualis(&[
        "check",
        fixture("m4.duals").to_str().unwrap(),
        "--suite",
        "full-duality",
        "--json",
        "/dev/null",
        "--dot",
        &format!("M4={}", dot_m4.display()),
        "--dot",
        &format!("dual:M4={}", dot_dual.display()),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let m4_text = std::fs::read_to_string(&dot_m4).unwrap();
    assert!(m4_text.starts_with("digraph"));
    assert_eq!(m4_text.matches("[shape=circle]").count(), 4);
    assert_eq!(m4_text.matches(" -> ").count(), 4);
    let dual_text = std::fs::read_to_string(&dot_dual).unwrap();
    assert_eq!(dual_text.matches("[shape=doublecircle]").count(), 2);
    assert_eq!(dual_text.matches(" -> ").count(), 0);
    std::fs::remove_file(dot_m4).ok();
    std::fs::remove_file(dot_dual).ok();

    // JSON export of the dual of the two-element implication algebra
    let out = dualis(&[
        "dualize",
        fixture("hilbert.duals").to_str().unwrap(),
        "--algebra",
        "H2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let dual: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(dual["carrier"], 1);
    assert_eq!(dual["family"].as_array().unwrap().len(), 2);
    assert_eq!(dual["ops"][0]["name"], "imp");
    assert_eq!(dual["ops"][0]["table"].as_array().unwrap().len(), 4);

    // parse∘print is the identity on canonical documents
    for doc in ["m4.duals", "positive.duals", "hilbert.duals", "heyting.duals", "lmeet.duals"] {
        let first = dualis(&["fmt", fixture(doc).to_str().unwrap()]);
        assert_eq!(first.status.code(), Some(0));
        let canonical = String::from_utf8(first.stdout).unwrap();
        let tmp = std::env::temp_dir().join(format!("dualis-canon-{doc}"));
        std::fs::write(&tmp, &canonical).unwrap();
        let second = dualis(&["fmt", tmp.to_str().unwrap()]);
        assert_eq!(String::from_utf8(second.stdout).unwrap(), canonical, "{doc} not canonical-stable");
        std::fs::remove_file(tmp).ok();
    }

    println!("acceptance 9 (CLI round trip, exports, canonical printing): PASS");
}

#[test]
fn acceptance_8_cli_gate_and_exit_codes() {
    // dualization under the theorem-free logic exits with the gate code
    // and a machine-readable reason
    let out = dualis(&[
        "check",
        fixture("lmeet.duals").to_str().unwrap(),
        "--suite",
        "full-duality",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let payload: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(payload["summary"]["outcome"], "gate");
    assert!(payload["summary"]["reason"]
        .as_str()
        .unwrap()
        .contains("theorems required"));

    // the theorem-free checks themselves pass
    let out = dualis(&[
        "check",
        fixture("lmeet.duals").to_str().unwrap(),
        "--suite",
        "theorem-free",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));

    // the corrupted space fails verification with the closure axiom named
    let out = dualis(&[
        "check",
        fixture("corrupted.duals").to_str().unwrap(),
        "--suite",
        "negative",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    validate_report(&report);
    let failing: Vec<&str> = report["fixtures"][0]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| !c["failures"].as_array().unwrap().is_empty())
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    assert!(failing.contains(&"up-sets-from-family"), "failing checks: {failing:?}");
    assert!(failing.contains(&"family-of-up-sets-with-top"));

    // parse errors exit with code 3 and carry a position
    let bad = std::env::temp_dir().join("dualis-accept-bad.duals");
    std::fs::write(&bad, "algebra Broken { elements: x y; op and/2 { x }; }").unwrap();
    let out = dualis(&["check", bad.to_str().unwrap(), "--suite", "anything"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error"));
    std::fs::remove_file(bad).ok();

    // unknown suite is a usage error
    let out = dualis(&[
        "check",
        fixture("m4.duals").to_str().unwrap(),
        "--suite",
        "no-such-suite",
    ]);
    assert_eq!(out.status.code(), Some(2));

    println!("acceptance 8-cli (gate, failure, and parse exit codes): PASS");
}

#[test]
fn reports_are_bit_stable_across_runs() {
    let doc = fixture("m4.duals");
    let args = ["check", doc.to_str().unwrap(), "--suite", "full-duality"];
    let first = dualis(&args);
    let second = dualis(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout, "report output changed between runs");
}

#[test]
fn dualize_is_gated_for_theorem_free_logics() {
    let out = dualis(&[
        "dualize",
        fixture("lmeet.duals").to_str().unwrap(),
        "--algebra",
        "C2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("theorems required"));
}

#[test]
fn carrier_caps_are_enforced() {
    // explicit flag
    let out = dualis(&[
        "check",
        fixture("m4.duals").to_str().unwrap(),
        "--suite",
        "full-duality",
        "--max-size",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("larger than the cap"));
    // environment override
    let out = Command::new(env!("CARGO_BIN_EXE_dualis"))
        .args(["check", fixture("m4.duals").to_str().unwrap(), "--suite", "full-duality"])
        .env("DUALIS_MAX_CARRIER", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("larger than the cap 3"));
}

#[test]
fn enumerate_sweep_runs_clean_at_size_four() {
    // the full size-5 sweep is covered by the library acceptance suite;
    // here the CLI path is exercised one size down to stay quick
    let out = dualis(&["enumerate", "--semilattices", "--max", "4", "--run", "all"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("n=4: posets=219 semilattices=36 distributive=36"));
    assert!(stdout.contains("sweep: pass"));
}
