use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

use invdmod::json::{parse_connection, parse_monodromy_class, parse_rep_class};
use invdmod_cli::{run, EXIT_DOMAIN, EXIT_MALFORMED, EXIT_OK};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).to_string_lossy().into_owned()
}

/// Runs with `FILE` placeholders of the form `@name` resolved against `data/`.
fn invoke(args: &[&str]) -> (i32, Value) {
    let argv: Vec<String> = std::iter::once("invdmod".to_string())
        .chain(args.iter().map(|a| a.strip_prefix('@').map(data).unwrap_or_else(|| a.to_string())))
        .collect();
    let (code, out) = run(&argv);
    assert!(!out.contains('\n'), "report spans several lines: {out}");
    (code, serde_json::from_str(&out).unwrap_or_else(|e| panic!("not JSON ({e}): {out}")))
}

fn ok(args: &[&str]) -> Value {
    let (code, report) = invoke(args);
    assert_eq!(code, EXIT_OK, "{report}");
    assert_eq!(report["ok"], true);
    report["result"].clone()
}

fn failure(args: &[&str], expected_code: i32) -> Value {
    let (code, report) = invoke(args);
    assert_eq!(code, expected_code, "{report}");
    assert_eq!(report["ok"], false);
    assert!(report["error"]["message"].is_string());
    report
}

#[test]
fn center_examples() {
    assert_eq!(ok(&["center", "A1"]), serde_json::json!({"invariant_factors": [2]}));
    assert_eq!(ok(&["center", "D4"])["invariant_factors"], serde_json::json!([2, 2]));
    assert_eq!(ok(&["center", "E8"])["invariant_factors"], serde_json::json!([]));
    assert_eq!(ok(&["center", "A2", "A1"])["invariant_factors"], serde_json::json!([6]));
    assert_eq!(failure(&["center", "B1"], EXIT_DOMAIN)["error"]["kind"], "InvalidRank");
    assert_eq!(failure(&["center", "X3"], EXIT_MALFORMED)["error"]["kind"], "MalformedInput");
    failure(&["center"], EXIT_MALFORMED);
}

#[test]
fn classify_lists_classes_that_reparse() {
    let result = ok(&["classify", "--group", "@pgl2.json", "--rank", "1"]);
    assert_eq!(result["count"], 2);
    for class in result["classes"].as_array().unwrap() {
        parse_rep_class(&class.to_string()).unwrap();
    }
    assert_eq!(ok(&["classify", "--group", "@sl2.json", "--rank", "4"])["count"], 1);
    assert_eq!(ok(&["classify", "--group", "@pgl3.json", "--rank", "2"])["count"], 6);
    assert_eq!(failure(&["classify", "--group", "@pgl2.json", "--rank", "0"], EXIT_DOMAIN)["error"]["kind"], "ZeroRank");
    failure(&["classify", "--group", "@pgl2.json", "--rank", "-1"], EXIT_MALFORMED);
    failure(&["classify", "--group", "@no_such_file.json", "--rank", "1"], EXIT_MALFORMED);
    failure(&["classify", "--group", "@z2_sign.json", "--rank", "1"], EXIT_MALFORMED);
}

#[test]
fn torus_equivalence() {
    let same = ok(&["equiv", "--a", "@gm_half.json", "--b", "@gm_three_halves.json"]);
    assert_eq!(same["verdict"], "equivalent");
    parse_monodromy_class(&same["class_a"].to_string()).unwrap();
    let different = ok(&["equiv", "--a", "@gm_half.json", "--b", "@gm_third.json"]);
    assert_eq!(different["verdict"], "inequivalent");
}

#[test]
fn glr_equivalence() {
    let result = ok(&["glr-equiv", "--a", "@glr2_a1_k0.json", "--b", "@glr2_a0_k1.json"]);
    assert_eq!(result["equivalent"], true);
    parse_connection(&result["gm_a"].to_string()).unwrap();
    let result = ok(&["glr-equiv", "--a", "@glr2_a1_k0.json", "--b", "@glr2_a0_k0.json"]);
    assert_eq!(result["equivalent"], false);
}

#[test]
fn cohomology_of_pgl2() {
    let sign = ok(&["cohomology", "--group", "@pgl2.json", "--rep", "@z2_sign.json"]);
    assert_eq!(sign["poincare"], serde_json::json!([1, 0, 0, 1]));
    assert_eq!(sign["betti"], serde_json::json!([0, 0, 0, 0]));
    let both = ok(&["cohomology", "--group", "@pgl2.json", "--rep", "@z2_trivial_plus_sign.json"]);
    assert_eq!(both["betti"], serde_json::json!([1, 0, 0, 1]));
    assert_eq!(
        failure(&["cohomology", "--group", "@sl2.json", "--rep", "@z2_sign.json"], EXIT_DOMAIN)["error"]["kind"],
        "GroupMismatch"
    );
}

#[test]
fn tensor_and_mu_der() {
    let square = ok(&["tensor", "--a", "@z2_sign.json", "--b", "@z2_sign.json"]);
    let v = parse_rep_class(&square.to_string()).unwrap();
    assert!(v.is_trivial());
    let result = ok(&["mu-der", "--class", "@gm_x_pgl2_sign.json"]);
    assert_eq!(result["in_ab_image"], false);
    parse_rep_class(&result["mu_der"].to_string()).unwrap();
}

#[test]
fn verification_subcommands() {
    for r in ["1", "2", "3"] {
        assert_eq!(ok(&["verify", "mc", "--r", r])["check"], "maurer_cartan");
        assert_eq!(ok(&["verify", "tracedet", "--r", r])["check"], "trace_dlogdet");
    }
    assert_eq!(failure(&["verify", "mc", "--r", "4"], EXIT_DOMAIN)["error"]["kind"], "UnsupportedRank");

    ok(&["verify", "gauge", "--x", "@gauge_t.json", "--alpha", "@gm_three_halves.json", "--beta", "@gm_half.json"]);
    let mismatch =
        failure(&["verify", "gauge", "--x", "@gauge_t.json", "--alpha", "@gm_half.json", "--beta", "@gm_half.json"], EXIT_DOMAIN);
    assert_eq!(mismatch["error"]["kind"], "GaugeMismatch");
    assert_eq!(mismatch["result"]["entry"], serde_json::json!([0, 0]));

    ok(&["verify", "liehom", "--algebra", "sl_2", "--rep", "@sl2_standard.json"]);
    let violation = failure(&["verify", "liehom", "--algebra", "sl_2", "--rep", "@sl2_perturbed.json"], EXIT_DOMAIN);
    // ρ(e) + I still brackets correctly with f, so the first failure is against h
    assert_eq!(violation["result"]["violation"], serde_json::json!([0, 2]));
    assert_eq!(
        failure(&["verify", "liehom", "--algebra", "so_3", "--rep", "@sl2_standard.json"], EXIT_DOMAIN)["error"]["kind"],
        "UnknownAlgebra"
    );
}

#[test]
fn usage_errors_are_malformed_input() {
    failure(&["frobnicate"], EXIT_MALFORMED);
    failure(&["verify"], EXIT_MALFORMED);
    failure(&["verify", "mc"], EXIT_MALFORMED);
    failure(&["equiv", "--a", "@gm_half.json"], EXIT_MALFORMED);
    let (code, text) = run(["invdmod", "--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(text.contains("classify"));
}

#[test]
fn output_is_deterministic() {
    let args = ["invdmod", "classify", "--group", &data("pgl3.json"), "--rank", "3"];
    assert_eq!(run(args), run(args));
}

#[test]
fn binary_honours_the_degree_limit() {
    let bin = env!("CARGO_BIN_EXE_invdmod");
    let out = Command::new(bin).args(["verify", "mc", "--r", "3"]).env("INVDMOD_MAX_DEGREE", "2").output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_DOMAIN));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["error"]["kind"], "DegreeLimitExceeded");

    let out = Command::new(bin).args(["verify", "mc", "--r", "2"]).env("INVDMOD_MAX_DEGREE", "lots").output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_MALFORMED));

    let out = Command::new(bin).args(["center", "A3"]).env_remove("INVDMOD_MAX_DEGREE").output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), r#"{"ok":true,"result":{"invariant_factors":[4]}}"#);
}
