//! End-to-end tests against the compiled binary: envelope shape, exit
//! codes, format variants, and byte-level determinism.

use serde_json::Value;
use std::process::Command;

fn run(args: &[&str]) -> (Option<i32>, String, String) {
    run_with_env(args, &[])
}

fn run_with_env(args: &[&str], envs: &[(&str, &str)]) -> (Option<i32>, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_fusioncat"));
    cmd.args(args);
    for (key, value) in envs {
        cmd.env(key, value);
    }
    let out = cmd.output().expect("binary runs");
    (
        out.status.code(),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

fn parse(stdout: &str) -> Value {
    serde_json::from_str(stdout).expect("valid json envelope")
}

fn approx_str<'a>(value: &'a Value) -> &'a str {
    value["approx"]["value"].as_str().expect("approx value")
}

#[test]
fn global_dim_brute_oracle_passes() {
    let (code, out, _) = run(&[
        "global-dim",
        "--type",
        "A",
        "--rank",
        "1",
        "--level",
        "2",
        "--brute-force",
    ]);
    assert_eq!(code, Some(0));
    let env = parse(&out);
    assert_eq!(env["command"], "global-dim");
    assert_eq!(env["precision_bits"], 128);
    assert!(approx_str(&env["results"]["global_dim"]).starts_with("4.0000000000"));
    assert!(approx_str(&env["results"]["brute_force"]).starts_with("4.0000000000"));
    assert_eq!(env["checks"][0]["name"], "brute-vs-closed");
    assert_eq!(env["checks"][0]["status"], "pass");
}

#[test]
fn global_dim_g2_level_one() {
    let (code, out, _) = run(&["global-dim", "--type", "G2", "--level", "1"]);
    assert_eq!(code, Some(0));
    let env = parse(&out);
    // (5 + sqrt 5) / 2
    assert!(approx_str(&env["results"]["global_dim"]).starts_with("3.6180339887498948"));
}

#[test]
fn invalid_rank_is_usage_error() {
    let (code, _, err) = run(&["global-dim", "--type", "A", "--rank", "0", "--level", "2"]);
    assert_eq!(code, Some(2));
    assert!(err.contains("rank"));
}

#[test]
fn alcove_guard_is_resource_error() {
    let (code, _, err) = run(&[
        "global-dim",
        "--type",
        "A",
        "--rank",
        "6",
        "--level",
        "8",
        "--brute-force",
        "--max-objects",
        "10",
    ]);
    assert_eq!(code, Some(3));
    assert!(err.contains("error"));
}

#[test]
fn malformed_weight_is_usage_error() {
    let (code, _, _) = run(&[
        "quiver", "--type", "A", "--rank", "3", "--weight", "1,2",
    ]);
    assert_eq!(code, Some(2));
    let (code, _, _) = run(&[
        "quiver", "--type", "A", "--rank", "3", "--weight", "1,x,3",
    ]);
    assert_eq!(code, Some(2));
}

#[test]
fn quiver_json_contains_printed_instance() {
    let (code, out, _) = run(&["quiver", "--type", "E6", "--weight", "rho", "--half"]);
    assert_eq!(code, Some(0));
    let env = parse(&out);
    assert_eq!(env["results"]["type"], "E6");
    let entries = env["results"]["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 36);
    let find = |n: u64, b: u64| -> &str {
        entries
            .iter()
            .find(|e| e[0] == n && e[1] == b)
            .map(|e| e[2].as_str().unwrap())
            .expect("entry present")
    };
    assert_eq!(find(7, 3), "11");
    assert_eq!(find(9, 3), "9");
    assert_eq!(find(8, 6), "6");
}

#[test]
fn quiver_csv_tables() {
    let (code, out, _) = run(&[
        "quiver", "--type", "A", "--rank", "1", "--weight", "rho", "--half", "--format", "csv",
    ]);
    assert_eq!(code, Some(0));
    assert_eq!(out, "1\n");

    let (code, out, _) = run(&[
        "quiver", "--type", "G2", "--weight", "rho", "--half", "--scaled", "--format", "csv",
    ]);
    assert_eq!(code, Some(0));
    assert_eq!(out, "1,\n,4/3\n3,\n,5/3\n2,\n,1/3\n");
}

#[test]
fn quiver_dot_roots() {
    let (code, out, _) = run(&["quiver", "--type", "E6", "--roots", "--format", "dot"]);
    assert_eq!(code, Some(0));
    assert!(out.starts_with("digraph quiver {"));
    assert!(out.contains("\"n1b1\" [label=\"a1\"]"));
    assert!(out.contains("[label=\"a1+a2+a3\"]"));
    assert!(out.contains("\"n1b1\" -> \"n2b2\""));
    assert!(out.trim_end().ends_with('}'));
}

#[test]
fn verify_suites_pass() {
    for suite in ["quiver", "dims", "embeddings"] {
        let (code, out, _) = run(&["verify", "--suite", suite, "--max-rank", "5"]);
        assert_eq!(code, Some(0), "suite {suite}");
        let env = parse(&out);
        assert_eq!(env["results"]["failed"], 0);
        for check in env["checks"].as_array().unwrap() {
            assert_eq!(check["status"], "pass", "{}", check["name"]);
        }
    }
}

#[test]
fn identical_invocations_are_byte_identical() {
    let (_, first, _) = run(&["verify", "--suite", "embeddings"]);
    let (_, second, _) = run(&["verify", "--suite", "embeddings"]);
    assert!(!first.is_empty());
    assert_eq!(first, second);
}

#[test]
fn precision_env_and_flag() {
    let (code, out, _) = run_with_env(
        &["global-dim", "--type", "A", "--rank", "1", "--level", "3"],
        &[("FUSIONCAT_PREC", "64")],
    );
    assert_eq!(code, Some(0));
    let env = parse(&out);
    assert_eq!(env["precision_bits"], 64);
    // 64 bits -> 16 significant digits.
    assert_eq!(approx_str(&env["results"]["global_dim"]), "7.236067977499790");

    let (_, out, _) = run_with_env(
        &[
            "global-dim", "--type", "A", "--rank", "1", "--level", "3", "--prec", "96",
        ],
        &[("FUSIONCAT_PREC", "64")],
    );
    assert_eq!(parse(&out)["precision_bits"], 96);
}

#[test]
fn classical_denominator_is_exact() {
    let (code, out, _) = run(&["denominator", "--type", "B", "--rank", "3"]);
    assert_eq!(code, Some(0));
    let env = parse(&out);
    for key in ["quiver_route", "root_route", "superfactorial"] {
        assert_eq!(env["results"][key]["exact"], "90", "{key}");
    }
    assert_eq!(env["results"]["fusion_product_squared"]["exact"], "8100");
    assert_eq!(env["checks"][0]["status"], "pass");
}

#[test]
fn quantum_denominator_routes_agree() {
    let (code, out, _) = run(&["denominator", "--type", "F4", "--level", "3"]);
    assert_eq!(code, Some(0));
    let env = parse(&out);
    assert_eq!(env["checks"][0]["name"], "route-agreement");
    assert_eq!(env["checks"][0]["status"], "pass");
}

#[test]
fn superfactorial_reports_arguments() {
    let (code, out, _) = run(&["superfactorial", "--type", "C", "--rank", "2"]);
    assert_eq!(code, Some(0));
    let env = parse(&out);
    let args: Vec<&str> = env["results"]["arguments"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(args, ["1/2", "1", "3/2", "2"]);
    assert_eq!(env["results"]["value"]["exact"], "3/2");
}

#[test]
fn zeta_closed_form_evidence() {
    let (code, out, _) = run(&[
        "zeta", "--type", "A", "--rank", "1", "--level", "5", "--s", "-4",
    ]);
    assert_eq!(code, Some(0));
    let env = parse(&out);
    assert_eq!(env["checks"][0]["name"], "closed-form-evidence");
    assert_eq!(env["checks"][0]["status"], "pass");
    assert_eq!(
        approx_str(&env["results"]["zeta"]),
        approx_str(&env["results"]["conjectured_closed_form"])
    );
}

#[test]
fn level_rank_symmetry_holds() {
    let (code, out, _) = run(&["level-rank", "--n", "3", "--k", "4"]);
    assert_eq!(code, Some(0));
    let env = parse(&out);
    assert_eq!(env["checks"][0]["status"], "pass");
    assert_eq!(
        approx_str(&env["results"]["k_times_dim"]),
        approx_str(&env["results"]["n_times_dual_dim"])
    );
}

#[test]
fn asymptote_ratio_near_one_at_large_level() {
    let (code, out, _) = run(&[
        "asymptote", "--type", "A", "--rank", "2", "--level", "10000",
    ]);
    assert_eq!(code, Some(0));
    let env = parse(&out);
    assert!(approx_str(&env["results"]["ratio"]).starts_with("1.0000"));
}

#[test]
fn embeddings_list_and_dim() {
    let (code, out, _) = run(&["embeddings", "list"]);
    assert_eq!(code, Some(0));
    let env = parse(&out);
    let count = env["results"]["count"].as_u64().unwrap();
    assert!(count >= 30);
    assert_eq!(env["checks"][0]["status"], "pass");
    for rec in env["results"]["records"].as_array().unwrap() {
        assert_eq!(rec["conformal"], true);
    }

    // Record 0 is the rank-one symmetric embedding; its module has
    // global dimension six.
    let (code, out, _) = run(&["embeddings", "dim", "--index", "0"]);
    assert_eq!(code, Some(0));
    let env = parse(&out);
    assert_eq!(env["results"]["record"]["tag"], "symmetric");
    assert!(approx_str(&env["results"]["module_global_dim"]).starts_with("6.00000000000"));

    let (code, _, _) = run(&["embeddings", "dim", "--index", "9999"]);
    assert_eq!(code, Some(2));
}

#[test]
fn embeddings_catalog_file() {
    let dir = std::env::temp_dir().join("fusioncat-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("catalog.json");
    std::fs::write(
        &path,
        r#"[{"inner": [{"family": "A", "rank": 1, "level": 10}],
            "outer": {"family": "B", "rank": 2},
            "tag": "sporadic"}]"#,
    )
    .unwrap();
    let path_str = path.to_str().unwrap();
    let (code, out, _) = run(&["embeddings", "list", "--catalog", path_str]);
    assert_eq!(code, Some(0));
    let env = parse(&out);
    assert_eq!(env["results"]["count"], 1);
    assert_eq!(env["results"]["records"][0]["conformal"], true);

    let bad = dir.join("bad.json");
    std::fs::write(&bad, "not json").unwrap();
    let (code, _, _) = run(&["embeddings", "list", "--catalog", bad.to_str().unwrap()]);
    assert_eq!(code, Some(2));
}

#[test]
fn smatrix_modular_consistency() {
    let (code, out, _) = run(&["s-matrix", "--type", "A", "--rank", "1", "--level", "2"]);
    assert_eq!(code, Some(0));
    let env = parse(&out);
    assert_eq!(env["results"]["size"], 3);
    assert_eq!(env["checks"][0]["name"], "modular-consistency");
    assert_eq!(env["checks"][0]["status"], "pass");

    let (code, _, _) = run(&["s-matrix", "--type", "B", "--rank", "2", "--level", "1"]);
    assert_eq!(code, Some(2));
}
