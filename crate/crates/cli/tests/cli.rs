use std::process::Command;

use cyclebreak_cli::{run, Outcome, MAX_GROUND_ENV};

fn cmd(args: &[&str]) -> Outcome {
    run(std::iter::once("cyclebreak").chain(args.iter().copied()))
}

fn inverse_of(map: &str) -> &str {
    match map {
        "phi" => "phi-inv",
        "phi-inv" => "phi",
        "psi" => "psi-inv",
        "psi-inv" => "psi",
        "break" => "merge",
        "merge" => "break",
        other => other,
    }
}

struct GoldenRow<'a> {
    map: &'a str,
    n: &'a str,
    pair: Option<&'a str>,
    input: &'a str,
    output: &'a str,
}

fn golden_rows() -> Vec<GoldenRow<'static>> {
    include_str!("golden/apply.txt")
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let f: Vec<&str> = l.split(" | ").collect();
            GoldenRow {
                map: f[0],
                n: f[1],
                pair: (f[2] != "-").then_some(f[2]),
                input: f[3],
                output: f[4],
            }
        })
        .collect()
}

fn apply(map: &str, n: &str, pair: Option<&str>, perm: &str) -> Outcome {
    let mut args = vec!["apply", "--map", map, "--n", n, "--perm", perm];
    if let Some(pair) = pair {
        args.extend(["--pair", pair]);
    }
    cmd(&args)
}

#[test]
fn golden_apply_and_inverse_round_trip() {
    let rows = golden_rows();
    assert!(rows.len() >= 10);
    for row in rows {
        let fwd = apply(row.map, row.n, row.pair, row.input);
        assert_eq!(fwd.code, 0, "{}: {}", row.map, fwd.stderr);
        assert_eq!(fwd.stdout.trim_end(), row.output, "{} {}", row.map, row.input);
        let back = apply(inverse_of(row.map), row.n, row.pair, row.output);
        assert_eq!(back.code, 0, "{}", back.stderr);
        assert_eq!(
            back.stdout.trim_end(),
            row.input,
            "inverse of {} on {}",
            row.map,
            row.output
        );
    }
}

#[test]
fn apply_examples_and_exit_codes() {
    let out = cmd(&["apply", "--map", "phi", "--perm", "(1 2 3)(4)", "--n", "4"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "(1 3 2 4)\n"));

    let out = cmd(&["apply", "--map", "phi", "--perm", "(1 2)", "--n", "2"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("NOT_ALL_ODD"), "{}", out.stderr);
    assert!(out.stdout.is_empty());

    let out = cmd(&["apply", "--map", "phi", "--perm", "(1 2", "--n", "2"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("PARSE_ERROR"));

    let out = cmd(&["apply", "--map", "rotate", "--perm", "(1 2)", "--n", "2"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("UNKNOWN_MAP"));

    let out = cmd(&["apply", "--map", "break", "--perm", "(1 2)", "--n", "2"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("--pair"));

    let out = cmd(&["apply", "--map", "phi"]);
    assert_eq!(out.code, 2);
    let out = cmd(&["apply", "--map", "phi", "--perm", "()", "--n", "2", "--ground", "1,2"]);
    assert_eq!(out.code, 2);
}

#[test]
fn apply_formats() {
    let out = cmd(&[
        "apply",
        "--map",
        "phi",
        "--perm",
        "(1 2 3)(4)",
        "--n",
        "4",
        "--format",
        "oneline",
    ]);
    assert_eq!(out.stdout, "[3,4,2,1]\n");
    let out = cmd(&["apply", "--map", "psi", "--perm", "()", "--n", "6", "--hide-fixed"]);
    assert_eq!(out.stdout, "(1 2)(3 4)(5 6)\n");
    let out = cmd(&["apply", "--map", "phi", "--perm", "()", "--n", "4", "--hide-fixed"]);
    assert_eq!(out.stdout, "(1 2)\n");
    let out = cmd(&["apply", "--map", "phi", "--perm", "(1 2 3)(4)", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["output"], "(1 3 2 4)");
    assert_eq!(v["one_line"], serde_json::json!([3, 4, 2, 1]));
}

#[test]
fn apply_on_explicit_ground() {
    let out = cmd(&["apply", "--map", "phi", "--perm", "(2 5 7)", "--ground", "2,5,7,9"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "(2 7 5 9)\n"));
    let out = cmd(&["apply", "--map", "phi", "--perm", "(1 5 7)", "--ground", "2,5,7,9"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("ELEMENT_OUT_OF_GROUND"));
}

#[test]
fn trace_replays_to_apply_output() {
    for (map, perm, n) in [
        ("phi", "(1 2 3)(4)", "4"),
        ("phi", "(1 2 3 4 5)(6)", "6"),
        ("phi", "(1 5 2 7 3)(4)(6)(8)", "8"),
        ("psi", "(1 2 3)(4 5 6)(7)(8)", "8"),
        ("psi", "()", "6"),
        ("psi-inv", "(1 3 2 4 5 6)(7 8)", "8"),
    ] {
        let applied = cmd(&["apply", "--map", map, "--perm", perm, "--n", n]);
        let traced = cmd(&["trace", "--map", map, "--perm", perm, "--n", n, "--format", "json"]);
        assert_eq!(traced.code, 0, "{}", traced.stderr);
        let v: serde_json::Value = serde_json::from_str(&traced.stdout).unwrap();
        assert_eq!(v["result"].as_str().unwrap(), applied.stdout.trim_end());
        let steps = v["steps"].as_array().unwrap();
        assert!(!steps.is_empty());
        if map == "phi" || map == "psi-inv" {
            assert_eq!(steps.last().unwrap()["after"], v["result"]);
        }
    }
}

#[test]
fn trace_text_shape() {
    let out = cmd(&["trace", "--map", "phi", "--perm", "(1 2 3)(4)", "--n", "4"]);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(
        lines,
        vec![
            "[0] BREAK_TO_P_SPLIT: (1 2 3)(4) -> (1)(2 3)(4)",
            "[0] U_BRANCH_SWAP: (1)(2 3)(4) -> (1 3)(2)(4)",
            "  [1] RECURSE: (2)(4) -> (2 4)",
            "  [1] BASE: (2)(4) -> (2 4)",
            "[0] FINAL_MERGE: (1 3)(2 4) -> (1 3 2 4)",
            "result: (1 3 2 4)",
        ]
    );
    let out = cmd(&["trace", "--map", "psi", "--perm", "()", "--n", "4"]);
    assert_eq!(out.stdout.matches("PEEL").count(), 2);
    let out = cmd(&["trace", "--map", "ps", "--perm", "(1 2)", "--n", "2"]);
    assert_eq!(out.code, 2);
}

#[test]
fn enumerate_and_count() {
    let out = cmd(&["enumerate", "--class", "ALL_ODD", "--n", "4"]);
    assert_eq!(out.stdout.lines().count(), 9);
    assert_eq!(out.stdout.lines().next(), Some("(1)(2)(3)(4)"));
    let out = cmd(&["enumerate", "--class", "P", "--n", "4", "--format", "json"]);
    let v: Vec<String> = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v.len(), 9);

    let out = cmd(&["count", "--class", "ALL_EVEN", "--n", "6"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("enumerated: 225\nexpected: 225\nmatch: true"));
    let out = cmd(&["count", "--class", "SAME_CYCLE_E1E2", "--n", "5"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("enumerated: 60") && !out.stdout.contains("expected"));
    let out = cmd(&["count", "--class", "ALL_ODD", "--n", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["enumerated"], 45);
    assert_eq!(v["matches"], true);

    let out = cmd(&["count", "--class", "Z", "--n", "4"]);
    assert_eq!(out.code, 2);
    let out = cmd(&["count", "--class", "P"]);
    assert_eq!(out.code, 2);
}

#[test]
fn verify_json_schema_and_stability() {
    let args = ["verify", "--map", "psi", "--n", "6", "--format", "json"];
    let first = cmd(&args);
    assert_eq!(first.code, 0);
    assert_eq!(first, cmd(&args));
    let v: serde_json::Value = serde_json::from_str(&first.stdout).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    let expected_keys = [
        "map",
        "ground_size",
        "domain_class",
        "codomain_class",
        "domain_count",
        "codomain_count",
        "image_count",
        "bijective",
        "round_trip_ok",
        "counterexamples",
    ];
    // Object key order as written, not as sorted by serde_json::Map.
    let positions: Vec<usize> = expected_keys
        .iter()
        .map(|k| first.stdout.find(&format!("\"{k}\"")).unwrap())
        .collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "{}", first.stdout);
    assert_eq!(keys.len(), expected_keys.len());
    assert_eq!(v["domain_count"], 225);
    assert_eq!(v["bijective"], true);
    assert_eq!(v["counterexamples"], serde_json::json!([]));
}

#[test]
fn verify_is_identical_for_any_job_count() {
    for map in ["phi", "psi", "ps"] {
        let base = cmd(&["verify", "--map", map, "--n", "6", "--format", "json"]);
        assert_eq!(base.code, 0, "{}", base.stderr);
        for jobs in ["2", "3", "8"] {
            let par = cmd(&["verify", "--map", map, "--n", "6", "--format", "json", "--jobs", jobs]);
            assert_eq!(par, base, "{map} with {jobs} jobs");
        }
    }
}

#[test]
fn verify_rejections() {
    let out = cmd(&["verify", "--map", "phi", "--n", "5"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("ODD_GROUND_SIZE"));
    let out = cmd(&["verify", "--map", "phi", "--n", "12"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("GROUND_TOO_LARGE"));
    let out = cmd(&["verify", "--map", "phi", "--n", "6", "--max-ground", "4"]);
    assert_eq!(out.code, 2);
    let out = cmd(&["verify", "--map", "chi", "--n", "4"]);
    assert!(out.stderr.contains("UNKNOWN_MAP"));
    let out = cmd(&["verify", "--map", "phi"]);
    assert_eq!(out.code, 2);
    let out = cmd(&["verify", "--map", "phi", "--n", "4", "--jobs", "0"]);
    assert_eq!(out.code, 2);
}

#[test]
fn roundtrip_command() {
    let out = cmd(&[
        "roundtrip",
        "--map",
        "psi",
        "--n",
        "50",
        "--seed",
        "7",
        "--samples",
        "200",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("failures: 0"));
    let out = cmd(&[
        "roundtrip",
        "--map",
        "ps",
        "--ground",
        "3,9,27,81,243",
        "--seed",
        "1",
        "--samples",
        "50",
    ]);
    assert_eq!(out.code, 0);
    let out = cmd(&["roundtrip", "--map", "phi", "--n", "7", "--seed", "1", "--samples", "5"]);
    assert_eq!(out.code, 2);
    let out = cmd(&["roundtrip", "--map", "phi", "--n", "8", "--samples", "5"]);
    assert_eq!(out.code, 2);
}

#[test]
fn help_exits_zero() {
    let out = cmd(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("verify"));
}

#[test]
fn binary_honours_safety_bound_env() {
    let bin = env!("CARGO_BIN_EXE_cyclebreak");
    let out = Command::new(bin)
        .args(["count", "--class", "ALL_ODD", "--n", "4"])
        .env(MAX_GROUND_ENV, "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("GROUND_TOO_LARGE"));

    let out = Command::new(bin)
        .args(["count", "--class", "ALL_ODD", "--n", "4", "--max-ground", "4"])
        .env(MAX_GROUND_ENV, "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    let out = Command::new(bin)
        .args(["apply", "--map", "phi", "--perm", "(1 2 3)(4)", "--n", "4"])
        .env_remove(MAX_GROUND_ENV)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "(1 3 2 4)\n");
}
