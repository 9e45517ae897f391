//! Functional tests for the command-line interface: exit codes, report
//! shapes, and the report round trip.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sidon"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    assert!(
        output.status.success(),
        "command failed: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("stdout is one JSON document")
}

#[test]
fn verify_powers_of_two() {
    let out = run(&["verify", "--h", "2", "--inline", r#"["1","2","4","8"]"#]);
    let report = stdout_json(&out);
    assert_eq!(report["verdict"]["is_sidon"], serde_json::json!(true));
    assert_eq!(report["request"]["command"], serde_json::json!("verify"));
}

#[test]
fn a_negative_verdict_is_still_a_success() {
    let out = run(&["verify", "--h", "2", "--inline", r#"["0","1","2"]"#]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    assert_eq!(report["verdict"]["is_sidon"], serde_json::json!(false));
    // Both certificate forms and the collided sum are present.
    assert!(report["verdict"]["witness"].is_object());
    assert!(report["verdict"]["weight"].is_object());
    assert!(report["verdict"]["collision_sum"].is_string());
}

#[test]
fn verify_methods_agree() {
    for input in [r#"["0","1","2"]"#, r#"["1","2","4","8"]"#] {
        let bf = stdout_json(&run(&["verify", "--h", "2", "--inline", input]));
        let hp = stdout_json(&run(&[
            "verify",
            "--h",
            "2",
            "--method",
            "hyperplane",
            "--inline",
            input,
        ]));
        assert_eq!(bf["verdict"]["is_sidon"], hp["verdict"]["is_sidon"], "{input}");
    }
}

#[test]
fn duplicate_input_exits_2_with_diagnostic() {
    let out = run(&["verify", "--h", "2", "--inline", r#"["1","1"]"#]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("duplicate element 1"), "stderr: {stderr}");
    assert!(stderr.contains("positions 1 and 2"), "stderr: {stderr}");
}

#[test]
fn unparseable_rational_exits_2_naming_the_token() {
    let out = run(&["verify", "--h", "2", "--inline", r#"["1","2/0"]"#]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("2/0"));

    let out = run(&["perturb", "--h", "2", "--eps", "nonsense", "--inline", r#"["0","1"]"#]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("nonsense"));
}

#[test]
fn missing_input_file_exits_2_naming_the_path() {
    let out = run(&["verify", "--h", "2", "--input", "/nonexistent/points.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("/nonexistent/points.json"));
}

#[test]
fn invalid_flag_combinations_exit_2() {
    // p-adic without a prime, and a composite "prime".
    let out = run(&["verify", "--h", "2", "--abs", "p-adic", "--inline", r#"["1","2"]"#]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&[
        "verify", "--h", "2", "--abs", "p-adic", "--p", "6", "--inline", r#"["1","2"]"#,
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("6 is not prime"));
    // Zero order.
    let out = run(&["verify", "--h", "0", "--inline", r#"["1","2"]"#]);
    assert_eq!(out.status.code(), Some(2));
    // Zero epsilon is a malformed plan.
    let out = run(&["perturb", "--h", "2", "--eps", "0", "--inline", r#"["0","1"]"#]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn domain_errors_exit_1() {
    // The exhaustive grid enumeration would exceed its budget.
    let out = run(&["density", "--k", "10", "--h", "2", "--sampler", "grid:40", "--exact"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget exceeded"));

    // A grid too small for k distinct points fails while sampling.
    let out = run(&[
        "density", "--k", "5", "--h", "2", "--trials", "2", "--sampler", "grid:3", "--seed", "0",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn perturb_worked_example() {
    let out = run(&["perturb", "--h", "2", "--eps", "1/10", "--inline", r#"["0","1","2"]"#]);
    let report = stdout_json(&out);
    assert_eq!(report["beta"], serde_json::json!(["0", "21/20", "41/20"]));
    assert_eq!(report["trace"][0]["i"], serde_json::json!(2));
    assert_eq!(report["trace"][0]["x"], serde_json::json!("1/20"));
}

#[test]
fn perturb_accepts_full_object_input() {
    let object = r#"{"alpha":["0","1","2"],"epsilons":["1/10","1/10","1/10"],"h":2,"abs":{"kind":"archimedean"}}"#;
    let out = run(&["perturb", "--inline", object]);
    let report = stdout_json(&out);
    assert_eq!(report["beta"], serde_json::json!(["0", "21/20", "41/20"]));

    // Flags override object fields.
    let out = run(&["perturb", "--h", "3", "--inline", object]);
    let report = stdout_json(&out);
    assert_eq!(report["request"]["h"], serde_json::json!(3));
}

#[test]
fn perturb_duplicate_inputs_need_the_relaxation_flag() {
    let dup = r#"["0","1","0"]"#;
    let out = run(&["perturb", "--h", "2", "--eps", "1/10", "--inline", dup]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&[
        "perturb", "--h", "2", "--eps", "1/10", "--allow-duplicates", "--inline", dup,
    ]);
    let report = stdout_json(&out);
    assert_eq!(report["beta"].as_array().unwrap().len(), 3);
}

#[test]
fn stream_mode_defaults_to_the_integers() {
    let out = run(&["perturb", "--h", "2", "--eps", "1/10", "--stream", "--count", "4"]);
    let report = stdout_json(&out);
    assert_eq!(report["request"]["alpha"], serde_json::json!(["0", "1", "2", "3"]));
    assert_eq!(report["beta"].as_array().unwrap().len(), 4);
    assert_eq!(report["beta"][0], serde_json::json!("0"));
}

#[test]
fn weights_canonical_is_half_of_full() {
    let full = stdout_json(&run(&["weights", "--k", "3", "--h", "2"]));
    let canonical = stdout_json(&run(&["weights", "--k", "3", "--h", "2", "--canonical"]));
    let full_count = full["count"].as_u64().unwrap();
    assert_eq!(full_count, 2 * canonical["count"].as_u64().unwrap());
    assert_eq!(
        full["weights"].as_array().unwrap().len(),
        full_count as usize
    );
}

#[test]
fn sumset_operations() {
    let report = stdout_json(&run(&[
        "sumset", "--op", "translate", "--c", "-1", "--inline", r#"["1","2","4"]"#,
    ]));
    assert_eq!(report["result"], serde_json::json!(["0", "1", "3"]));

    let report = stdout_json(&run(&[
        "sumset", "--op", "shifted", "--b", "5", "--r", "1", "--h", "2", "--inline", r#"["0","1"]"#,
    ]));
    assert_eq!(report["result"], serde_json::json!(["5", "6"]));

    // A missing operand is a usage error.
    let out = run(&["sumset", "--op", "dilate", "--inline", r#"["1"]"#]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--c"));
}

#[test]
fn density_report_shape() {
    let report = stdout_json(&run(&[
        "density", "--k", "3", "--h", "2", "--sampler", "grid:4", "--exact",
    ]));
    assert_eq!(report["report"]["fraction"], serde_json::json!("1/2"));
    assert_eq!(report["report"]["trials"], serde_json::json!(4));

    let csv = run(&[
        "density", "--k", "3", "--h", "2", "--trials", "10", "--sampler", "grid:9", "--seed",
        "1", "--format", "csv",
    ]);
    assert!(csv.status.success());
    let line = String::from_utf8(csv.stdout).unwrap();
    let fields: Vec<&str> = line.trim_end().split(',').collect();
    assert_eq!(fields.len(), 7);
    assert_eq!(fields[0], "3");
    assert_eq!(fields[6], "grid:9");
}

#[test]
fn report_round_trip_re_verifies_to_the_same_verdict() {
    let first = stdout_json(&run(&[
        "verify", "--h", "3", "--inline", r#"["1","2","4","8","16","32"]"#,
    ]));
    // Feed the echoed input back through the tool.
    let echoed_input = serde_json::to_string(&first["request"]["input"]).unwrap();
    let h = first["request"]["h"].as_u64().unwrap().to_string();
    let second = stdout_json(&run(&["verify", "--h", &h, "--inline", &echoed_input]));
    assert_eq!(first["verdict"], second["verdict"]);
}
