//! CLI acceptance: repeated runs with identical inputs and seeds must
//! produce byte-identical reports.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sidon"))
        .args(args)
        .output()
        .expect("binary runs")
}

/// Criterion 10: determinism of every report-producing subcommand.
#[test]
fn criterion_10_byte_identical_reports() {
    let commands: Vec<Vec<&str>> = vec![
        vec!["verify", "--h", "2", "--inline", r#"["1","2","4","8"]"#],
        vec![
            "verify",
            "--h",
            "3",
            "--method",
            "hyperplane",
            "--inline",
            r#"["0","1","2","4"]"#,
        ],
        vec!["perturb", "--h", "2", "--eps", "1/10", "--inline", r#"["0","1","2"]"#],
        vec!["perturb", "--h", "2", "--eps", "1/3", "--stream", "--count", "12"],
        vec!["weights", "--k", "3", "--h", "2", "--canonical"],
        vec!["sumset", "--op", "rs-diff", "--r", "2", "--s", "1", "--inline", r#"["0","1"]"#],
        vec![
            "density", "--k", "5", "--h", "2", "--trials", "60", "--sampler", "rational:100000",
            "--seed", "7",
        ],
        vec![
            "density", "--k", "4", "--h", "2", "--trials", "25", "--sampler", "grid:30",
            "--seed", "11", "--format", "csv",
        ],
    ];
    for args in &commands {
        let first = run(args);
        let second = run(args);
        assert!(
            first.status.success(),
            "command {args:?} failed: {}",
            String::from_utf8_lossy(&first.stderr)
        );
        assert_eq!(
            first.stdout, second.stdout,
            "stdout differs between runs of {args:?}"
        );
        assert_eq!(first.stderr, second.stderr);
    }

    // File output is byte-identical to stdout output for the same request.
    let dir = std::env::temp_dir().join(format!("sidon-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let args = [
        "density", "--k", "6", "--h", "2", "--trials", "40", "--sampler", "rational:5000",
        "--seed", "3",
    ];
    let streamed = run(&args);
    let mut to_file: Vec<&str> = args.to_vec();
    let path_text = path.to_str().unwrap();
    to_file.extend(["--output", path_text]);
    let written = run(&to_file);
    assert!(written.status.success());
    assert!(written.stdout.is_empty());
    let file_bytes = std::fs::read(&path).unwrap();
    assert_eq!(file_bytes, streamed.stdout);
    std::fs::remove_dir_all(&dir).ok();

    println!("[acceptance] criterion 10 (byte-identical reports): PASS");
}
