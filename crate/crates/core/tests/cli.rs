use std::process::Command;

use relcomp::cli::{run, EXIT_INTERVAL, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};

fn rc(args: &[&str]) -> relcomp::cli::Outcome {
    run(std::iter::once("rc").chain(args.iter().copied()))
}

fn json_lines(s: &str) -> Vec<serde_json::Value> {
    s.lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn compute_reports_exact_values() {
    let out = rc(&[
        "compute", "--group", "PGL", "--n", "2", "--q", "5", "--ibase",
    ]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let v = &json_lines(&out.stdout)[0];
    assert_eq!(v["rc"], 4);
    assert_eq!(v["height"], 3);
    assert_eq!(v["degree"], 6);
    assert!(v.get("elapsed_ms").is_none());
    assert_eq!(v["witness"]["X"].as_array().unwrap().len(), 4);

    let pf = rc(&[
        "compute", "--group", "PGL", "--n", "2", "--p", "5", "--f", "1", "--ibase",
    ]);
    assert_eq!(pf.stdout, out.stdout);

    let timed = rc(&[
        "compute",
        "--group",
        "PGL",
        "--n",
        "2",
        "--q",
        "5",
        "--timings",
    ]);
    assert!(json_lines(&timed.stdout)[0]["elapsed_ms"].is_u64());
}

#[test]
fn compute_on_m_spaces_and_formats() {
    let out = rc(&[
        "--format", "csv", "compute", "--group", "PSL", "--n", "4", "--q", "2", "--m", "2",
    ]);
    assert_eq!(out.code, EXIT_OK);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert!(lines[0].starts_with("group,n,p,f,m,degree,rc"));
    assert!(lines[1].starts_with("SL,4,2,1,2,35,5,"), "{}", lines[1]);

    let text = rc(&[
        "--format", "text", "compute", "--group", "PSigmaL", "--n", "2", "--q", "9",
    ]);
    assert_eq!(text.code, EXIT_OK);
    assert!(!text.stdout.trim().is_empty());
}

#[test]
fn truncated_search_exits_with_interval() {
    let out = rc(&[
        "compute",
        "--group",
        "PGammaL",
        "--n",
        "4",
        "--q",
        "9",
        "--max-level",
        "3",
    ]);
    assert_eq!(out.code, EXIT_INTERVAL);
    let v = &json_lines(&out.stdout)[0];
    assert!(v["rc"].is_null());
    assert!(v["rc_lower"].as_u64().unwrap() >= 2);
}

#[test]
fn oversized_action_falls_back_to_bounds() {
    let out = rc(&[
        "compute",
        "--group",
        "PGL",
        "--n",
        "3",
        "--q",
        "9",
        "--max-omega",
        "50",
    ]);
    assert_eq!(out.code, EXIT_INTERVAL);
    let v = &json_lines(&out.stdout)[0];
    assert!(v["rc"].is_null());
    assert_eq!(v["bounds"]["lower"], 5);
    assert!(v["reason"].as_str().unwrap().contains("91"));
}

#[test]
fn bounds_over_ranges() {
    let out = rc(&[
        "bounds", "--group", "PGL", "--n", "3..4", "--q", "2..5", "--m", "1",
    ]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let rows = json_lines(&out.stdout);
    // q = 2, 3, 4, 5 for each n
    assert_eq!(rows.len(), 8);
    let pgl34 = rows.iter().find(|r| r["n"] == 3 && r["q"] == 4).unwrap();
    assert_eq!(
        (pgl34["lower"].as_u64(), pgl34["upper"].as_u64()),
        (Some(5), Some(5))
    );
    let pgl43 = rows.iter().find(|r| r["n"] == 4 && r["q"] == 3).unwrap();
    assert_eq!(pgl43["lower"], 4);

    let gamma = rc(&["bounds", "--group", "PGammaL", "--n", "2", "--q", "243"]);
    let v = &json_lines(&gamma.stdout)[0];
    assert_eq!(
        (v["lower"].as_u64(), v["upper"].as_u64()),
        (Some(4), Some(5))
    );
}

#[test]
fn witness_build_and_verify() {
    let out = rc(&[
        "witness",
        "--tag",
        "psl-lower",
        "--group",
        "PSL",
        "--n",
        "5",
        "--q",
        "11",
    ]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let v = &json_lines(&out.stdout)[0];
    assert_eq!(v["report"]["passed"], true);
    assert_eq!(v["report"]["k"], 8);
    assert_eq!(v["package"]["claim_k"], 8);

    // gcd(n, q - 1) = 1 makes SL_5(5) projectively equal to GL_5(5)
    for (group, n, q) in [("PGL", "4", "4"), ("PSL", "5", "5")] {
        let refused = rc(&[
            "witness",
            "--tag",
            "psl-lower",
            "--group",
            group,
            "--n",
            n,
            "--q",
            q,
        ]);
        assert_eq!(refused.code, EXIT_USAGE);
        assert!(refused.stderr.contains("alpha"));
    }

    let unknown = rc(&["witness", "--tag", "nope", "--q", "4"]);
    assert_eq!(unknown.code, EXIT_USAGE);
}

#[test]
fn parametric_and_file_groups() {
    let param = rc(&["compute", "--group", "param:2,1", "--n", "2", "--q", "9"]);
    assert_eq!(param.code, EXIT_OK, "{}", param.stderr);

    let dir = std::env::temp_dir().join(format!("rc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("gens.txt");
    // diag(ω, 1) over GF(5): the file group is GL_2(5)
    std::fs::write(&path, "# generator\n2 0 0 1 ; 0\n").unwrap();
    let spec = format!("file:{}", path.display());
    let from_file = rc(&["compute", "--group", &spec, "--n", "2", "--q", "5"]);
    let preset = rc(&["compute", "--group", "PGL", "--n", "2", "--q", "5"]);
    assert_eq!(from_file.code, EXIT_OK, "{}", from_file.stderr);
    assert_eq!(
        json_lines(&from_file.stdout)[0]["rc"],
        json_lines(&preset.stdout)[0]["rc"]
    );

    std::fs::write(&path, "1 2 3\n").unwrap();
    let bad = rc(&["compute", "--group", &spec, "--n", "2", "--q", "5"]);
    assert_eq!(bad.code, EXIT_USAGE);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn usage_errors() {
    for args in [
        vec!["compute", "--group", "PGL", "--n", "2", "--q", "6"],
        vec!["compute", "--group", "PXL", "--n", "2", "--q", "5"],
        vec!["compute", "--group", "PGL", "--n", "2"],
        vec![
            "compute", "--group", "PGL", "--n", "2", "--q", "5", "--m", "2",
        ],
        vec!["bogus"],
        vec!["table", "--suite", "other"],
    ] {
        let out = rc(&args);
        assert_eq!(out.code, EXIT_USAGE, "{args:?}: {}", out.stdout);
    }
    assert_ne!(EXIT_MISMATCH, EXIT_OK);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_rc");
    let ok = Command::new(bin)
        .args(["compute", "--group", "PGL", "--n", "2", "--q", "3"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("\"rc\":2"));
    let bad = Command::new(bin)
        .args(["compute", "--n", "2"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
    assert!(!bad.stderr.is_empty());
}

#[test]
fn table_matches_reference_suite() {
    let out = rc(&[
        "--format",
        "csv",
        "table",
        "--suite",
        "paper",
        "--budget-secs",
        "600",
    ]);
    assert_eq!(out.code, EXIT_OK, "{}\n{}", out.stdout, out.stderr);
    let rows: Vec<&str> = out.stdout.lines().skip(1).collect();
    assert_eq!(rows.len(), 15);
    assert!(rows.iter().all(|r| r.ends_with(",match")), "{}", out.stdout);
}
