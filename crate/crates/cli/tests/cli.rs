use std::process::{Command, Output};

fn seqforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_seqforge"))
        .args(args)
        .output()
        .expect("spawn seqforge")
}

fn stdout(args: &[&str]) -> String {
    let out = seqforge(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn body(csv: &str) -> String {
    csv.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect()
}

#[test]
fn golden_lines() {
    assert_eq!(stdout(&["practical", "check", "18"]), "18 practical\n");
    assert_eq!(stdout(&["practical", "check", "10"]), "10 not practical\n");
    assert_eq!(stdout(&["practical", "goldbach", "100"]), "100 = 4 + 96\n");
    assert_eq!(stdout(&["sumfree", "check", "1,2,4,8"]), "sum-free\n");
}

#[test]
fn golden_klm_count() {
    let out = stdout(&["klm", "count", "--k", "2", "--l", "1", "--m", "2", "--limit", "10"]);
    assert_eq!(body(&out), "n,count\n10,7\n");
    assert!(out.contains("# tool: seqforge "));
    assert!(out.contains("# config: "));
    assert!(out.contains("# wall_time_s: "));
}

#[test]
fn golden_practical_count() {
    let out = stdout(&["practical", "count", "--limit", "100", "--no-provenance"]);
    assert_eq!(out.lines().next(), Some("x,P,P2"));
    assert!(out.lines().any(|l| l.starts_with("100,30,")), "{out}");
}

#[test]
fn no_provenance_is_byte_identical() {
    let args = ["experiment", "twin-count", "--limit", "100000", "--no-provenance"];
    let seq: Vec<&str> = args.iter().copied().chain(["--workers", "1"]).collect();
    let par: Vec<&str> = args.iter().copied().chain(["--workers", "4"]).collect();
    let a = seqforge(&seq);
    let b = seqforge(&par);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(!String::from_utf8_lossy(&a.stdout).contains('#'));
}

#[test]
fn provenance_differs_only_in_footer() {
    let args = ["klm", "count", "--limit", "100000"];
    let a = stdout(&args);
    let b = stdout(&args);
    assert_eq!(body(&a), body(&b));
    let config = |s: &str| s.lines().find(|l| l.starts_with("# config:")).map(str::to_owned);
    assert_eq!(config(&a), config(&b));
    let other = stdout(&["klm", "count", "--limit", "100001"]);
    assert_ne!(config(&a), config(&other));
}

#[test]
fn json_output() {
    let out = stdout(&["klm", "count", "--limit", "10", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["header"][1], "count");
    assert_eq!(v["rows"][0][1], 7);
    assert_eq!(v["partial"], false);
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("seqforge-{}.csv", std::process::id()));
    let p = path.to_str().unwrap();
    assert_eq!(stdout(&["practical", "list", "--limit", "8", "--output", p, "--no-provenance"]), "");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "n\n1\n2\n4\n6\n8\n");
    std::fs::remove_file(path).unwrap();
}

#[test]
fn exit_code_two_for_bad_input() {
    assert_eq!(seqforge(&["practical", "frobnicate"]).status.code(), Some(2));
    assert_eq!(seqforge(&["nonsense"]).status.code(), Some(2));
    assert_eq!(seqforge(&["practical", "goldbach", "7"]).status.code(), Some(2));
    assert_eq!(seqforge(&["powsum", "terms", "--set", "{3,", "--bound", "9"]).status.code(), Some(2));
}

#[test]
fn exit_code_three_for_capped_scan() {
    let out = seqforge(&["klm", "count", "--limit", "1000000000000"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn exit_code_three_for_partial_experiment() {
    let out = seqforge(&["experiment", "alpha", "--limit", "200000000", "--no-provenance"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stdout).contains("# partial"));
}

#[test]
fn every_operation_is_reachable() {
    let cases: &[&[&str]] = &[
        &["practical", "check", "18", "--oracle"],
        &["practical", "factor", "360"],
        &["practical", "list", "--limit", "50"],
        &["practical", "count", "--limit", "1000", "--checkpoints", "10,100"],
        &["practical", "goldbach", "1000"],
        &["practical", "product", "6", "8"],
        &["practical", "tuples", "--offsets", "-2,0,2", "--limit", "200"],
        &["practical", "twin", "4", "6"],
        &["practical", "lambda", "--limit", "10000"],
        &["practical", "erdos", "1000"],
        &["sumfree", "check", "1,2,3"],
        &["sumfree", "greedy", "--seed", "1,2", "--limit", "100"],
        &["sumfree", "stats", "1,2,4,8"],
        &["sumfree", "sums", "1,2,5", "--bound", "10"],
        &["powsum", "terms", "--set", "{3,4}", "--bound", "100"],
        &["powsum", "sigma", "--set", "{3,4}", "--bound", "100", "--dedup"],
        &["powsum", "window", "--set", "{3,4}+Rp(p=3,N=5)", "--bound", "1000", "--s", "2"],
        &["powsum", "counterexample", "--p", "3", "--N", "10"],
        &["powsum", "weights", "--set", "{3,4,5}"],
        &["powsum", "joint", "--count", "50"],
        &["klm", "check", "7"],
        &["klm", "list", "--limit", "100", "--k", "3"],
        &["klm", "count", "--limit", "1000", "--checkpoints", "10,100"],
        &["klm", "digits", "--n", "12", "--m", "3", "--base", "10"],
        &["klm", "identity", "--nu", "7", "--n", "5"],
        &["klm", "fit", "--limit", "1000000", "--from", "1000"],
        &["klm", "gk", "--limit", "100000"],
        &["klm", "monitor", "--limit", "100000", "--desk-floor", "0.5"],
        &["experiment", "lambda", "--limit", "100000"],
        &["experiment", "erdos-ratio", "--limit", "100000"],
        &["experiment", "goldbach-exhaustive", "--limit", "100000"],
        &["experiment", "twin-count", "--limit", "100000"],
        &["experiment", "counterexample", "--p", "7", "--N", "100", "--bound", "100000"],
        &["experiment", "joint34", "--count", "1000"],
        &["experiment", "alpha", "--limit", "10000000"],
        &["experiment", "gk", "--k", "3", "--limit", "100000"],
        &["experiment", "sumfree-stats", "--seed", "1,2", "--limit", "100000"],
    ];
    for args in cases {
        let out = seqforge(args);
        assert!(
            out.status.success() && !out.stdout.is_empty(),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}
