use std::process::{Command, Output};

fn recip(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_recip")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn scholz_sweep_passes() {
    let o = recip(&["scholz", "--max", "200", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "p,q,eps_pq,eps_qp,quartic_product,h_pq_mod4,primary_rho_exists,primary_pi_exists,pass");
    let rows = &lines[1..lines.len() - 1];
    assert!(rows.iter().all(|r| r.ends_with(",true")));
    assert_eq!(*lines.last().unwrap(), format!("# total={0} passed={0} violations=0", rows.len()));
    assert!(o.stderr.is_empty());
}

#[test]
fn hilbert_worked_example_json() {
    let o = recip(&["hilbert", "--p", "3", "--q", "7", "--r", "37", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let r = &v["records"][0];
    for key in ["eps_pq_r", "p_on_r", "eps_r_on_a"] {
        assert_eq!(r[key], 1, "{key}");
    }
    assert_eq!(r["r_ideal_primary"], true);
    assert_eq!(r["h_pqr_mod4"], 0);
    assert_eq!(v["summary"]["passed"], 1);
}

#[test]
fn not_applicable_fields() {
    let o = recip(&["hilbert", "--p", "3", "--q", "7", "--r", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("3,7,5,-1,-1,false,2,NA,NA,true"));
    let o = recip(&["hilbert", "--p", "3", "--q", "7", "--r", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["records"][0]["eps_r_on_a"].is_null());
}

#[test]
fn invalid_usage_exits_two() {
    for args in [
        &["scholz", "--max", "10", "--p", "banana"][..],
        &["scholz"],
        &["supplement", "--max", "-3"],
        &["hilbert", "--p", "3", "--q", "7", "--r", "11"],
        &["hilbert", "--p", "3", "--q", "7"],
        &["explore", "--ell", "2", "--max", "100"],
        &["compute", "lambda-symbol", "5", "29"],
        &["scholz", "--max", "10", "--workers", "0"],
    ] {
        let o = recip(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
    let o = recip(&["scholz", "--max", "10", "--p", "banana"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("--p"));
}

#[test]
fn output_file_and_workers() {
    let dir = std::env::temp_dir().join(format!("recip-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o = recip(&["supplement", "--max", "600", "--format", "json", "--out", path.to_str().unwrap(), "--workers", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let single = recip(&["supplement", "--max", "600", "--format", "json"]);
    assert_eq!(std::fs::read(&path).unwrap(), single.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn explore_table() {
    let o = recip(&["explore", "--ell", "5", "--max", "120"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("ell,p,q,symbol_ell,ell_class_is_fourth_power,status\n"));
    for line in text.lines().skip(1).filter(|l| !l.starts_with('#')) {
        let status = line.rsplit(',').next().unwrap();
        assert!(["ok", "no_representation", "hypotheses_unmet"].contains(&status), "{line}");
    }
}

#[test]
fn compute_commands() {
    let cases = [
        (&["compute", "eps-symbol", "5", "29"][..], "eps_symbol,5 29,+1"),
        (&["compute", "lambda-symbol", "89", "17"], "lambda_symbol,89 17,+1"),
        (&["compute", "quartic", "5", "29"], "quartic_symbol,5 29,-1"),
        (&["compute", "class-number", "221"], "h,221,2"),
        (&["compute", "fundamental-unit", "89"], "epsilon,89,500 + 53*sqrt(89)"),
    ];
    for (args, expected) in cases {
        let o = recip(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert!(stdout(&o).contains(expected), "{args:?}: {}", stdout(&o));
    }
}
