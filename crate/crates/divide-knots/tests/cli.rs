use std::process::Command;

fn dknot(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_dknot"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = dknot(args);
    assert!(
        out.status.success(),
        "dknot {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn knot_prints_the_worked_example() {
    let table = stdout(&["knot", "--type", "III", "--eps", "1", "-A", "2", "-k", "2", "-t", "1"]);
    assert!(table.contains("B         13"));
    assert!(table.contains("coef      219"));
    assert!(table.contains("region    [11,13;16,17]"));
    assert!(table.contains("braid     W(13)^16 W(11)"));

    let mirrored = stdout(&[
        "knot", "--type", "III", "--eps", "1", "-A", "2", "-k", "2", "-t", "1", "--delta", "1",
    ]);
    assert!(mirrored.contains("b         -17"));
    assert!(mirrored.contains("coef      -219"));
}

#[test]
fn knot_json_output_parses() {
    let json = stdout(&[
        "knot", "--type", "V", "--eps", "-1", "-A", "3", "--format", "json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["record"]["coef"], 27);
    assert_eq!(value["area"], 27);
    assert_eq!(value["checks"]["immersed_arc"], true);
}

#[test]
fn braid_and_alex_agree_on_the_pretzel() {
    let braid = stdout(&["braid", "--region", "3,5,3,4"]);
    assert!(braid.contains("word   W(5)^3 W(3)"));
    assert!(braid.contains("genus  5"));

    let alex = stdout(&["alex", "--braid", "W(5)^3 W(3)"]);
    assert!(alex.contains("components 1"));
    assert!(alex.contains("[1, -1, 0, 1, -1, 1, -1, 1, 0, -1, 1]"));
    assert!(alex.contains("det        1"));

    let raw = stdout(&["braid", "--region", "3,5,3,4", "--columns"]);
    assert!(raw.contains("length 14"));
}

#[test]
fn trace_reports_counts_and_writes_svg() {
    let rect = stdout(&["trace", "--rect", "6,5"]);
    assert!(rect.contains("double points 10"));
    assert!(rect.contains("immersed arc  true"));

    let dir = tempfile::tempdir().unwrap();
    let svg_path = dir.path().join("curve.svg");
    stdout(&["trace", "--region", "3,5,3,4", "--svg", svg_path.to_str().unwrap()]);
    let svg = std::fs::read_to_string(&svg_path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<circle").count(), 5);
}

#[test]
fn sweep_writes_readable_rows() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("atlas.jsonl");
    let log = stdout(&[
        "sweep",
        "--grid",
        "A=2..4,k=0..1,t=-1..1",
        "--types",
        "III",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(log.contains("wrote 36 rows"));
    let rows = divide_knots::atlas::read_jsonl(&out).unwrap();
    assert_eq!(rows.len(), 36);
    assert!(rows.iter().all(|r| r.checks.coef_positive));
}

#[test]
fn ttk_prints_region_and_agreement() {
    let out = stdout(&["ttk", "-p", "4", "-q", "3", "-r", "5", "-s", "1"]);
    assert!(out.contains("region [6,8;4,5]"));
    assert!(out.contains("region presentation agrees: true"));
}

#[test]
fn relations_lists_both_families() {
    let out = stdout(&["relations", "--max-A", "3"]);
    assert!(out.contains("K_III(-1,+1,3,0,0) -> K_IV(+1,-1,5,0,0): +1 squares along short_arm_b1"));
    assert!(out.contains("K_III(+1,-1,2,0,0) -> K_IV(-1,+1,5,0,0): +1 squares along long_arm_b2"));
}

#[test]
fn verify_subset_reports_and_exits_cleanly() {
    let dir = tempfile::tempdir().unwrap();
    let report_path = dir.path().join("report.json");
    let out = stdout(&[
        "verify",
        "--suite",
        "relations,lshape",
        "--report",
        report_path.to_str().unwrap(),
    ]);
    assert!(out.contains("relations"));
    assert!(out.contains("[ok]"));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(report["ok"], true);
    assert_eq!(report["suites"].as_array().unwrap().len(), 2);
}

#[test]
fn invalid_input_exits_with_code_two() {
    for args in [
        vec!["knot", "--type", "VII", "--eps", "1", "-A", "2"],
        vec!["knot", "--type", "IV", "--eps", "1", "-A", "4"],
        vec!["braid", "--region", "3,5"],
        vec!["alex", "--braid", "w5^3"],
        vec!["ttk", "-p", "4", "-q", "2", "-r", "3", "-s", "1"],
        vec!["verify", "--suite", "nonsense"],
    ] {
        let out = dknot(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}
