use std::process::{Command, Output};

use msort_core::refinement::registry;
use msort_core::Report;

fn msort(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_msort"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn sort_modes() {
    for mode in ["list", "array"] {
        let o = msort(&["sort", "--mode", mode, "3", "1", "2"]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), "1 2 3\n");
        let o = msort(&["sort", "--mode", mode]);
        assert_eq!(stdout(&o), "\n");
        let o = msort(&["sort", "--mode", mode, "-2", "5", "-2", "0"]);
        assert_eq!(stdout(&o), "-2 -2 0 5\n");
    }
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["sort", "3", "x"][..],
        &["sort", "--mode", "heap", "1"],
        &["laws", "--only", "no-such-law"],
        &["laws", "--alphabet", "0", "--only", "sorted-cat3"],
        &["laws", "--mutant", "bogus"],
        &[
            "report",
            "--only",
            "sorted-cat3",
            "--out",
            "/nonexistent-dir/report.json",
        ],
    ] {
        let o = msort(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn single_obligation_reports_cases() {
    let o = msort(&["laws", "--only", "qsort-refines-slowsort", "--max-len", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("PASS qsort-refines-slowsort"), "{out}");
    // 121 lists up to length 4 over three keys, two cases each.
    assert!(out.contains("cases_run=242"), "{out}");
}

#[test]
fn failing_obligation_exits_1() {
    let o = msort(&[
        "laws",
        "--only",
        "sort-modes-agree",
        "--mutant",
        "iqsort-no-pivot-swap",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("counterexample (size 2)"));
}

#[test]
fn full_report_lists_every_obligation_once() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = msort(&["report", "--all", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let report: Report = serde_json::from_str(&text).unwrap();
    assert!(report.passed);
    let names: Vec<&str> = report
        .obligations
        .iter()
        .map(|v| v.obligation.as_str())
        .collect();
    let expected: Vec<&str> = registry().iter().map(|o| o.name).collect();
    assert_eq!(names, expected);
    assert!(report
        .obligations
        .iter()
        .all(|v| v.failures.is_empty() && v.cases_run > 0));
    assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", text);
}
