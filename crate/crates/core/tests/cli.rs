mod common;

use std::path::Path;
use std::process::{Command, Output};

use common::data_path;
use softdecide::cli::{run_cli, EXIT_INPUT, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};
use softdecide::io::{parse_triplet, ReportDocument, ScoreValue};

fn softdecide(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_softdecide"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn path(name: &str) -> String {
    data_path(name).to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn neutrosophic_combined_names_p3() {
    let table4 = path("table4.csv");
    let o = softdecide(&["decide", "--input", &table4, "--method", "neutrosophic", "--criterion", "combined"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("optimistic: P3, P5\n"), "{out}");
    assert!(out.contains("conservative: P3\n"), "{out}");
    assert!(out.contains("winners: P3\n"), "{out}");
    let risk = out.lines().find(|l| l.starts_with("  P3: indeterminacy 0.15")).unwrap();
    assert!(risk.ends_with("; riskier than P5"), "{out}");
    assert!(out.contains("tool convention"), "{out}");
}

#[test]
fn text_scores_reparse_to_full_precision() {
    let table4 = path("table4.csv");
    let o = softdecide(&["decide", "--input", &table4, "--method", "neutrosophic"]);
    let out = stdout(&o);
    let line = out.lines().find(|l| l.trim_start().starts_with("P2 ")).unwrap();
    let x = parse_triplet(line.split_whitespace().nth(1).unwrap()).unwrap();
    assert!((x.truth() - 0.55).abs() < 1e-12);
    assert!((x.indeterminacy() - 0.05).abs() < 1e-12);
    assert!((x.falsity() - 0.4).abs() < 1e-12);
}

#[test]
fn grey_on_binary_table_matches_binary_scores() {
    let table2 = path("table2.csv");
    let grey = softdecide(&["decide", "--input", &table2, "--method", "grey", "--format", "json"]);
    let binary = softdecide(&["decide", "--input", &table2, "--method", "binary", "--format", "json"]);
    assert_eq!(grey.status.code(), Some(0));
    let g = ReportDocument::from_json(&stdout(&grey)).unwrap();
    let b = ReportDocument::from_json(&stdout(&binary)).unwrap();
    for (gs, bs) in g.scores.iter().zip(&b.scores) {
        match (gs.score, bs.score) {
            (ScoreValue::Real(x), ScoreValue::Integer(n)) => assert_eq!(x, f64::from(n)),
            other => panic!("unexpected {other:?}"),
        }
    }
    assert_eq!(g.winners, ["P2", "P3", "P5", "P6"]);
    assert_eq!(g.winners, b.winners);
}

#[test]
fn grey_method_picks_p3() {
    let table3 = path("table3.csv");
    let o = softdecide(&["decide", "--input", &table3, "--method", "grey"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("winners: P3\n"));

    let scale = path("strict.scale");
    let o = softdecide(&["decide", "--input", &table3, "--method", "grey", "--scale", &scale]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("winners: P3\n"));
}

#[test]
fn grades_rejected_by_neutrosophic_method() {
    let table3 = path("table3.csv");
    let o = softdecide(&["decide", "--input", &table3, "--method", "neutrosophic"]);
    assert_eq!(o.status.code(), Some(i32::from(EXIT_MISMATCH)));
    assert!(o.stdout.is_empty());
    let err = stderr(&o);
    assert!(err.starts_with("error: "), "{err}");
    assert!(err.contains("table3.csv:2:"), "{err}");
    assert!(err.contains("cell (P1, e4) holds a grade `C`"), "{err}");
}

#[test]
fn usage_errors() {
    let table2 = path("table2.csv");
    let scale = path("default.scale");
    for args in [
        vec!["decide", "--input", &table2],
        vec!["decide", "--input", &table2, "--method", "fuzzy"],
        vec!["decide", "--input", &table2, "--method", "binary", "--scale", &scale],
        vec!["decide", "--input", &table2, "--method", "grey", "--criterion", "optimistic"],
        vec!["decide", "--input", &table2, "--method", "binary", "--epsilon", "0"],
        vec!["decide", "--input", &table2, "--method", "binary", "--epsilon", "-1"],
        vec!["rank"],
        vec![],
    ] {
        let o = softdecide(&args);
        assert_eq!(o.status.code(), Some(i32::from(EXIT_USAGE)), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(stderr(&o).contains("error"), "{args:?}");
    }
}

#[test]
fn input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let ragged = write(dir.path(), "ragged.csv", "candidate,e1,e2\nP1,1\n");
    let arity = write(dir.path(), "arity.csv", "candidate,e1\nP1,(0.6;0.3)\n");
    let unknown = write(dir.path(), "unknown.csv", "candidate,e1\nP1,E\n");
    let overlap = write(dir.path(), "overlap.scale", "A=[0.9;1]\nB=[0.85;0.95]\n");
    let table3 = path("table3.csv");
    let missing = dir.path().join("missing.csv").to_string_lossy().into_owned();

    let cases: Vec<(Vec<&str>, &str)> = vec![
        (vec!["--input", &ragged, "--method", "binary"], "ragged.csv: line 2"),
        (vec!["--input", &arity, "--method", "neutrosophic"], "line 2, column 4"),
        (vec!["--input", &unknown, "--method", "grey"], "unknown.csv:2:4: cell (P1, e1): unknown grade `E`"),
        (vec!["--input", &table3, "--method", "grey", "--scale", &overlap], "overlapping"),
        (vec!["--input", &missing, "--method", "binary"], "cannot read"),
    ];
    for (args, needle) in cases {
        let mut full = vec!["decide"];
        full.extend(args);
        let o = softdecide(&full);
        assert_eq!(o.status.code(), Some(i32::from(EXIT_INPUT)), "{full:?}");
        assert!(o.stdout.is_empty());
        let err = stderr(&o);
        assert!(err.starts_with("error: ") && err.contains(needle), "{err}");
    }
}

#[test]
fn output_file_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let out_s = out.to_string_lossy().into_owned();
    let table4 = path("table4.csv");
    let args = ["decide", "--input", &table4, "--method", "neutrosophic", "--format", "json", "--output", &out_s];
    let o = softdecide(&args);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let first = std::fs::read(&out).unwrap();
    softdecide(&args);
    assert_eq!(std::fs::read(&out).unwrap(), first);

    let doc = ReportDocument::from_json(std::str::from_utf8(&first).unwrap()).unwrap();
    assert_eq!(doc.winners, ["P3"]);

    let bad = dir.path().join("no/such/dir/report.txt").to_string_lossy().into_owned();
    let o = softdecide(&["decide", "--input", &table4, "--method", "binary", "--output", &bad]);
    // Method mismatch is detected before anything is written.
    assert_eq!(o.status.code(), Some(i32::from(EXIT_MISMATCH)));
    let o = softdecide(&["decide", "--input", &table4, "--method", "neutrosophic", "--output", &bad]);
    assert_eq!(o.status.code(), Some(i32::from(EXIT_INPUT)));
}

#[test]
fn in_process_run_matches_binary() {
    let table2 = path("table2.csv");
    let args = ["softdecide", "decide", "--input", &table2, "--method", "binary"];
    let (mut out, mut err) = (Vec::new(), Vec::new());
    assert_eq!(run_cli(args, &mut out, &mut err), EXIT_OK);
    assert!(err.is_empty());
    assert_eq!(out, softdecide(&args[1..]).stdout);
    assert_eq!(
        String::from_utf8(out).unwrap(),
        "method: binary\nscores:\n  P1  1\n  P2  2\n  P3  2\n  P4  1\n  P5  2\n  P6  2\nwinners: P2, P3, P5, P6\n"
    );
}

#[test]
fn help_goes_to_stdout() {
    let o = softdecide(&["decide", "--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("--method"));
}
