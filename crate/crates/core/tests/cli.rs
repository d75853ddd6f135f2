use std::process::{Command, Output};

use awroots::cli::{parse_args, run, Report};

fn awroots(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_awroots"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn full_precision_report(args: &[&str]) -> Report {
    let mut argv = vec!["awroots"];
    argv.extend_from_slice(args);
    awroots::cli::build_report(&parse_args(argv).unwrap())
        .unwrap()
        .0
}

#[test]
fn json_round_trips() {
    for mode in [
        "bounds", "solve", "certify", "table1", "table2", "table3", "table4",
    ] {
        let out = awroots(&["--mode", mode, "--format", "json"]);
        assert_eq!(out.status.code(), Some(0), "{mode}");
        let parsed: Report = serde_json::from_str(&stdout(&out)).unwrap();
        let expected = full_precision_report(&["--mode", mode]);
        assert_eq!(parsed.rows, expected.rows, "{mode}");
        assert_eq!(parsed.rho, expected.rho);
        assert_eq!(parsed.mode, expected.mode);
    }
}

#[test]
fn csv_round_trips() {
    for mode in ["bounds", "iterate", "table1", "table2", "table4"] {
        let out = awroots(&["--mode", mode, "--format", "csv"]);
        assert_eq!(out.status.code(), Some(0));
        let expected = full_precision_report(&["--mode", mode]);
        let mut reader = csv::ReaderBuilder::new()
            .flexible(true)
            .from_reader(out.stdout.as_slice());
        let header = reader.headers().unwrap().clone();
        assert_eq!(&header[0], "label");
        let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
        assert_eq!(rows.len(), expected.rows.len());
        for (record, row) in rows.iter().zip(&expected.rows) {
            assert_eq!(&record[0], row.label);
            let values: Vec<f64> = record.iter().skip(1).map(|v| v.parse().unwrap()).collect();
            assert_eq!(values, row.values);
        }
    }
}

#[test]
fn csv_header_lists_root_indices() {
    let out = awroots(&["--mode", "solve", "--n", "3", "--format", "csv"]);
    assert!(stdout(&out).starts_with("label,j1,j2,j3\n"));
}

#[test]
fn output_is_byte_identical() {
    for args in [
        &["--mode", "table2"][..],
        &[
            "--mode",
            "iterate",
            "--a",
            "0.4+0.3i,0.4-0.3i,-0.5,0.2",
            "--q",
            "-0.3",
            "--n",
            "8",
        ],
        &["--mode", "table4", "--format", "json"],
    ] {
        let (a, b) = (awroots(args), awroots(args));
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.stderr, b.stderr);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(
        awroots(&[
            "--mode",
            "certify",
            "--a",
            "0.3,-0.2,0.15,0.1",
            "--q",
            "0.1"
        ])
        .status
        .code(),
        Some(0)
    );
    assert_eq!(awroots(&["--help"]).status.code(), Some(0));
    assert_eq!(awroots(&["--mode", "nonsense"]).status.code(), Some(1));
    assert_eq!(awroots(&["--a", "0.1,0.2"]).status.code(), Some(1));
    assert_eq!(
        awroots(&["--mode", "solve", "--n", "3,4"]).status.code(),
        Some(1)
    );
    assert_eq!(awroots(&["--q", "1.5"]).status.code(), Some(2));
    assert_eq!(awroots(&["--a", "0.2+0.1i,0.3,0,0"]).status.code(), Some(2));
    assert_eq!(awroots(&["--a", "1.2,0,0,0"]).status.code(), Some(2));

    // rho >= 1: certify refuses, iterate only warns
    let uncertified = ["--a", "0.9,0.9,0.9,0.9", "--q", "0.5", "--n", "3"];
    let out = awroots(&[&["--mode", "certify"][..], &uncertified].concat());
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no contraction certificate"));
    let out = awroots(&[&["--mode", "iterate"][..], &uncertified].concat());
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}

#[test]
fn text_tables_round_half_even() {
    let text = stdout(&awroots(&["--mode", "table1"]));
    assert!(text.contains("[1.7915]") && text.contains("[2.4666]"));
    assert!(text.contains("0.4959") && text.contains("2.5773"));
    let text = stdout(&awroots(&["--mode", "table4"]));
    assert!(text.contains("2.6e-3") && text.contains("6.5e-6"));
}

#[test]
fn certify_all_zero_is_exact() {
    let config = parse_args(["awroots", "--mode", "certify", "--format", "json"]).unwrap();
    let outcome = run(&config).unwrap();
    assert_eq!(outcome.status, 0);
    let report: Report = serde_json::from_str(&outcome.stdout).unwrap();
    assert_eq!(report.rho, vec![0.0]);
    let cert = report
        .rows
        .iter()
        .find(|r| r.label == "certificate")
        .unwrap();
    assert_eq!(cert.values[2], 0.0);
    let roots = &report.rows[0].values;
    for (j, t) in roots.iter().enumerate() {
        assert!((t - std::f64::consts::PI * (j + 1) as f64 / 6.0).abs() < 1e-15);
    }
}
