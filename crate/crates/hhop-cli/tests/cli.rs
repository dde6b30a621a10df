//! End-to-end runs of the `hhop` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hhop::simplicial::ResolutionSpec;
use hhop::spectral::{e2_report, SliceBounds};
use serde_json::Value;

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn hhop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hhop"))
        .args(args)
        .env_remove("HHOP_FIXTURES")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = hhop(&full);
    serde_json::from_str(&stdout(&o)).unwrap_or_else(|e| panic!("{args:?}: {e}"))
}

fn schema(name: &str) -> jsonschema::Validator {
    let text = std::fs::read_to_string(fixtures().join("schemas").join(name)).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

/// Expected status and output of every transcript, via a separate process.
#[test]
fn golden_transcripts() {
    let mut n = 0;
    for entry in std::fs::read_dir(fixtures().join("golden")).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        let mut status = 0;
        let mut rest = text.as_str();
        let args = loop {
            let (line, tail) = rest.split_once('\n').unwrap();
            rest = tail;
            if let Some(code) = line.strip_prefix("# exit:") {
                status = code.trim().parse().unwrap();
            } else if let Some(cmd) = line.strip_prefix("$ hhop ") {
                break shlex::split(cmd).unwrap();
            }
        };
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let o = hhop(&args);
        assert_eq!(o.status.code(), Some(status), "{}", path.display());
        assert_eq!(stdout(&o), rest, "{}", path.display());
        n += 1;
    }
    assert!(n >= 15, "only {n} transcripts");
}

#[test]
fn fixture_corpus_replays() {
    let o = hhop(&["fixtures"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("0 failed)\n"));
}

#[test]
fn spec_example_prints_the_two_one_representative() {
    let o = hhop(&[
        "formula",
        "--target",
        "omega_hat",
        "--p",
        "3",
        "--q",
        "3",
        "--k",
        "2",
        "--l",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(
        "= [s1s0 iota_p, s2 iota_q] - [s2s0 iota_p, s1 iota_q] + [s2s1 iota_p, s0 iota_q]\n"
    ));
}

#[test]
fn cpn_suite_reports_the_minus_24_identity() {
    let o = hhop(&["verify", "--suite", "cpn", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("PASS f(phi) = -24 gamma 3"));
    assert!(out.contains("PASS chain map n=6"));
}

#[test]
fn exit_statuses() {
    assert_eq!(hhop(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        hhop(&["formula", "--target", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(hhop(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(
        hhop(&["e2", "--target", "omega_hat", "--s", "3..1", "--t", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        hhop(&["e2", "--spec", "missing.json", "--s", "0", "--t", "1"])
            .status
            .code(),
        Some(2)
    );
    let bound = hhop(&[
        "hall",
        "--degrees",
        "1,1,1",
        "--t",
        "12",
        "--max-dim",
        "100",
    ]);
    assert_eq!(bound.status.code(), Some(3));
    let slice = hhop(&[
        "e2",
        "--target",
        "omega_hat",
        "--p",
        "3",
        "--q",
        "3",
        "--k",
        "2",
        "--l",
        "1",
        "--s",
        "3",
        "--t",
        "4",
        "--max-dim",
        "1",
    ]);
    assert_eq!(slice.status.code(), Some(3));
    let moore = hhop(&[
        "verify",
        "--suite",
        "moore",
        "--target",
        "omega_hat",
        "--element",
        "[s0 iota_p, s1 iota_q]",
        "--level",
        "2",
    ]);
    assert_eq!(moore.status.code(), Some(1));
    assert!(stdout(&moore).contains("FAIL Moore cycle"));
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &[
            "e2",
            "--spec",
            "fixtures/wedge_pq_22.json",
            "--s",
            "0..5",
            "--t",
            "1..10",
            "--format",
            "json",
        ][..],
        &["verify", "--suite", "lie", "--seed", "11"],
        &["verify", "--suite", "ledger", "--p", "3", "--q", "5"],
        &[
            "formula",
            "--target",
            "phi",
            "--degrees",
            "1,2,1,3",
            "--format",
            "latex",
        ],
    ] {
        let a = hhop(args);
        let b = hhop(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(!a.stdout.is_empty());
    }
}

#[test]
fn json_reports_validate() {
    let v = schema("report.schema.json");
    let requests: [&[&str]; 8] = [
        &["formula", "--target", "omega_triple"],
        &["formula", "--target", "bmf_alpha"],
        &[
            "e2",
            "--spec",
            "fixtures/cpn_3.json",
            "--s",
            "0..1",
            "--t",
            "1..4",
            "--integral",
        ],
        &["verify", "--suite", "massey"],
        &[
            "verify",
            "--suite",
            "moore",
            "--target",
            "omega_hat",
            "--element",
            "[s0 iota_p, s1 iota_q]",
            "--level",
            "2",
        ],
        &["splice", "--target", "gamma", "--n", "3"],
        &["hall", "--degrees", "2,3", "--t", "1..9"],
        &["fixtures"],
    ];
    for args in requests {
        let report = json(args);
        let errors: Vec<String> = v.iter_errors(&report).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
    }
    let bad = serde_json::json!({"command": "formula", "subject": "x", "passed": "yes"});
    assert!(!v.is_valid(&bad));
}

#[test]
fn spec_files_validate() {
    let v = schema("resolution.schema.json");
    let mut n = 0;
    for entry in std::fs::read_dir(fixtures()).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_some_and(|e| e == "json") {
            let value: Value =
                serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
            assert!(v.is_valid(&value), "{}", path.display());
            n += 1;
        }
    }
    assert!(n >= 3);
}

/// The e2 table of the spec example, checked against the library slice by
/// slice and for rank-nullity; text and JSON carry the same numbers.
#[test]
fn e2_text_and_json_agree() {
    let args = [
        "e2",
        "--spec",
        "fixtures/wedge_pq_22.json",
        "--s",
        "0..5",
        "--t",
        "1..10",
    ];
    let report = json(&args);
    let rows = report["ranks"].as_array().unwrap();
    assert_eq!(rows.len(), 60);
    let text = stdout(&hhop(&args));
    let table: Vec<Vec<u64>> = text
        .lines()
        .skip(2)
        .map(|l| {
            l.split_whitespace()
                .take(6)
                .map(|x| x.parse().unwrap())
                .collect()
        })
        .collect();
    let spec = std::fs::read_to_string(fixtures().join("wedge_pq_22.json")).unwrap();
    let x = ResolutionSpec::from_json(&spec).unwrap().build().unwrap();
    for (row, line) in rows.iter().zip(&table) {
        let get = |k: &str| row[k].as_u64().unwrap();
        let fields = [
            get("s"),
            get("t"),
            get("dim"),
            get("rank_in"),
            get("rank_out"),
            get("e2"),
        ];
        assert_eq!(&fields[..], &line[..]);
        assert_eq!(get("dim"), get("rank_in") + get("rank_out") + get("e2"));
        let h = e2_report(
            &x,
            get("s") as usize,
            get("t") as u32,
            false,
            SliceBounds::default(),
        )
        .unwrap();
        assert_eq!(h.rational_rank as u64, get("e2"));
    }
    // The k = l = 2 representative lives in (4, 6).
    let cell = rows.iter().find(|r| r["s"] == 4 && r["t"] == 6).unwrap();
    assert!(cell["e2"].as_u64().unwrap() > 0);
}

#[test]
fn fixture_directory_override() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::copy(fixtures().join("cpn_3.json"), dir.path().join("cpn_3.json")).unwrap();
    std::fs::create_dir(dir.path().join("golden")).unwrap();
    std::fs::write(
        dir.path().join("golden/wrong.golden"),
        "# deliberately stale\n$ hhop hall --degrees 1 --t 2 --counts\nhall degrees=1 t=2..2\ndegree 2: 7\n",
    )
    .unwrap();
    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_hhop"))
            .args(args)
            .current_dir(dir.path().parent().unwrap())
            .env("HHOP_FIXTURES", dir.path())
            .output()
            .unwrap()
    };
    let o = run(&["fixtures"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("PASS cpn_3.json"), "{out}");
    assert!(out.contains("FAIL golden/wrong.golden"), "{out}");
    assert!(
        out.contains("expected \"degree 2: 7\", got \"degree 2: 1\""),
        "{out}"
    );
    let e2 = run(&[
        "e2",
        "--spec",
        "fixtures/cpn_3.json",
        "--s",
        "0",
        "--t",
        "1",
    ]);
    assert_eq!(e2.status.code(), Some(0));
}
