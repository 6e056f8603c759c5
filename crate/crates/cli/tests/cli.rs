use std::process::Command;

use primcone::hilbclass::{parse_hilb_row, HilbRow};
use primcone::t1class::T1Row;
use primcone_cli::{BwbRow, CandidateRow, ConeRow, FlatnessRow, JordanRow};
use serde::de::DeserializeOwned;
use serde::Serialize;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_primcone")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

/// Parses JSON output, re-emits it, and checks the text is unchanged.
fn round_trip<T: Serialize + DeserializeOwned>(args: &[&str]) -> T {
    let mut full = args.to_vec();
    full.extend(["--output", "json"]);
    let (code, out, err) = run(&full);
    assert_eq!(code, 0, "{args:?}: {err}");
    let v: T = serde_json::from_str(&out).unwrap();
    assert_eq!(serde_json::to_string_pretty(&v).unwrap(), out.trim_end(), "{args:?}");
    v
}

#[test]
fn hilbert_table_examples() {
    let rows: Vec<HilbRow> = round_trip(&["classify-hilbert", "--max-rank", "7"]);
    let find = |t: &str, l: &[i64]| rows.iter().find(|r| r.cartan_type == t && r.lambda == l).cloned();
    assert_eq!(find("B3", &[0, 0, 1]).unwrap().total, 1);
    assert_eq!(find("B3", &[0, 0, 2]).unwrap().total, 1);
    assert_eq!(find("E7", &[1, 0, 0, 0, 0, 0, 0]).unwrap().total, 0);
    let row = serde_json::to_string(&rows[0]).unwrap();
    assert_eq!(parse_hilb_row(&row).unwrap(), rows[0]);
    let empty: Vec<HilbRow> = round_trip(&["classify-hilbert", "--max-rank", "0"]);
    assert!(empty.is_empty());
}

#[test]
fn candidates_for_one_type() {
    let rows: Vec<CandidateRow> = round_trip(&["candidates", "--type", "G2"]);
    assert!(rows.iter().all(|r| r.cartan_type == "G2" && r.label.is_some()));
    let (code, _, _) = run(&["candidates", "--type", "Q7"]);
    assert_eq!(code, 2);
    // Families extend to any rank.
    let (code, _, _) = run(&["candidates", "--type", "A9"]);
    assert_eq!(code, 0);
    // Products other than A1xA1 are not in the list.
    let (code, out, err) = run(&["candidates", "--type", "A1xA2"]);
    assert_eq!(code, 1, "{out}{err}");
}

#[test]
fn t1_table_round_trips() {
    let rows: Vec<T1Row> = round_trip(&["classify-t1", "--max-rank", "3"]);
    assert!(rows.iter().all(|r| r.matches_theorem));
    assert!(rows.iter().any(|r| r.cartan_type == "A1" && r.lambda == [12]));
}

#[test]
fn bwb_queries() {
    let row: BwbRow = round_trip(&["bwb", "--type", "A1", "--parabolic", "1", "--weight", "-3"]);
    assert_eq!(row.euler_characteristic, -2);
    let row: BwbRow = round_trip(&["bwb", "--type", "A2", "--parabolic", "1,0", "--weight", "-1,0"]);
    assert_eq!(row.euler_characteristic, 0);
    let (code, _, err) = run(&["bwb", "--type", "A2", "--parabolic", "1,0", "--weight", "0,-1,2"]);
    assert_eq!(code, 2, "{err}");
    // Not dominant on the Levi of ω₁.
    let (code, _, _) = run(&["bwb", "--type", "A2", "--parabolic", "1,0", "--weight", "1,-1"]);
    assert_eq!(code, 2);
}

#[test]
fn cone_runs() {
    let row: ConeRow = round_trip(&["t1-cone", "--hankel", "5"]);
    assert_eq!(row.total, 6);
    let row: ConeRow = round_trip(&["t1-cone", "--segre", "2", "2"]);
    assert_eq!(row.total, 3);
    let row: ConeRow = round_trip(&["t1-cone", "--segre", "1", "2", "--window", "-4..3"]);
    assert_eq!((row.total, row.window), (0, (-4, 3)));
    let (code, _, _) = run(&["t1-cone", "--hankel", "3", "--segre", "1", "1"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["t1-cone"]);
    assert_eq!(code, 2);
    let (code, _, err) = run(&["t1-cone", "--hankel", "4", "--window", "-1..2"]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn flatness_run() {
    let row: FlatnessRow = round_trip(&["flatness", "--m", "3", "--n", "1", "--triviality-samples", "6"]);
    assert!(row.flatness.flat && row.flatness.minors_are_groebner);
    assert!(row.triviality.zero_is_trivial);
    assert_eq!(row.triviality.nonzero_trivial, 0);
    let (code, _, _) = run(&["flatness", "--m", "1", "--n", "1"]);
    assert_eq!(code, 2);
}

#[test]
fn jordan_rows() {
    let rows: Vec<JordanRow> = round_trip(&["jordan-check", "--label", "J3(3)"]);
    let r = &rows[0];
    assert_eq!(r.xref.symmetric[0].case, "A1");
    assert_eq!(r.xref.hilbert_cases(), ["H2"]);
    assert_eq!(r.identity_violations, 0);
    let rows: Vec<JordanRow> = round_trip(&["jordan-check", "--label", "J5"]);
    assert_eq!(rows[0].xref.symmetric[0].case, "A5");
    assert_eq!(rows[0].xref.hilbert_cases(), ["H7"]);
    assert_eq!((rows[0].descriptor.dim, rows[0].descriptor.rank), (27, 3));
    for bad in ["J9", "J2(2)", "K1(3)"] {
        let (code, _, _) = run(&["jordan-check", "--label", bad]);
        assert_eq!(code, 2, "{bad}");
    }
}

#[test]
fn text_tables_are_aligned() {
    let (code, out, _) = run(&["candidates", "--type", "B3"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines[0].starts_with("type"));
    let col = lines[0].find("label").unwrap();
    for l in &lines[1..] {
        assert!(l[col..].starts_with('C'), "{l}");
    }
    let (code, _, _) = run(&["--help"]);
    assert_eq!(code, 0);
    let (code, _, _) = run(&["no-such-command"]);
    assert_eq!(code, 2);
}
