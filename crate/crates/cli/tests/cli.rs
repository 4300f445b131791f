//! End-to-end behaviour of the `w2chi` binary and its output formats.

use std::process::Command;

use w2chi::commands::{cmd_omega2, omega2_records};
use w2chi::records::{read_csv, read_json, write_csv, write_json, Basis};
use w2chi::render::parse_table;
use w2chi::Format;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_w2chi"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn printed_schur_table() -> Vec<(u32, u32, String)> {
    include_str!("../../core/tests/data/schur_table.txt")
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let mut it = l.splitn(3, ' ');
            let g = it.next().unwrap().parse().unwrap();
            let n = it.next().unwrap().parse().unwrap();
            (g, n, it.next().unwrap().trim().to_string())
        })
        .collect()
}

#[test]
fn schur_table_text_matches_published_cells() {
    let (code, out, _) = run(&["omega2", "--max-genus", "10", "--max-points", "5", "--basis", "schur"]);
    assert_eq!(code, 0);
    let cells = parse_table(&out);
    assert_eq!(cells, printed_schur_table());
}

#[test]
fn genus_zero_four_points_has_one_nonzero_cell() {
    let (code, out, _) = run(&["omega2", "--max-genus", "0", "--max-points", "4"]);
    assert_eq!(code, 0);
    let nonzero: Vec<_> = parse_table(&out).into_iter().filter(|c| c.2 != "0").collect();
    assert_eq!(nonzero, vec![(0, 4, "s_{4}".to_string())]);
}

#[test]
fn json_and_csv_round_trip() {
    for basis in [Basis::Schur, Basis::Power] {
        let records = omega2_records(4, 4, basis).unwrap();
        let mut json = Vec::new();
        write_json(&records, &mut json).unwrap();
        assert_eq!(read_json(json.as_slice()).unwrap(), records);
        let mut csv = Vec::new();
        write_csv(&records, &mut csv).unwrap();
        assert_eq!(read_csv(csv.as_slice()).unwrap(), records);
    }
}

#[test]
fn out_file_receives_the_same_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cells.json");
    let (code, stdout, _) = run(&[
        "omega2", "--max-genus", "3", "--max-points", "3", "--format", "json", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, cmd_omega2(3, 3, Basis::Schur, Format::Json).unwrap());
}

#[test]
fn output_is_identical_across_thread_counts() {
    let args = ["omega2", "--max-genus", "6", "--max-points", "4", "--basis", "power", "--format", "csv"];
    let one = bin().args(args).env("W2_THREADS", "1").output().unwrap();
    let four = bin().args(args).env("W2_THREADS", "4").output().unwrap();
    assert!(one.status.success() && four.status.success());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn zero_point_csv_rows() {
    let (code, out, err) = run(&["chi-mg", "--max-genus", "30", "--signs"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "g,chi2,sign,log1p_abs");
    assert_eq!(lines[9], "8,-1,-1,0.693147");
    assert!(lines[26].starts_with("25,-43135,-1,"));
    assert!(err.contains("holds for 23 <= g <= 30"), "{err}");
}

#[test]
fn laurent_polynomials_print_in_canonical_order() {
    assert_eq!(run(&["laurent", "--what", "A", "--genus", "1"]).1, "-1/2*P1^2*P2^-1 + 1/2\n");
    assert_eq!(run(&["laurent", "--what", "C", "--genus", "1"]).1, "1/2*P1^2*P2^-1 + 1/2\n");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["omega2", "--max-genus", "x"]).0, 2);
    assert_eq!(run(&["laurent", "--what", "A", "--genus", "0"]).0, 2);
    assert_eq!(run(&["nonsense"]).0, 2);
    let bad_threads = bin()
        .args(["laurent", "--what", "A", "--genus", "1"])
        .env("W2_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad_threads.status.code(), Some(2));
}

#[test]
fn verify_suites_pass() {
    let (code, out, err) = run(&["verify", "--suite", "oracle", "--max-genus", "3", "--max-points", "5"]);
    assert_eq!(code, 0, "{out}{err}");
    assert!(out.contains("PASS graphs-cell-0-5"));
    assert!(out.contains("PASS legless-graphs-vs-product"));
    let (code, out, _) = run(&["verify", "--suite", "identities"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 7);
    let (code, out, _) = run(&["verify", "--suite", "pipeline", "--max-genus", "4", "--max-points", "3"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("PASS pipeline-vs-closed"));
}
