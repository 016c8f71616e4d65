//! End-to-end runs of the `swscan` binary.

use std::path::Path;
use std::process::{Command, Output};

fn swscan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_swscan"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = swscan(args);
    assert!(
        out.status.success(),
        "swscan {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

/// Data rows split into fields, header and comments dropped.
fn rows(tsv: &str) -> Vec<Vec<String>> {
    tsv.lines()
        .skip(1)
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.split('\t').map(str::to_string).collect())
        .collect()
}

fn column(tsv: &str, name: &str) -> Vec<String> {
    let header: Vec<&str> = tsv.lines().next().unwrap().split('\t').collect();
    let at = header.iter().position(|h| *h == name).unwrap();
    rows(tsv)
        .into_iter()
        .map(|mut r| r.swap_remove(at))
        .collect()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

const QUERIES: &str = ">q1 first\nACGTTGCAACGTAGGCTAGCTAGGATCCGATCGATGCA\n>q2\nttgacaggcatcgatcgtagctagctaacgt\nACGTN\n\n>q3\r\nGATTACA\r\n";
const TARGETS: &str = ">t1\nACGTTGCAACGTAGGCTAGCATCCGATCGATGCA\n>t2\nAAAAAAAAAAAAAAAAAAAAAAAAAAAAAAA\n>t3\nGGATTTACAGATTACA\n";

#[test]
fn scan_and_scalar_agree_on_fasta_input() {
    let dir = tempfile::tempdir().unwrap();
    let q = write(dir.path(), "q.fa", QUERIES);
    let t = write(dir.path(), "t.fa", TARGETS);
    let scalar = stdout(&[
        "--kernel",
        "scalar",
        "--query",
        &q,
        "--target",
        &t,
        "--match",
        "2",
        "--mismatch",
        "-3",
    ]);
    assert_eq!(rows(&scalar).len(), 9);
    for lanes in ["2", "8", "64"] {
        let scan = stdout(&[
            "--kernel",
            "scan",
            "--lanes",
            lanes,
            "--query",
            &q,
            "--target",
            &t,
            "--match",
            "2",
            "--mismatch",
            "-3",
        ]);
        assert_eq!(column(&scan, "score"), column(&scalar, "score"));
        assert_eq!(column(&scan, "query_id"), column(&scalar, "query_id"));
        assert_eq!(column(&scan, "target_id"), column(&scalar, "target_id"));
        assert!(column(&scan, "overflow").iter().all(|o| o == "0"));
    }
    assert_eq!(column(&scalar, "lanes"), vec!["1"; 9]);
}

#[test]
fn early_exit_only_saves_passes() {
    let common = [
        "--random",
        "40",
        "--len-min",
        "20",
        "--len-max",
        "120",
        "--seed",
        "5",
        "--lanes",
        "16",
        "--gap-open",
        "2",
        "--gap-extend",
        "1",
    ];
    let lazy = stdout(&[&common[..], &["--kernel", "lazyf"]].concat());
    let full = stdout(&[&common[..], &["--kernel", "lazyf-noexit"]].concat());
    assert_eq!(column(&lazy, "score"), column(&full, "score"));
    for (a, b) in column(&lazy, "correction_passes")
        .iter()
        .zip(column(&full, "correction_passes"))
    {
        assert!(a.parse::<u64>().unwrap() <= b.parse::<u64>().unwrap());
    }
}

#[test]
fn output_is_deterministic_apart_from_time() {
    let dir = tempfile::tempdir().unwrap();
    let runs: Vec<String> = (0..2)
        .map(|i| {
            let out = dir.path().join(format!("run{i}.tsv"));
            let out = out.to_str().unwrap();
            stdout(&[
                "--random",
                "25",
                "--seed",
                "77",
                "--kernel",
                "lazyf",
                "--threads",
                if i == 0 { "1" } else { "3" },
                "--out",
                out,
            ]);
            std::fs::read_to_string(out).unwrap()
        })
        .collect();
    let strip = |tsv: &str| -> Vec<String> {
        tsv.lines()
            .map(|l| {
                let mut f: Vec<&str> = l.split('\t').collect();
                if f.len() == 9 {
                    f.remove(6);
                }
                f.join("\t")
            })
            .collect()
    };
    assert_eq!(strip(&runs[0]), strip(&runs[1]));
    assert_eq!(runs[0].lines().last(), Some("# seed=77"));
    assert_eq!(rows(&runs[0]).len(), 25);
}

#[test]
fn matrix_file_and_bench() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(
        dir.path(),
        "m.txt",
        "# toy\nA C G T\n5 -4 -4 -4\n-4 5 -4 -4\n-4 -4 5 -4\n-4 -4 -4 5\n",
    );
    let q = write(dir.path(), "q.fa", ">q\nACGTACGT\n");
    let t = write(dir.path(), "t.fa", ">t\nACGTACGT\n>u\nACGXACGT\n");
    let tsv = stdout(&[
        "--matrix", &m, "--query", &q, "--target", &t, "--bench", "3",
    ]);
    assert_eq!(column(&tsv, "score"), ["40", "31"]);
}

#[test]
fn errors_give_one_line_and_nonzero_status() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(dir.path(), "good.fa", ">a\nACGT\n");
    let cases = [
        (
            write(dir.path(), "noheader.fa", "ACGT\n"),
            "malformed FASTA",
        ),
        (
            write(dir.path(), "empty.fa", ">a\n>b\nAC\n"),
            "empty sequence",
        ),
        (
            write(dir.path(), "residue.fa", ">a\nACGU\n"),
            "illegal residue",
        ),
    ];
    for (bad, needle) in &cases {
        let out = swscan(&["--query", &good, "--target", bad]);
        assert!(!out.status.success());
        assert!(out.stdout.is_empty(), "no rows before the error");
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.lines().count(), 1, "{err}");
        assert!(err.contains(needle), "{err}");
    }
    for args in [
        vec!["--random", "3", "--lanes", "12"],
        vec!["--random", "3", "--gap-open", "1", "--gap-extend", "2"],
        vec!["--random", "3", "--len-min", "9", "--len-max", "2"],
        vec!["--query", &good, "--target", "/nonexistent/t.fa"],
    ] {
        let out = swscan(&args);
        assert!(!out.status.success(), "{args:?}");
        assert_eq!(String::from_utf8(out.stderr).unwrap().lines().count(), 1);
    }
}

#[test]
fn overflow_is_reported() {
    let tsv = stdout(&[
        "--random",
        "1",
        "--len-min",
        "700",
        "--len-max",
        "700",
        "--match",
        "100",
        "--mismatch",
        "100",
        "--kernel",
        "scan",
    ]);
    assert_eq!(column(&tsv, "overflow"), ["1"]);
    let tsv = stdout(&[
        "--random",
        "1",
        "--len-min",
        "700",
        "--len-max",
        "700",
        "--match",
        "100",
        "--mismatch",
        "100",
        "--kernel",
        "scalar",
    ]);
    assert_eq!(column(&tsv, "overflow"), ["1"]);
    assert_eq!(column(&tsv, "score"), ["70000"]);
}
