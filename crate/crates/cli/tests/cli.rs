mod common;

use common::{fixtures, msd, msd_env, stderr, stdout};
use msd_cli::parse_reduce_steps;
use msd_core::canon::canonical_form;
use msd_core::xform::replay_from_c2;
use msd_core::{digraph6, Digraph};

#[test]
fn enum_counts_and_records() {
    let o = msd(&["enum", "--order", "4", "--format", "count"], None);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "m=4:1 m=5:2 m=6:2 total=5\n");

    let o = msd(&["enum", "--order", "2"], None);
    assert_eq!(stdout(&o), "&AW\n");

    let o = msd(
        &["enum", "--order", "8", "--arcs", "14", "--format", "count"],
        None,
    );
    assert_eq!(stdout(&o), "m=14:23 total=23\n");

    let o = msd(&["enum", "--order", "6", "--arcs", "6"], None);
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 1);
    let c6 = digraph6::decode(&lines[0]).unwrap();
    assert_eq!(
        canonical_form(&c6),
        canonical_form(&Digraph::cycle(6).unwrap())
    );
}

#[test]
fn enum_records_are_sorted_canonical_and_minimal() {
    let o = msd(&["enum", "--order", "6"], None);
    let lines: Vec<&str> = std::str::from_utf8(&o.stdout).unwrap().lines().collect();
    assert_eq!(lines.len(), 63);
    assert!(lines.windows(2).all(|w| w[0] < w[1]));
    for l in lines {
        let d = digraph6::decode(l).unwrap();
        assert!(d.is_minimal_strong());
        assert_eq!(canonical_form(&d).as_str(), l);
    }
}

#[test]
fn enum_rejects_bad_order() {
    let o = msd(&["enum", "--order", "0"], None);
    assert_eq!(o.status.code(), Some(2));
    let o = msd(&["enum", "--order", "63"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_stable_across_thread_counts_and_spilling() {
    let dir = tempfile::tempdir().unwrap();
    let scratch = dir.path().to_str().unwrap();
    let base = stdout(&msd(&["enum", "--order", "8", "--jobs", "1"], None));
    let many = stdout(&msd(&["enum", "--order", "8", "--jobs", "4"], None));
    let spilled = msd_env(
        &["enum", "--order", "8", "--jobs", "3", "--budget", "100"],
        None,
        &[("MSD_SCRATCH", scratch)],
    );
    assert!(spilled.status.success(), "{}", stderr(&spilled));
    assert_eq!(base, many);
    assert_eq!(base, stdout(&spilled));
    assert_eq!(base.lines().count(), 1526);
}

#[test]
fn enum_writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("five.d6");
    let o = msd(
        &["enum", "--order", "5", "--out", path.to_str().unwrap()],
        None,
    );
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 15);
}

#[test]
fn verify_embedded_tables() {
    let o = msd(&["verify", "--table", "1", "--max-order", "8"], None);
    assert!(o.status.success(), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("table=1 n=7 m=11 expected=66 got=66 ok"));
    assert!(out.ends_with("OK table 1 through order 8\n"));

    let o = msd(&["verify", "--table", "2", "--max-order", "8"], None);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("table=2 n=8 delta expected=10 got=10 ok"));
}

#[test]
fn verify_reports_a_corrupted_cell() {
    let dump = stdout(&msd(
        &[
            "verify",
            "--table",
            "1",
            "--max-order",
            "6",
            "--dump-fixture",
        ],
        None,
    ));
    assert!(dump.contains("cell 6 8 27\n"));
    let corrupted = dump.replace("cell 6 8 27\n", "cell 6 8 28\n");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table1.txt");
    std::fs::write(&path, corrupted).unwrap();

    let o = msd(
        &[
            "verify",
            "--table",
            "1",
            "--max-order",
            "6",
            "--fixture",
            path.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("table=1 n=6 m=8 expected=28 got=27 MISMATCH"));
    assert!(out.contains("FAIL first mismatch: table=1 n=6 m=8"));
    assert!(stderr(&o).contains("n=6 m=8"));
}

#[test]
fn verify_rejects_bad_arguments() {
    assert_eq!(
        msd(&["verify", "--table", "3", "--max-order", "5"], None)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        msd(&["verify", "--table", "1", "--max-order", "15"], None)
            .status
            .code(),
        Some(2)
    );
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "cell 3 3 1\ncell 3 x 1\n").unwrap();
    let o = msd(
        &[
            "verify",
            "--table",
            "1",
            "--max-order",
            "3",
            "--fixture",
            path.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"));
}

#[test]
fn check_reports_structure() {
    let c3 = digraph6::encode(&Digraph::cycle(3).unwrap());
    assert_eq!(c3, "&BP_");
    let chord = digraph6::encode(&Digraph::cycle(3).unwrap().with_arc(0, 2).unwrap());
    let path = digraph6::encode(&Digraph::from_arcs(3, &[(0, 1), (1, 2)]).unwrap());
    let input = format!("{c3}\n\n{chord}\n{path}\n");
    let o = msd(&["check", "-"], Some(&input));
    assert!(o.status.success());
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines[0], "strong minimal linear=3 m=3 cyclomatic=1");
    assert_eq!(
        lines[1],
        "strong non-minimal linear=1 m=4 cyclomatic=2 transitive=[0→2]"
    );
    assert!(lines[2].starts_with("not-strong non-minimal"));
    assert!(lines[2].ends_with("cyclomatic=-"));
}

#[test]
fn malformed_records_name_the_line() {
    let o = msd(&["check", "-"], Some("&AW\n&B!!\n"));
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));

    let o = msd(&["charpoly", "-"], Some("&AWW\n"));
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 1"));
}

#[test]
fn reduce_round_trips() {
    let o = msd(&["reduce", "-"], Some("&AW\n"));
    assert_eq!(stdout(&o), "&AW n=2 steps=0\n");

    let d = fixtures()["cospectral_a"].clone();
    let input = digraph6::encode(&d);
    let o = msd(&["reduce", "--trace", "-"], Some(&input));
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.starts_with(&format!("{input} n=5 steps=3\n")));
    let steps = parse_reduce_steps(&out);
    assert_eq!(steps.len(), 3);
    let rebuilt = replay_from_c2(&steps).unwrap();
    assert_eq!(canonical_form(&rebuilt), canonical_form(&d));
    // the traced records are minimal and shrink by one vertex per step
    for (i, line) in out.lines().skip(1).enumerate() {
        let d = digraph6::decode(line.split_whitespace().last().unwrap()).unwrap();
        assert_eq!(d.order(), 4 - i);
        assert!(d.is_minimal_strong());
    }
}

#[test]
fn reduce_rejects_non_minimal_input() {
    let twin = digraph6::encode(&fixtures()["twin_non_minimal"]);
    let o = msd(&["reduce", "-"], Some(&format!("&AW\n{twin}\n")));
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("line 2"));
}

#[test]
fn charpoly_lines() {
    let c5 = digraph6::encode(&Digraph::cycle(5).unwrap());
    let fx = fixtures();
    let input = format!(
        "{c5}\n{}\n{}\n",
        digraph6::encode(&fx["cospectral_a"]),
        digraph6::encode(&fx["cospectral_b"])
    );
    let o = msd(&["charpoly", "-"], Some(&input));
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines, ["1,0,0,0,0,-1", "1,0,-1,-2,0,0", "1,0,-1,-2,0,0"]);
}

#[test]
fn charpoly_overflow_exit_code() {
    let k40 = digraph6::encode(&Digraph::complete(40).unwrap());
    let o = msd(&["charpoly", "-"], Some(&k40));
    assert_eq!(o.status.code(), Some(4), "{}", stdout(&o));
}

#[test]
fn isospectral_order_five() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("iso5.txt");
    let o = msd(
        &[
            "isospectral",
            "--order",
            "5",
            "--out",
            path.to_str().unwrap(),
        ],
        None,
    );
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "# order=5 digraphs=15 classes=14 sum=14 delta=0\n"
    );
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 14);
    let shared = text
        .lines()
        .find(|l| l.starts_with("1,0,-1,-2,0,0 "))
        .unwrap();
    assert_eq!(shared.split_whitespace().count(), 3);
}

#[test]
fn oracle_orders() {
    for (n, total) in [(4, 5), (5, 15)] {
        let o = msd(&["oracle", "--order", &n.to_string()], None);
        assert!(o.status.success());
        assert!(stdout(&o).ends_with(&format!("brute={total} enum={total} OK\n")));
    }
    let o = msd(&["oracle", "--order", "6"], None);
    assert_eq!(o.status.code(), Some(2));
}
