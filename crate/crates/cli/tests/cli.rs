use std::process::{Command, Output};

use prym_cli::report::{ScanReport, TableReport, TripleReport, VerifyReport};
use serde::de::DeserializeOwned;
use serde::Serialize;

fn prym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_prym"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_of<T: DeserializeOwned>(args: &[&str]) -> (T, String) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = prym(&all);
    let text = stdout(&o);
    (
        serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}")),
        text,
    )
}

fn round_trips<T: DeserializeOwned + Serialize + PartialEq + std::fmt::Debug>(args: &[&str]) -> T {
    let (report, text): (T, String) = json_of(args);
    let again = serde_json::to_string_pretty(&report).unwrap() + "\n";
    assert_eq!(again, text);
    assert_eq!(serde_json::from_str::<T>(&again).unwrap(), report);
    report
}

#[test]
fn table_of_sym3() {
    let t: TableReport = round_trips(&["table", "--group", "sym(3)"]);
    assert_eq!(t.schema, 1);
    assert_eq!(t.classes.len(), 3);
    let degrees: Vec<u64> = t.characters.iter().map(|c| c.degree).collect();
    assert_eq!(degrees, vec![1, 1, 2]);
    let (p, _): (TableReport, _) = json_of(&["table", "--group", "perm(3;(1,2);(1,2,3))"]);
    assert_eq!(p.characters, t.characters);
    assert_eq!(p.classes, t.classes);
}

#[test]
fn dihedral_values_use_roots_of_unity() {
    let t: TableReport = round_trips(&["table", "--group", "dihedral(5)"]);
    let deg2: Vec<_> = t.characters.iter().filter(|c| c.degree == 2).collect();
    assert_eq!(deg2.len(), 2);
    assert!(deg2
        .iter()
        .all(|c| c.values.iter().any(|v| v.contains("E(5)"))));
}

#[test]
fn scan_examples() {
    let a5: ScanReport = round_trips(&["scan", "--group", "alt(5)"]);
    assert!(a5.complete);
    assert!(a5
        .triples
        .iter()
        .any(|t| t.subgroup.order == 6 && t.reps[0].degree == 4 && t.hecke.q == 3));
    let s3: ScanReport = round_trips(&["scan", "--group", "sym(3)"]);
    assert!(!s3.triples.is_empty() && s3.triples.iter().all(|t| t.hecke.q == 1));
    let rot: ScanReport = round_trips(&["scan", "--group", "rot(weylD(4))"]);
    assert!(rot.triples.iter().any(|t| t.hecke.q == 2));
}

#[test]
fn signatures_for_the_pair_stabilizer() {
    let r: TripleReport = round_trips(&[
        "signatures",
        "--group",
        "alt(5)",
        "--subgroup",
        "gens:(1,2)(4,5);(1,2,3)",
        "--reps",
        "degree:4",
        "--max-branch-points",
        "6",
    ]);
    assert!(r.hypothesis.pass);
    assert_eq!(r.hecke.as_ref().unwrap().q, 3);
    let sigs = r.signatures.unwrap();
    assert_eq!(sigs[0].entries.len(), 1);
    assert_eq!((sigs[0].entries[0].m, sigs[0].dim_p), (5, 1));
    assert_eq!(sigs[0].realizable, "yes");
    assert!(sigs
        .iter()
        .all(|s| s.dim_p == s.branch_points as i64 - 4 && s.certified));
}

#[test]
fn order_80_signatures() {
    let r: TripleReport = round_trips(&[
        "signatures",
        "--group",
        "rot(weylD(5))",
        "--subgroup",
        "order:80",
        "--reps",
        "degree:3",
        "--max-branch-points",
        "4",
    ]);
    assert_eq!(r.hecke.unwrap().q, 2);
    for label in ["C3", "C6", "C6'"] {
        let row = r.admissible.iter().find(|a| a.label == label).unwrap();
        assert_eq!(row.a, 0);
        assert!(row.generates);
    }
    for s in r.signatures.unwrap() {
        let on_named: u32 = s
            .entries
            .iter()
            .filter(|e| ["C3", "C6", "C6'"].contains(&e.class.as_str()))
            .map(|e| e.m)
            .sum();
        if on_named == s.branch_points {
            assert_eq!(s.dim_p, 2 * on_named as i64 - 6);
        }
    }
}

#[test]
fn no_admissible_classes_gives_an_empty_list() {
    let r: TripleReport = round_trips(&[
        "signatures",
        "--group",
        "alt(5)",
        "--subgroup",
        "gens:(1,2)(3,4)",
        "--reps",
        "index:1",
    ]);
    assert!(r.hypothesis.pass);
    assert!(r.admissible.iter().all(|a| a.a != 0));
    assert_eq!(r.signatures, Some(Vec::new()));
    assert!(r.note.is_some());
}

#[test]
fn output_is_identical_across_thread_counts() {
    for args in [
        vec!["scan", "--group", "alt(6)", "--format", "json"],
        vec!["scan", "--group", "weylD(4)", "--format", "csv"],
        vec![
            "signatures",
            "--group",
            "rot(weylD(5))",
            "--subgroup",
            "order:80",
            "--reps",
            "degree:3",
            "--max-branch-points",
            "4",
            "--format",
            "json",
        ],
    ] {
        let one = prym(&[args.as_slice(), &["--threads", "1"]].concat());
        let four = prym(&[args.as_slice(), &["--threads", "4"]].concat());
        assert!(one.status.success());
        assert_eq!(one.stdout, four.stdout, "{args:?}");
        assert_eq!(
            prym(&[args.as_slice(), &["--threads", "1"]].concat()).stdout,
            one.stdout
        );
    }
}

#[test]
fn exit_codes() {
    assert_eq!(prym(&["table", "--group", "sym(3"]).status.code(), Some(2));
    assert_eq!(prym(&["table", "--group", "sym(9)"]).status.code(), Some(3));
    assert_eq!(prym(&["scan"]).status.code(), Some(2));
    assert_eq!(prym(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        prym(&["table", "--group", "sym(3)", "--threads", "0"])
            .status
            .code(),
        Some(2)
    );
    let failing = prym(&[
        "admissible",
        "--group",
        "sym(3)",
        "--subgroup",
        "gens:(1,2,3)",
        "--reps",
        "index:2",
    ]);
    assert_eq!(failing.status.code(), Some(1));
    assert_eq!(
        prym(&[
            "admissible",
            "--group",
            "sym(3)",
            "--subgroup",
            "gens:(1,4)"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        prym(&["verify-paper", "--case", "nope"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_cases() {
    let r: VerifyReport = round_trips(&["verify-paper", "--case", "s3-oracle"]);
    assert!(r.pass);
    let o = prym(&["verify-paper", "--case", "prop5.3", "--p", "3"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("PASS prop5.3"));
    let o = prym(&["verify-paper", "--case", "prop5.1-small"]);
    assert!(o.status.success());
}

#[test]
fn help_documents_csv_columns() {
    let o = prym(&["--help"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("CSV columns"));
    assert!(text.contains("subgroup_order,subgroup_index"));
}
