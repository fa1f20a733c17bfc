use std::process::{Command, Output};

use ctxgram::subregular::{classify_with, ClassifyOptions, FamilyReport};
use ctxgram::{regular::compile_str, Alphabet};

fn ctxgram(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ctxgram"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classify_even_as() {
    let o = ctxgram(&["classify", "--regex", "(aa)*", "--alphabet", "a"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    for (f, v) in [("COMM", "yes"), ("NC", "no"), ("PS", "no")] {
        let line = s
            .lines()
            .find(|l| l.split_whitespace().next() == Some(f))
            .unwrap();
        assert_eq!(line.split_whitespace().nth(1), Some(v), "{line}");
    }
}

#[test]
fn machine_output_round_trips() {
    let o = ctxgram(&[
        "--format",
        "machine",
        "classify",
        "--regex",
        "b*c",
        "--alphabet",
        "bc",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let parsed: FamilyReport = serde_json::from_str(&stdout(&o)).unwrap();
    let u = Alphabet::from_chars("bc").unwrap();
    let d = compile_str("b*c", &u).unwrap();
    let r = ctxgram::RegexAst::parse("b*c", &u).unwrap();
    let opts = ClassifyOptions {
        language: Some("b*c".into()),
        ..ClassifyOptions::default()
    };
    assert_eq!(parsed, classify_with(&d, &u, Some(&r), &opts).unwrap());
    assert_eq!(
        serde_json::to_string_pretty(&parsed).unwrap() + "\n",
        stdout(&o)
    );
}

#[test]
fn runs_are_deterministic() {
    let args = [
        "--format",
        "machine",
        "witness",
        "run",
        "L7",
        "--n",
        "2",
        "--max-len",
        "6",
    ];
    let a = ctxgram(&args);
    let b = ctxgram(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}

#[test]
fn witness_l2_passes() {
    let o = ctxgram(&["witness", "run", "L2", "--max-len", "8"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("closed form"));
}

#[test]
fn membership_and_exit_codes() {
    let o = ctxgram(&[
        "member",
        "--grammar",
        "tests/data/l1.ctx",
        "--word",
        "daaebbcabab",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("daaebbcabab: true"));
    let o = ctxgram(&[
        "member",
        "--grammar",
        "tests/data/l1.ctx",
        "--word",
        "daaaebbbcababab",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let o = ctxgram(&["member", "--grammar", "tests/data/l1.ctx", "--word", "xyz"]);
    assert_eq!(o.status.code(), Some(2));
    let o = ctxgram(&["classify", "--regex", "(a", "--alphabet", "a"]);
    assert_eq!(o.status.code(), Some(2));
    let o = ctxgram(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
    let o = ctxgram(&[
        "measure",
        "--regex",
        "(a|b)*abb",
        "--alphabet",
        "ab",
        "--caps",
        "budget=10",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn enumerate_and_derive() {
    let o = ctxgram(&[
        "enumerate",
        "--grammar",
        "tests/data/l1.ctx",
        "--max-len",
        "5",
    ]);
    let words: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(
        words,
        ["abcab", "c", "cddee", "cde", "cdede", "ddeec", "dec", "decde", "dedec"]
    );
    let o = ctxgram(&["derive", "--grammar", "tests/data/l1.ctx", "--word", "c"]);
    assert_eq!(stdout(&o).lines().count(), 3);
}

#[test]
fn family_check_on_grammar() {
    let o = ctxgram(&[
        "classify",
        "--grammar",
        "tests/data/l1.ctx",
        "--family",
        "RL_P(2)",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = ctxgram(&[
        "classify",
        "--grammar",
        "tests/data/l1.ctx",
        "--family",
        "FIN",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn convert_round_trips_grammar_files() {
    let o = ctxgram(&["convert", "--grammar", "tests/data/l1.ctx"]);
    assert_eq!(
        stdout(&o),
        std::fs::read_to_string("tests/data/l1.ctx").unwrap()
    );
    let o = ctxgram(&[
        "convert",
        "--regex",
        "b*c",
        "--alphabet",
        "bc",
        "--to",
        "rules",
    ]);
    assert!(stdout(&o).contains("S -> b S") || stdout(&o).contains("-> b"));
}

#[test]
fn hierarchy_listing() {
    let o = ctxgram(&["witness", "hierarchy", "ic-structural"]);
    assert!(stdout(&o).contains("IC(ORD) --> IC(NC)  open-properness"));
    let o = ctxgram(&["witness", "list"]);
    assert_eq!(stdout(&o).lines().count(), 6);
}
