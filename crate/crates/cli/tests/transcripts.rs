use std::path::Path;
use std::process::Command;

use monadcheck_cli::golden::{compare, FLOAT_TOLERANCE};

fn monadcheck(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_monadcheck")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)).unwrap()
}

#[test]
fn every_golden_transcript_matches() {
    let cases: &[(&[&str], &str)] = &[
        (&["pythagoras", "--n", "9"], "pythagoras_9.txt"),
        (&["pythagoras", "--n", "25", "--strict"], "pythagoras_25_strict.txt"),
        (&["phonebook", "--name", "Ali"], "phonebook_ali.txt"),
        (&["phonebook", "--name", "Salem"], "phonebook_salem.txt"),
        (&["list-demo"], "list_demo.txt"),
        (&["maybe-demo"], "maybe_demo.txt"),
        (&["functor-demo"], "functor_demo.txt"),
        (&["functor-demo", "--banner"], "functor_demo_banner.txt"),
    ];
    for (args, file) in cases {
        let (code, stdout, _) = monadcheck(args);
        assert_eq!(code, 0, "{args:?}");
        if let Err(e) = compare(&golden(file), &stdout, FLOAT_TOLERANCE) {
            panic!("{args:?} vs {file}: {e}");
        }
    }
}

#[test]
fn exit_codes() {
    assert_eq!(monadcheck(&["no-such-command"]).0, 2);
    assert_eq!(monadcheck(&["phonebook"]).0, 2);
    assert_eq!(monadcheck(&["laws", "--instance", "list"]).0, 0);
    assert_eq!(monadcheck(&["laws", "--instance", "multishape"]).0, 1);
    assert_eq!(monadcheck(&["laws", "--instance", "multishape", "--expect-fail"]).0, 0);
}

#[test]
fn usage_error_goes_to_stderr() {
    let (code, stdout, stderr) = monadcheck(&["pythagoras", "--n", "x"]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
    assert!(stderr.contains("--n"));
}

#[test]
fn report_file_matches_stdout() {
    let path = std::env::temp_dir().join(format!("monadcheck-report-{}.txt", std::process::id()));
    let (code, stdout, _) = monadcheck(&["laws", "--instance", "option", "--report", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let saved = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(saved, stdout);
    assert_eq!(saved.lines().count(), 6);
}

#[test]
fn powerset_check_at_empty_set() {
    let (code, stdout, _) = monadcheck(&["powerset-check", "--max-size", "0"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "PASS unit-left @ {} checked=1\n\
         PASS unit-right @ {} checked=1\n\
         PASS associativity @ {} checked=4\n\
         PASS naturality(eta) @ {}->{} checked=0\n\
         PASS naturality(mu) @ {}->{} checked=2\n"
    );
}
