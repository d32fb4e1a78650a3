mod support;

use std::collections::BTreeSet;

use support::*;

#[test]
fn fixtures_match_goldens() {
    let mut failures = Vec::new();
    for f in fixtures() {
        let run = f.run();
        if blessing() {
            f.bless(&run);
            continue;
        }
        if run != f.expected() {
            failures.push(f.name.clone());
        }
    }
    assert!(failures.is_empty(), "fixtures differ from goldens: {failures:?}");
}

#[test]
fn corpus_covers_every_subcommand_and_exit_code() {
    let all = fixtures();
    assert!(all.len() >= 20);
    let subcommands: BTreeSet<&str> = all.iter().map(|f| f.args[0].as_str()).collect();
    for name in copra_cli::Subcommand::ALL.map(|s| s.name()) {
        assert!(subcommands.contains(name), "no fixture for {name}");
    }
    let codes: BTreeSet<i32> = all.iter().map(|f| f.expected().code).collect();
    assert_eq!(codes, BTreeSet::from([0, 2, 3, 4]));
}

/// Error records are single lines of JSON carrying the exit code.
#[test]
fn error_records_are_single_line_json() {
    for f in fixtures() {
        let expected = f.expected();
        if expected.code == 0 {
            assert!(expected.stderr.is_empty(), "{}", f.name);
            continue;
        }
        assert!(expected.stdout.is_empty(), "{}", f.name);
        let text = String::from_utf8(expected.stderr).unwrap();
        assert_eq!(text.lines().count(), 1, "{}", f.name);
        let record: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(record["error"]["code"], expected.code, "{}", f.name);
    }
}
