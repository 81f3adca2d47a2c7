use std::io::Write;
use std::process::{Command, Stdio};

use num_bigint::BigInt;
use proptest::prelude::*;
use rncbetti_cli::{parse_table, render_json, render_m2, Kind, TableDocument};
use rncbetti_core::{BBettiTable, Rational, SBettiTable};

fn rncbetti(args: &[&str], stdin: Option<&str>) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rncbetti"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(input) = stdin {
        child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn error_kind(stderr: &str) -> String {
    let v: serde_json::Value = serde_json::from_str(stderr.trim()).unwrap();
    v["error"].as_str().unwrap().to_string()
}

#[test]
fn exit_codes() {
    let (code, out, _) = rncbetti(&["totcone", "rays", "--d", "2"], None);
    assert_eq!(code, 0);
    assert!(out.contains("(0, 1, 2, 2)"));

    let (code, _, err) = rncbetti(&["resolve", "--ideal", "x^2 + "], None);
    assert_eq!((code, error_kind(&err)), (2, "ParseError".to_string()));

    let (code, _, err) = rncbetti(&["resolve", "--ideal", "x^2, x*y"], None);
    assert_eq!((code, error_kind(&err)), (4, "NotFiniteColength".to_string()));

    let (code, _, err) = rncbetti(&["decompose", "--d", "3", "--input", "-"], Some("0: 1 . . .\n1: . 1 . .\n"));
    assert_eq!((code, error_kind(&err)), (3, "NotInCone".to_string()));
    let v: serde_json::Value = serde_json::from_str(err.trim()).unwrap();
    assert!(v["partial"]["terms"].is_array());

    let (code, _, err) = rncbetti(&["decompose", "--d", "3", "--input", "-"], Some("0: 1 x .\n"));
    assert_eq!((code, error_kind(&err)), (2, "ParseError".to_string()));
}

#[test]
fn stdin_and_file_agree() {
    let table = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden/worked_b.btbl")).unwrap();
    let (_, from_stdin, _) = rncbetti(&["hilbert", "--d", "3", "--input", "-"], Some(&table));
    assert!(from_stdin.contains("hilbert polynomial: 1 + 3*t + t^2"));
}

#[test]
fn output_is_deterministic() {
    let args = ["resolve", "--random-degree", "5", "--count", "3", "--seed", "42", "--maps"];
    assert_eq!(rncbetti(&args, None), rncbetti(&args, None));
}

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..6).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn cells(max_col: usize) -> impl Strategy<Value = Vec<(usize, i64, Rational)>> {
    prop::collection::vec((0..=max_col, -3i64..9, rational()), 0..10)
}

proptest! {
    #[test]
    fn b_tables_round_trip(d in 1u32..6, cells in cells(3), cols in 3usize..8) {
        let t = BBettiTable::from_entries(d, cells).unwrap();
        let doc = TableDocument::from_b(&t).with("cmd", "rncbetti test");
        prop_assert_eq!(&parse_table(&render_m2(&doc, cols), None).unwrap(), &doc);
        prop_assert_eq!(&parse_table(&render_json(&doc), None).unwrap(), &doc);
    }

    #[test]
    fn s_tables_round_trip(cells in cells(2)) {
        let t = SBettiTable::from_entries(cells).unwrap();
        let doc = TableDocument::from_s(&t);
        let parsed = parse_table(&render_m2(&doc, 2), None).unwrap();
        prop_assert_eq!(parsed.kind, Kind::S);
        prop_assert_eq!(parsed.to_s().unwrap(), t);
        prop_assert_eq!(&parse_table(&render_json(&doc), None).unwrap(), &doc);
    }

    #[test]
    fn padded_spacing_parses(d in 2u32..5, cells in cells(3), pad in 1usize..4) {
        let t = BBettiTable::from_entries(d, cells).unwrap();
        let doc = TableDocument::from_b(&t);
        let padded = render_m2(&doc, 5).replace(' ', &" ".repeat(pad));
        prop_assert_eq!(&parse_table(&padded, None).unwrap(), &doc);
    }
}
