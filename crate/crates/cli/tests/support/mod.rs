//! Golden-file runner shared by the golden and acceptance targets.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

use latquot_core::exactnum::{format_rational, parse_rational};
use latquot_core::wire::{LatticeDoc, TorusPointDoc};
use serde::Deserialize;
use serde_json::Value;

#[derive(Debug, Deserialize)]
pub struct Case {
    pub name: String,
    pub args: Vec<String>,
    pub exit: i32,
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn cases() -> Vec<Case> {
    let text = std::fs::read_to_string(golden_dir().join("cases.json")).expect("cases.json");
    serde_json::from_str(&text).expect("cases.json schema")
}

/// Runs the binary from the golden directory so relative input paths match.
pub fn invoke(args: &[String]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_latquot"))
        .args(args)
        .current_dir(golden_dir())
        .output()
        .expect("spawn latquot");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf-8 output"),
    )
}

fn looks_rational(s: &str) -> bool {
    let body = s.strip_prefix('-').unwrap_or(s);
    !body.is_empty()
        && body.split('/').count() <= 2
        && body
            .split('/')
            .all(|p| !p.is_empty() && p.bytes().all(|b| b.is_ascii_digit()))
}

/// Every rational string reformats to itself, and every lattice or torus
/// point subdocument re-parses and re-emits identically.
fn check_values(v: &Value, problems: &mut Vec<String>) {
    match v {
        Value::String(s) if looks_rational(s) => match parse_rational(s) {
            Ok(q) if format_rational(&q) == *s => {}
            _ => problems.push(format!("rational {s:?} does not round-trip")),
        },
        Value::Array(items) => items.iter().for_each(|x| check_values(x, problems)),
        Value::Object(map) => {
            if map.contains_key("basis") {
                let round = serde_json::from_value::<LatticeDoc>(v.clone())
                    .ok()
                    .and_then(|d| d.to_lattice().ok())
                    .map(|l| serde_json::to_value(LatticeDoc::from_lattice(&l)).unwrap());
                if round.as_ref() != Some(v) {
                    problems.push("lattice document does not round-trip".into());
                }
            }
            if map.contains_key("coords") {
                let round = serde_json::from_value::<TorusPointDoc>(v.clone())
                    .ok()
                    .and_then(|d| d.to_point().ok())
                    .map(|p| serde_json::to_value(TorusPointDoc::from_point(&p)).unwrap());
                if round.as_ref() != Some(v) {
                    problems.push("torus point document does not round-trip".into());
                }
            }
            map.values().for_each(|x| check_values(x, problems));
        }
        _ => {}
    }
}

/// Runs one case twice and compares against the stored output. Returns the
/// list of problems found; empty means the case passes.
pub fn check_case(case: &Case, bless: bool) -> Vec<String> {
    let mut problems = Vec::new();
    let (code, first) = invoke(&case.args);
    let (code2, second) = invoke(&case.args);
    if code != case.exit {
        problems.push(format!("exit code {code}, expected {}", case.exit));
    }
    if code != code2 || first != second {
        problems.push("output differs between runs".into());
    }
    match serde_json::from_str::<Value>(&first) {
        Ok(doc) => {
            let mut again = serde_json::to_string(&doc).unwrap();
            again.push('\n');
            if again != first {
                problems.push("output does not re-serialize byte-identically".into());
            }
            check_values(&doc, &mut problems);
        }
        Err(e) => problems.push(format!("output is not JSON: {e}")),
    }
    let expected_path = golden_dir()
        .join("expected")
        .join(format!("{}.json", case.name));
    if bless {
        std::fs::write(&expected_path, &first).expect("write expected output");
    } else {
        match std::fs::read_to_string(&expected_path) {
            Ok(expected) if expected == first => {}
            Ok(expected) => problems.push(format!("output {first:?} differs from {expected:?}")),
            Err(_) => problems.push(format!("missing {}", expected_path.display())),
        }
    }
    problems
}
