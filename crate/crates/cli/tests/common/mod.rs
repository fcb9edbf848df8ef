//! Golden-file corpus shared by the golden test and the acceptance runner.
//!
//! `golden/corpus.txt` holds one invocation per line as `name: args...`,
//! split on whitespace. `@fixtures` expands to the fixtures directory, and
//! absolute fixture paths are folded back to `@fixtures` in captured output.
//! Set `INFOCOG_BLESS=1` to rewrite the stored goldens.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::Command;

pub struct Case {
    pub name: String,
    pub args: Vec<String>,
}

pub struct Outcome {
    pub name: String,
    pub code: i32,
    pub mismatch: Option<String>,
}

fn tests_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests")
}

pub fn fixtures_dir() -> PathBuf {
    tests_dir().join("fixtures")
}

pub fn fixture(name: &str) -> PathBuf {
    fixtures_dir().join(name)
}

pub fn corpus() -> Vec<Case> {
    let text = std::fs::read_to_string(tests_dir().join("golden/corpus.txt")).expect("corpus.txt");
    let fixtures = fixtures_dir().display().to_string();
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (name, args) = l.split_once(':').expect("`name: args` line");
            Case {
                name: name.trim().to_owned(),
                args: args
                    .split_whitespace()
                    .map(|a| a.replace("@fixtures", &fixtures))
                    .collect(),
            }
        })
        .collect()
}

pub fn bless_requested() -> bool {
    std::env::var_os("INFOCOG_BLESS").is_some_and(|v| v == "1")
}

/// Runs the binary and renders exit code, stdout and stderr as one document.
pub fn render(case: &Case) -> (i32, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_infocog"))
        .args(&case.args)
        .output()
        .expect("spawn infocog");
    let code = output.status.code().unwrap_or(-1);
    let fixtures = fixtures_dir().display().to_string();
    let fold = |bytes: &[u8]| String::from_utf8_lossy(bytes).replace(&fixtures, "@fixtures");
    let doc = format!(
        "exit: {code}\n--- stdout\n{}--- stderr\n{}",
        fold(&output.stdout),
        fold(&output.stderr)
    );
    (code, doc)
}

pub fn golden_path(name: &str) -> PathBuf {
    tests_dir().join("golden").join(format!("{name}.golden"))
}

pub fn check_corpus(bless: bool) -> Vec<Outcome> {
    corpus()
        .iter()
        .map(|case| {
            let (code, actual) = render(case);
            let path = golden_path(&case.name);
            if bless {
                std::fs::write(&path, &actual).expect("write golden");
            }
            let mismatch = match std::fs::read_to_string(&path) {
                Ok(expected) if expected == actual => None,
                Ok(expected) => Some(first_difference(&expected, &actual)),
                Err(e) => Some(format!("{}: {e}", path.display())),
            };
            Outcome {
                name: case.name.clone(),
                code,
                mismatch,
            }
        })
        .collect()
}

fn first_difference(expected: &str, actual: &str) -> String {
    for (i, (e, a)) in expected.lines().zip(actual.lines()).enumerate() {
        if e != a {
            return format!("line {}: expected `{e}`, got `{a}`", i + 1);
        }
    }
    format!(
        "length differs: expected {} lines, got {}",
        expected.lines().count(),
        actual.lines().count()
    )
}

/// Subcommands and exit codes exercised by the corpus.
pub fn coverage(cases: &[Case], outcomes: &[Outcome]) -> (BTreeSet<String>, BTreeSet<i32>) {
    let subcommands = cases
        .iter()
        .filter_map(|c| c.args.iter().find(|a| !a.starts_with('-')).cloned())
        .collect();
    let codes = outcomes.iter().map(|o| o.code).collect();
    (subcommands, codes)
}

pub const SUBCOMMANDS: [&str; 7] = [
    "entropy",
    "algo",
    "limits",
    "emergence",
    "ca",
    "grit",
    "cogaug",
];
