//! Golden-file cases for the `yhlink` binary.
//!
//! Set `YHLINK_BLESS=1` to rewrite the expected files.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub code: i32,
}

pub const CASES: &[Case] = &[
    Case { name: "invariant_trefoil_d3.txt", args: &["invariant", "--d", "3", "--subset", "0,1", "--braid", "1 1 1"], code: 0 },
    Case { name: "invariant_unlink_d1.txt", args: &["invariant", "--d", "1", "--subset", "0", "--braid", "2:"], code: 0 },
    Case {
        name: "invariant_left_trefoil_d4.json",
        args: &["invariant", "--d", "4", "--subset", "0,2", "--braid", "-1 -1 -1", "--format", "json"],
        code: 0,
    },
    Case {
        name: "invariant_eval_hopf_d2.txt",
        args: &["invariant", "--d", "2", "--subset", "0,1", "--braid", "1 1", "--eval-u", "0.5+0.25i", "--eval-z", "-1.5"],
        code: 0,
    },
    Case { name: "invariant_corpus_d2.txt", args: &["invariant", "--d", "2", "--subset", "0", "--corpus", "@corpus.txt"], code: 1 },
    Case {
        name: "invariant_corpus_d3.json",
        args: &["invariant", "--d", "3", "--subset", "0,1,2", "--corpus", "@corpus.txt", "--format", "json"],
        code: 1,
    },
    Case { name: "trace_generic_d3.txt", args: &["trace", "--d", "3", "--braid", "1 -2 1"], code: 0 },
    Case { name: "trace_specialized_d2.txt", args: &["trace", "--d", "2", "--subset", "1", "--braid", "1 1"], code: 0 },
    Case { name: "esystem_d3.txt", args: &["esystem", "--d", "3", "--enumerate"], code: 0 },
    Case { name: "esystem_d4.json", args: &["esystem", "--d", "4", "--subset", "0,2", "--format", "json"], code: 0 },
    Case { name: "adelic_2_4_trefoil.json", args: &["adelic", "--chain", "2,4", "--subset", "0", "--braid", "1 1 1"], code: 0 },
    Case { name: "verify_all_seed7.txt", args: &["verify", "--suite", "all", "--seed", "7", "--count", "3"], code: 0 },
    Case { name: "verify_markov_seed7.json", args: &["verify", "--suite", "markov", "--seed", "7", "--count", "4", "--format", "json"], code: 0 },
    Case { name: "error_subset.txt", args: &["invariant", "--d", "2", "--subset", "3", "--braid", "1"], code: 1 },
    Case { name: "error_chain.txt", args: &["adelic", "--chain", "2,5", "--subset", "0", "--braid", "1"], code: 1 },
];

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

/// Runs the binary; `@file` arguments resolve inside the golden directory.
pub fn run_cli(args: &[&str]) -> (i32, String, String) {
    let dir = golden_dir();
    let args: Vec<String> = args
        .iter()
        .map(|a| match a.strip_prefix('@') {
            Some(f) => dir.join(f).to_string_lossy().into_owned(),
            None => a.to_string(),
        })
        .collect();
    let out = Command::new(env!("CARGO_BIN_EXE_yhlink"))
        .args(&args)
        .env_remove("YHLINK_SEED")
        .output()
        .expect("binary runs");
    let stderr = String::from_utf8(out.stderr).unwrap().replace(&*dir.to_string_lossy(), "<golden>");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), stderr)
}

fn render(code: i32, stdout: &str, stderr: &str) -> String {
    format!("exit: {code}\n--- stdout\n{stdout}--- stderr\n{stderr}")
}

/// Runs every case twice and compares against the stored files.
pub fn check_golden() -> Vec<String> {
    let bless = std::env::var_os("YHLINK_BLESS").is_some();
    let mut failures = Vec::new();
    for case in CASES {
        let (c1, o1, e1) = run_cli(case.args);
        let (c2, o2, e2) = run_cli(case.args);
        let first = render(c1, &o1, &e1);
        if first != render(c2, &o2, &e2) {
            failures.push(format!("{}: output differs between runs", case.name));
        }
        if c1 != case.code {
            failures.push(format!("{}: exit code {c1}, expected {}", case.name, case.code));
        }
        let path = golden_dir().join(case.name);
        if bless {
            std::fs::write(&path, &first).unwrap();
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(expected) if expected == first => {}
            Ok(_) => failures.push(format!("{}: differs from golden file", case.name)),
            Err(e) => failures.push(format!("{}: {e}", case.name)),
        }
    }
    failures
}
