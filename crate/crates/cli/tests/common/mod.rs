#![allow(dead_code)]

use std::process::Command;

use serde_json::Value;

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn apolar(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_apolar")).args(args).output().expect("spawn apolar");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

/// Runs with `--json -` and parses the report.
pub fn json(args: &[&str]) -> (i32, Value, String) {
    let mut full = args.to_vec();
    full.extend(["--json", "-"]);
    let run = apolar(&full);
    let value = serde_json::from_str(&run.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", run.stdout));
    (run.code, value, run.stdout)
}

pub fn strings(v: &Value) -> Vec<String> {
    v.as_array().expect("array").iter().map(|s| s.as_str().expect("string").to_string()).collect()
}
