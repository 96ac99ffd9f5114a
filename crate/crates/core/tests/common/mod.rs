#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

pub struct Run {
    pub stdout: String,
    pub code: i32,
}

impl Run {
    pub fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("bad JSON ({e}): {}", self.stdout))
    }
}

pub fn loja(args: &[&str]) -> Run {
    loja_env(args, &[])
}

pub fn loja_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_loja"));
    cmd.args(args).env_remove("LOJA_THREADS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    Run { stdout: String::from_utf8(out.stdout).expect("utf-8"), code: out.status.code().unwrap_or(-1) }
}

/// Writes `text` to a fresh file under the test scratch directory.
pub fn scratch(name: &str, text: &str) -> String {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("loja-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(format!("{}-{name}", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

pub fn schema() -> jsonschema::JSONSchema {
    let text = include_str!("../../schema/report.schema.json");
    let schema: Value = serde_json::from_str(text).expect("schema is JSON");
    jsonschema::JSONSchema::options()
        .with_draft(jsonschema::Draft::Draft7)
        .compile(&schema)
        .expect("schema compiles")
}

pub fn schema_errors(schema: &jsonschema::JSONSchema, report: &Value) -> Vec<String> {
    match schema.validate(report) {
        Ok(()) => Vec::new(),
        Err(errs) => errs.map(|e| format!("{} at {}", e, e.instance_path)).collect(),
    }
}

pub fn curve_list(a: &[u64]) -> String {
    a.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

/// `(d^{n-1}, …, d, 1)`.
pub fn worst_curve_exponents(n: u32, d: u64) -> Vec<u64> {
    (0..n).rev().map(|k| d.pow(k)).collect()
}
