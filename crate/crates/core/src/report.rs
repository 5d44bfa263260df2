//! Newline-delimited JSON reports: one line per result, then a summary line.

use std::io::{self, Write};

use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResultRecord {
    pub ok: bool,
    pub result: Value,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub seed: Option<u64>,
    pub truncation_order: u32,
    pub results: Vec<ResultRecord>,
    pub wall_time_ms: u64,
}

impl Report {
    pub fn new(command: &str, inputs: Value, seed: Option<u64>, truncation_order: u32) -> Self {
        Report { command: command.into(), inputs, seed, truncation_order, results: Vec::new(), wall_time_ms: 0 }
    }

    pub fn push<T: Serialize>(&mut self, ok: bool, result: &T) {
        let result = serde_json::to_value(result).expect("report values serialize");
        self.results.push(ResultRecord { ok, result });
    }

    pub fn failed(&self) -> usize {
        self.results.iter().filter(|r| !r.ok).count()
    }

    pub fn pass(&self) -> bool {
        self.failed() == 0
    }

    pub fn lines(&self) -> Vec<Value> {
        let mut out: Vec<Value> = self
            .results
            .iter()
            .enumerate()
            .map(|(i, r)| json!({"schema": SCHEMA, "command": self.command, "index": i, "ok": r.ok, "result": r.result}))
            .collect();
        out.push(json!({
            "schema": SCHEMA,
            "command": self.command,
            "inputs": self.inputs,
            "seed": self.seed,
            "truncation_order": self.truncation_order,
            "results": self.results.len(),
            "failed": self.failed(),
            "pass": self.pass(),
            "wall_time_ms": self.wall_time_ms,
        }));
        out
    }

    pub fn write(&self, out: &mut dyn Write) -> io::Result<()> {
        for line in self.lines() {
            writeln!(out, "{line}")?;
        }
        Ok(())
    }
}

/// Drops `wall_time_ms` from every line of an NDJSON stream.
pub fn strip_timing(stream: &str) -> String {
    stream
        .lines()
        .map(|l| match serde_json::from_str::<Value>(l) {
            Ok(Value::Object(mut m)) => {
                m.remove("wall_time_ms");
                Value::Object(m).to_string()
            }
            _ => l.to_string(),
        })
        .collect::<Vec<_>>()
        .join("\n")
}
