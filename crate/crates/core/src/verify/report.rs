use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde_json::{json, Map, Value};

/// Witnesses kept per report; further failures are only counted.
pub const WITNESS_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A failing case: what was checked, what should hold, what was found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub inputs: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckReport {
    pub check_id: String,
    pub range: (usize, usize),
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    /// Number of failures, including those beyond the witness cap.
    pub failures: usize,
    pub metrics: BTreeMap<String, f64>,
    /// Noteworthy non-failing cases, e.g. equality where only `>=` is claimed.
    pub notes: Vec<String>,
    pub children: Vec<CheckReport>,
}

impl CheckReport {
    pub fn new(check_id: impl Into<String>, range: (usize, usize)) -> Self {
        CheckReport {
            check_id: check_id.into(),
            range,
            params: BTreeMap::new(),
            status: Status::Pass,
            witnesses: Vec::new(),
            failures: 0,
            metrics: BTreeMap::new(),
            notes: Vec::new(),
            children: Vec::new(),
        }
    }

    pub fn skipped(check_id: impl Into<String>, reason: &str) -> Self {
        let mut r = CheckReport::new(check_id, (0, 0));
        r.status = Status::Skipped;
        r.notes.push(reason.to_string());
        r
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn metric(&mut self, key: impl Into<String>, value: f64) {
        self.metrics.insert(key.into(), value);
    }

    pub fn fail(&mut self, inputs: impl ToString, expected: impl ToString, actual: impl ToString) {
        self.failures += 1;
        self.status = Status::Fail;
        if self.witnesses.len() < WITNESS_CAP {
            self.witnesses.push(Witness {
                inputs: inputs.to_string(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    /// Record a failure unless `ok`.
    pub fn expect(
        &mut self,
        ok: bool,
        inputs: impl FnOnce() -> String,
        expected: impl FnOnce() -> String,
        actual: impl FnOnce() -> String,
    ) {
        if !ok {
            self.fail(inputs(), expected(), actual());
        }
    }

    /// Attach a sub-report. A failing child fails the parent and lends it
    /// its witnesses, so `Fail` always comes with at least one witness.
    pub fn push_child(&mut self, child: CheckReport) {
        if child.status == Status::Fail {
            self.failures += child.failures;
            self.status = Status::Fail;
            for w in &child.witnesses {
                if self.witnesses.len() >= WITNESS_CAP {
                    break;
                }
                self.witnesses.push(Witness {
                    inputs: format!("{}: {}", child.check_id, w.inputs),
                    ..w.clone()
                });
            }
        }
        self.children.push(child);
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Depth-first search by id.
    pub fn find(&self, check_id: &str) -> Option<&CheckReport> {
        if self.check_id == check_id {
            return Some(self);
        }
        self.children.iter().find_map(|c| c.find(check_id))
    }

    pub fn count_skipped(&self) -> usize {
        usize::from(self.status == Status::Skipped)
            + self.children.iter().map(CheckReport::count_skipped).sum::<usize>()
    }

    pub fn to_json(&self) -> Value {
        let witnesses: Vec<Value> = self
            .witnesses
            .iter()
            .map(|w| json!({"inputs": w.inputs, "expected": w.expected, "actual": w.actual}))
            .collect();
        let metrics: Map<String, Value> = self
            .metrics
            .iter()
            .map(|(k, v)| (k.clone(), json!(v)))
            .collect();
        json!({
            "check_id": self.check_id,
            "range": [self.range.0, self.range.1],
            "params": self.params,
            "status": self.status.as_str(),
            "failures": self.failures,
            "metrics": metrics,
            "witnesses": witnesses,
            "notes": self.notes,
            "children": self.children.iter().map(CheckReport::to_json).collect::<Vec<_>>(),
        })
    }

    /// One line per report, indented by depth, followed by its witnesses.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        self.write_text(&mut out, 0);
        out
    }

    fn write_text(&self, out: &mut String, depth: usize) {
        let pad = "  ".repeat(depth);
        let _ = writeln!(
            out,
            "{pad}{:<7} {} [n={}..{}]",
            self.status.as_str().to_uppercase(),
            self.check_id,
            self.range.0,
            self.range.1
        );
        for (k, v) in &self.metrics {
            let _ = writeln!(out, "{pad}        {k} = {v:.6}");
        }
        for n in &self.notes {
            let _ = writeln!(out, "{pad}        note: {n}");
        }
        if self.children.is_empty() {
            for w in &self.witnesses {
                let _ = writeln!(
                    out,
                    "{pad}        at {}: expected {}, got {}",
                    w.inputs, w.expected, w.actual
                );
            }
        }
        for c in &self.children {
            c.write_text(out, depth + 1);
        }
    }
}
