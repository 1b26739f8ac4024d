use std::fmt;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::symfunc::vector::{scalar_from_json, scalar_to_json};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Verified,
    Refuted,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Refuted => "refuted",
            Status::Skipped => "skipped",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One violated instance: its parameters and the two sides that disagreed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub params: Map<String, Value>,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl Failure {
    pub fn to_json(&self) -> Value {
        json!({
            "params": Value::Object(self.params.clone()),
            "lhs": scalar_to_json(&self.lhs),
            "rhs": scalar_to_json(&self.rhs),
        })
    }
}

/// Outcome of checking one relation over a parameter grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationReport {
    pub relation: String,
    pub checked: u64,
    pub skipped: u64,
    pub failures: Vec<Failure>,
}

impl RelationReport {
    pub fn new(relation: impl Into<String>) -> Self {
        RelationReport {
            relation: relation.into(),
            checked: 0,
            skipped: 0,
            failures: Vec::new(),
        }
    }

    /// `verified` iff nothing failed and something was checked.
    pub fn status(&self) -> Status {
        if !self.failures.is_empty() {
            Status::Refuted
        } else if self.checked > 0 {
            Status::Verified
        } else {
            Status::Skipped
        }
    }

    pub fn record(&mut self, outcome: Outcome) {
        match outcome {
            Outcome::Holds => self.checked += 1,
            Outcome::Fails(f) => {
                self.checked += 1;
                self.failures.push(f);
            }
            Outcome::FailsMany(fs) => {
                self.checked += 1;
                self.failures.extend(fs);
            }
            Outcome::Skipped => self.skipped += 1,
        }
    }

    pub fn merge(&mut self, other: RelationReport) {
        self.checked += other.checked;
        self.skipped += other.skipped;
        self.failures.extend(other.failures);
    }

    pub fn to_json(&self) -> Value {
        json!({
            "relation": self.relation,
            "checked": self.checked,
            "skipped": self.skipped,
            "failures": self.failures.iter().map(Failure::to_json).collect::<Vec<_>>(),
            "status": self.status().as_str(),
        })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Unknown(format!("malformed report JSON: {what}"));
        let mut report = RelationReport::new(value["relation"].as_str().ok_or_else(|| bad("relation"))?);
        report.checked = value["checked"].as_u64().ok_or_else(|| bad("checked"))?;
        report.skipped = value["skipped"].as_u64().unwrap_or(0);
        for f in value["failures"].as_array().ok_or_else(|| bad("failures"))? {
            report.failures.push(Failure {
                params: f["params"].as_object().cloned().ok_or_else(|| bad("params"))?,
                lhs: scalar_from_json(&f["lhs"])?,
                rhs: scalar_from_json(&f["rhs"])?,
            });
        }
        Ok(report)
    }
}

/// Result of evaluating a single grid instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    Fails(Failure),
    FailsMany(Vec<Failure>),
    Skipped,
}

impl Outcome {
    pub fn compare(holds: bool, params: &Map<String, Value>, lhs: &BigInt, rhs: &BigInt) -> Outcome {
        if holds {
            Outcome::Holds
        } else {
            Outcome::Fails(Failure {
                params: params.clone(),
                lhs: lhs.clone(),
                rhs: rhs.clone(),
            })
        }
    }
}
