//! Machine-readable verification reports.

use std::fmt::Write;

use gorenstein::InvariantReport;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    /// The bounds were exhausted before the check could be decided.
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub outcome: Outcome,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub actual: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub reports: Vec<InvariantReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub data: Option<serde_json::Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckOutcome {
    pub fn new(name: &str, outcome: Outcome) -> CheckOutcome {
        CheckOutcome {
            name: name.to_string(),
            outcome,
            expected: None,
            actual: None,
            reports: Vec::new(),
            data: None,
            note: None,
        }
    }

    pub fn expected(mut self, v: impl ToString) -> Self {
        self.expected = Some(v.to_string());
        self
    }

    pub fn actual(mut self, v: impl ToString) -> Self {
        self.actual = Some(v.to_string());
        self
    }

    pub fn report(mut self, r: InvariantReport) -> Self {
        self.reports.push(r);
        self
    }

    pub fn data(mut self, v: serde_json::Value) -> Self {
        self.data = Some(v);
        self
    }

    pub fn note(mut self, s: impl Into<String>) -> Self {
        self.note = Some(s.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FixtureReport {
    pub fixture: String,
    pub checks: Vec<CheckOutcome>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub bound: usize,
    pub t_max: u32,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub unknown: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub engine_version: String,
    pub bounds: Bounds,
    pub fixtures: Vec<FixtureReport>,
    pub summary: Summary,
    pub exit_code: i32,
}

/// `1` if any check failed, else `3` if any is unknown, else `0`.
pub fn exit_code(outcomes: impl IntoIterator<Item = Outcome>) -> i32 {
    let (mut fail, mut unknown) = (false, false);
    for o in outcomes {
        match o {
            Outcome::Fail => fail = true,
            Outcome::Unknown => unknown = true,
            Outcome::Pass => {}
        }
    }
    if fail {
        1
    } else if unknown {
        3
    } else {
        0
    }
}

impl Report {
    /// Sorts fixtures by name and derives the summary and exit code.
    pub fn new(command: &str, bounds: Bounds, mut fixtures: Vec<FixtureReport>) -> Report {
        fixtures.sort_by(|a, b| a.fixture.cmp(&b.fixture));
        let outcomes: Vec<Outcome> = fixtures.iter().flat_map(|f| f.checks.iter().map(|c| c.outcome)).collect();
        let mut summary = Summary::default();
        for o in &outcomes {
            match o {
                Outcome::Pass => summary.pass += 1,
                Outcome::Fail => summary.fail += 1,
                Outcome::Unknown => summary.unknown += 1,
            }
        }
        Report {
            command: command.to_string(),
            engine_version: gorenstein::VERSION.to_string(),
            bounds,
            fixtures,
            summary,
            exit_code: exit_code(outcomes),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "{} (engine {}, B={}, t_max={})",
            self.command, self.engine_version, self.bounds.bound, self.bounds.t_max
        )
        .unwrap();
        for f in &self.fixtures {
            writeln!(out, "[{}]", f.fixture).unwrap();
            for c in &f.checks {
                let tag = match c.outcome {
                    Outcome::Pass => "pass",
                    Outcome::Fail => "FAIL",
                    Outcome::Unknown => "unknown",
                };
                write!(out, "  {tag:7} {}", c.name).unwrap();
                if let Some(a) = &c.actual {
                    write!(out, ": {a}").unwrap();
                }
                if let Some(e) = &c.expected {
                    write!(out, " (expected {e})").unwrap();
                }
                out.push('\n');
                for r in &c.reports {
                    writeln!(out, "          {r}").unwrap();
                }
                if let Some(n) = &c.note {
                    writeln!(out, "          {n}").unwrap();
                }
                if let Some(d) = &c.data {
                    writeln!(out, "          {d}").unwrap();
                }
            }
        }
        writeln!(out, "{} pass, {} fail, {} unknown", self.summary.pass, self.summary.fail, self.summary.unknown)
            .unwrap();
        out
    }
}
