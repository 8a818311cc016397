//! Suite verdicts and their text and `key=value` renderings.

use std::fmt::Write as _;

use crate::rb::RbReport;
use crate::verify::{Counterexample, VerificationReport};

pub const RB_IDENTITY: &str = "P(x)P(y) = P(xP(y)) + P(P(x)y) + λP(xy)";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Lines,
}

/// Outcome of one suite run. `params` echoes the run configuration and
/// `details` carries suite-specific results such as ranks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub suite: String,
    pub params: Vec<(String, String)>,
    pub passed: bool,
    pub checks: usize,
    pub identities: Vec<String>,
    pub details: Vec<(String, String)>,
    pub failure: Option<Counterexample>,
}

impl Verdict {
    pub fn new(suite: &str) -> Self {
        Verdict {
            suite: suite.to_string(),
            params: Vec::new(),
            passed: true,
            checks: 0,
            identities: Vec::new(),
            details: Vec::new(),
            failure: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.push((key.to_string(), value.to_string()));
        self
    }

    pub fn detail(mut self, key: &str, value: impl ToString) -> Self {
        self.details.push((key.to_string(), value.to_string()));
        self
    }

    /// Marks the verdict failed with `cx`.
    pub fn fail(mut self, cx: Counterexample) -> Self {
        self.passed = false;
        self.failure = Some(cx);
        self
    }

    pub fn from_report(r: VerificationReport) -> Self {
        Verdict {
            suite: r.suite,
            params: Vec::new(),
            passed: r.failure.is_none(),
            checks: r.checks,
            identities: r.identities,
            details: Vec::new(),
            failure: r.failure,
        }
    }

    pub fn from_rb(suite: &str, r: RbReport) -> Self {
        let failure = r.failure.map(|c| Counterexample {
            identity: RB_IDENTITY.to_string(),
            witnesses: vec![
                ("x".into(), c.x),
                ("y".into(), c.y),
                ("lhs".into(), c.lhs),
                ("rhs".into(), c.rhs),
            ],
        });
        Verdict {
            suite: suite.to_string(),
            params: Vec::new(),
            passed: failure.is_none(),
            checks: r.pairs,
            identities: vec![RB_IDENTITY.to_string()],
            details: vec![("weight".into(), r.weight)],
            failure,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Lines => self.render_lines(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite: {}", self.suite);
        for (k, v) in self.params.iter().chain(&self.details) {
            let _ = writeln!(out, "{k}: {v}");
        }
        for id in &self.identities {
            let _ = writeln!(out, "identity: {id}");
        }
        let _ = writeln!(out, "checks: {}", self.checks);
        match &self.failure {
            None => {
                let _ = writeln!(out, "result: {}", if self.passed { "PASS" } else { "FAIL" });
            }
            Some(cx) => {
                let _ = writeln!(out, "result: FAIL");
                let _ = writeln!(out, "counterexample: {}", cx.identity);
                for (name, value) in &cx.witnesses {
                    let _ = writeln!(out, "  {name} = {value}");
                }
            }
        }
        out
    }

    fn render_lines(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite={}", self.suite);
        for (k, v) in self.params.iter().chain(&self.details) {
            let _ = writeln!(out, "{k}={v}");
        }
        for id in &self.identities {
            let _ = writeln!(out, "identity={id}");
        }
        let _ = writeln!(out, "checks={}", self.checks);
        let _ = writeln!(out, "status={}", if self.passed { "pass" } else { "fail" });
        if let Some(cx) = &self.failure {
            let _ = writeln!(out, "failed={}", cx.identity);
            for (name, value) in &cx.witnesses {
                let _ = writeln!(out, "witness.{name}={value}");
            }
        }
        out
    }
}
