//! JSON reports.

use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub witness: Option<Value>,
    pub ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub config: Value,
    pub checks: Vec<Check>,
    pub verdict: Status,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.verdict == Status::Pass
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

/// Collects checks; errors that make the run meaningless abort it.
pub struct Recorder {
    suite: String,
    config: Value,
    timing: bool,
    checks: Vec<Check>,
}

/// Errors that abort a run instead of failing one check.
pub fn is_fatal(e: &Error) -> bool {
    matches!(
        e,
        Error::DimensionCap { .. }
            | Error::Config(_)
            | Error::InvalidType { .. }
            | Error::InvalidWeight { .. }
            | Error::InvalidSubset { .. }
    )
}

impl Recorder {
    pub fn new(suite: &str, config: Value, timing: bool) -> Self {
        Recorder {
            suite: suite.into(),
            config,
            timing,
            checks: Vec::new(),
        }
    }

    /// Run one check. `f` returns pass/fail plus witness data.
    pub fn check<T>(
        &mut self,
        id: impl Into<String>,
        anchor: &str,
        f: impl FnOnce() -> Result<(bool, Option<Value>, T)>,
    ) -> Result<Option<T>> {
        let start = Instant::now();
        let outcome = f();
        let ms = if self.timing {
            start.elapsed().as_millis() as u64
        } else {
            0
        };
        let (status, witness, value) = match outcome {
            Ok((ok, witness, value)) => (if ok { Status::Pass } else { Status::Fail }, witness, Some(value)),
            Err(e) if is_fatal(&e) => return Err(e),
            Err(e) => (Status::Fail, Some(json!({ "error": e.to_string() })), None),
        };
        self.checks.push(Check {
            id: id.into(),
            anchor: anchor.into(),
            status,
            witness,
            ms,
        });
        Ok(if status == Status::Pass { value } else { None })
    }

    /// Like [`Recorder::check`] for checks that carry no value.
    pub fn simple(
        &mut self,
        id: impl Into<String>,
        anchor: &str,
        f: impl FnOnce() -> Result<(bool, Option<Value>)>,
    ) -> Result<bool> {
        Ok(self
            .check(id, anchor, || f().map(|(ok, w)| (ok, w, ())))?
            .is_some())
    }

    pub fn finish(self) -> Report {
        let verdict = if self.checks.iter().all(|c| c.status == Status::Pass) {
            Status::Pass
        } else {
            Status::Fail
        };
        Report {
            suite: self.suite,
            config: self.config,
            checks: self.checks,
            verdict,
        }
    }
}
