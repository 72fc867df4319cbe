//! Structured results of verification suites.

use std::fmt;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

/// Outcome of a single check: `Err` carries a counterexample in codec form.
pub type Outcome = std::result::Result<(), Value>;

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub params: Value,
    pub checks: Vec<CheckResult>,
    pub wall_time_ms: f64,
}

impl Report {
    /// Run `body` and record the wall time it took.
    pub fn run(suite: &str, params: Value, body: impl FnOnce(&mut Report)) -> Report {
        let start = Instant::now();
        let mut r = Report {
            suite: suite.to_string(),
            params,
            checks: Vec::new(),
            wall_time_ms: 0.0,
        };
        body(&mut r);
        r.wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
        r
    }

    pub fn add(&mut self, name: impl Into<String>, outcome: Outcome) {
        self.add_detailed(name, outcome, None);
    }

    pub fn add_detailed(&mut self, name: impl Into<String>, outcome: Outcome, detail: Option<String>) {
        let (passed, counterexample) = match outcome {
            Ok(()) => (true, None),
            Err(v) => (false, Some(v)),
        };
        self.checks.push(CheckResult {
            name: name.into(),
            passed,
            detail,
            counterexample,
        });
    }

    /// Record a comparison of two displayable values.
    pub fn add_eq<T: PartialEq + fmt::Debug>(&mut self, name: impl Into<String>, got: T, expected: T) {
        let outcome = if got == expected {
            Ok(())
        } else {
            Err(serde_json::json!({
                "got": format!("{got:?}"),
                "expected": format!("{expected:?}"),
            }))
        };
        self.add_detailed(name, outcome, Some(format!("{got:?}")));
    }

    pub fn merge(&mut self, other: Report) {
        for mut c in other.checks {
            c.name = format!("{}/{}", other.suite, c.name);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} {} ({:.1} ms)", self.suite, self.params, self.wall_time_ms)?;
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            write!(f, "  {status} {}", c.name)?;
            if let Some(d) = &c.detail {
                write!(f, " [{d}]")?;
            }
            if let Some(ce) = &c.counterexample {
                write!(f, " counterexample: {ce}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Return the first counterexample produced by `check` over `items`.
pub fn first_failure<T>(items: impl IntoIterator<Item = T>, mut check: impl FnMut(T) -> Outcome) -> Outcome {
    for x in items {
        check(x)?;
    }
    Ok(())
}
