use serde::{Deserialize, Serialize};
use sphfn_core::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A lower module returned an error.
    Error,
    /// Measured and reported; does not gate the suite.
    Info,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    /// Worst residual over the sampled cases.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    /// Error variant name when `status` is `error`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub seed: u64,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

impl Report {
    pub fn has_error(&self) -> bool {
        self.suites.iter().flat_map(|s| &s.checks).any(|c| c.status == Status::Error)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// `max` that lets NaN through instead of discarding it.
pub fn worst(a: f64, b: f64) -> f64 {
    if a.is_nan() || b.is_nan() {
        f64::NAN
    } else {
        a.max(b)
    }
}

/// Worst of a sequence of fallible residuals; the first error wins.
pub fn worst_of<I: IntoIterator<Item = Result<f64>>>(it: I) -> Result<f64> {
    let mut w = 0.0;
    for r in it {
        w = worst(w, r?);
    }
    Ok(w)
}

pub(crate) struct Recorder {
    suite: &'static str,
    scale: f64,
    checks: Vec<Check>,
}

impl Recorder {
    pub fn new(suite: &'static str, scale: f64) -> Self {
        Recorder { suite, scale, checks: Vec::new() }
    }

    fn push(&mut self, name: String, status: Status, residual: Option<f64>, tolerance: Option<f64>, error: Option<&Error>) {
        self.checks.push(Check {
            name,
            status,
            residual,
            tolerance,
            error: error.map(|e| e.name().to_string()),
            note: error.map(|e| e.to_string()),
        });
    }

    /// Gating check: passes iff the residual is finite and below `tol`
    /// times the suite's tolerance scale.
    pub fn check(&mut self, name: impl Into<String>, residual: Result<f64>, tol: f64) {
        let tol = tol * self.scale;
        match residual {
            Ok(r) => {
                let status = if r.is_finite() && r < tol { Status::Pass } else { Status::Fail };
                self.push(name.into(), status, Some(r), Some(tol), None);
            }
            Err(e) => self.push(name.into(), Status::Error, None, Some(tol), Some(&e)),
        }
    }

    /// Gating yes/no check.
    pub fn require(&mut self, name: impl Into<String>, ok: Result<bool>) {
        match ok {
            Ok(b) => self.push(name.into(), if b { Status::Pass } else { Status::Fail }, None, None, None),
            Err(e) => self.push(name.into(), Status::Error, None, None, Some(&e)),
        }
    }

    /// Non-gating measurement.
    pub fn info(&mut self, name: impl Into<String>, value: Result<f64>, note: impl Into<String>) {
        match value {
            Ok(v) => self.checks.push(Check {
                name: name.into(),
                status: if v.is_nan() { Status::Fail } else { Status::Info },
                residual: Some(v),
                tolerance: None,
                error: None,
                note: Some(note.into()),
            }),
            Err(e) => self.push(name.into(), Status::Error, None, None, Some(&e)),
        }
    }

    pub fn finish(self) -> SuiteReport {
        let passed = self.checks.iter().all(|c| matches!(c.status, Status::Pass | Status::Info));
        SuiteReport { suite: self.suite.to_string(), passed, checks: self.checks }
    }
}
