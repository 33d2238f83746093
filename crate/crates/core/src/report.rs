//! Check results and the run summary printed by `verify`.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    /// Largest numeric deviation, or 0 for a check decided exactly.
    pub residual: f64,
    pub detail: String,
}

impl Check {
    /// Check decided by an exact comparison.
    pub fn exact(name: impl Into<String>, holds: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            status: if holds { Status::Pass } else { Status::Fail },
            residual: 0.0,
            detail: detail.into(),
        }
    }

    /// Passes when `residual <= tol`. A NaN residual fails.
    pub fn within(
        name: impl Into<String>,
        residual: f64,
        tol: f64,
        detail: impl Into<String>,
    ) -> Self {
        let ok = residual <= tol;
        Self {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            residual: if residual.is_finite() {
                residual
            } else {
                f64::MAX
            },
            detail: detail.into(),
        }
    }

    /// A check that could not be evaluated.
    pub fn error(name: impl Into<String>, err: impl std::fmt::Display) -> Self {
        Self {
            name: name.into(),
            status: Status::Fail,
            residual: 0.0,
            detail: format!("error: {err}"),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub suite: String,
    pub n: usize,
    pub backend: String,
    pub checks: Vec<Check>,
    pub exit_status: i32,
}

impl RunReport {
    pub fn new(
        command: impl Into<String>,
        suite: impl Into<String>,
        n: usize,
        backend: impl Into<String>,
        checks: Vec<Check>,
    ) -> Self {
        let exit_status = if checks.iter().all(Check::passed) {
            0
        } else {
            1
        };
        Self {
            command: command.into(),
            suite: suite.into(),
            n,
            backend: backend.into(),
            checks,
            exit_status,
        }
    }

    pub fn failed(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_status_follows_checks() {
        let ok = RunReport::new("verify", "x", 5, "exact", vec![Check::exact("a", true, "")]);
        assert_eq!(ok.exit_status, 0);
        let bad = RunReport::new(
            "verify",
            "x",
            5,
            "exact",
            vec![
                Check::exact("a", true, ""),
                Check::within("b", 1.0, 0.5, ""),
            ],
        );
        assert_eq!(bad.exit_status, 1);
        assert_eq!(bad.failed().len(), 1);
        assert_eq!(
            RunReport::new("verify", "x", 5, "exact", vec![]).exit_status,
            0
        );
    }

    #[test]
    fn nan_residual_fails() {
        let c = Check::within("nan", f64::NAN, 1.0, "");
        assert!(!c.passed());
        assert!(c.residual.is_finite());
    }

    #[test]
    fn serializes_lowercase_status() {
        let c = Check::exact("a", false, "d");
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(
            s,
            r#"{"name":"a","status":"fail","residual":0.0,"detail":"d"}"#
        );
    }
}
