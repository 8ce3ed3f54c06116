//! Structured results of verification checks.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::algebra::Polynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// How a check reached its verdict.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Exactness {
    /// Every asserted identity normal-ordered to the literal zero polynomial.
    SymbolicExact,
    /// Exact integer counting or set comparison.
    CombinatorialExact,
    /// At least one floating-point comparison was made.
    Numeric { max_residual: f64, tolerance: f64 },
}

impl Exactness {
    pub fn label(&self) -> &'static str {
        match self {
            Exactness::SymbolicExact => "symbolic-exact",
            Exactness::CombinatorialExact => "combinatorial-exact",
            Exactness::Numeric { .. } => "numeric",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub check: String,
    pub status: Status,
    pub exactness: Exactness,
    pub anchor: String,
    pub elapsed: Duration,
    /// Failed assertions (prefixed `FAIL`) and informational remarks.
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn residual(&self) -> Option<f64> {
        match self.exactness {
            Exactness::Numeric { max_residual, .. } => Some(max_residual),
            _ => None,
        }
    }

    /// The wire form. `ms` is `null` unless `with_timing` is set, which keeps
    /// the default output byte-stable.
    pub fn to_record(&self, with_timing: bool) -> ReportRecord {
        let (residual, tolerance) = match self.exactness {
            Exactness::Numeric {
                max_residual,
                tolerance,
            } => (Some(max_residual), Some(tolerance)),
            _ => (None, None),
        };
        ReportRecord {
            check: self.check.clone(),
            status: self.status,
            exactness: self.exactness.label().to_string(),
            residual,
            tolerance,
            anchor: self.anchor.clone(),
            ms: with_timing.then_some(self.elapsed.as_secs_f64() * 1e3),
            notes: self.notes.clone(),
        }
    }
}

/// `{check, status, exactness, residual, tolerance, anchor, ms, notes}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub check: String,
    pub status: Status,
    pub exactness: String,
    pub residual: Option<f64>,
    pub tolerance: Option<f64>,
    pub anchor: String,
    pub ms: Option<f64>,
    pub notes: Vec<String>,
}

/// Accumulates assertions for one check.
pub(crate) struct Checker {
    name: &'static str,
    anchor: &'static str,
    start: Instant,
    failures: usize,
    notes: Vec<String>,
    numeric: Option<(f64, f64)>,
    combinatorial: bool,
}

impl Checker {
    pub fn new(name: &'static str, anchor: &'static str) -> Checker {
        Checker {
            name,
            anchor,
            start: Instant::now(),
            failures: 0,
            notes: Vec::new(),
            numeric: None,
            combinatorial: false,
        }
    }

    pub fn failed(&self) -> bool {
        self.failures > 0
    }

    pub fn fail(&mut self, msg: impl Into<String>) {
        self.failures += 1;
        self.notes.push(format!("FAIL {}", msg.into()));
    }

    pub fn note(&mut self, msg: impl Into<String>) {
        self.notes.push(msg.into());
    }

    /// Asserts that `p` is the zero polynomial.
    pub fn zero(&mut self, label: &str, p: &Polynomial) -> bool {
        if p.is_zero() {
            true
        } else {
            self.fail(format!("{label}: normal form is {p}"));
            false
        }
    }

    pub fn equal(&mut self, label: &str, lhs: &Polynomial, rhs: &Polynomial) -> bool {
        self.zero(label, &(lhs - rhs))
    }

    /// Records an exact (integer or set) comparison.
    pub fn exact(&mut self, label: &str, ok: bool, detail: impl FnOnce() -> String) -> bool {
        self.combinatorial = true;
        if !ok {
            self.fail(format!("{label}: {}", detail()));
        }
        ok
    }

    /// Records a floating-point residual against `tolerance`.
    pub fn residual(&mut self, label: &str, residual: f64, tolerance: f64) -> bool {
        let (worst, tol) = self.numeric.unwrap_or((0.0, tolerance));
        self.numeric = Some((worst.max(residual), tol.min(tolerance)));
        let ok = residual <= tolerance;
        if !ok {
            self.fail(format!(
                "{label}: residual {residual:e} exceeds {tolerance:e}"
            ));
        }
        ok
    }

    pub fn finish(self) -> CheckReport {
        let exactness = match (self.numeric, self.combinatorial) {
            (Some((max_residual, tolerance)), _) => Exactness::Numeric {
                max_residual,
                tolerance,
            },
            (None, true) => Exactness::CombinatorialExact,
            (None, false) => Exactness::SymbolicExact,
        };
        CheckReport {
            check: self.name.to_string(),
            status: if self.failures == 0 {
                Status::Pass
            } else {
                Status::Fail
            },
            exactness,
            anchor: self.anchor.to_string(),
            elapsed: self.start.elapsed(),
            notes: self.notes,
        }
    }
}
