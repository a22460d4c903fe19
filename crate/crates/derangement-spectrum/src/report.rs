//! Structured results of verification sweeps.
//!
//! A [`VerificationReport`] carries every failed comparison (`violations`,
//! which decide the pass/fail status) plus noteworthy observations that are
//! not failures (`findings`) — a scan's counterexample list, a known
//! small-case exception, coverage notes.  Both record the two sides of the
//! comparison so a reader can diagnose a failure without rerunning the
//! sweep.  Reports compare equal irrespective of how long they took.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Serialize, Serializer};

fn decimal<S: Serializer>(value: &BigInt, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.serialize_str(&value.to_string())
}

fn rational<S: Serializer>(value: &BigRational, serializer: S) -> Result<S::Ok, S::Error> {
    if value.denom().is_one() {
        serializer.serialize_str(&value.numer().to_string())
    } else {
        serializer.serialize_str(&format!("{}/{}", value.numer(), value.denom()))
    }
}

fn seconds<S: Serializer>(value: &Duration, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.serialize_f64(value.as_secs_f64())
}

/// Outcome of one verification sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One recorded comparison: what was compared and the two sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub subject: String,
    pub left: String,
    pub right: String,
}

/// Result of one verification sweep at one `n`.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub n: u32,
    pub status: Status,
    pub violations: Vec<Discrepancy>,
    pub findings: Vec<Discrepancy>,
    #[serde(serialize_with = "seconds", rename = "elapsed_seconds")]
    pub elapsed: Duration,
}

impl PartialEq for VerificationReport {
    fn eq(&self, other: &Self) -> bool {
        // Elapsed time is observational, not part of the verdict.
        self.check_name == other.check_name
            && self.n == other.n
            && self.status == other.status
            && self.violations == other.violations
            && self.findings == other.findings
    }
}

impl Eq for VerificationReport {}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Accumulates discrepancies during a sweep and stamps the final status:
/// pass exactly when no violations were recorded.
pub struct ReportBuilder {
    check_name: String,
    n: u32,
    violations: Vec<Discrepancy>,
    findings: Vec<Discrepancy>,
    started: Instant,
}

impl ReportBuilder {
    pub fn new(check_name: &str, n: u32) -> Self {
        ReportBuilder {
            check_name: check_name.to_string(),
            n,
            violations: Vec::new(),
            findings: Vec::new(),
            started: Instant::now(),
        }
    }

    pub fn violation(
        &mut self,
        subject: impl Into<String>,
        left: impl ToString,
        right: impl ToString,
    ) {
        self.violations.push(Discrepancy {
            subject: subject.into(),
            left: left.to_string(),
            right: right.to_string(),
        });
    }

    pub fn finding(
        &mut self,
        subject: impl Into<String>,
        left: impl ToString,
        right: impl ToString,
    ) {
        self.findings.push(Discrepancy {
            subject: subject.into(),
            left: left.to_string(),
            right: right.to_string(),
        });
    }

    pub fn extend_violations(&mut self, batch: impl IntoIterator<Item = Discrepancy>) {
        self.violations.extend(batch);
    }

    pub fn extend_findings(&mut self, batch: impl IntoIterator<Item = Discrepancy>) {
        self.findings.extend(batch);
    }

    pub fn finish(self) -> VerificationReport {
        VerificationReport {
            check_name: self.check_name,
            n: self.n,
            status: if self.violations.is_empty() {
                Status::Pass
            } else {
                Status::Fail
            },
            violations: self.violations,
            findings: self.findings,
            elapsed: self.started.elapsed(),
        }
    }
}

/// The ratio-bound computation on the independence number, reported with
/// every ingredient: an `N`-vertex `k`-regular graph with least eigenvalue
/// `μ < 0` has independence number at most `−μN/(k−μ)`, and for the
/// derangement graph that rational is exactly `(n−1)!`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HoffmanBoundReport {
    pub n: u32,
    /// Graph degree `k = D_n`.
    #[serde(serialize_with = "decimal")]
    pub degree: BigInt,
    /// Vertex count `N = n!`.
    #[serde(serialize_with = "decimal")]
    pub vertex_count: BigInt,
    /// Least eigenvalue `μ`.
    #[serde(serialize_with = "decimal")]
    pub smallest_eigenvalue: BigInt,
    /// The exact rational `−μN/(k−μ)`.
    #[serde(serialize_with = "rational")]
    pub bound: BigRational,
    /// The independence number actually attained, `(n−1)!`.
    #[serde(serialize_with = "decimal")]
    pub attained: BigInt,
    /// Whether the bound lands on `(n−1)!` exactly.
    pub is_exact: bool,
}
