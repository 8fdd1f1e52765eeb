//! Check reports: named, ranged, deterministic comparisons of two exact
//! computations.

use std::fmt::Write as _;
use std::time::Duration;

/// Outcome of one check. A failure carries the first point where the two
/// sides differ, with both exact values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail { witness: String, lhs: String, rhs: String },
    Error(String),
}

/// One comparison row; all values are exact decimal (or Gaussian-integer)
/// strings, never floating point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub label: String,
    pub lhs: String,
    pub rhs: String,
}

impl Row {
    pub fn new(label: impl Into<String>, lhs: impl ToString, rhs: impl ToString) -> Self {
        Row { label: label.into(), lhs: lhs.to_string(), rhs: rhs.to_string() }
    }
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: String,
    pub range: String,
    /// True for open-conjecture scans: a pass is evidence, not a proof.
    pub non_falsification: bool,
    pub status: CheckStatus,
    pub elapsed: Duration,
    pub rows: Vec<Row>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        matches!(self.status, CheckStatus::Pass)
    }

    /// First row whose two sides differ, as a failure status; Pass when
    /// every row agrees.
    pub fn status_from_rows(rows: &[Row]) -> CheckStatus {
        for row in rows {
            if row.lhs != row.rhs {
                return CheckStatus::Fail {
                    witness: row.label.clone(),
                    lhs: row.lhs.clone(),
                    rhs: row.rhs.clone(),
                };
            }
        }
        CheckStatus::Pass
    }

    /// Renders the comparable report body. Elapsed time is deliberately
    /// not part of it, so identical inputs give identical bytes.
    pub fn render(&self, details: bool) -> String {
        let mut out = String::new();
        let tag = match &self.status {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail { .. } => "FAIL",
            CheckStatus::Error(_) => "ERROR",
        };
        write!(out, "[{tag}] {} ({})", self.name, self.range).unwrap();
        if self.non_falsification {
            out.push_str(" [NON-FALSIFICATION: a clean scan is evidence, not proof]");
        }
        out.push('\n');
        match &self.status {
            CheckStatus::Fail { witness, lhs, rhs } => {
                writeln!(out, "  first counterexample at {witness}: {lhs} vs {rhs}").unwrap();
            }
            CheckStatus::Error(msg) => writeln!(out, "  error: {msg}").unwrap(),
            CheckStatus::Pass => {}
        }
        for note in &self.notes {
            writeln!(out, "  note: {note}").unwrap();
        }
        if details {
            for row in &self.rows {
                writeln!(out, "  {}: {} | {}", row.label, row.lhs, row.rhs).unwrap();
            }
        }
        out
    }
}

/// Process exit code for a set of reports: 0 when everything passed,
/// 1 otherwise. (Usage errors exit 2 before any report exists.)
pub fn exit_code(reports: &[CheckReport]) -> i32 {
    if reports.iter().all(CheckReport::passed) {
        0
    } else {
        1
    }
}
