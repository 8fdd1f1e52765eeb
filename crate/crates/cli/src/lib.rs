//! Library half of the `seaweed` command line tool: identity checks,
//! conjecture scans, and table exports. The binary in `main.rs` is a thin
//! argument-parsing layer over these.

use std::fmt;

pub mod checks;
pub mod report;
pub mod tables;

/// Invalid user input (bad flags, out-of-domain parameters, malformed
/// compositions or product specs). Mapped to exit code 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}
