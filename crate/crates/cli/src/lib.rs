//! Batch front end for `cosprod-core`.
//!
//! Every subcommand produces one [`OutputRecord`], which is rendered as an
//! aligned table, CSV or JSON. Inexact numbers are printed with only as many
//! digits as their error bound justifies, plus two guard digits, and always
//! next to that bound.

pub mod commands;
pub mod number;
pub mod record;

pub use commands::{CliError, Outcome, Report};
pub use record::{Format, OutputRecord, Row};

use cosprod_core::ExactRational;

/// Exit statuses.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const FAIL: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const DOMAIN: i32 = 3;
}

/// Parses `p/q` or an integer. Decimal notation is refused so that `n` is
/// always exact.
pub fn parse_rational(s: &str) -> Result<ExactRational, String> {
    let t = s.trim();
    if t.contains(['.', 'e', 'E']) {
        return Err(format!(
            "`{s}` is not exact; write n as an integer or as p/q"
        ));
    }
    t.parse::<ExactRational>().map_err(|e| e.to_string())
}
