use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// A single rule violation found by one of the validators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Short rule tag, e.g. `"S5"`, `"UA4"`, `"top-boundary"`.
    pub rule: &'static str,
    /// 1-based `(row, column)` of the offending cell or box, when the rule is local.
    pub at: Option<(usize, usize)>,
    pub detail: String,
}

impl Violation {
    pub fn new(rule: &'static str, at: Option<(usize, usize)>, detail: impl Into<String>) -> Self {
        Self { rule, at, detail: detail.into() }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.at {
            Some((r, c)) => write!(f, "({}) at ({r},{c}): {}", self.rule, self.detail),
            None => write!(f, "({}): {}", self.rule, self.detail),
        }
    }
}

/// Outcome of validating a tableau, matrix or configuration.
///
/// Structural problems (wrong dimensions, box set not matching the shape)
/// are kept apart from violations of the combinatorial rules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Report {
    Valid,
    Malformed(String),
    Invalid(Vec<Violation>),
}

impl Report {
    pub fn is_valid(&self) -> bool {
        matches!(self, Report::Valid)
    }

    pub fn violations(&self) -> &[Violation] {
        match self {
            Report::Invalid(v) => v,
            _ => &[],
        }
    }

    /// Rule tags of all violations, in report order.
    pub fn rules(&self) -> Vec<&'static str> {
        self.violations().iter().map(|v| v.rule).collect()
    }

    pub(crate) fn from_violations(v: Vec<Violation>) -> Self {
        if v.is_empty() {
            Report::Valid
        } else {
            Report::Invalid(v)
        }
    }

    pub fn into_result(self) -> Result<(), Error> {
        match self {
            Report::Valid => Ok(()),
            Report::Malformed(msg) => Err(Error::Malformed(msg)),
            Report::Invalid(v) => Err(Error::Invalid(v)),
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Report::Valid => write!(f, "valid"),
            Report::Malformed(m) => write!(f, "malformed: {m}"),
            Report::Invalid(v) => {
                write!(f, "invalid:")?;
                for x in v {
                    write!(f, " {x};")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    Partition(String),
    #[error("rank mismatch: {0}")]
    Rank(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("{}", fmt_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("instance too large: {cells} cells exceed the limit of {limit}")]
    Infeasible { cells: usize, limit: usize },
    #[error("cannot invert coefficient {0} for a negative power")]
    NotInvertible(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

fn fmt_violations(v: &[Violation]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("rule violation: {}", parts.join("; "))
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
