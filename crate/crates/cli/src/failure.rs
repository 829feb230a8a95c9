//! Failure classes and their exit statuses.

use std::fmt;

#[derive(Debug)]
pub enum Failure {
    /// Bad flags or unparseable input (status 1).
    Usage(anyhow::Error),
    /// A hard assertion did not hold (status 2).
    Assertion(String),
    /// Anything else (status 3).
    Internal(anyhow::Error),
}

impl Failure {
    pub fn usage(msg: impl Into<String>) -> Self {
        Failure::Usage(anyhow::anyhow!(msg.into()))
    }

    pub fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Assertion(_) => 2,
            Failure::Internal(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(e) => write!(f, "{e:#}"),
            Failure::Assertion(m) => write!(f, "assertion failed: {m}"),
            Failure::Internal(e) => write!(f, "internal: {e:#}"),
        }
    }
}

impl From<cubic_skein::Error> for Failure {
    fn from(e: cubic_skein::Error) -> Self {
        match e {
            cubic_skein::Error::Internal(_) => Failure::Internal(e.into()),
            _ => Failure::Usage(e.into()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Internal(e.into())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Internal(e.into())
    }
}
