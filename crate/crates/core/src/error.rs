//! Engine errors. Mathematical failures are not errors: they are `Fail`
//! verdicts in reports. Errors are structural (bad input data) or resource
//! (a window would exceed the enumeration budget).

use thiserror::Error;

#[derive(Debug, Error)]
pub enum EngineError {
    /// An enumeration would exceed the configured budget. Never downgraded
    /// to a truncated answer.
    #[error("resource budget exceeded in {context}: needs {needed}, budget {budget}")]
    Resource {
        context: String,
        needed: u128,
        budget: u128,
    },

    /// Malformed input: inconsistent tables, mismatched domains, unknown
    /// names, unparseable files.
    #[error("structural error: {0}")]
    Structural(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl EngineError {
    pub fn structural(msg: impl Into<String>) -> Self {
        EngineError::Structural(msg.into())
    }

    pub fn is_resource(&self) -> bool {
        matches!(self, EngineError::Resource { .. })
    }
}

pub type Result<T> = std::result::Result<T, EngineError>;
