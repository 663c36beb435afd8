//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes of the solver pipeline.
///
/// All solver math is total on valid inputs (real indices, positive
/// geometry), so errors only arise from precondition violations, from
/// sampling outside the supported domain, or — defensively — from a
/// denominator collapsing below the representable range.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input violated a documented precondition.
    #[error("invalid parameter `{name}`: {message}")]
    InvalidParameter {
        /// Name of the offending field or argument.
        name: &'static str,
        /// What was wrong with it.
        message: String,
    },

    /// A requested sample position or frequency lies outside the domain the
    /// operation is defined on.
    #[error("out of domain: {0}")]
    OutOfDomain(String),

    /// A denominator became too small to divide by. Not expected for
    /// lossless stacks; kept as a guard.
    #[error("numerical degeneracy: {0}")]
    NumericalDegeneracy(String),
}

impl Error {
    /// Shorthand used by the validation paths.
    pub(crate) fn invalid(name: &'static str, message: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            message: message.into(),
        }
    }
}
