//! Error type shared by all modules.

use alloc::string::String;
use core::fmt;

/// Errors surfaced by group construction, graph enumeration, walks and the
/// large-deviations oracles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Predicted group order (or table size) exceeds the enumeration cap.
    CapExceeded { predicted: u128, cap: u64 },
    /// A spec parameter is out of its documented range.
    InvalidSpec(String),
    /// An element does not belong to the graph it was queried against.
    UnknownElement,
    /// A step distribution violates its invariants (asymmetry, bad mass).
    InvalidDistribution(String),
    /// A real-valued formula was evaluated outside its domain.
    DomainError(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::CapExceeded { predicted, cap } => {
                write!(f, "order {predicted} exceeds enumeration cap {cap}")
            }
            Error::InvalidSpec(msg) => write!(f, "invalid spec: {msg}"),
            Error::UnknownElement => write!(f, "element does not belong to this graph"),
            Error::InvalidDistribution(msg) => write!(f, "invalid step distribution: {msg}"),
            Error::DomainError(msg) => write!(f, "domain error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
