use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A divisor was zero, or an interval divisor contained zero.
    DivisionByZero,
    /// An argument lies outside the domain where the quantity is defined.
    Domain(String),
    /// A precondition on a size or precision parameter failed.
    InvalidArgument(String),
    /// Text could not be parsed as a rational number.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
