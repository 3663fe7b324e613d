use std::fmt;

/// Errors raised by the cycle-index algebra, the enumeration pipeline, the
/// brute-force oracle and the expression language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Plethysm (or species composition) was attempted with an inner series
    /// whose constant term is nonzero.
    ConstantTermInComposition,
    /// Compositional inversion requires a series of the form `p[1] + (higher
    /// order)`; the argument did not have that shape.
    InverseNotApplicable,
    /// Series division hit a monomial with no part equal to 1, so exact
    /// division by `p[1]` is impossible. This signals an algebra bug, not bad
    /// input.
    NotDivisibleByP1 { degree: u32 },
    /// The Möbius function is undefined at 0.
    MobiusOfZero,
    /// The brute-force enumerator was asked for a vertex count above its
    /// cost guard.
    OracleLimit { n: usize, limit: usize },
    /// An unrecognized oracle family or catalog species name.
    UnknownName(String),
    /// A syntax error in a species expression or in serialized series text,
    /// with a 0-based character position.
    Parse { position: usize, message: String },
    /// A generating-function coefficient that should have been an integer
    /// was not; indicates corrupted input or an algebra bug.
    NonIntegerCoefficient { degree: usize },
    /// Failure reading or writing a series cache file.
    Cache(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ConstantTermInComposition => {
                write!(f, "composition requires a series with zero constant term")
            }
            Error::InverseNotApplicable => {
                write!(
                    f,
                    "compositional inverse requires zero constant term and degree-1 part exactly p[1]"
                )
            }
            Error::NotDivisibleByP1 { degree } => {
                write!(
                    f,
                    "division by p[1] failed at degree {degree}: a monomial has no part equal to 1"
                )
            }
            Error::MobiusOfZero => write!(f, "mobius(0) is undefined"),
            Error::OracleLimit { n, limit } => {
                write!(f, "oracle enumeration for n = {n} exceeds the guard n <= {limit}")
            }
            Error::UnknownName(name) => write!(f, "unknown name `{name}`"),
            Error::Parse { position, message } => {
                write!(f, "syntax error at position {position}: {message}")
            }
            Error::NonIntegerCoefficient { degree } => {
                write!(f, "coefficient of x^{degree} is not an integer")
            }
            Error::Cache(message) => write!(f, "cache error: {message}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
