use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `k` must be at least 2 and `n` at least 1.
    InvalidParams {
        n: usize,
        k: usize,
    },
    /// A word does not have the length the operation requires.
    WrongLength {
        expected: usize,
        actual: usize,
    },
    SymbolOutOfRange {
        symbol: usize,
        k: usize,
    },
    /// An operation that needs a non-empty word got ε.
    EmptyWord,
    /// The digits encoding only supports alphabets of size ≤ 10.
    DigitsUnsupported {
        k: usize,
    },
    MalformedToken(String),
    NotLyndon,
    /// Input violates an operation's precondition.
    Precondition(&'static str),
    /// `u` does not occur in the text handed to `find_suffix`.
    NotFound,
    /// `k^n` is too large for a reference oracle to materialize.
    CapExceeded {
        n: usize,
        k: usize,
        cap: usize,
    },
    /// A brute-force search found two distinct optimal answers.
    Ambiguous,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParams { n, k } => {
                write!(f, "invalid parameters n={n}, k={k}: need n >= 1 and k >= 2")
            }
            Error::WrongLength { expected, actual } => {
                write!(f, "word length must equal n ({expected}), got {actual}")
            }
            Error::SymbolOutOfRange { symbol, k } => {
                write!(f, "symbol {symbol} out of range for alphabet size {k}")
            }
            Error::EmptyWord => f.write_str("empty word"),
            Error::DigitsUnsupported { k } => {
                write!(f, "digits format requires k <= 10 (k = {k}); use csv")
            }
            Error::MalformedToken(tok) => write!(f, "malformed symbol token {tok:?}"),
            Error::NotLyndon => f.write_str("input is not a Lyndon word"),
            Error::Precondition(what) => write!(f, "precondition violated: {what}"),
            Error::NotFound => f.write_str("pattern does not occur in text"),
            Error::CapExceeded { n, k, cap } => {
                write!(
                    f,
                    "k^n for n={n}, k={k} exceeds the oracle cap of {cap} symbols"
                )
            }
            Error::Ambiguous => f.write_str("brute-force search found no unique optimum"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
