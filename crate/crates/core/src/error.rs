use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An IFS was built from an empty list of maps.
    EmptyIfs,
    /// Map `index` (0-based) has Lipschitz constant `lambda >= 1`.
    NotContractive {
        index: usize,
        lambda: f64,
    },
    /// A 1-based symbol outside `1..=bound`.
    SymbolOutOfRange {
        symbol: usize,
        bound: usize,
    },
    LambdaOutOfRange(f64),
    /// An operation that needs a nonempty set or point collection got none.
    EmptyInput,
    /// Two discrete sets (or a set and a grid) live on different grids.
    GridMismatch,
    DeltaNonPositive(f64),
    BadLength,
    NeedTwoSystems,
    /// Degenerate bounding box or zero resolution.
    InvalidGrid,
    /// A coefficient or coordinate is NaN or infinite.
    NonFinite,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyIfs => f.write_str("IFS has no maps"),
            Error::NotContractive { index, lambda } => {
                write!(f, "map {} is not contractive (lipschitz = {lambda})", index + 1)
            }
            Error::SymbolOutOfRange { symbol, bound } => {
                write!(f, "symbol {symbol} out of range 1..={bound}")
            }
            Error::LambdaOutOfRange(l) => write!(f, "contraction factor {l} not in (0, 1)"),
            Error::EmptyInput => f.write_str("empty input set"),
            Error::GridMismatch => f.write_str("sets belong to different grids"),
            Error::DeltaNonPositive(d) => write!(f, "target error {d} must be positive"),
            Error::BadLength => f.write_str("length and alphabet size must be at least 1"),
            Error::NeedTwoSystems => f.write_str("at least two systems are required"),
            Error::InvalidGrid => f.write_str("grid needs a nondegenerate box and resolution >= 1"),
            Error::NonFinite => f.write_str("non-finite value"),
        }
    }
}

impl core::error::Error for Error {}
