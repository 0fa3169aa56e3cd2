use thiserror::Error;

/// Errors produced by the partition, series, bijection and identity layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition parts must be positive, got {0}")]
    NonPositivePart(i64),

    #[error("invalid residue configuration: {0}")]
    InvalidResidue(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("coefficient index {index} exceeds truncation order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("series is not invertible: constant term {0} is not a unit")]
    NotInvertible(String),

    #[error("{pair} is outside the domain of {map}")]
    OutsideDomain { map: &'static str, pair: String },

    #[error("series routes disagree for {what} at q^{index}: {primary} vs {closed}")]
    RouteMismatch { what: String, index: usize, primary: String, closed: String },

    #[error("enumeration budget exceeded: n = {n} > {max}")]
    BudgetExceeded { n: u32, max: u32 },

    #[error("coefficient of q^{0} does not fit in i64")]
    Overflow(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
