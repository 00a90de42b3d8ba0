use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix entry {entry} is not finite ({value})")]
    NonFinite { entry: &'static str, value: f64 },

    #[error("double-double overflow")]
    Overflow,

    #[error("double-double underflow")]
    Underflow,

    #[error("square root of negative value {0}")]
    NegativeSqrt(f64),

    #[error("ulp distance of NaN is undefined")]
    UlpNaN,

    #[error("ulp distance between {0} and {1} crosses zero")]
    UlpOppositeSigns(f64, f64),

    #[error("test set size must be at least 1")]
    EmptyTestSet,

    #[error("variance must be positive and finite, got {0}")]
    InvalidVariance(f64),

    #[error("invalid sweep configuration: {0}")]
    InvalidConfig(&'static str),
}
