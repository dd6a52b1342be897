use thiserror::Error;

/// Errors raised while constructing or combining fuzzy pattern data.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("input sequence is empty")]
    EmptyInput,
    #[error("sequence lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("({mu}, {nu}) is not a valid element: {reason}")]
    InvalidElement {
        mu: f64,
        nu: f64,
        reason: &'static str,
    },
    #[error("value {value} at position {index} is outside [0, 1]")]
    ValueOutOfRange { index: usize, value: f64 },
    #[error("pattern is not fuzzy at position {index}: mu + nu = {sum}")]
    NotFuzzy { index: usize, sum: f64 },
    #[error("grid position ({m}, {n}) is outside the {rows} x {cols} grid")]
    GridIndex {
        m: usize,
        n: usize,
        rows: usize,
        cols: usize,
    },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("duplicate pattern label {0:?}")]
    DuplicateLabel(String),
}
