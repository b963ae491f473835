use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Evaluation requested outside the open quadrant while a factor is singular there.
    #[error("point (theta = {theta}, xi = {xi}) is outside the open chart where {monomial} is singular")]
    Domain { theta: f64, xi: f64, monomial: String },

    #[error("integral of {monomial} diverges: requires {condition}")]
    Divergent { monomial: String, condition: String },

    #[error("inadmissible parameters: {0}")]
    Inadmissible(String),

    #[error("expression {expr} does not depend only on the {variable} variable pair")]
    VariableMismatch { variable: &'static str, expr: String },

    #[error("the zero state cannot be normalized")]
    ZeroState,

    #[error("invalid grid: {0}")]
    Grid(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
}
