use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Fewer than two finite samples: the conjugate is an affine function or +inf.
    #[error("degenerate domain: {0}")]
    DegenerateDomain(String),

    #[error("query {value} outside sampled window [{lo}, {hi}]")]
    Extrapolation { value: f64, lo: f64, hi: f64 },

    #[error("series did not converge within {max_terms} terms (last log-term {last_log_term}, log-sum {log_sum})")]
    Truncation {
        max_terms: usize,
        last_log_term: f64,
        log_sum: f64,
    },

    #[error("order is undefined: {0}")]
    UndefinedOrder(String),

    #[error("no finite bound: Y(eps) is infinite on every grid point")]
    NoFiniteBound,

    #[error("invalid growth function: {0}")]
    InvalidGrowth(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("resource limit: {0}")]
    Resource(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("series diverges: {0}")]
    Divergence(String),
}
