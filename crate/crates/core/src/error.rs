use thiserror::Error;

/// Errors raised by the evaluation toolkit.
///
/// Undefined metric values (vanishing denominators) are not errors; they are
/// reported as `None` by the metric functions.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid outcome: {0}")]
    InvalidOutcome(String),

    #[error("invalid dataset: {0}")]
    InvalidDataset(String),

    #[error("incoherent costs: {0}")]
    IncoherentCosts(String),

    #[error("infeasible scenario: {0}")]
    InfeasibleScenario(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("missing context: {0}")]
    MissingContext(String),

    #[error("degenerate weights: {0}")]
    DegenerateWeights(String),

    #[error("no solution: {0}")]
    NoSolution(String),

    #[error("infeasible moments: mean {mean}, variance {variance}")]
    InfeasibleMoments { mean: f64, variance: f64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("empty input: {0}")]
    Degenerate(String),

    #[error("ingestion error: {0}")]
    Ingestion(String),

    #[error("insufficient data: need {needed} values, have {available}")]
    InsufficientData { needed: usize, available: usize },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("unknown metric id: {0}")]
    UnknownMetric(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for failures caused by bad input rather than by the environment.
    pub fn is_usage(&self) -> bool {
        !matches!(self, Error::Io(_) | Error::Json(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
