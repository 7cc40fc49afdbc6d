//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid domain: {0}")]
    InvalidDomain(String),

    #[error("tessellation sizing: {0}")]
    TessellationSizing(String),

    #[error("degenerate seed configuration: {0}")]
    DegenerateSeeds(String),

    #[error("tessellation validation failed: {0}")]
    TessellationInvalid(String),

    #[error("faces ({0}, {1}) are not adjacent")]
    NotAdjacent(usize, usize),

    #[error("sensor {0}: measurement disk lies entirely outside the tessellation")]
    SensorOutsideTessellation(String),

    #[error("sensor network: {0}")]
    SensorNetwork(String),

    #[error("scenario: {0}")]
    Scenario(String),

    #[error("CFL violation: {0}")]
    CflViolation(String),

    #[error("autodiff: {0}")]
    Autodiff(String),

    #[error("model: {0}")]
    Model(String),

    #[error("training aborted: {0}")]
    TrainingAborted(String),

    #[error("non-finite value at forecast step {step}: {what}")]
    NonFinite { step: usize, what: String },

    #[error("config: {0}")]
    Config(String),

    #[error("data format: {0}")]
    DataFormat(String),

    #[error("mismatched artifacts: {0}")]
    ArtifactMismatch(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
