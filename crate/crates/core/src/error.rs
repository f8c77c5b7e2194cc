use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("label error: {0}")]
    Label(String),

    #[error("shape error: {0}")]
    Shape(String),

    #[error("unsupported: {0}")]
    Capability(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("not a matroid: {0}")]
    Axiom(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid matroid spec: {0}")]
    Spec(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
