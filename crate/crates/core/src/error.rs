use thiserror::Error;

/// Errors produced while loading or reasoning over a knowledge base.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("name `{name}` is used both as {first} and as {second}")]
    NamespaceClash {
        name: String,
        first: &'static str,
        second: &'static str,
    },

    #[error("tableau exceeded its budget of {budget} expansions")]
    ResourceLimit { budget: usize },

    #[error("the ABox is inconsistent with the strict axioms")]
    InconsistentAbox,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("oracle bounds exceeded: {0}")]
    OracleBounds(String),

    #[error("oracle requires a role-free knowledge base, found role `{0}`")]
    RoleBearing(String),

    #[error("no valid global rank function: {0}")]
    NoModel(String),

    #[error("oracle self-check failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
