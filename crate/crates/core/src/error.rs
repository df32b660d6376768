use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("could not parse permutation at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("enumeration limit of {limit} exceeded")]
    EnumerationLimit { limit: usize },

    #[error("tree budget of {budget} nodes exceeded while expanding {perm}")]
    TreeBudget { budget: usize, perm: String },

    #[error("permutation {0} has no descent")]
    NoDescent(String),

    #[error("unsupported subdiagram: {0}")]
    UnsupportedSubdiagram(String),

    #[error("resource limit: {0}")]
    Resource(String),
}

impl Error {
    /// True for failures caused by a size cap or budget rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            Error::EnumerationLimit { .. } | Error::TreeBudget { .. } | Error::Resource(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
