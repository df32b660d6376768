use thiserror::Error;

#[derive(Debug, Error)]
pub enum LabError {
    #[error(transparent)]
    Core(#[from] stanley_core::Error),
    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("predicate {predicate} is not pattern-closed: {holder} satisfies it but its pattern {pattern} does not")]
    NotClosed {
        predicate: String,
        holder: String,
        pattern: String,
    },
    #[error("n = {n} exceeds the configured maximum {max} ({estimate} permutations to scan)")]
    TooLarge {
        n: usize,
        max: usize,
        estimate: u128,
    },
    #[error("pattern list line {line}: {message}")]
    PatternList { line: usize, message: String },
}

impl LabError {
    pub fn is_resource(&self) -> bool {
        match self {
            LabError::Core(e) => e.is_resource(),
            LabError::TooLarge { .. } => true,
            _ => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, LabError>;
