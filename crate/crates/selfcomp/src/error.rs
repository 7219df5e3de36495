use selfcomp_core::Error;

pub type AppResult<T> = Result<T, AppError>;

#[derive(Debug, thiserror::Error)]
pub enum AppError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("invalid input: {0}")]
    Invalid(String),
    /// A verification ran and returned false.
    #[error("verification failed: {0}")]
    Failed(String),
    /// Nothing exists to construct (no predicted map, no invariant).
    #[error("infeasible: {0}")]
    Infeasible(String),
}

impl AppError {
    /// 1 = a check failed, 2 = invalid input, 3 = infeasible.
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Failed(_) => 1,
            AppError::Infeasible(_) => 3,
            AppError::Core(e) => match e {
                Error::InfeasibleDegree { .. } | Error::SearchExhausted { .. } => 3,
                Error::Mismatch { .. } => 1,
                _ => 2,
            },
            AppError::Json(_) | AppError::Io(_) | AppError::Invalid(_) => 2,
        }
    }
}
