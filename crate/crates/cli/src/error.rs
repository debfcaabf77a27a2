use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("mismatch at {0}")]
    Mismatch(String),
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: digraph is not minimal strongly connected")]
    NotMinimal { line: usize },
    #[error(transparent)]
    Core(#[from] msd_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Process exit status: 1 table/oracle mismatch or runtime failure,
    /// 2 usage or malformed input, 3 non-minimal input to `reduce`,
    /// 4 polynomial overflow.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Mismatch(_) => 1,
            CliError::Usage(_) | CliError::Malformed { .. } => 2,
            CliError::NotMinimal { .. } => 3,
            CliError::Core(msd_core::Error::Overflow) => 4,
            CliError::Core(_) | CliError::Io(_) => 1,
        }
    }
}
