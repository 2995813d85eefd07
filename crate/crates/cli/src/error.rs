use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Geometry(#[from] ellipse_billiards::Error),
    #[error("cannot infer the polygon kind: {0}")]
    Inference(String),
    #[error("verification failed: worst residual {worst:.3e} exceeds {tol:.3e}")]
    VerificationFailed { worst: f64, tol: f64 },
    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Geometry(_)
            | CliError::Inference(_)
            | CliError::VerificationFailed { .. } => 3,
            CliError::Io { .. } => 4,
        }
    }

    pub fn code(&self) -> String {
        match self {
            CliError::Parse(_) => "parse_error".into(),
            CliError::Geometry(e) => e.code().into(),
            CliError::Inference(_) => "kind_inference_failed".into(),
            CliError::VerificationFailed { .. } => "verification_failed".into(),
            CliError::Io { .. } => "io_error".into(),
        }
    }
}
