use gallery_core::building::BuildingError;
use gallery_core::complex::{ComplexError, GraphError};
use gallery_core::connectivity::ConnectivityError;
use gallery_core::coxeter::CoxeterError;
use gallery_core::lattice::LatticeError;
use serde_json::{json, Value};

/// Failure of a run, grouped by exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Cap(String),
    #[error("{message}")]
    Verification { message: String, detail: Value },
    #[error("{0}")]
    Other(String),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "parse",
            CliError::Cap(_) => "cap",
            CliError::Verification { .. } => "verification",
            CliError::Other(_) => "error",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Verification { .. } => 4,
            CliError::Other(_) => 1,
        }
    }

    /// The JSON document written to stderr.
    pub fn report(&self) -> Value {
        let mut v = json!({ "error": self.kind(), "message": self.to_string() });
        if let CliError::Verification { detail, .. } = self {
            v["detail"] = detail.clone();
        }
        v
    }

    pub fn other(e: impl std::fmt::Display) -> Self {
        CliError::Other(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Other(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<CoxeterError> for CliError {
    fn from(e: CoxeterError) -> Self {
        match e {
            CoxeterError::TooManyVertices(_) => {
                CliError::Cap(format!("{e}; pass --radius or raise GALLERY_MAX_VERTICES"))
            }
            CoxeterError::InvalidMatrix(_) | CoxeterError::BadWord(_) => CliError::Parse(e.to_string()),
            _ => CliError::Other(e.to_string()),
        }
    }
}

impl From<BuildingError> for CliError {
    fn from(e: BuildingError) -> Self {
        match e {
            BuildingError::TooLarge { .. } => CliError::Cap(e.to_string()),
            BuildingError::Field(_) | BuildingError::RankTooSmall(_) | BuildingError::InvalidFlag(_) => {
                CliError::Parse(e.to_string())
            }
            BuildingError::Overlap(ref v) => CliError::Verification {
                message: e.to_string(),
                detail: json!({ "violation": v.to_string() }),
            },
            _ => CliError::Other(e.to_string()),
        }
    }
}

impl From<LatticeError> for CliError {
    fn from(e: LatticeError) -> Self {
        match e {
            LatticeError::TooLarge { .. } => CliError::Cap(e.to_string()),
            LatticeError::InternalOverlap { .. } => CliError::Verification {
                message: e.to_string(),
                detail: Value::Null,
            },
            LatticeError::NotDistanceTwo | LatticeError::ChamberOutOfRange(_) => CliError::Other(e.to_string()),
            _ => CliError::Parse(e.to_string()),
        }
    }
}

impl From<ComplexError> for CliError {
    fn from(e: ComplexError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<ConnectivityError> for CliError {
    fn from(e: ConnectivityError) -> Self {
        CliError::Other(e.to_string())
    }
}
