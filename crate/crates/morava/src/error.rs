use std::path::PathBuf;

use morava_core::cp_module::ModuleError;
use morava_core::dsl::DslError;
use morava_core::group::GroupError;
use morava_core::poly::{CoefficientError, PolyError};
use morava_core::verifier::VerifyError;

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitCode {
    Success = 0,
    Mismatch = 1,
    InputError = 2,
    BudgetExceeded = 3,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot parse {path}: {source}")]
    Parse { path: PathBuf, source: serde_json::Error },
    #[error("cannot write report: {0}")]
    Write(std::io::Error),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Budget(_) => ExitCode::BudgetExceeded,
            _ => ExitCode::InputError,
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::BudgetExceeded { .. } | GroupError::SizeLimit { .. } => CliError::Budget(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::BudgetExceeded { .. } | PolyError::NoStabilization { .. } => CliError::Budget(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<DslError> for CliError {
    fn from(e: DslError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<CoefficientError> for CliError {
    fn from(e: CoefficientError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<ModuleError> for CliError {
    fn from(e: ModuleError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Group(g) => g.into(),
            VerifyError::Poly(p) => p.into(),
            VerifyError::Dsl(d) => d.into(),
            VerifyError::Coefficient(c) => c.into(),
            VerifyError::InvalidPresentation(m) => CliError::Input(m),
        }
    }
}
