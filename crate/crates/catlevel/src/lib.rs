//! IO, file formats, parallel enumeration and the `catlevel` command line
//! on top of [`catlevel_core`].

pub mod cli;
pub mod formats;
pub mod parallel;
pub mod render;

use catlevel_core::arrangement::ArrangementError;
use catlevel_core::bijection::BijectionError;
use catlevel_core::dyck::DyckError;
use catlevel_core::exactnum::NumError;
use catlevel_core::mcatalan::McatError;
use catlevel_core::verify::VerifyError;
use thiserror::Error;

pub use cli::run;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad arguments or input values; exit code 2.
    #[error("usage: {0}")]
    Usage(String),
    #[error("format: {0}")]
    Format(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Core(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

impl From<ArrangementError> for CliError {
    fn from(e: ArrangementError) -> Self {
        match e {
            ArrangementError::InvalidSpec(_)
            | ArrangementError::DimensionMismatch { .. }
            | ArrangementError::OnHyperplane { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Core(e.to_string()),
        }
    }
}

impl From<DyckError> for CliError {
    fn from(e: DyckError) -> Self {
        match e {
            DyckError::Malformed(_) | DyckError::BraidUnsupported | DyckError::WrongKind(_) => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Core(e.to_string()),
        }
    }
}

impl From<BijectionError> for CliError {
    fn from(e: BijectionError) -> Self {
        match e {
            BijectionError::Arrangement(a) => a.into(),
            BijectionError::Dyck(d) => d.into(),
            BijectionError::NotRefinement | BijectionError::NotInFundamentalChamber => {
                CliError::Core(e.to_string())
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<McatError> for CliError {
    fn from(e: McatError) -> Self {
        match e {
            McatError::Malformed(_) => CliError::Usage(e.to_string()),
            McatError::Dyck(d) => d.into(),
            _ => CliError::Core(e.to_string()),
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Arrangement(a) => a.into(),
            _ => CliError::Core(e.to_string()),
        }
    }
}

impl From<NumError> for CliError {
    fn from(e: NumError) -> Self {
        CliError::Usage(e.to_string())
    }
}
