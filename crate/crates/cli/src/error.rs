//! Error channel and exit-code policy.
//!
//! The process exit code encodes the failure class:
//!
//! * `0` — success;
//! * `1` — a verification failure: a `verify` suite reported a failing check,
//!   or an internal consistency sentinel fired (the library proved something
//!   about its own output and the proof failed);
//! * `2` — usage errors: malformed flags or argument values, including an
//!   invalid `WALLKIT_THREADS` setting (clap reports its own parse failures
//!   with the same code);
//! * `3` — precondition violations: well-formed requests whose mathematical
//!   preconditions do not hold (zero or imprimitive vectors, rank mismatches,
//!   unknown lattice or class names, indefinite Picard bases, unreadable
//!   input files).
//!
//! Errors are printed to stderr as a single compact JSON object
//! `{"error":<class>,"message":<detail>}` so scripted callers can branch on
//! them without parsing prose.

use isometry_engine::EngineError;
use lattice_core::LatticeError;
use nikulin_model::ModelError;
use orbit_classifier::ClassifierError;
use wall_oracle::WallOracleError;

use crate::json::{jobj, jstr};

/// A failed CLI request, tagged with its exit-code class.
#[derive(Debug)]
pub enum CliError {
    /// Malformed invocation (exit 2).
    Usage(String),
    /// A well-formed request whose preconditions fail (exit 3).
    Precondition(String),
    /// An internal verification sentinel fired (exit 1).
    Verification(String),
}

impl CliError {
    /// The process exit code for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }

    /// The one-line JSON form printed to stderr.
    pub fn to_json(&self) -> String {
        let (class, message) = match self {
            CliError::Usage(m) => ("usage", m),
            CliError::Precondition(m) => ("precondition", m),
            CliError::Verification(m) => ("verification", m),
        };
        jobj(&[("error", jstr(class)), ("message", jstr(message))])
    }
}

impl From<LatticeError> for CliError {
    fn from(e: LatticeError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<ModelError> for CliError {
    fn from(e: ModelError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::CertificationFailed(_) | EngineError::NormalizationBudget => {
                CliError::Verification(e.to_string())
            }
            other => CliError::Precondition(other.to_string()),
        }
    }
}

impl From<ClassifierError> for CliError {
    fn from(e: ClassifierError) -> Self {
        match e {
            ClassifierError::InfeasibleInvariants { .. } | ClassifierError::InternalMismatch(_) => {
                CliError::Verification(e.to_string())
            }
            other => CliError::Precondition(other.to_string()),
        }
    }
}

impl From<WallOracleError> for CliError {
    fn from(e: WallOracleError) -> Self {
        match e {
            WallOracleError::Classifier(inner) => CliError::from(inner),
            other => CliError::Precondition(other.to_string()),
        }
    }
}
