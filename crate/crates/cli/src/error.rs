use serde::Serialize;
use twistcalc::{BraidError, MathError, OpenBookError, SurgeryError};

/// Machine-readable failure class; also fixes the process exit code.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Reason {
    Parse,
    Hypothesis,
    Internal,
}

impl Reason {
    pub fn exit_code(self) -> u8 {
        match self {
            Reason::Parse => 2,
            Reason::Hypothesis => 3,
            Reason::Internal => 4,
        }
    }
}

#[derive(Debug, thiserror::Error)]
#[error("{message}")]
pub struct CliError {
    pub reason: Reason,
    pub message: String,
}

impl CliError {
    pub fn parse(message: impl Into<String>) -> Self {
        Self {
            reason: Reason::Parse,
            message: message.into(),
        }
    }

    pub fn internal(message: impl Into<String>) -> Self {
        Self {
            reason: Reason::Internal,
            message: message.into(),
        }
    }
}

fn math_reason(e: &MathError) -> Reason {
    match e {
        MathError::Parse { .. } | MathError::Indeterminate => Reason::Parse,
        _ => Reason::Internal,
    }
}

impl From<MathError> for CliError {
    fn from(e: MathError) -> Self {
        Self {
            reason: math_reason(&e),
            message: e.to_string(),
        }
    }
}

impl From<SurgeryError> for CliError {
    fn from(e: SurgeryError) -> Self {
        let reason = match &e {
            SurgeryError::Math(m) => math_reason(m),
            SurgeryError::Hypothesis(_) => Reason::Hypothesis,
            SurgeryError::InvalidArgument(_) => Reason::Parse,
            SurgeryError::Internal(_) => Reason::Internal,
        };
        Self {
            reason,
            message: e.to_string(),
        }
    }
}

impl From<OpenBookError> for CliError {
    fn from(e: OpenBookError) -> Self {
        let reason = match &e {
            OpenBookError::Math(m) => math_reason(m),
            OpenBookError::Surgery(s) => return s.clone().into(),
            OpenBookError::Hypothesis(_) | OpenBookError::Unsupported(_) => Reason::Hypothesis,
            OpenBookError::InvalidSurface(_)
            | OpenBookError::UnknownCurve(_)
            | OpenBookError::UnknownArc(_)
            | OpenBookError::UnknownBoundary(_)
            | OpenBookError::WordParse(_)
            | OpenBookError::DisconnectedArcs { .. }
            | OpenBookError::MissingBoundaryCurve(_) => Reason::Parse,
        };
        Self {
            reason,
            message: e.to_string(),
        }
    }
}

impl From<BraidError> for CliError {
    fn from(e: BraidError) -> Self {
        let reason = match &e {
            BraidError::Math(m) => math_reason(m),
            _ => Reason::Parse,
        };
        Self {
            reason,
            message: e.to_string(),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        Self::internal(format!("json encoding failed: {e}"))
    }
}
