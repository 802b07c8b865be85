use glab_core::chars::CharError;
use glab_core::elliptic::EllipticError;
use glab_core::exactalg::ExactError;
use glab_core::ffext::FfError;
use glab_core::groups::GroupError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("syntax error at {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown generator '{name}' at {position}: no generator of F_q^* is declared")]
    UnknownGenerator { position: usize, name: String },
    #[error("unknown scenario '{0}'")]
    UnknownScenario(String),
    #[error("{0}")]
    Usage(String),
    #[error("assertion failed: {0}")]
    Assertion(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl CliError {
    pub fn syntax(position: usize, message: &str) -> Self {
        CliError::Syntax {
            position,
            message: message.to_string(),
        }
    }

    /// 1 for a failed expectation, 2 for bad input, 3 for a broken internal
    /// invariant.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Assertion(_) => 1,
            CliError::Invariant(_) => 3,
            _ => 2,
        }
    }
}

impl From<ExactError> for CliError {
    fn from(e: ExactError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<CharError> for CliError {
    fn from(e: CharError) -> Self {
        match e {
            CharError::InvariantViolation(_) | CharError::IncompleteDecomposition { .. } => {
                CliError::Invariant(e.to_string())
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<FfError> for CliError {
    fn from(e: FfError) -> Self {
        match e {
            FfError::FunctionalEquationViolated(_) => CliError::Invariant(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<EllipticError> for CliError {
    fn from(e: EllipticError) -> Self {
        match e {
            EllipticError::WeilViolation(_) | EllipticError::InvariantViolation(_) => {
                CliError::Invariant(e.to_string())
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}
