use qsic::QsicError;
use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const CORPUS_MISMATCH: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const DEGENERATE_PENCIL: i32 = 3;
    pub const PROPORTIONAL_FORMS: i32 = 4;
    pub const ZERO_FORM: i32 = 5;
    pub const NO_INPUT: i32 = 66;
    pub const INTERNAL: i32 = 70;
    pub const CANT_CREATE: i32 = 73;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{line}:{column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("{line}:{column}: `{token}` is not an exact rational (write fractions as p/q)")]
    NonRationalCoefficient { line: usize, column: usize, token: String },

    #[error("{0}")]
    Precondition(String),

    #[error("cannot read {path}: {message}")]
    Read { path: String, message: String },

    #[error("cannot write {path}: {message}")]
    Write { path: String, message: String },

    #[error(transparent)]
    Qsic(#[from] QsicError),
}

impl CliError {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        CliError::Parse { line, column, message: message.into() }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::NonRationalCoefficient { .. } | CliError::Precondition(_) => exit::USAGE,
            CliError::Read { .. } => exit::NO_INPUT,
            CliError::Write { .. } => exit::CANT_CREATE,
            CliError::Qsic(QsicError::DegeneratePencil) => exit::DEGENERATE_PENCIL,
            CliError::Qsic(QsicError::ProportionalForms) => exit::PROPORTIONAL_FORMS,
            CliError::Qsic(QsicError::ZeroForm) => exit::ZERO_FORM,
            CliError::Qsic(_) => exit::INTERNAL,
        }
    }

    /// Stable machine name used in JSON reports.
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse { .. } => "parse-error",
            CliError::NonRationalCoefficient { .. } => "non-rational-coefficient",
            CliError::Precondition(_) => "precondition",
            CliError::Read { .. } => "read-error",
            CliError::Write { .. } => "write-error",
            CliError::Qsic(e) => match e {
                QsicError::ZeroForm => "zero-form",
                QsicError::ProportionalForms => "proportional-forms",
                QsicError::DegeneratePencil => "degenerate-pencil",
                QsicError::TableMiss { .. } => "table-miss",
                _ => "internal",
            },
        }
    }
}
