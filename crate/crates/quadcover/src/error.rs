use serde_json::{json, Value};

use quadcover_core::Error as CoreError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    /// Unparseable or schema-violating input; exit status 1.
    Malformed,
    /// Well-formed input the mathematics rejects; exit status 2.
    Domain,
}

/// Error document emitted by the command line: `{code, message, location}`.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{code}: {message}{}", location.as_deref().map(|l| format!(" (at {l})")).unwrap_or_default())]
pub struct CliError {
    pub kind: ErrorKind,
    pub code: String,
    pub message: String,
    pub location: Option<String>,
}

impl CliError {
    pub fn malformed(code: &str, message: impl Into<String>, location: impl Into<String>) -> Self {
        CliError {
            kind: ErrorKind::Malformed,
            code: code.to_string(),
            message: message.into(),
            location: Some(location.into()),
        }
    }

    pub fn domain(code: &str, message: impl Into<String>) -> Self {
        CliError {
            kind: ErrorKind::Domain,
            code: code.to_string(),
            message: message.into(),
            location: None,
        }
    }

    pub fn at(mut self, location: impl Into<String>) -> Self {
        self.location = Some(location.into());
        self
    }

    /// A core error raised while reading input, e.g. an even modulus.
    pub fn from_core_input(e: CoreError, location: impl Into<String>) -> Self {
        CliError {
            kind: ErrorKind::Malformed,
            code: core_code(&e).to_string(),
            message: e.to_string(),
            location: Some(location.into()),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.kind {
            ErrorKind::Malformed => 1,
            ErrorKind::Domain => 2,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "error": {
                "code": self.code,
                "message": self.message,
                "location": self.location,
            }
        })
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::domain(core_code(&e), e.to_string())
    }
}

pub fn core_code(e: &CoreError) -> &'static str {
    match e {
        CoreError::RingMismatch { .. } => "ring_mismatch",
        CoreError::InvalidModulus(_) => "invalid_modulus",
        CoreError::InvalidRing(_) => "invalid_ring",
        CoreError::NotInvertible(_) => "not_invertible",
        CoreError::UndecidedUnit(_) => "undecided_unit",
        CoreError::NotSymmetric => "not_symmetric",
        CoreError::NotAlternating => "not_alternating",
        CoreError::InexactDivision => "inexact_division",
        CoreError::MissingAssignment(_) => "missing_assignment",
        CoreError::OutOfRange(_) => "out_of_range",
        CoreError::NotPolynomial(_) => "not_polynomial",
        CoreError::NotAField(_) => "not_a_field",
        CoreError::NotASection { .. } => "not_a_section",
        CoreError::ZeroDivisor(_) => "zero_divisor",
        CoreError::NotPrimitive => "not_primitive",
        CoreError::ConventionMismatch { .. } => "convention_mismatch",
        CoreError::NotTraceZero => "not_trace_zero",
        CoreError::InvalidAction(_) => "invalid_action",
        CoreError::InvalidMorphism(_) => "invalid_morphism",
        CoreError::NoUnitGenerator => "no_unit_generator",
        CoreError::Inconsistent(_) => "inconsistent",
        CoreError::Cancelled => "cancelled",
    }
}
