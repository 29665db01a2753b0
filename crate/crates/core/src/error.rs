use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("modulus {0} is not allowed: it must be odd and at least 3")]
    InvalidModulus(u64),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("{0} is not a unit")]
    NotInvertible(String),
    #[error("cannot decide whether {0} is a unit in this ring")]
    UndecidedUnit(String),
    #[error("polynomial is not symmetric in its variables")]
    NotSymmetric,
    #[error("polynomial is not invariant under the alternating group")]
    NotAlternating,
    #[error("exact division left a nonzero remainder")]
    InexactDivision,
    #[error("no value assigned to variable {0}")]
    MissingAssignment(String),
    #[error("{0}")]
    OutOfRange(String),
    #[error("expected a polynomial ring, found {0}")]
    NotPolynomial(String),
    #[error("expected a field, found {0}")]
    NotAField(String),
    #[error("{w} is not a section witness: its square differs from d = {d}")]
    NotASection { w: String, d: String },
    #[error("{0} is a zero divisor")]
    ZeroDivisor(String),
    #[error("form is not primitive: its coefficients generate a proper ideal")]
    NotPrimitive,
    #[error("operation requires the {expected} convention")]
    ConventionMismatch { expected: &'static str },
    #[error("matrix does not have trace zero")]
    NotTraceZero,
    #[error("invalid module action: {0}")]
    InvalidAction(String),
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("no candidate generator has a decidable unit value")]
    NoUnitGenerator,
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("computation cancelled")]
    Cancelled,
}
