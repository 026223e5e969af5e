use std::fmt;

use thiserror::Error;

use crate::arith::{GaussianRational, QMatrix, QVector};

/// Malformed textual or JSON input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed scalar literal {0:?}")]
    Scalar(String),
    #[error("malformed json: {0}")]
    Json(String),
    #[error("bad shape: {0}")]
    Shape(String),
}

/// The nonzero value some map takes on a relation that should have been killed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViolationValue {
    Scalar(GaussianRational),
    Vector(QVector),
    Matrix(QMatrix),
}

impl fmt::Display for ViolationValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ViolationValue::Scalar(s) => write!(f, "{s}"),
            ViolationValue::Vector(v) => write!(f, "{v}"),
            ViolationValue::Matrix(m) => write!(f, "{m}"),
        }
    }
}

/// A relation of the presentation on which a map failed to vanish.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub relation: String,
    pub value: ViolationValue,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.relation, self.value)
    }
}

fn list(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not hermitian")]
    NotHermitian,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("antipode unavailable: presentation {0} is not of Kac type")]
    NotKac(String),
    #[error("wrong presentation kind: expected {expected}, found {found}")]
    WrongKind { expected: String, found: String },
    #[error("representation does not vanish on relations: {}", list(.0))]
    InvalidRepresentation(Vec<Violation>),
    #[error("cocycle does not vanish on relations: {}", list(.0))]
    InvalidCocycle(Vec<Violation>),
    #[error("no cocycle with these generator values: {0}")]
    CocycleCondition(String),
    #[error("functional does not vanish on relations: {}", list(.0))]
    FunctionalRejected(Vec<Violation>),
    #[error("functional is not hermitian on generators")]
    NotHermitianFunctional,
    #[error("not a 2-cocycle: {0}")]
    NotTwoCocycle(String),
    #[error("two-cocycle is not a coboundary: defect {0}")]
    NonzeroDefect(QMatrix),
    #[error("substitution does not preserve the counit at ({0},{1})")]
    SubstitutionCounit(usize, usize),
    #[error("primitive check failed: {0}")]
    PrimitiveCheck(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    /// Malformed or ill-fitting input, as opposed to a mathematical failure.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::LengthMismatch(..)
                | Error::DimensionMismatch(_)
                | Error::NotHermitian
                | Error::InvalidParams(_)
                | Error::NotKac(_)
                | Error::WrongKind { .. }
                | Error::SubstitutionCounit(..)
                | Error::Unsupported(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
