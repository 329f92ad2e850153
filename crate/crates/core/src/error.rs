use thiserror::Error;

use crate::scalar::ScalarError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("shape mismatch in {context}: expected {expected}, found {found}")]
    ShapeMismatch {
        context: String,
        expected: String,
        found: String,
    },
    #[error("unknown basis label `{label}` in space {space}")]
    UnknownLabel { space: String, label: String },
    #[error("invalid space: {0}")]
    InvalidSpace(String),
    #[error("linear system has no solution")]
    NoSolution,
    #[error("map is not invertible: {0}")]
    Singular(String),
    #[error("not convolution invertible: {0}")]
    NotInvertible(String),
    #[error("bialgebra {0} is not a Hopf algebra: the identity has no convolution inverse")]
    NotHopf(String),
    #[error("objects live over different ambient Hopf algebras: {0}")]
    BaseMismatch(String),
    #[error("comodule side mismatch: {0}")]
    SideMismatch(String),
    #[error("axiom failure {relation}: {witness}")]
    AxiomFailure { relation: String, witness: String },
    #[error("map does not factor through the equalizer: {0}")]
    FactorizationFailure(String),
    #[error("induced structure on coinvariants does not exist: {0}")]
    InducedStructureFailure(String),
    #[error("theorem violation (implementation bug or corrupt input): {0}")]
    TheoremViolation(String),
    #[error("corrupt fixture: {0}")]
    CorruptFixture(String),
    #[error("search space of {candidates} candidates exceeds bound {bound}")]
    SearchSpaceTooLarge { candidates: String, bound: u64 },
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("validation error: {0}")]
    Validation(String),
}

impl Error {
    pub(crate) fn shape(context: &str, expected: impl ToString, found: impl ToString) -> Self {
        Error::ShapeMismatch {
            context: context.to_string(),
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }
}
