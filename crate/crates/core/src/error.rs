use thiserror::Error;

use crate::arith::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{line}:{column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("invalid generator name `{0}`")]
    InvalidName(String),

    #[error("Jacobi identity fails on generators ({}, {}, {}): residual {residual}", triple.0, triple.1, triple.2)]
    JacobiViolation { triple: (u32, u32, u32), residual: Polynomial },

    #[error("bracket table entry {{x{0}, x{1}}} is out of range for {2} generators")]
    BracketOutOfRange(u32, u32, u32),

    #[error("bracket table entry {{x{0}, x{1}}} must be a polynomial in level-1 variables of the first {2} generators")]
    BracketNotBase(u32, u32, u32),

    #[error("Poisson bracket is only defined on level-1 polynomials; use nth_product for jet elements")]
    NotBaseLevel,

    #[error("generator index {index} exceeds the {count} generators of the ring")]
    GeneratorOutOfRange { index: u32, count: u32 },

    #[error("relation `{0}` must only mention level-1 variables")]
    RelationNotBase(Polynomial),

    #[error("weight window {window} is below the relation weight {weight}")]
    WindowBelowRelations { window: u32, weight: u32 },

    #[error("the vertex Poisson structure needs the untruncated jet ring")]
    TruncatedRing,

    #[error("Poisson structure has {poisson} generators but the ring has {ring}")]
    GeneratorMismatch { poisson: u32, ring: u32 },

    #[error("the Poisson structure has not been validated")]
    NotValidated,

    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,

    #[error("radical of the zero polynomial requested")]
    ZeroPolynomial,

    #[error("closure did not stabilize within {0} rounds")]
    NonTermination(usize),

    #[error("invalid minimal-series pair ({p}, {q}): need coprime p, q >= 2")]
    InvalidMinimalPair { p: i64, q: i64 },

    #[error("level {level} exceeds the module cutoff {cutoff}")]
    LevelAboveCutoff { level: u32, cutoff: u32 },

    #[error("invalid Lie algebra data: {0}")]
    InvalidLieAlgebra(String),

    #[error("unknown basis element `{0}`")]
    UnknownBasisName(String),
}

impl Error {
    pub fn parse(line: usize, column: usize, message: String) -> Self {
        Error::Parse { line, column, message }
    }

    /// Re-anchors a single-line parse diagnostic at `line`, shifting its
    /// column by `column_offset`.
    pub fn at(self, line: usize, column_offset: usize) -> Self {
        match self {
            Error::Parse { column, message, .. } => Error::Parse { line, column: column + column_offset, message },
            other => other,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
