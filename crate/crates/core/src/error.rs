use thiserror::Error;

use crate::multipoly::MultiPoly;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    NvarsMismatch { left: usize, right: usize },

    #[error("total degree of the zero polynomial is undefined")]
    ZeroPolynomial,

    #[error(
        "substitution does not produce a polynomial (nonzero remainder dividing by the x0 image)"
    )]
    NonPolynomial,

    #[error("substitution supplies {supplied} images but the polynomial has {needed} variables")]
    SubstitutionArity { supplied: usize, needed: usize },

    #[error("derivative order k = {k} exceeds n = {n}")]
    OrderOutOfRange { n: usize, k: usize },

    #[error("degenerate Jacobi recurrence denominator at degree {degree}")]
    DegenerateRecurrence { degree: usize },

    #[error("negative x0 exponent survived clearing denominators for n = {n}")]
    ResidualNegativeExponent { n: usize },

    #[error("closed form disagrees with the Dixmier oracle for n = {n}:\n  closed: {closed}\n  oracle: {oracle}")]
    OracleMismatch {
        n: usize,
        closed: Box<MultiPoly>,
        oracle: Box<MultiPoly>,
    },

    #[error("term ratio denominator vanishes at index {index}")]
    VanishingRatio { index: usize },

    #[error("series term is not divisible by x^2 at index {index}")]
    InexactDivision { index: usize },

    #[error("lower parameter reaches a pole at term {term} before the series terminates")]
    LowerParameterPole { term: usize },

    #[error("series does not terminate within {limit} terms")]
    NonTerminating { limit: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}
