//! Crate-wide error type. Every domain error carries enough context to be
//! printed verbatim by the CLI.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at line {line}: {msg}")]
    Syntax { line: usize, msg: String },

    #[error("gentle axiom ({axiom}) violated at vertex \"{vertex}\": {detail}")]
    GentleAxiom {
        axiom: u8,
        vertex: String,
        detail: String,
    },

    #[error("color \"{color}\" is not a directed path: {detail}")]
    ColorNotAPath { color: String, detail: String },

    #[error("quiver has an oriented cycle through vertex \"{vertex}\"")]
    NotAcyclic { vertex: String },

    #[error("unknown vertex \"{0}\"")]
    UnknownVertex(String),

    #[error("unknown arrow \"{0}\"")]
    UnknownArrow(String),

    #[error("unknown band \"{0}\"")]
    UnknownBand(String),

    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("specialization error: no value for variable \"{0}\"")]
    Specialization(String),

    #[error("invalid rank function: {0}")]
    InvalidRankFunction(String),

    #[error("invalid sign function: {0}")]
    InvalidSignFunction(String),

    #[error("band \"{0}\" needs a nonzero parameter (zero degenerates the band)")]
    DegenerateLambda(String),

    #[error("missing lambda for band \"{0}\"")]
    MissingLambda(String),

    #[error("(d, r) is not regular: {0}")]
    NotRegular(String),

    #[error("weight pairing is {0}, not 0: Hom(F, M) is not square")]
    WeightNotZero(i64),

    #[error("prime {0} not supported (need a prime p <= 13)")]
    BadPrime(u64),

    #[error("denominator of {value} is divisible by {prime}; choose another prime")]
    PrimeDividesDenominator { value: String, prime: u64 },

    #[error("subspace enumeration budget exceeded: {needed} tuples > budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("coincident parameters within one band family: {0}")]
    CoincidentMu(String),

    #[error("division by zero ratio: grid value {0} coincides with a module parameter")]
    GridHitsParameter(String),

    #[error("semi-invariant shape violated: {0}")]
    ShapeViolation(String),

    #[error("invalid flag value \"{flag}\": {detail}")]
    Flag { flag: String, detail: String },

    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
