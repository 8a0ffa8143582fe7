//! Crate-wide error type.
//!
//! Every fallible operation in the library returns [`enum@Error`]. The variants
//! mirror the contract violations each layer can detect: field construction,
//! element parsing, matrix shape mismatches, code-spec violations and budget
//! exhaustion.

use thiserror::Error;

/// Library result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The requested characteristic is not a prime number.
    #[error("{0} is not prime")]
    NotPrime(u64),
    /// p^m does not fit the 64-bit element word.
    #[error("field order {p}^{m} does not fit in 64 bits")]
    FieldTooLarge { p: u64, m: u32 },
    /// A supplied modulus polynomial is malformed (wrong degree, not monic,
    /// coefficients out of range).
    #[error("bad modulus polynomial: {0}")]
    BadModulus(String),
    /// The modulus polynomial is not irreducible over GF(p).
    #[error("modulus polynomial is reducible over GF({0})")]
    Reducible(u64),
    /// Power-of-w notation was requested but x is not a generator of the
    /// multiplicative group.
    #[error("the residue of x does not generate GF({0})^*; power notation unavailable")]
    NotPrimitive(u64),
    /// Division or inversion of zero.
    #[error("division by zero")]
    DivisionByZero,
    /// Arithmetic mixed elements from two different field contexts.
    #[error("field mismatch: elements belong to different field contexts")]
    FieldMismatch,
    /// Square root of a quadratic non-residue.
    #[error("element is not a square")]
    NotASquare,
    /// Element string could not be parsed in the given field.
    #[error("cannot parse element {text:?}: {reason}")]
    BadElement { text: String, reason: String },

    /// Matrix operation on a non-square matrix.
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    /// Incompatible matrix dimensions.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// Evaluation points are not pairwise distinct.
    #[error("evaluation points contain duplicates (positions {0} and {1})")]
    DuplicatePoints(usize, usize),
    /// A column multiplier is zero.
    #[error("zero column multiplier at position {0}")]
    ZeroMultiplier(usize),
    /// Code dimensions out of range (k, n, q constraints).
    #[error("bad code dimension: {0}")]
    BadDimension(String),
    /// Generator rows are linearly dependent.
    #[error("generator matrix has rank {rank}, expected {k}")]
    RankDeficient { rank: usize, k: usize },
    /// An enumeration exceeded its budget.
    #[error("budget exceeded: {work} units needed, budget {budget}{}",
        partial.as_deref().map(|s| format!("; {s}")).unwrap_or_default())]
    BudgetExceeded {
        work: u128,
        budget: u128,
        partial: Option<String>,
    },
    /// A decision procedure's hypotheses do not cover the instance.
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    /// A check that requires an MDS code was given a non-MDS one.
    #[error("code is not MDS: {0}")]
    NotMds(String),
    /// A family spec violates its structural constraints.
    #[error("spec violation: {0}")]
    SpecViolation(String),
    /// Supplied polynomial exceeds the degree bound of the criterion.
    #[error("polynomial degree {deg} exceeds bound {bound}")]
    DegreeTooHigh { deg: usize, bound: i64 },
    /// Self-duality asked of a code with n != 2k.
    #[error("bad length: n = {n} but self-duality needs n = 2k = {0}", 2 * k)]
    BadLength { n: usize, k: usize },
    /// Geometric evaluation set with repeated powers.
    #[error("powers of the generator are not distinct: {0}")]
    NotDistinct(String),
    /// Unknown catalog id.
    #[error("unknown catalog id {0:?}")]
    UnknownId(String),
    /// A closed-form criterion and its independent oracle disagreed.
    #[error("internal oracle mismatch: {0}")]
    OracleMismatch(String),
}
