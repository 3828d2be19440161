//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by the semigroup, algebra and derivation operations.
///
/// Vector-valued payloads are stored pre-rendered so the error type stays
/// independent of the scalar parameter.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("generator list is empty (or contains only zero vectors)")]
    EmptyGenerators,

    #[error("lattice rank {rank} exceeds the supported maximum {max}")]
    RankTooLarge { rank: usize, max: usize },

    #[error("cone generators do not span the ambient space")]
    RankDeficient,

    #[error("ray index {index} out of range (cone has {count} dual rays)")]
    RayIndexOutOfRange { index: usize, count: usize },

    #[error("operation requires a pointed semigroup")]
    NotPointed,

    #[error("positivity functional failed to be strictly positive on generator {generator}")]
    PositivityGuard { generator: String },

    #[error("element {element} is not a member of the semigroup")]
    NotInSemigroup { element: String },

    #[error("{degree} is not a root of the semigroup within box {box_bound}")]
    NotARoot { degree: String, box_bound: u64 },

    #[error("exponent {exponent} lies outside the semigroup")]
    ExponentOutsideSemigroup { exponent: String },

    #[error("the infinity exponent is not allowed on this carrier")]
    InfinityNotAllowed,

    #[error("exponent {exponent} lies outside level {level} of the quotient filtration")]
    ExponentOutsideLevel { exponent: String, level: usize },

    #[error("carrier mismatch: expected {expected}, got {got}")]
    CarrierMismatch { expected: String, got: String },

    #[error("operands belong to different semigroups")]
    SemigroupMismatch,

    #[error("derivation closure fails on Hilbert basis element {element}: image exponent leaves the semigroup")]
    ClosureViolation { element: String },

    #[error("degree {degree} does not lie in the lattice generated by the semigroup")]
    DegreeOutsideLattice { degree: String },

    #[error("generator images admit no additive linear form for degree {degree}")]
    InconsistentImages { degree: String },

    #[error("no image prescribed for Hilbert basis element {element}")]
    MissingGeneratorImage { element: String },

    #[error("image prescribed for {element}, which is not a Hilbert basis element")]
    UnknownGeneratorImage { element: String },

    #[error("tower level {found} does not match expected level {expected}")]
    TowerLevelMismatch { expected: usize, found: usize },

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("value does not fit in the requested integer width")]
    NumericOverflow,

    #[error("invalid quotient table: {message}")]
    InvalidTable { message: String },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
