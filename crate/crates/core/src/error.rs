use thiserror::Error;

/// Errors surfaced by constructors, parsers, and budgeted searches.
///
/// Internal arithmetic never errors; once a value is constructed its
/// invariants hold, so group operations and predicates either return
/// plain values or propagate one of these from a precondition check.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 3, got {0}")]
    RankTooSmall(usize),

    #[error("index {index} out of range: expected 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("residue collision: window entries {a} and {b} are congruent modulo {n}")]
    ResidueCollision { a: i64, b: i64, n: usize },

    #[error("window sum invariant violated: entries sum to {sum}, expected {expected} for n={n}")]
    WindowSum { sum: i64, expected: i64, n: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("word is not reduced")]
    NotReduced,

    #[error("element is not fully commutative")]
    NotFullyCommutative,

    #[error("commutation class exceeded cap of {0} words")]
    ClassCapExceeded(usize),

    #[error("enumeration budget of {0} elements exceeded")]
    BudgetExceeded(usize),

    #[error("not a 321 instance: positions ({a}, {b}, {c}) must increase while their images decrease")]
    InvalidTriple { a: i64, b: i64, c: i64 },
}
