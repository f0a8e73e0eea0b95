//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Everything that can go wrong when constructing a domain value or
/// applying an operation outside its domain.
///
/// Variant names match the error conditions named in the operation
/// contracts; the payloads carry enough context to print a useful
/// diagnostic at the CLI boundary.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A word must contain at least one letter.
    #[error("words must be nonempty")]
    EmptyWord,

    /// Letters are positive integers starting at 1.
    #[error("letter {0} is not a positive integer")]
    ZeroLetter(u32),

    /// Content extraction requires the letter values to form a contiguous
    /// range 1..=m.
    #[error("alphabet has a gap: letter value {missing} is absent but {max} is present")]
    GapInAlphabet { missing: u32, max: u32 },

    /// A composition must consist of positive parts.
    #[error("compositions must have positive parts")]
    EmptyComposition,

    /// A word and a composition that must describe it disagree in length.
    #[error("length mismatch: word has {word_len} letters but the composition sums to {expected}")]
    LengthMismatch { word_len: usize, expected: usize },

    /// A position lies outside 1..=n.
    #[error("position {position} lies outside 1..={n}")]
    OutOfRange { position: usize, n: usize },

    /// theta requires the descent set of its argument to be contained in S.
    #[error("descent set is not contained in the prescribed set S")]
    DescentViolation,

    /// The letters do not form a rearrangement of 1..=n.
    #[error("not a permutation: letters must be a rearrangement of 1..=n")]
    NotAPermutation,

    /// The parts of a composition do not sum to the stated n.
    #[error("parts sum to {actual}, expected {expected}")]
    PartsSumMismatch { expected: usize, actual: usize },

    /// A biword needs two rows of equal, positive length.
    #[error("biword rows must have equal, positive length")]
    BiwordRowMismatch,

    /// An adjacent-transposition index must satisfy 1 <= i <= n-1.
    #[error("transposition position {position} lies outside 1..={max}")]
    PositionOutOfRange { position: usize, max: usize },

    /// The Stirling-word bijection only accepts 212-avoiding input.
    #[error("word contains a 212 occurrence and is not a Stirling word")]
    NotStirling,

    /// A biword fails the dominated-cycle shape check: either a single
    /// column, or the bottom row is the top row rotated one step right
    /// with a strictly dominating first letter.
    #[error("biword is not a dominated cycle")]
    NotDominatedCycle,

    /// A set partition must have nonempty, disjoint blocks covering 1..=n
    /// with strictly increasing block maxima.
    #[error("invalid set partition: {0}")]
    InvalidPartition(&'static str),

    /// The identity registry has no entry under this id.
    #[error("unknown identity id: {0}")]
    UnknownIdentity(String),

    /// A statistic name (CLI or FFI surface) did not parse.
    #[error("unknown statistic name: {0}")]
    UnknownStat(String),

    /// A family descriptor string did not parse.
    #[error("invalid family descriptor: {0}")]
    InvalidFamilySpec(String),

    /// A word or integer literal did not parse.
    #[error("invalid literal: {0}")]
    InvalidLiteral(String),

    /// A statistic assignment must be nonempty and bind each variable at
    /// most once.
    #[error("invalid statistic assignment: {0}")]
    InvalidAssignment(String),
}
