//! Error type shared by all engine modules.

use alloc::string::String;
use core::fmt;

/// Engine-wide result alias.
pub type Result<T> = core::result::Result<T, EngineError>;

/// All failure modes of the engine.
///
/// `InternalConsistency` is reserved for conditions that a correct build can
/// never reach (a negative residual multiplicity, a failed dimension
/// identity); it firing means the engine itself is wrong, not the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EngineError {
    /// A system label outside {F4, B4, D5, A1}.
    UnknownSystem(String),
    /// A highest weight that is not dominant integral for its system.
    InvalidHighestWeight(String),
    /// Tensor operands living in different root systems.
    SystemMismatch(String, String),
    /// An embedding name outside the two supported restrictions.
    UnknownEmbedding(String),
    /// Restriction peeling produced a negative residual or a dimension gap.
    InconsistentEmbedding(String),
    /// Odd SO(2) weight where the setting only admits even ones.
    OddSo2Weight(i64),
    /// Filtration degree too large for the module truncation.
    TruncationTooShallow { degree: usize, depth: usize },
    /// Harish-Chandra parameter requested for a non-extremal module kind.
    NonExtremalKind,
    /// A dimension guard was exceeded.
    CapExceeded { dim: String, cap: String },
    /// A check that can only fail if the engine is miscoded.
    InternalConsistency(String),
    /// Malformed argument (bad coordinate count, unparsable weight, ...).
    InvalidArgument(String),
}

impl fmt::Display for EngineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineError::UnknownSystem(s) => write!(f, "unknown system: {s}"),
            EngineError::InvalidHighestWeight(s) => write!(f, "invalid highest weight: {s}"),
            EngineError::SystemMismatch(a, b) => {
                write!(f, "system mismatch: {a} vs {b}")
            }
            EngineError::UnknownEmbedding(s) => write!(f, "unknown embedding: {s}"),
            EngineError::InconsistentEmbedding(s) => write!(f, "inconsistent embedding: {s}"),
            EngineError::OddSo2Weight(w) => {
                write!(f, "odd SO(2) weight excluded: {w}")
            }
            EngineError::TruncationTooShallow { degree, depth } => write!(
                f,
                "truncation too shallow: degree {degree} needs depth >= {}, have {depth}",
                2 * (degree + 1)
            ),
            EngineError::NonExtremalKind => {
                write!(f, "Harish-Chandra parameter requires a lowest or highest weight module")
            }
            EngineError::CapExceeded { dim, cap } => {
                write!(f, "cap exceeded: dimension {dim} > cap {cap}")
            }
            EngineError::InternalConsistency(s) => write!(f, "internal consistency error: {s}"),
            EngineError::InvalidArgument(s) => write!(f, "invalid argument: {s}"),
        }
    }
}

impl core::error::Error for EngineError {}
