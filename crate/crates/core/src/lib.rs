//! Schubert variations of Hodge structure.
//!
//! Exact combinatorics of root systems, Weyl groups and gradings used to
//! classify the Schubert varieties in a rational homogeneous variety that
//! are variations of Hodge structure, together with the associated Hodge
//! numbers, real forms and a brute-force Lie algebra homology check.

pub mod dynkin;
pub mod grading;
pub mod hodge_rep;
pub mod homology_oracle;
pub mod real_form;
pub mod root_system;
pub mod schubert_vhs;
pub mod weyl;

pub use grading::{GradedRoots, GradingElement, Reduction};
pub use root_system::{Family, LieType, Root, RootSet, RootSystem, Weight, Q};
pub use weyl::WeylElement;

/// Default limit on the number of enumerated group elements or weights.
pub const DEFAULT_CAP: usize = 1_000_000;

/// The enumeration cap, overridable through the `HS_CAP` environment variable.
pub fn default_cap() -> usize {
    std::env::var("HS_CAP")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_CAP)
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid rank {rank} for type {family}")]
    InvalidRank { family: Family, rank: usize },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("{what} exceeded the cap of {cap}")]
    CapExceeded { what: &'static str, cap: usize },
    #[error("size guard exceeded: {0}")]
    Guard(String),
    #[error("grading has no level-one roots; every variation of Hodge structure is a point")]
    TrivialGrading,
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
