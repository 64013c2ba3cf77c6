//! Exact-arithmetic toolkit for overpartitions.
//!
//! The crate provides:
//!
//! - canonical partition / overpartition types with exhaustive enumerators
//!   ([`partition`]),
//! - generalized and successive Durfee square dissections ([`durfee`]),
//! - truncated formal power series in `q` over big integers, including the
//!   classical partition and overpartition generating functions and the
//!   Andrews-Gordon style multisums ([`qseries`]),
//! - Rogers-Ramanujan-Gordon overpartition predicates and counting ([`rrg`]),
//! - the Durfee-square bijection, the squares-collapsing surjection `phi`,
//!   fiber enumeration and the weighted-identity verification driver
//!   ([`weighted`]),
//! - range sweeps used by the CLI and benchmarks ([`sweep`]).
//!
//! All arithmetic is exact: series coefficients are `BigInt`, weights and
//! counts are `BigUint`. With the default `parallel` feature the heavy sweeps
//! and multisum evaluations fan out over rayon; disabling the feature keeps
//! every result bit-identical on a single thread.

use thiserror::Error;

/// Errors produced by parsing, constructors, and precondition checks.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("malformed token `{0}` (expected DIGITS with optional `o` suffix)")]
    MalformedToken(String),
    #[error("part value must be positive")]
    ZeroPart,
    #[error("duplicate overlined value {0}")]
    DuplicateOverline(u64),
    #[error("delta parts must be distinct")]
    DeltaNotDistinct,
    #[error("delta part {part} out of range (bound is {bound})")]
    DeltaOutOfRange { part: u64, bound: u64 },
    #[error("gamma must have distinct parts")]
    GammaNotDistinct,
    #[error("overlay partition has {got} rows but the overpartition only has {limit}")]
    OverlayTooManyRows { got: usize, limit: usize },
    #[error("constant term must be +1 or -1 to invert")]
    NonUnitConstant,
    #[error("invalid parameters k={k}, i={i} (need k >= 2 and 1 <= i <= k)")]
    InvalidKi { k: u64, i: u64 },
    #[error("invalid parameter k={0} (need k >= 2)")]
    InvalidK(u64),
    #[error("overpartition is not in the g-set (parts: {parts}, generalized Durfee size: {size})")]
    NotInGSet { parts: usize, size: u64 },
    #[error("overpartition has {squares} successive Durfee squares, more than the allowed {max}")]
    TooManySquares { squares: usize, max: u64 },
    #[error("weight {0} is too large to enumerate")]
    WeightTooLarge(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Run the first expression when the `parallel` feature is enabled, the
/// second otherwise. Textually in scope for every module below.
macro_rules! if_rayon {
    ($rayon_value:expr, $else_value:expr) => {{
        #[cfg(feature = "parallel")]
        {
            $rayon_value
        }
        #[cfg(not(feature = "parallel"))]
        {
            $else_value
        }
    }};
}

pub mod durfee;
pub mod partition;
pub mod qseries;
pub mod rrg;
pub mod sweep;
pub mod weighted;

pub use durfee::{
    count_at_most_squares, count_g, dissect, durfee_order, generalized_durfee_size,
    num_successive_squares, DurfeeDissection,
};
pub use partition::{
    add_overlay, add_overlay_rows, enumerate_partitions, enumerate_overpartitions, DistinctDelta,
    Overpartition, Part, Partition,
};
pub use qseries::{
    gf_at_most_squares, gf_dki, gf_dkk, gf_durfee_refined, gf_durfee_refined_sum, gf_g,
    gf_overpartitions_product, gf_overpartitions_sum, gf_partitions, poch_finite, QSeries,
    RefinedQSeries, SignedMonomial,
};
pub use rrg::{count_dki, is_rrg};
pub use weighted::{
    enumerate_thm21_pairs, fibers, phi, thm21_forward, thm21_inverse, verify_weighted_identity,
    weight_literal, FiberReport, Thm21Pair, WeightedEntry, WeightedIdentityReport,
};
