//! Exact eigenvalues of the derangement graph, indexed by partitions.
//!
//! The whole module rests on a single recurrence.  For a nonempty partition
//! `λ` with principal hook size `h = λ₁ + r − 1`,
//!
//! ```text
//! η_λ = (−1)^h · ( η_{λ−ĥ} + (−1)^{λ₁} · h · η_{λ−ĉ} ),      η_∅ = 1,
//! ```
//!
//! where `λ−ĥ` deletes the principal hook and `λ−ĉ` deletes the first
//! column.  [`engine`] implements exactly this recurrence with a memo shared
//! across all sizes.  [`closed`] holds the independent closed forms for
//! special shapes (hooks, near hooks, two-row partitions, and the families
//! with first part `n−2`, `n−3`, `n−4`); they are cross-checks on the engine,
//! never fast paths.  [`shape`] holds the sign rule, the parity-based
//! magnitude step, and the auxiliary quantities `H`, `S`, `δ` that drive the
//! magnitude-growth inequalities.

pub mod closed;
pub mod engine;
pub mod shape;

pub use engine::{spectrum, EigenvalueRecord, EtaCache};

use thiserror::Error;

/// Domain errors for eigenvalue operations: closed forms called outside the
/// shape family they describe, or shape functions called off-hypothesis.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum EigenvalueError {
    #[error("hook shape needs 1 ≤ first ≤ n (got first={first}, n={n})")]
    HookDomain { first: u32, n: u32 },
    #[error("near-hook shape needs first ≥ 2 and n ≥ first+2 (got first={first}, n={n})")]
    NearHookDomain { first: u32, n: u32 },
    #[error("two-row shape needs a ≥ b ≥ 1 (got a={a}, b={b})")]
    TwoRowDomain { a: u32, b: u32 },
    #[error("this closed form needs n ≥ {min} (got n={n})")]
    FamilyDomain { n: u32, min: u32 },
    #[error("eigenvalue sign is only defined for partitions of n ≥ 2 (got n={n})")]
    SignDomain { n: u32 },
    #[error("shape function requires λ₁ = λ₂")]
    UnequalTopParts,
    #[error("shape function requires λ₃ < λ₁ when there are at least three rows")]
    ThirdRowTooWide,
    #[error("shape function requires first part t ≥ {min} (got t={got})")]
    TooNarrow { min: u32, got: u32 },
}
