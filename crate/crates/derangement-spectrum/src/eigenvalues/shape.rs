//! Shape-driven facts about eigenvalue signs and magnitudes: the sign rule,
//! the parity-split magnitude step, the hook-profile product bound, and the
//! `H`/`S`/`δ` comparison functions for partitions whose top two rows agree.
//!
//! Everything here is computed without evaluating the eigenvalue of the
//! input partition itself (sub-partitions are fine), so each function can be
//! tested *against* the recurrence engine rather than through it.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::engine::EtaCache;
use super::EigenvalueError;
use crate::partition::Partition;

/// Sign of the eigenvalue at `λ`: `(−1)^{n−λ₁}`, the parity of the number of
/// cells below the first row.  Defined for `|λ| ≥ 2`; the eigenvalue at
/// `(1)` is zero and has no sign.
pub fn sign_eta(lambda: &Partition) -> Result<i8, EigenvalueError> {
    let n = lambda.size();
    if n < 2 {
        return Err(EigenvalueError::SignDomain { n });
    }
    Ok(if (n - lambda.first_part()).is_multiple_of(2) {
        1
    } else {
        -1
    })
}

/// `|η_λ|` recovered from the magnitudes at the two sub-partitions of the
/// recurrence, choosing addition or subtraction purely by the parities of
/// the top two parts:
///
/// * `λ₁ ≡ λ₂ (mod 2)`:  `|η_λ| = | h·|η_{λ−ĉ}| − |η_{λ−ĥ}| |`
/// * `λ₁ ≢ λ₂ (mod 2)`:  `|η_λ| =   h·|η_{λ−ĉ}| + |η_{λ−ĥ}|`
///
/// For a single row the recurrence reads `η_{(n)} = n·η_{(n−1)} + (−1)^n`,
/// so the magnitudes subtract exactly when `n = λ₁` is odd; the branch test
/// encodes that by treating the missing second part as odd.  (Treating it as
/// even — parity of the literal value 0 — picks the wrong branch for every
/// single-row shape and is off by 2 from `D_n`.)
///
/// In the subtracting branch the inner quantity is in fact never negative,
/// so the outer absolute value is a formality; a test pins that down.
///
/// Panics if `λ` is empty.
pub fn abs_eta_step(lambda: &Partition, cache: &EtaCache) -> BigInt {
    assert!(
        !lambda.is_empty(),
        "the parity-split magnitude step needs a nonempty partition"
    );
    let h = lambda
        .principal_hook_size()
        .expect("nonempty partition has a principal hook");
    let column_removed = lambda
        .remove_first_column()
        .expect("nonempty partition has a first column");
    let hook_removed = lambda
        .remove_hook()
        .expect("nonempty partition has a principal hook");
    let column_term = BigInt::from(h) * cache.abs_eta(&column_removed);
    let hook_term = cache.abs_eta(&hook_removed);
    let second_parity = if lambda.rows() == 1 {
        1
    } else {
        lambda.second_part() % 2
    };
    if lambda.first_part() % 2 == second_parity {
        (column_term - hook_term).abs()
    } else {
        column_term + hook_term
    }
}

/// Product `∏ (hᵢ + 1)` over the hook profile of `λ` — an upper bound for
/// `|η_λ|`.  Panics if `λ` is empty.
pub fn hook_product_bound(lambda: &Partition) -> BigInt {
    let profile = lambda
        .hook_profile()
        .expect("the hook-product bound needs a nonempty partition");
    profile
        .sizes
        .iter()
        .map(|&h| BigInt::from(h + 1))
        .product()
}

/// Check the shared hypotheses of the `H`/`S`/`δ` functions — the top two
/// parts equal, and any third part strictly narrower — and hand back the
/// common width `t = λ₁`.
fn equal_top_width(lambda: &Partition) -> Result<u32, EigenvalueError> {
    let parts = lambda.parts();
    if parts.len() < 2 || parts[0] != parts[1] {
        return Err(EigenvalueError::UnequalTopParts);
    }
    if parts.len() >= 3 && parts[2] == parts[0] {
        return Err(EigenvalueError::ThirdRowTooWide);
    }
    Ok(parts[0])
}

/// The `H` comparison function on shapes with `λ₁ = λ₂ = t ≥ 2` (third part
/// strictly narrower, if present), over the hook profile `h₁ > h₂ > ⋯`:
///
/// ```text
/// H(λ) = ∏_{i=1}^{t−1} hᵢ − ∏_{i=1}^{t−2} hᵢ − ∏_{i=2}^{t−1} (hᵢ−2)
///        − Σ_{i=1}^{t−3} h₁⋯hᵢ · (h_{i+2}−2)⋯(h_{t−1}−2),
/// ```
///
/// with the degenerate case `H = h₁` at `t = 2`.
pub fn h_func(lambda: &Partition) -> Result<BigInt, EigenvalueError> {
    let t = equal_top_width(lambda)?;
    if t < 2 {
        return Err(EigenvalueError::TooNarrow { min: 2, got: t });
    }
    let sizes = lambda
        .hook_profile()
        .expect("two rows at least")
        .sizes;
    let h = |i: usize| BigInt::from(sizes[i - 1]); // hᵢ, 1-based
    let t = t as usize;
    if t == 2 {
        return Ok(h(1));
    }
    let prod_full: BigInt = (1..=t - 1).map(h).product();
    let prod_short: BigInt = (1..=t - 2).map(h).product();
    let prod_reduced: BigInt = (2..=t - 1).map(|i| h(i) - 2).product();
    let mut cross_sum = BigInt::from(0);
    for i in 1..=t - 3 {
        let prefix: BigInt = (1..=i).map(h).product();
        let suffix: BigInt = (i + 2..=t - 1).map(|j| h(j) - 2).product();
        cross_sum += prefix * suffix;
    }
    Ok(prod_full - prod_short - prod_reduced - cross_sum)
}

/// The `S` comparison function `∏_{i=1}^{t−1} (hᵢ − 2)` on shapes with
/// `λ₁ = λ₂ = t ≥ 3` (third part strictly narrower, if present).
pub fn s_func(lambda: &Partition) -> Result<BigInt, EigenvalueError> {
    let t = equal_top_width(lambda)?;
    if t < 3 {
        return Err(EigenvalueError::TooNarrow { min: 3, got: t });
    }
    let sizes = lambda.hook_profile().expect("two rows at least").sizes;
    Ok(sizes[..(t - 1) as usize]
        .iter()
        .map(|&h| BigInt::from(h) - 2)
        .product())
}

/// The `δ` gap function on shapes with `λ₁ = λ₂` (third part strictly
/// narrower, if present): `δ((1²)) = 1`, and one column-removal step gives
///
/// ```text
/// δ(λ) = h₁ · δ(λ−ĉ) − |η_{(λ−ĉ)−ρ̂₂}|,
/// ```
///
/// where `−ρ̂₂` deletes the first two rows.  The hypotheses are preserved by
/// column removal, so the recursion bottoms out at `(1, 1)`.
pub fn delta_func(lambda: &Partition, cache: &EtaCache) -> Result<BigInt, EigenvalueError> {
    let t = equal_top_width(lambda)?;
    // Shapes λ−ĉ₀, λ−ĉ₁, …, λ−ĉ_{t−1}; the last is (1, 1).
    let mut chain = Vec::with_capacity(t as usize);
    let mut current = lambda.clone();
    for _ in 0..t {
        chain.push(current.clone());
        current = current
            .remove_first_column()
            .expect("nonempty while columns remain");
    }
    let mut delta = BigInt::one();
    for step in (0..chain.len() - 1).rev() {
        let h = chain[step]
            .principal_hook_size()
            .expect("chain shapes are nonempty");
        let below_top_two = chain[step + 1]
            .remove_rows(2)
            .expect("chain shapes keep two equal top rows");
        delta = BigInt::from(h) * delta - cache.abs_eta(&below_top_two);
    }
    Ok(delta)
}
