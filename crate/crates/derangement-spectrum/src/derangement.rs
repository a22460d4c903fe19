//! Exact derangement numbers `D_n` — the count of fixed-point-free
//! permutations of an `n`-set.
//!
//! The table is filled by the one-step recurrence `D_n = n·D_{n−1} + (−1)ⁿ`
//! from `D_0 = 1`, `D_1 = 0`.  The two-step recurrence
//! `D_n = (n−1)(D_{n−1} + D_{n−2})` is deliberately *not* the implementation:
//! it serves as a test identity, so the same formula is never both code and
//! its own check.  A brute-force enumeration over small symmetric groups acts
//! as a second, definition-level oracle.

use std::sync::Mutex;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

/// Largest `n` the brute-force counter will enumerate (9! = 362880 permutations).
pub const BRUTE_FORCE_LIMIT: u32 = 9;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("brute-force derangement counting is capped at n = {BRUTE_FORCE_LIMIT} (requested n = {0})")]
pub struct EnumerationBudgetError(pub u32);

/// Shared memo table: index `n` holds `D_n`.  Grown on demand under a lock,
/// never evicted; concurrent readers each clone the (small) value they need.
static TABLE: Mutex<Vec<BigInt>> = Mutex::new(Vec::new());

/// The `n`-th derangement number `D_n`, exactly.
pub fn derangement_number(n: u32) -> BigInt {
    let mut table = TABLE.lock().expect("derangement memo poisoned");
    if table.is_empty() {
        table.push(BigInt::one()); // D_0
        table.push(BigInt::zero()); // D_1
    }
    while table.len() <= n as usize {
        let k = table.len();
        let mut next = &table[k - 1] * BigInt::from(k);
        if k.is_multiple_of(2) {
            next += 1;
        } else {
            next -= 1;
        }
        table.push(next);
    }
    table[n as usize].clone()
}

/// Count fixed-point-free permutations of `{0, …, n−1}` by direct
/// enumeration.  Exists purely as an independent check on the recurrence;
/// refuses sizes where enumeration stops being a sane test.
pub fn derangement_count_bruteforce(n: u32) -> Result<BigInt, EnumerationBudgetError> {
    if n > BRUTE_FORCE_LIMIT {
        return Err(EnumerationBudgetError(n));
    }
    let count = (0..n as usize)
        .permutations(n as usize)
        .filter(|perm| perm.iter().enumerate().all(|(i, &v)| i != v))
        .count();
    Ok(BigInt::from(count))
}
