//! Tiny exact-arithmetic helpers shared across the crate.
//!
//! Everything downstream is integer mathematics: eigenvalues, character sums,
//! dimensions, and class sizes are all exact, and any division that appears is
//! provably exact.  `exact_div` makes that proof obligation executable — a
//! nonzero remainder is a bug, never something to round away.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// `n!` as an arbitrary-precision integer.
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=u64::from(n) {
        acc *= k;
    }
    acc
}

/// `(-1)^k` as a `BigInt`, the sign that alternating formulas multiply by.
pub fn sign_pow(k: u32) -> BigInt {
    if k.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Divide `num` by `den`, panicking if the division leaves a remainder.
///
/// # Panics
/// Panics when `den` is zero or does not divide `num` exactly.
pub fn exact_div(num: &BigInt, den: &BigInt) -> BigInt {
    assert!(!den.is_zero(), "exact division by zero");
    let (q, r) = num.div_rem(den);
    assert!(
        r.is_zero(),
        "expected exact division: {num} is not a multiple of {den}"
    );
    q
}
