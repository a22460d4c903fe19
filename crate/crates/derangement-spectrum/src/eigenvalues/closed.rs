//! Closed forms for the eigenvalues of special shape families.
//!
//! Every function here computes `η` by an explicit formula in derangement
//! numbers, entirely independently of the recurrence engine, and exists to be
//! compared against it.  None of them is used as a fast path.
//!
//! Families, and the naming convention: a `tail_*` function takes the total
//! size `n` and evaluates the partition whose *tail* — the rows below the
//! first — is the digit string in the name.  So `tail_21(9)` is `η` of
//! `(6, 2, 1)`, and `tail_1111(12)` is `η` of `(8, 1^4)`.  The hook, near
//! hook, and two-row shapes take their defining parameters directly.
//!
//! All divisions below are exact for number-theoretic reasons (each divisor
//! divides a derangement number by the two-step recurrence); `exact_div`
//! turns that claim into a runtime check, so an inexact division panics and
//! signals an implementation bug rather than producing a rounded value.

use num_bigint::BigInt;

use super::EigenvalueError;
use crate::arith::{exact_div, sign_pow};
use crate::derangement::derangement_number;

/// `η` of the hook `(first, 1^{n−first})`:
/// `(−1)^n (1 + (−1)^{first} n D_{first−1})`.
pub fn hook(first: u32, n: u32) -> Result<BigInt, EigenvalueError> {
    if first < 1 || first > n {
        return Err(EigenvalueError::HookDomain { first, n });
    }
    let inner = BigInt::from(1)
        + sign_pow(first) * BigInt::from(n) * derangement_number(first - 1);
    Ok(sign_pow(n) * inner)
}

/// `|η|` of the hook `(first, 1^{n−first})` in its magnitude form:
/// `D_{first} + (n−first) D_{first−1}`.
pub fn hook_magnitude(first: u32, n: u32) -> Result<BigInt, EigenvalueError> {
    if first < 1 || first > n {
        return Err(EigenvalueError::HookDomain { first, n });
    }
    Ok(derangement_number(first)
        + BigInt::from(n - first) * derangement_number(first - 1))
}

/// `η` of the near hook `(first, 2, 1^{n−first−2})`:
/// `(−1)^{n+first} (n−1) D_{first} / (first−1)`, the division exact.
pub fn near_hook(first: u32, n: u32) -> Result<BigInt, EigenvalueError> {
    if first < 2 || n < first + 2 {
        return Err(EigenvalueError::NearHookDomain { first, n });
    }
    let numerator = BigInt::from(n - 1) * derangement_number(first);
    let quotient = exact_div(&numerator, &BigInt::from(first - 1));
    Ok(sign_pow(n + first) * quotient)
}

/// `η` of the two-row partition `(a, b)`, by the row recurrence
/// `η_{(a,b)} = (−1)^{a+1} D_{b−1} − (a+1) η_{(a−1,b−1)}`, iterated down to
/// the hook base `(a−b+1, 1)`.
pub fn two_rows(a: u32, b: u32) -> Result<BigInt, EigenvalueError> {
    if b < 1 || a < b {
        return Err(EigenvalueError::TwoRowDomain { a, b });
    }
    let base_row = a - b + 1;
    let mut value = hook(base_row, base_row + 1).expect("hook domain holds");
    for y in 2..=b {
        let x = a - b + y;
        value = sign_pow(x + 1) * derangement_number(y - 1) - BigInt::from(x + 1) * value;
    }
    Ok(value)
}

/// `η` of `(a, b)` by the fully expanded alternating sum
/// `(−1)^{a+1} (D_{b−1} + (a+1)D_{b−2} + (a+1)a D_{b−3} + ⋯) +
///  (−1)^b (a+1)a⋯(a−b+2) D_{a−b}`.
///
/// An unproven expansion kept as a conjecture-grade cross-check: any
/// mismatch with the engine or with [`two_rows`] is a reportable finding,
/// not something to smooth over.
pub fn two_rows_expanded(a: u32, b: u32) -> Result<BigInt, EigenvalueError> {
    if b < 1 || a < b {
        return Err(EigenvalueError::TwoRowDomain { a, b });
    }
    let mut falling = BigInt::from(1); // (a+1)·a·(a−1)⋯, one factor per term
    let mut sum = BigInt::from(0);
    for k in 0..b {
        sum += &falling * derangement_number(b - 1 - k);
        falling *= BigInt::from(a + 1 - k);
    }
    // After the loop `falling` carries b factors: (a+1)a⋯(a−b+2).
    Ok(sign_pow(a + 1) * sum + sign_pow(b) * falling * derangement_number(a - b))
}

/// `η` of the three-row shape `(a, c, 1)` for `a > c ≥ 1`:
/// `(−1)^{a+2} D_{c−1} + (a+2) η_{(a−1, c−1)}`, the companion formula to
/// the two-row recurrence taken at `b = c + 1`.
pub fn two_rows_and_one(a: u32, c: u32) -> Result<BigInt, EigenvalueError> {
    if c < 1 || a <= c {
        return Err(EigenvalueError::TwoRowDomain { a, b: c });
    }
    let inner = if c == 1 {
        derangement_number(a - 1) // (a−1, 0) degenerates to the single row
    } else {
        two_rows(a - 1, c - 1)?
    };
    Ok(sign_pow(a + 2) * derangement_number(c - 1) + BigInt::from(a + 2) * inner)
}

// ── first part n−2 ───────────────────────────────────────────────────────

/// `η` of `(n−2, 2)`: `(n−1) D_{n−2} / (n−3)`, exact.
pub fn tail_2(n: u32) -> Result<BigInt, EigenvalueError> {
    if n < 4 {
        return Err(EigenvalueError::FamilyDomain { n, min: 4 });
    }
    let numerator = BigInt::from(n - 1) * derangement_number(n - 2);
    Ok(exact_div(&numerator, &BigInt::from(n - 3)))
}

/// `η` of `(n−2, 1²)`: `n D_{n−3} + (−1)^n`.
pub fn tail_11(n: u32) -> Result<BigInt, EigenvalueError> {
    if n < 4 {
        return Err(EigenvalueError::FamilyDomain { n, min: 4 });
    }
    Ok(BigInt::from(n) * derangement_number(n - 3) + sign_pow(n))
}

// ── first part n−3 ───────────────────────────────────────────────────────

/// `η` of `(n−3, 3)`: `(−1)^{n−2} − (n−2)(n−3) D_{n−4} / (n−5)`, exact.
pub fn tail_3(n: u32) -> Result<BigInt, EigenvalueError> {
    if n < 6 {
        return Err(EigenvalueError::FamilyDomain { n, min: 6 });
    }
    let numerator =
        BigInt::from(n - 2) * BigInt::from(n - 3) * derangement_number(n - 4);
    Ok(sign_pow(n - 2) - exact_div(&numerator, &BigInt::from(n - 5)))
}

/// `η` of `(n−3, 2, 1)`: `−(n−1) D_{n−3} / (n−4)`, exact.
pub fn tail_21(n: u32) -> Result<BigInt, EigenvalueError> {
    if n < 6 {
        return Err(EigenvalueError::FamilyDomain { n, min: 6 });
    }
    let numerator = BigInt::from(n - 1) * derangement_number(n - 3);
    Ok(-exact_div(&numerator, &BigInt::from(n - 4)))
}

/// `η` of `(n−3, 1³)`: `−n D_{n−4} + (−1)^n`.
pub fn tail_111(n: u32) -> Result<BigInt, EigenvalueError> {
    if n < 6 {
        return Err(EigenvalueError::FamilyDomain { n, min: 6 });
    }
    Ok(-BigInt::from(n) * derangement_number(n - 4) + sign_pow(n))
}

// ── first part n−4 (write a = n−4 throughout) ────────────────────────────

/// `η` of `(a, 4)` for `a = n−4 ≥ 4`: `2(−1)^{a+1} − (a+1) η_{(a−1, 3)}`,
/// the inner value by the `(n−3, 3)` closed form one size down.
pub fn tail_4(n: u32) -> Result<BigInt, EigenvalueError> {
    if n < 8 {
        return Err(EigenvalueError::FamilyDomain { n, min: 8 });
    }
    let a = n - 4;
    let inner = tail_3(n - 2).expect("n−2 ≥ 6 here");
    Ok(BigInt::from(2) * sign_pow(a + 1) - BigInt::from(a + 1) * inner)
}

/// `η` of `(a, 3, 1)` for `a = n−4 ≥ 4`:
/// `(−1)^{a+2} + (a+2)(D_{a−1} + 2(D_{a−2} + D_{a−3}))`.
pub fn tail_31(n: u32) -> Result<BigInt, EigenvalueError> {
    if n < 8 {
        return Err(EigenvalueError::FamilyDomain { n, min: 8 });
    }
    let a = n - 4;
    let inner = derangement_number(a - 1)
        + BigInt::from(2) * (derangement_number(a - 2) + derangement_number(a - 3));
    Ok(sign_pow(a + 2) + BigInt::from(a + 2) * inner)
}

/// `η` of `(a, 2²)` for `a = n−4 ≥ 4`:
/// `(−1)^{a+1}(a+3) + (a+2)(a+1) D_{a−2}`.
pub fn tail_22(n: u32) -> Result<BigInt, EigenvalueError> {
    if n < 8 {
        return Err(EigenvalueError::FamilyDomain { n, min: 8 });
    }
    let a = n - 4;
    Ok(sign_pow(a + 1) * BigInt::from(a + 3)
        + BigInt::from(a + 2) * BigInt::from(a + 1) * derangement_number(a - 2))
}

/// `η` of `(a, 2, 1²)` for `a = n−4 ≥ 4`: `(a+3)((−1)^{a+3} + a D_{a−2})`.
pub fn tail_211(n: u32) -> Result<BigInt, EigenvalueError> {
    if n < 8 {
        return Err(EigenvalueError::FamilyDomain { n, min: 8 });
    }
    let a = n - 4;
    Ok(BigInt::from(a + 3) * (sign_pow(a + 3) + BigInt::from(a) * derangement_number(a - 2)))
}

/// `η` of `(a, 1⁴)` for `a = n−4 ≥ 4`: `(−1)^a + (a+4) D_{a−1}`, which also
/// equals `D_a + 4 D_{a−1}`.
pub fn tail_1111(n: u32) -> Result<BigInt, EigenvalueError> {
    if n < 8 {
        return Err(EigenvalueError::FamilyDomain { n, min: 8 });
    }
    let a = n - 4;
    Ok(sign_pow(a) + BigInt::from(a + 4) * derangement_number(a - 1))
}
