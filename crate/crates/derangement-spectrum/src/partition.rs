//! Integer partitions and the Ferrers-diagram surgery the spectral recurrence
//! is built from.
//!
//! A partition is stored as its weakly decreasing list of positive parts, so
//! `(5,4,4,3,3,3,1)` is `[5, 4, 4, 3, 3, 3, 1]` and the empty partition is
//! `[]`.  The text form groups repeated parts with exponents — the same
//! partition reads and prints as `"5,4^2,3^3,1"`.
//!
//! Besides parsing, enumeration, and lexicographic comparison, this module
//! provides the three diagram surgeries everything downstream needs:
//!
//! * principal-hook removal (delete the first row and first column),
//! * column removal (subtract 1 from every part, possibly iterated),
//! * row removal (drop leading parts),
//!
//! together with hook profiles (the hook sizes of successively column-stripped
//! shapes) and irreducible-representation dimensions via the hook length
//! formula.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::arith::{exact_div, factorial};

/// Errors from parsing, comparing, or cutting partitions.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("unreadable partition token `{0}`")]
    MalformedToken(String),
    #[error("partition parts must be positive")]
    ZeroPart,
    #[error("partition parts must be weakly decreasing")]
    IncreasingParts,
    #[error("partitions of different sizes ({left} vs {right}) are not comparable")]
    SizeMismatch { left: u32, right: u32 },
    #[error("operation requires a nonempty partition")]
    Empty,
    #[error("cannot delete {requested} columns from a shape of width {width}")]
    TooManyColumns { requested: u32, width: u32 },
    #[error("cannot delete {requested} rows from a shape with {rows} rows")]
    TooManyRows { requested: usize, rows: usize },
}

/// A partition of a non-negative integer: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// The empty partition, the unique partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Build a partition from an explicit part list.
    ///
    /// The list must already be weakly decreasing with no zero parts; this
    /// constructor validates rather than sorts, so a permuted part list is
    /// reported as an error instead of silently canonicalized.
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::IncreasingParts);
        }
        Ok(Partition { parts })
    }

    /// Internal constructor for part lists that are decreasing by
    /// construction but may contain zeros to drop (post-surgery shapes).
    fn from_decreasing_with_zeros(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The size `n = Σ λ_i` (the integer being partitioned).
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The number of parts `r` (number of rows of the diagram).
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// The first (largest) part, or 0 for the empty partition.
    pub fn first_part(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The second part, or 0 when there is at most one row.
    pub fn second_part(&self) -> u32 {
        self.parts.get(1).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Size of the principal hook: `h = λ₁ + r − 1` (first row plus first
    /// column, counting the corner once).
    pub fn principal_hook_size(&self) -> Result<u32, PartitionError> {
        if self.is_empty() {
            return Err(PartitionError::Empty);
        }
        Ok(self.first_part() + self.rows() as u32 - 1)
    }

    /// Delete the principal hook: first row and first column both removed,
    /// leaving `(λ₂−1, λ₃−1, …)` with zero parts dropped.
    pub fn remove_hook(&self) -> Result<Partition, PartitionError> {
        if self.is_empty() {
            return Err(PartitionError::Empty);
        }
        let parts = self.parts[1..].iter().map(|&p| p - 1).collect();
        Ok(Partition::from_decreasing_with_zeros(parts))
    }

    /// Delete the first column: every part reduced by 1, zero parts dropped.
    pub fn remove_first_column(&self) -> Result<Partition, PartitionError> {
        if self.is_empty() {
            return Err(PartitionError::Empty);
        }
        let parts = self.parts.iter().map(|&p| p - 1).collect();
        Ok(Partition::from_decreasing_with_zeros(parts))
    }

    /// Delete the first `i` columns (i-fold first-column removal; `i = 0` is
    /// the identity).
    pub fn remove_columns(&self, i: u32) -> Result<Partition, PartitionError> {
        if i > self.first_part() {
            return Err(PartitionError::TooManyColumns {
                requested: i,
                width: self.first_part(),
            });
        }
        let parts = self.parts.iter().map(|&p| p.saturating_sub(i)).collect();
        Ok(Partition::from_decreasing_with_zeros(parts))
    }

    /// Delete the first `i` rows, keeping parts `i+1 … r`.
    pub fn remove_rows(&self, i: usize) -> Result<Partition, PartitionError> {
        if i > self.rows() {
            return Err(PartitionError::TooManyRows {
                requested: i,
                rows: self.rows(),
            });
        }
        Ok(Partition {
            parts: self.parts[i..].to_vec(),
        })
    }

    /// Hook sizes of the successively column-stripped shapes: entry `i`
    /// (1-based) is the principal hook size after deleting `i − 1` columns.
    /// The profile has exactly `λ₁` entries and starts with the principal
    /// hook size of the partition itself.
    pub fn hook_profile(&self) -> Result<HookProfile, PartitionError> {
        if self.is_empty() {
            return Err(PartitionError::Empty);
        }
        let width = self.first_part();
        let mut sizes = Vec::with_capacity(width as usize);
        let mut current = self.clone();
        for _ in 0..width {
            sizes.push(
                current
                    .principal_hook_size()
                    .expect("column-stripped shape stays nonempty while columns remain"),
            );
            current = current
                .remove_first_column()
                .expect("nonempty while columns remain");
        }
        Ok(HookProfile {
            h: sizes[0],
            sizes,
        })
    }

    /// Lexicographic comparison of two partitions of the same integer: the
    /// first differing part decides, and a shorter list is padded with zeros.
    pub fn lex_compare(&self, other: &Partition) -> Result<Ordering, PartitionError> {
        if self.size() != other.size() {
            return Err(PartitionError::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        // Equal sizes rule out one part list being a strict prefix of the
        // other, so plain slice comparison implements the zero-padded order.
        Ok(self.parts.cmp(&other.parts))
    }

    /// Column lengths of the diagram (the conjugate partition's parts).
    fn column_lengths(&self) -> Vec<usize> {
        let width = self.first_part() as usize;
        let mut cols = vec![0usize; width];
        for &p in &self.parts {
            for col in cols.iter_mut().take(p as usize) {
                *col += 1;
            }
        }
        cols
    }

    /// Dimension of the irreducible representation indexed by this partition,
    /// by the hook length formula: `n!` divided by the product of all cell
    /// hook lengths.  The division is exact by construction and asserted.
    pub fn dimension(&self) -> BigInt {
        let cols = self.column_lengths();
        let mut hook_product = BigInt::one();
        for (i, &row) in self.parts.iter().enumerate() {
            for (j, &col) in cols.iter().enumerate().take(row as usize) {
                let hook = (row as usize - j) + (col - i) - 1;
                hook_product *= BigInt::from(hook);
            }
        }
        exact_div(&factorial(self.size()), &hook_product)
    }

    /// Squared dimension: the multiplicity of this partition's eigenvalue in
    /// the full spectrum.
    pub fn multiplicity(&self) -> BigInt {
        let d = self.dimension();
        &d * &d
    }

    /// All partitions of `n`, in strictly decreasing lexicographic order:
    /// `(n)` first, `(1ⁿ)` last.
    pub fn enumerate(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for part in (1..=remaining.min(max_part)).rev() {
                prefix.push(part);
                rec(remaining - part, part, prefix, out);
                prefix.pop();
            }
        }
        rec(n, n.max(1), &mut prefix, &mut out);
        out
    }
}

impl fmt::Display for Partition {
    /// Exponent notation: runs of equal parts print as `p^a` for `a ≥ 2`,
    /// bare `p` otherwise; the empty partition prints as the empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let mut run = 1;
            while i + run < self.parts.len() && self.parts[i + run] == p {
                run += 1;
            }
            if !first {
                write!(f, ",")?;
            }
            first = false;
            if run >= 2 {
                write!(f, "{p}^{run}")?;
            } else {
                write!(f, "{p}")?;
            }
            i += run;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        if text.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for raw in text.split(',') {
            let token = raw.trim();
            let (base, count) = match token.split_once('^') {
                Some((p, a)) => (p.trim(), a.trim()),
                None => (token, "1"),
            };
            let part: u32 = base
                .parse()
                .map_err(|_| PartitionError::MalformedToken(token.to_string()))?;
            let reps: u32 = count
                .parse()
                .map_err(|_| PartitionError::MalformedToken(token.to_string()))?;
            if reps == 0 {
                return Err(PartitionError::MalformedToken(token.to_string()));
            }
            if part == 0 {
                return Err(PartitionError::ZeroPart);
            }
            parts.extend(std::iter::repeat_n(part, reps as usize));
        }
        Partition::new(parts)
    }
}

/// Principal hook sizes of a shape and of its successive column-stripped
/// remainders; the driving quantities of the magnitude recurrences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookProfile {
    /// Principal hook size of the shape itself (`λ₁ + r − 1`).
    pub h: u32,
    /// `sizes[i]` is the principal hook size after deleting `i` columns;
    /// the list has exactly `λ₁` entries, and `sizes[0] == h`.
    pub sizes: Vec<u32>,
}

/// Number of partitions of `n` by an independent route (Euler's pentagonal
/// number recurrence), used to check the enumerator is complete.
#[cfg(test)]
pub(crate) fn partition_count_pentagonal(n: u32) -> BigInt {
    use num_traits::Zero;

    let n = n as usize;
    let mut p = vec![BigInt::zero(); n + 1];
    p[0] = BigInt::one();
    for m in 1..=n {
        let mut total = BigInt::zero();
        let mut k = 1i64;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            let g2 = k * (3 * k + 1) / 2;
            if g1 > m as i64 && g2 > m as i64 {
                break;
            }
            let sign = if k % 2 == 0 { -1 } else { 1 };
            if g1 <= m as i64 {
                total += sign * &p[m - g1 as usize];
            }
            if g2 <= m as i64 {
                total += sign * &p[m - g2 as usize];
            }
            k += 1;
        }
        p[m] = total;
    }
    p[n].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use proptest::prelude::*;
    use std::collections::HashMap;

    fn part(text: &str) -> Partition {
        text.parse().expect("test partition parses")
    }

    // ── parsing and formatting ───────────────────────────────────────────

    #[test]
    fn parse_exponent_notation() {
        assert_eq!(part("5,4^2,3^3,1").parts(), &[5, 4, 4, 3, 3, 3, 1]);
        assert_eq!(part("3,1^2").parts(), &[3, 1, 1]);
        assert_eq!(part(" 2 , 2 ").parts(), &[2, 2]);
    }

    #[test]
    fn parse_empty_string_is_empty_partition() {
        assert_eq!(part(""), Partition::empty());
        assert_eq!(part("   "), Partition::empty());
    }

    #[test]
    fn parse_rejects_malformed_tokens() {
        for bad in ["x", "3^", "^2", "3^x", "3,,1", "3^0", "-2", "2.5"] {
            assert!(
                matches!(
                    bad.parse::<Partition>(),
                    Err(PartitionError::MalformedToken(_))
                ),
                "expected malformed-token error for {bad:?}"
            );
        }
    }

    #[test]
    fn parse_rejects_zero_part() {
        assert_eq!(
            "3,0,1".parse::<Partition>(),
            Err(PartitionError::ZeroPart)
        );
        assert_eq!("0".parse::<Partition>(), Err(PartitionError::ZeroPart));
    }

    #[test]
    fn parse_rejects_increasing_parts() {
        assert_eq!(
            "1,3".parse::<Partition>(),
            Err(PartitionError::IncreasingParts)
        );
        assert_eq!(
            "2,3^2".parse::<Partition>(),
            Err(PartitionError::IncreasingParts)
        );
    }

    #[test]
    fn format_uses_exponents_only_for_repeats() {
        assert_eq!(part("5,4^2,3^3,1").to_string(), "5,4^2,3^3,1");
        assert_eq!(part("3,1,1").to_string(), "3,1^2");
        assert_eq!(part("7").to_string(), "7");
        assert_eq!(Partition::empty().to_string(), "");
    }

    // ── enumeration and ordering ─────────────────────────────────────────

    #[test]
    fn enumerate_n4_in_descending_lex_order() {
        let got: Vec<String> = Partition::enumerate(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(got, ["4", "3,1", "2^2", "2,1^2", "1^4"]);
    }

    #[test]
    fn enumerate_zero_gives_only_empty() {
        assert_eq!(Partition::enumerate(0), vec![Partition::empty()]);
    }

    #[test]
    fn enumerate_counts_match_pentagonal_recurrence() {
        for n in 0..=40 {
            assert_eq!(
                BigInt::from(Partition::enumerate(n).len()),
                partition_count_pentagonal(n),
                "partition count mismatch at n={n}"
            );
        }
        assert_eq!(Partition::enumerate(15).len(), 176);
    }

    #[test]
    fn enumerate_is_strictly_decreasing_and_bounded() {
        for n in 1..=12 {
            let all = Partition::enumerate(n);
            assert_eq!(all.first().unwrap().parts(), &[n]);
            assert_eq!(all.last().unwrap().parts(), vec![1; n as usize]);
            for w in all.windows(2) {
                assert_eq!(w[0].lex_compare(&w[1]).unwrap(), Ordering::Greater);
            }
        }
    }

    #[test]
    fn lex_compare_first_difference_decides() {
        assert_eq!(
            part("7,4,1^4").lex_compare(&part("7,3^2,2")).unwrap(),
            Ordering::Greater
        );
        assert_eq!(part("2,2").lex_compare(&part("2,2")).unwrap(), Ordering::Equal);
        assert_eq!(
            part("2,1^2").lex_compare(&part("2,2")).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn lex_compare_size_mismatch_errors() {
        assert_eq!(
            part("3,1").lex_compare(&part("3")),
            Err(PartitionError::SizeMismatch { left: 4, right: 3 })
        );
    }

    // ── diagram surgery ──────────────────────────────────────────────────

    #[test]
    fn remove_hook_examples() {
        assert_eq!(part("6,4").remove_hook().unwrap(), part("3"));
        assert_eq!(part("9").remove_hook().unwrap(), Partition::empty());
        // Drawn by hand: strike the first row and first column of (5,3,2).
        assert_eq!(part("5,3,2").remove_hook().unwrap(), part("2,1"));
    }

    #[test]
    fn remove_first_column_examples() {
        assert_eq!(part("2,2").remove_first_column().unwrap(), part("1,1"));
        assert_eq!(part("1^3").remove_first_column().unwrap(), Partition::empty());
        assert_eq!(part("6,4").remove_first_column().unwrap(), part("5,3"));
    }

    #[test]
    fn surgery_rejects_empty_partition() {
        let empty = Partition::empty();
        assert_eq!(empty.remove_hook(), Err(PartitionError::Empty));
        assert_eq!(empty.remove_first_column(), Err(PartitionError::Empty));
        assert_eq!(empty.principal_hook_size(), Err(PartitionError::Empty));
        assert_eq!(empty.hook_profile(), Err(PartitionError::Empty));
    }

    #[test]
    fn remove_columns_iterates_and_bounds_check() {
        assert_eq!(part("3,2").remove_columns(0).unwrap(), part("3,2"));
        assert_eq!(part("3,2").remove_columns(2).unwrap(), part("1"));
        assert_eq!(part("3,2").remove_columns(3).unwrap(), Partition::empty());
        assert_eq!(
            part("3,2").remove_columns(4),
            Err(PartitionError::TooManyColumns {
                requested: 4,
                width: 3
            })
        );
        // The empty partition has width 0, so only i = 0 is allowed.
        assert_eq!(Partition::empty().remove_columns(0).unwrap(), Partition::empty());
    }

    #[test]
    fn remove_rows_keeps_tail() {
        assert_eq!(part("5,3,2").remove_rows(0).unwrap(), part("5,3,2"));
        assert_eq!(part("5,3,2").remove_rows(1).unwrap(), part("3,2"));
        assert_eq!(part("5,3,2").remove_rows(3).unwrap(), Partition::empty());
        assert_eq!(
            part("5,3,2").remove_rows(4),
            Err(PartitionError::TooManyRows {
                requested: 4,
                rows: 3
            })
        );
    }

    #[test]
    fn hook_removal_is_column_then_row_removal() {
        // Spot instance of the identity, then an exhaustive sweep.
        assert_eq!(
            part("5,3,2")
                .remove_first_column()
                .unwrap()
                .remove_rows(1)
                .unwrap(),
            part("5,3,2").remove_hook().unwrap()
        );
        for n in 1..=12 {
            for lambda in Partition::enumerate(n) {
                let via_hook = lambda.remove_hook().unwrap();
                let stripped = lambda.remove_first_column().unwrap();
                match stripped.remove_rows(1) {
                    Ok(via_column_row) => {
                        assert_eq!(via_hook, via_column_row, "identity fails at {lambda}")
                    }
                    // Column removal empties (1^k); hook removal agrees.
                    Err(_) => assert!(via_hook.is_empty(), "identity fails at {lambda}"),
                }
                let h = lambda.principal_hook_size().unwrap();
                assert_eq!(via_hook.size(), lambda.size() - h);
            }
        }
    }

    // ── hook profiles ────────────────────────────────────────────────────

    #[test]
    fn hook_profile_of_2_2() {
        let profile = part("2,2").hook_profile().unwrap();
        assert_eq!(profile.h, 3);
        assert_eq!(profile.sizes, vec![3, 2]);
    }

    #[test]
    fn hook_profile_of_single_row_counts_down() {
        let profile = part("6").hook_profile().unwrap();
        assert_eq!(profile.h, 6);
        assert_eq!(profile.sizes, vec![6, 5, 4, 3, 2, 1]);
        let column = part("1,1").hook_profile().unwrap();
        assert_eq!(column.h, 2);
        assert_eq!(column.sizes, vec![2]);
    }

    #[test]
    fn hook_profile_shape_invariants() {
        for n in 1..=12 {
            for lambda in Partition::enumerate(n) {
                let profile = lambda.hook_profile().unwrap();
                assert_eq!(profile.sizes.len(), lambda.first_part() as usize);
                assert_eq!(profile.h, lambda.principal_hook_size().unwrap());
                assert_eq!(profile.sizes[0], profile.h);
                // Each column removal shrinks the first part by exactly 1 and
                // can only lose rows, so the profile strictly decreases.
                for w in profile.sizes.windows(2) {
                    assert!(w[0] > w[1], "profile not strictly decreasing for {lambda}");
                }
            }
        }
    }

    // ── dimensions ───────────────────────────────────────────────────────

    /// Independent oracle: count standard Young tableaux directly by the
    /// corner-removal recursion (a tableau is built by choosing which corner
    /// holds the largest entry), memoized on the shape.
    fn syt_count(parts: &[u32], memo: &mut HashMap<Vec<u32>, BigInt>) -> BigInt {
        if parts.is_empty() {
            return BigInt::one();
        }
        if let Some(v) = memo.get(parts) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for i in 0..parts.len() {
            let is_corner = i + 1 == parts.len() || parts[i] > parts[i + 1];
            if is_corner {
                let mut smaller: Vec<u32> = parts.to_vec();
                smaller[i] -= 1;
                smaller.retain(|&p| p > 0);
                total += syt_count(&smaller, memo);
            }
        }
        memo.insert(parts.to_vec(), total.clone());
        total
    }

    #[test]
    fn dimension_matches_tableau_counting_oracle() {
        let mut memo = HashMap::new();
        for n in 0..=9 {
            for lambda in Partition::enumerate(n) {
                assert_eq!(
                    lambda.dimension(),
                    syt_count(lambda.parts(), &mut memo),
                    "hook length formula disagrees with tableau count at {lambda}"
                );
            }
        }
    }

    #[test]
    fn dimension_named_values() {
        assert_eq!(Partition::empty().dimension(), BigInt::one());
        assert_eq!(part("3,2").dimension(), BigInt::from(5));
        for n in 2..=12u32 {
            let mut parts = vec![n - 1, 1];
            parts.retain(|&p| p > 0);
            let hook = Partition::new(parts).unwrap();
            assert_eq!(hook.dimension(), BigInt::from(n - 1), "dim (n-1,1) at n={n}");
            assert_eq!(
                Partition::new(vec![n]).unwrap().dimension(),
                BigInt::one()
            );
            assert_eq!(
                Partition::new(vec![1; n as usize]).unwrap().dimension(),
                BigInt::one()
            );
        }
    }

    #[test]
    fn dimension_squares_sum_to_group_order() {
        for n in 1..=12 {
            let total: BigInt = Partition::enumerate(n)
                .iter()
                .map(|p| p.multiplicity())
                .sum();
            assert_eq!(total, factorial(n), "Σ dim² ≠ n! at n={n}");
        }
    }

    // ── randomized invariants ────────────────────────────────────────────

    fn arbitrary_partition() -> impl Strategy<Value = Partition> {
        prop::collection::vec(1u32..=12, 0..=10).prop_map(|mut parts| {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(parts).expect("sorted positive parts are valid")
        })
    }

    proptest! {
        #[test]
        fn format_parse_round_trip(lambda in arbitrary_partition()) {
            let text = lambda.to_string();
            let back: Partition = text.parse().expect("formatted text parses");
            prop_assert_eq!(back, lambda);
        }

        #[test]
        fn lex_compare_is_antisymmetric(a in arbitrary_partition(), b in arbitrary_partition()) {
            if a.size() == b.size() {
                let ab = a.lex_compare(&b).unwrap();
                let ba = b.lex_compare(&a).unwrap();
                prop_assert_eq!(ab, ba.reverse());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
            } else {
                prop_assert!(a.lex_compare(&b).is_err());
            }
        }

        #[test]
        fn column_then_row_removal_matches_hook(lambda in arbitrary_partition()) {
            if !lambda.is_empty() {
                let via_hook = lambda.remove_hook().unwrap();
                let via_parts = lambda.remove_first_column().unwrap().remove_rows(1);
                // Column removal may empty the shape; row removal of 1 then
                // only succeeds when a row survives.
                match via_parts {
                    Ok(p) => prop_assert_eq!(p, via_hook),
                    Err(_) => prop_assert!(via_hook.is_empty()),
                }
            }
        }
    }
}
