//! Independent ground truth for the eigenvalues of the derangement graph.
//!
//! The spectrum of a Cayley graph on a group with a conjugation-closed
//! connection set is given by the normalized character sums
//!
//! ```text
//! η_λ = (1/dim λ) · Σ_μ  |class μ| · χ_λ(μ),
//! ```
//!
//! the sum running over the conjugacy classes inside the connection set —
//! here, the classes of fixed-point-free permutations, i.e. the cycle types
//! with every part at least 2.  This module computes that sum from first
//! principles: class sizes by the centralizer formula and character values
//! by the Murnaghan–Nakayama border-strip rule.  Nothing here touches the
//! eigenvalue recurrence engine, so exact agreement between the two is a
//! meaningful check of both.
//!
//! For the very smallest groups the module also builds the full adjacency
//! matrix on all `n!` permutations and diagonalizes it numerically — a
//! third, representation-theory-free route to the same spectrum.

use std::collections::{BTreeMap, HashMap, HashSet};

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{exact_div, factorial};
use crate::partition::Partition;

/// Errors from the oracle operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("character value needs |λ| = |μ| (got {left} vs {right})")]
    SizeMismatch { left: u32, right: u32 },
    #[error("dense spectrum brute force only runs for 2 ≤ n ≤ 6 (got n={n})")]
    BruteForceRange { n: u32 },
}

/// A conjugacy class of the symmetric group, named by its cycle type: a
/// partition whose parts are the cycle lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleType(Partition);

impl CycleType {
    pub fn new(partition: Partition) -> Self {
        CycleType(partition)
    }

    pub fn partition(&self) -> &Partition {
        &self.0
    }

    /// Cycle lengths, weakly decreasing.
    pub fn parts(&self) -> &[u32] {
        self.0.parts()
    }

    /// The symmetric group this class lives in: `S_n` for `n` the sum of
    /// the cycle lengths.
    pub fn size(&self) -> u32 {
        self.0.size()
    }

    /// Number of cycles (rows of the type).
    pub fn cycle_count(&self) -> usize {
        self.0.rows()
    }

    /// `(length, count)` pairs with lengths strictly decreasing.
    pub fn length_multiplicities(&self) -> Vec<(u32, u32)> {
        let mut pairs: Vec<(u32, u32)> = Vec::new();
        for &part in self.parts() {
            match pairs.last_mut() {
                Some((length, count)) if *length == part => *count += 1,
                _ => pairs.push((part, 1)),
            }
        }
        pairs
    }

    /// A class consists of fixed-point-free permutations exactly when every
    /// cycle has length at least 2.
    pub fn is_derangement_type(&self) -> bool {
        self.parts().iter().all(|&p| p >= 2)
    }
}

impl std::fmt::Display for CycleType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One evaluated character table entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterValue {
    pub lambda: Partition,
    pub mu: CycleType,
    pub value: BigInt,
}

impl CharacterValue {
    /// Evaluate `χ_λ(μ)` and package the result with its indices.
    pub fn evaluate(lambda: &Partition, mu: &CycleType) -> Result<Self, OracleError> {
        Ok(CharacterValue {
            lambda: lambda.clone(),
            mu: mu.clone(),
            value: mn_character(lambda, mu)?,
        })
    }
}

/// Size of the conjugacy class with cycle type `μ` inside `S_n`:
/// `n! / ∏_j j^{m_j} · m_j!` over the distinct cycle lengths `j` with
/// multiplicities `m_j`.
pub fn conjugacy_class_size(mu: &CycleType) -> BigInt {
    let mut centralizer = BigInt::one();
    for (length, count) in mu.length_multiplicities() {
        centralizer *= BigInt::from(length).pow(count) * factorial(count);
    }
    exact_div(&factorial(mu.size()), &centralizer)
}

/// All cycle types of fixed-point-free permutations in `S_n`: the
/// partitions of `n` with minimum part 2, in decreasing lexicographic
/// order.  Empty for `n = 1`; for `n = 0` the identity's empty type is the
/// (vacuous) sole entry.
pub fn derangement_cycle_types(n: u32) -> Vec<CycleType> {
    Partition::enumerate(n)
        .into_iter()
        .map(CycleType)
        .filter(CycleType::is_derangement_type)
        .collect()
}

/// First-column beta-numbers of a partition: `β_i = λ_i + (r − 1 − i)`
/// (0-based), a strictly decreasing list of distinct values.
fn beta_set(parts: &[u32]) -> Vec<u32> {
    let r = parts.len();
    parts
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (r - 1 - i) as u32)
        .collect()
}

/// Rebuild the partition encoded by a set of distinct beta-numbers.
fn partition_from_beta(mut beta: Vec<u32>) -> Vec<u32> {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let r = beta.len();
    let mut parts: Vec<u32> = beta
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (r - 1 - i) as u32)
        .collect();
    while parts.last() == Some(&0) {
        parts.pop();
    }
    parts
}

/// Recursive border-strip expansion: peel a strip of length `mu[idx]` off
/// `λ` in every possible way, flip the sign by the strip height, and
/// continue with the rest of `μ`.  In beta-number language a strip of
/// length `l` is a move `b ↦ b − l` onto an unoccupied value, and its
/// height is the number of occupied values jumped over.
fn strip_sum(
    parts: Vec<u32>,
    mu: &[u32],
    idx: usize,
    memo: &mut HashMap<(Vec<u32>, usize), BigInt>,
) -> BigInt {
    if idx == mu.len() {
        debug_assert!(parts.is_empty(), "sizes balance when μ is exhausted");
        return BigInt::one();
    }
    if let Some(value) = memo.get(&(parts.clone(), idx)) {
        return value.clone();
    }
    let length = mu[idx];
    let beta = beta_set(&parts);
    let occupied: HashSet<u32> = beta.iter().copied().collect();
    let mut total = BigInt::zero();
    for &b in &beta {
        if b < length || occupied.contains(&(b - length)) {
            continue;
        }
        let target = b - length;
        let height = beta.iter().filter(|&&x| x > target && x < b).count();
        let reduced: Vec<u32> = beta
            .iter()
            .map(|&x| if x == b { target } else { x })
            .collect();
        let child = strip_sum(partition_from_beta(reduced), mu, idx + 1, memo);
        if height % 2 == 0 {
            total += child;
        } else {
            total -= child;
        }
    }
    memo.insert((parts, idx), total.clone());
    total
}

/// The irreducible character `χ_λ` evaluated on the class `μ`, by the
/// Murnaghan–Nakayama rule.  Requires `|λ| = |μ|`.
pub fn mn_character(lambda: &Partition, mu: &CycleType) -> Result<BigInt, OracleError> {
    if lambda.size() != mu.size() {
        return Err(OracleError::SizeMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    let mut memo = HashMap::new();
    Ok(strip_sum(lambda.parts().to_vec(), mu.parts(), 0, &mut memo))
}

/// The eigenvalue at `λ` by the character sum over derangement classes,
/// with the division by `dim λ` checked exact — an inexact division here
/// would mean a class-size or character bug, and panics.
pub fn eta_oracle(lambda: &Partition) -> BigInt {
    let n = lambda.size();
    let mut sum = BigInt::zero();
    for mu in derangement_cycle_types(n) {
        let value = mn_character(lambda, &mu).expect("cycle types are built to size n");
        sum += conjugacy_class_size(&mu) * value;
    }
    exact_div(&sum, &lambda.dimension())
}

/// Numeric spectrum of the full adjacency matrix of the derangement graph
/// on all `n!` permutations, as an integer-eigenvalue multiset.  Two
/// permutations are adjacent when they disagree in every position.  Only
/// feasible for `2 ≤ n ≤ 6`; each numeric eigenvalue must land within
/// `1e−6` of an integer or this panics.
pub fn adjacency_spectrum_bruteforce(n: u32) -> Result<BTreeMap<i64, usize>, OracleError> {
    if !(2..=6).contains(&n) {
        return Err(OracleError::BruteForceRange { n });
    }
    let positions: Vec<usize> = (0..n as usize).collect();
    let perms: Vec<Vec<usize>> = permutations_of(&positions);
    let order = perms.len();
    let mut adjacency = DMatrix::<f64>::zeros(order, order);
    for (i, g) in perms.iter().enumerate() {
        for (j, h) in perms.iter().enumerate() {
            let disagrees_everywhere = g.iter().zip(h).all(|(a, b)| a != b);
            if disagrees_everywhere {
                adjacency[(i, j)] = 1.0;
            }
        }
    }
    let eigenvalues = adjacency.symmetric_eigenvalues();
    let mut multiset = BTreeMap::new();
    for &value in eigenvalues.iter() {
        let rounded = value.round();
        assert!(
            (value - rounded).abs() <= 1e-6,
            "numeric eigenvalue {value} strays from the integers"
        );
        *multiset.entry(rounded as i64).or_insert(0) += 1;
    }
    Ok(multiset)
}

/// All permutations of the given slice, in a deterministic order.
fn permutations_of(items: &[usize]) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    items
        .iter()
        .copied()
        .permutations(items.len())
        .collect()
}
