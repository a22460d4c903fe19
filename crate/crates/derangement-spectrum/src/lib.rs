//! Exact integer eigenvalues of the derangement graph on the symmetric
//! group: the Cayley graph on the n! permutations whose connection set is
//! the derangements.
//!
//! The eigenvalues are indexed by the partitions of `n`.  The crate computes
//! them with a single integer recurrence over partitions ([`eigenvalues`]),
//! checks them against an independent character-sum oracle and a dense
//! adjacency-matrix diagonalization ([`oracle`]), and packages spectrum-wide
//! verification sweeps — sign rule, magnitude orderings, extreme
//! eigenvalues, trace identities, a ratio-bound cross-check — behind a
//! library API and the `derspec` command-line tool.
//!
//! All arithmetic on eigenvalues is exact: values are arbitrary-precision
//! integers, and the one rational computation (the ratio bound) uses exact
//! rationals.  Floating point appears only inside the brute-force adjacency
//! diagonalization used to validate everything else at small sizes.

pub mod arith;
pub mod derangement;
pub mod eigenvalues;
pub mod golden;
pub mod oracle;
pub mod output;
pub mod partition;
pub mod report;
pub mod verify;
