//! Checked-in reference eigenvalue table.
//!
//! The data file ships with the crate and is parsed once on first use.  Rows
//! are keyed `(n, partition)` with exact decimal values; coverage is every
//! partition for `n ∈ {2,…,10}` and `n = 15`, plus the first-part ranges
//! `λ₁ ≥ 5` at `n = 11` and `λ₁ ≥ 6` at `n ∈ {12, 13}`.  `n = 14` has no
//! rows.  The table is independent input for regression sweeps, so nothing
//! here recomputes values — the file text is the authority.

use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;

use crate::partition::Partition;

const RAW_TABLE: &str = include_str!("../data/golden_eta.tsv");

/// One reference row: the eigenvalue of `partition` (a partition of `n`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenRow {
    pub n: u32,
    pub partition: Partition,
    pub eta: BigInt,
}

fn parse_table() -> Vec<GoldenRow> {
    let mut rows = Vec::new();
    for (index, line) in RAW_TABLE.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split('\t');
        let (Some(n), Some(text), Some(value), None) = (
            fields.next(),
            fields.next(),
            fields.next(),
            fields.next(),
        ) else {
            panic!("reference table line {}: expected 3 tab-separated fields", index + 1);
        };
        let n: u32 = n
            .parse()
            .unwrap_or_else(|_| panic!("reference table line {}: bad n {:?}", index + 1, n));
        let partition = Partition::from_str(text)
            .unwrap_or_else(|e| panic!("reference table line {}: {e}", index + 1));
        assert_eq!(
            partition.size(),
            n,
            "reference table line {}: {text} is not a partition of {n}",
            index + 1
        );
        let eta = BigInt::from_str(value)
            .unwrap_or_else(|_| panic!("reference table line {}: bad value {:?}", index + 1, value));
        rows.push(GoldenRow { n, partition, eta });
    }
    rows
}

/// Every reference row, in file order (descending lexicographic within each n).
pub fn reference_rows() -> &'static [GoldenRow] {
    static ROWS: OnceLock<Vec<GoldenRow>> = OnceLock::new();
    ROWS.get_or_init(parse_table)
}

/// The reference rows for one `n` (empty when the table has no coverage there).
pub fn rows_for(n: u32) -> Vec<(Partition, BigInt)> {
    reference_rows()
        .iter()
        .filter(|row| row.n == n)
        .map(|row| (row.partition.clone(), row.eta.clone()))
        .collect()
}

/// The distinct `n` values the table covers, ascending.
pub fn covered_sizes() -> Vec<u32> {
    let mut sizes: Vec<u32> = reference_rows().iter().map(|row| row.n).collect();
    sizes.sort_unstable();
    sizes.dedup();
    sizes
}
