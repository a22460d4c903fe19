//! Row records for emitted spectra and their JSON/CSV/text encodings.
//!
//! Every numeric field is carried as an exact decimal string — values leave
//! the 64-bit range around `n = 21`, so nothing here ever narrows to a
//! machine integer.  The `sign` column is the typographic `"+"` / `"−"`
//! (U+2212); the `eta` string itself uses the ASCII `-` so it round-trips
//! through ordinary integer parsing.

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::eigenvalues::EigenvalueRecord;
use crate::partition::Partition;

/// One emitted row: a partition of `n` with its exact eigenvalue and
/// spectral multiplicity `dim²`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OutputRecord {
    pub n: u32,
    pub partition: String,
    pub eta: String,
    pub multiplicity: String,
    pub sign: String,
}

fn sign_glyph(eta: &BigInt) -> String {
    if eta.is_negative() {
        "\u{2212}".to_string()
    } else {
        "+".to_string()
    }
}

impl OutputRecord {
    pub fn from_record(n: u32, record: &EigenvalueRecord) -> Self {
        OutputRecord {
            n,
            partition: record.partition.to_string(),
            eta: record.eta.to_string(),
            multiplicity: record.multiplicity.to_string(),
            sign: sign_glyph(&record.eta),
        }
    }

    /// Row for a single partition (the `eta` subcommand), including the
    /// empty partition, whose eigenvalue is the recurrence's initial 1.
    pub fn from_eta(partition: &Partition, eta: &BigInt) -> Self {
        OutputRecord {
            n: partition.size(),
            partition: partition.to_string(),
            eta: eta.to_string(),
            multiplicity: partition.multiplicity().to_string(),
            sign: sign_glyph(eta),
        }
    }
}

/// JSON array of records, all numerics as decimal strings.
pub fn render_json(records: &[OutputRecord]) -> String {
    let mut text = serde_json::to_string_pretty(records).expect("string-only struct serializes");
    text.push('\n');
    text
}

/// CSV with the mandatory header `n,partition,eta,multiplicity,sign`.
pub fn render_csv(records: &[OutputRecord]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for record in records {
        writer.serialize(record).expect("string-only struct serializes");
    }
    let bytes = writer.into_inner().expect("in-memory writer");
    String::from_utf8(bytes).expect("csv output is UTF-8")
}

/// Aligned two-column table in the reference-table style: partition on the
/// left, eigenvalue right-aligned.  Rows are grouped under an `n = …` title.
pub fn render_text(records: &[OutputRecord]) -> String {
    if records.is_empty() {
        return String::new();
    }
    let partition_width = records
        .iter()
        .map(|r| r.partition.chars().count())
        .max()
        .unwrap()
        .max("partition".len());
    let eta_width = records
        .iter()
        .map(|r| r.eta.chars().count())
        .max()
        .unwrap()
        .max("eta".len());

    let mut out = String::new();
    let mut current_n: Option<u32> = None;
    for record in records {
        if current_n != Some(record.n) {
            out.push_str(&format!("n = {}\n", record.n));
            out.push_str(&format!(
                "{:<partition_width$}  {:>eta_width$}\n",
                "partition", "eta"
            ));
            current_n = Some(record.n);
        }
        out.push_str(&format!(
            "{:<partition_width$}  {:>eta_width$}\n",
            record.partition, record.eta
        ));
    }
    out
}
