//! Exhaustive verification sweeps over the spectrum at a given `n`.
//!
//! Each sweep enumerates every partition of `n`, checks one statement about
//! the eigenvalues, and returns a [`VerificationReport`].  Failed comparisons
//! land in `violations` and fail the report; observations that are not
//! failures (counterexample pairs found by a scan, known small-`n` ties,
//! coverage notes) land in `findings`.  Sweeps share one [`EtaCache`] and are
//! deterministic: reports are identical across runs and thread counts.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::arith::factorial;
use crate::derangement::derangement_number;
use crate::eigenvalues::{closed, shape, EtaCache};
use crate::golden;
use crate::oracle::eta_oracle;
use crate::partition::Partition;
use crate::report::{Discrepancy, HoffmanBoundReport, ReportBuilder, VerificationReport};

/// Every `(λ, η_λ)` for `λ ⊢ n`, in descending lexicographic order.
/// Values are computed in parallel; order is preserved.
fn spectrum_pairs(n: u32, cache: &EtaCache) -> Vec<(Partition, BigInt)> {
    Partition::enumerate(n)
        .into_par_iter()
        .map(|lambda| {
            let eta = cache.eta(&lambda);
            (lambda, eta)
        })
        .collect()
}

/// The hook `(first, 1^{n-first})`.
fn hook_with_first_part(first: u32, n: u32) -> Partition {
    assert!(first >= 1 && first <= n, "hook first part {first} out of range for n={n}");
    let mut parts = vec![first];
    parts.extend(std::iter::repeat_n(1, (n - first) as usize));
    Partition::new(parts).expect("hook shape is weakly decreasing")
}

/// The lexicographically largest partition of `n` with the given first part:
/// as many parts of size `first` as fit, then one remainder part.
pub fn lex_largest_with_first_part(first: u32, n: u32) -> Partition {
    assert!(first >= 1 && first <= n, "first part {first} out of range for n={n}");
    let mut parts = vec![first; (n / first) as usize];
    let remainder = n % first;
    if remainder > 0 {
        parts.push(remainder);
    }
    Partition::new(parts).expect("greedy fill is weakly decreasing")
}

/// Alternating sign sweep: every eigenvalue is nonzero with sign
/// `(-1)^{n-λ₁}`.
pub fn verify_asp(n: u32, cache: &EtaCache) -> VerificationReport {
    assert!(n >= 2, "sign sweep needs n >= 2");
    let mut report = ReportBuilder::new("asp", n);
    for (lambda, eta) in spectrum_pairs(n, cache) {
        if eta.is_zero() {
            report.violation(lambda.to_string(), "0", "nonzero eigenvalue");
            continue;
        }
        let expected = shape::sign_eta(&lambda).expect("n >= 2 was asserted");
        let actual: i8 = if eta.is_negative() { -1 } else { 1 };
        if actual != expected {
            report.violation(lambda.to_string(), &eta, format!("sign {expected:+}"));
        }
    }
    report.finish()
}

/// Hook sandwich sweep.  For `λ₁ ≥ ⌊n/2⌋` the magnitude sits between the
/// hooks with first parts `λ₁` and `λ₁ + 1` (no upper hook for `λ = (n)`);
/// for `λ₁ < ⌊n/2⌋` it is bounded by the hook with first part `⌊n/2⌋ + 1`,
/// strictly once `n ≥ 6`.  Also recomputes every hook magnitude against the
/// closed form `D_{λ₁} + (n-λ₁)D_{λ₁-1}`.
pub fn verify_main2(n: u32, cache: &EtaCache) -> VerificationReport {
    assert!(n >= 2, "sandwich sweep needs n >= 2");
    let mut report = ReportBuilder::new("main2", n);
    let half = n / 2;

    for first in 1..=n {
        let hook = hook_with_first_part(first, n);
        let computed = cache.abs_eta(&hook);
        let formula = closed::hook_magnitude(first, n).expect("first part is in 1..=n");
        if computed != formula {
            report.violation(format!("{hook} magnitude"), &computed, &formula);
        }
    }

    let cap_hook = hook_with_first_part(half + 1, n);
    let cap = cache.abs_eta(&cap_hook);
    let top = Partition::new(vec![n]).expect("single row");

    for (lambda, eta) in spectrum_pairs(n, cache) {
        let magnitude = eta.abs();
        if lambda.first_part() >= half {
            let floor = cache.abs_eta(&hook_with_first_part(lambda.first_part(), n));
            if magnitude < floor {
                report.violation(format!("{lambda} below hook floor"), &magnitude, &floor);
            }
            if lambda != top {
                let ceiling = cache.abs_eta(&hook_with_first_part(lambda.first_part() + 1, n));
                if magnitude > ceiling {
                    report.violation(format!("{lambda} above hook ceiling"), &magnitude, &ceiling);
                }
            }
        } else {
            let ok = if n >= 6 { magnitude < cap } else { magnitude <= cap };
            if !ok {
                report.violation(format!("{lambda} vs {cap_hook}"), &magnitude, &cap);
            }
        }
    }
    report.finish()
}

/// Large-first-part families: for `λ₁ = n - k`, `k ∈ {1,2,3,4}`, applicable
/// once `n ≥ 2k`, the magnitudes weakly decrease down the family in
/// lexicographic order, strictly once `n ≥ 7`.
pub fn verify_main3(n: u32, cache: &EtaCache) -> VerificationReport {
    assert!(n >= 2, "family sweep needs n >= 2");
    let mut report = ReportBuilder::new("main3", n);
    let strict = n >= 7;
    for gap in 1..=4u32 {
        if n < 2 * gap {
            continue;
        }
        let family: Vec<Partition> = Partition::enumerate(n)
            .into_iter()
            .filter(|p| p.first_part() == n - gap)
            .collect();
        for pair in family.windows(2) {
            let above = cache.abs_eta(&pair[0]);
            let below = cache.abs_eta(&pair[1]);
            let ok = if strict { above > below } else { above >= below };
            if !ok {
                report.violation(format!("{} vs {}", pair[0], pair[1]), &above, &below);
            }
        }
    }
    report.finish()
}

/// Scan for magnitude inversions within a first part: pairs `λ > μ`
/// (lexicographically, with `λ₁ = μ₁`) whose magnitudes satisfy
/// `|η_λ| < |η_μ|`.  Pairs are reported as findings — this is a scan for
/// counterexamples to full lexicographic monotonicity, not a theorem check.
pub fn scan_lex_monotonicity(n: u32, cache: &EtaCache) -> VerificationReport {
    assert!(n >= 2, "lex scan needs n >= 2");
    let mut report = ReportBuilder::new("lexscan", n);
    let magnitudes: Vec<(Partition, BigInt)> = spectrum_pairs(n, cache)
        .into_iter()
        .map(|(lambda, eta)| {
            let magnitude = eta.abs();
            (lambda, magnitude)
        })
        .collect();
    for (i, (lambda, above)) in magnitudes.iter().enumerate() {
        for (mu, below) in &magnitudes[i + 1..] {
            if mu.first_part() == lambda.first_part() && above < below {
                report.finding(format!("{lambda} lex-above {mu}"), above, below);
            }
        }
    }
    report.finish()
}

/// Minimum eigenvalue sweep: the minimum is `-(D_{n-1} + D_{n-2})`, attained
/// at `(n-1, 1)`, and every other partition (besides `(n)`) has strictly
/// smaller magnitude, which in turn is strictly below `D_n`.
pub fn verify_smallest_eigenvalue(n: u32, cache: &EtaCache) -> VerificationReport {
    assert!(n >= 2, "minimum sweep needs n >= 2");
    let mut report = ReportBuilder::new("minimum", n);
    let pairs = spectrum_pairs(n, cache);
    let expected_min = -(derangement_number(n - 1) + derangement_number(n - 2));

    let actual_min = pairs
        .iter()
        .map(|(_, eta)| eta)
        .min()
        .expect("n >= 2 has partitions");
    if *actual_min != expected_min {
        report.violation("minimum over all partitions", actual_min, &expected_min);
    }

    let near_top = Partition::new(vec![n - 1, 1]).expect("n >= 2");
    let near_top_eta = cache.eta(&near_top);
    if near_top_eta != expected_min {
        report.violation(
            format!("{near_top} attains the minimum"),
            &near_top_eta,
            &expected_min,
        );
    }

    let top = Partition::new(vec![n]).expect("single row");
    let near_top_magnitude = near_top_eta.abs();
    let mut others = 0usize;
    for (lambda, eta) in &pairs {
        if *lambda == top || *lambda == near_top {
            continue;
        }
        others += 1;
        let magnitude = eta.abs();
        if magnitude >= near_top_magnitude {
            report.violation(
                format!("{lambda} vs {near_top}"),
                &magnitude,
                &near_top_magnitude,
            );
        }
    }
    if others > 0 && near_top_magnitude >= cache.abs_eta(&top) {
        report.violation(
            format!("{near_top} vs {top}"),
            &near_top_magnitude,
            cache.abs_eta(&top),
        );
    }
    report.finish()
}

/// Regular-graph accounting: `Σ dim² = n!`, `Σ dim²·η = 0` (trace),
/// `Σ dim²·η² = n!·D_n` (closed 2-walks), and the maximum eigenvalue is
/// `D_n`, attained at `(n)`.  Other partitions attaining the maximum are
/// reported as findings (this happens at `n = 3`).
pub fn verify_trace_identities(n: u32, cache: &EtaCache) -> VerificationReport {
    assert!(n >= 1, "trace sweep needs n >= 1");
    let mut report = ReportBuilder::new("trace", n);
    let pairs = spectrum_pairs(n, cache);

    let mut weight_sum = BigInt::zero();
    let mut trace = BigInt::zero();
    let mut walk_count = BigInt::zero();
    for (lambda, eta) in &pairs {
        let weight = lambda.multiplicity();
        trace += &weight * eta;
        walk_count += &weight * eta * eta;
        weight_sum += weight;
    }
    let order = factorial(n);
    if weight_sum != order {
        report.violation("total multiplicity", &weight_sum, &order);
    }
    if !trace.is_zero() {
        report.violation("adjacency trace", &trace, 0);
    }
    let degree = derangement_number(n);
    let expected_walks = &order * &degree;
    if walk_count != expected_walks {
        report.violation("closed two-walk count", &walk_count, &expected_walks);
    }

    let max_eta = pairs
        .iter()
        .map(|(_, eta)| eta)
        .max()
        .expect("n >= 1 has partitions");
    if *max_eta != degree {
        report.violation("maximum eigenvalue", max_eta, &degree);
    }
    let top = Partition::new(vec![n]).expect("single row");
    let top_eta = cache.eta(&top);
    if top_eta != degree {
        report.violation(format!("{top} attains the maximum"), &top_eta, &degree);
    }
    for (lambda, eta) in &pairs {
        if *lambda != top && *eta == degree {
            report.finding(
                lambda.to_string(),
                eta,
                "also attains the maximum eigenvalue",
            );
        }
    }
    report.finish()
}

/// Conjectured two-sided bound: for every `λ`, the magnitude is at least the
/// hook with the same first part and at most the lexicographically largest
/// partition with that first part.
pub fn scan_conjecture(n: u32, cache: &EtaCache) -> VerificationReport {
    assert!(n >= 2, "conjecture scan needs n >= 2");
    let mut report = ReportBuilder::new("conjecture", n);
    for (lambda, eta) in spectrum_pairs(n, cache) {
        let first = lambda.first_part();
        let magnitude = eta.abs();
        let floor = cache.abs_eta(&hook_with_first_part(first, n));
        let ceiling = cache.abs_eta(&lex_largest_with_first_part(first, n));
        if magnitude < floor {
            report.violation(format!("{lambda} below hook floor"), &magnitude, &floor);
        }
        if magnitude > ceiling {
            report.violation(
                format!("{lambda} above lex-largest ceiling"),
                &magnitude,
                &ceiling,
            );
        }
    }
    report.finish()
}

/// The ratio bound on the independence number, computed as an exact
/// rational from the verified minimum eigenvalue.
pub fn hoffman_bound(n: u32, cache: &EtaCache) -> HoffmanBoundReport {
    assert!(n >= 2, "ratio bound needs n >= 2");
    let smallest = spectrum_pairs(n, cache)
        .into_iter()
        .map(|(_, eta)| eta)
        .min()
        .expect("n >= 2 has partitions");
    assert!(
        smallest.is_negative(),
        "ratio bound needs a negative least eigenvalue"
    );
    let degree = derangement_number(n);
    let vertex_count = factorial(n);
    let bound = BigRational::new(-(&smallest) * &vertex_count, &degree - &smallest);
    let attained = factorial(n - 1);
    let is_exact = bound == BigRational::from(attained.clone());
    HoffmanBoundReport {
        n,
        degree,
        vertex_count,
        smallest_eigenvalue: smallest,
        bound,
        attained,
        is_exact,
    }
}

/// Report wrapper around [`hoffman_bound`]: a violation when the exact
/// rational misses `(n-1)!`, a finding with the value when it matches.
pub fn verify_hoffman(n: u32, cache: &EtaCache) -> VerificationReport {
    let mut report = ReportBuilder::new("hoffman", n);
    let bound = hoffman_bound(n, cache);
    if bound.is_exact {
        report.finding("independence ratio bound", &bound.bound, &bound.attained);
    } else {
        report.violation("independence ratio bound", &bound.bound, &bound.attained);
    }
    report.finish()
}

/// Recurrence vs character sum: the two independent evaluations must agree
/// on every partition of `n`.
pub fn verify_oracle_equivalence(n: u32, cache: &EtaCache) -> VerificationReport {
    assert!(n >= 1, "equivalence sweep needs n >= 1");
    let mut report = ReportBuilder::new("oracle", n);
    let mismatches: Vec<Discrepancy> = Partition::enumerate(n)
        .into_par_iter()
        .filter_map(|lambda| {
            let recurrence = cache.eta(&lambda);
            let character_sum = eta_oracle(&lambda);
            (recurrence != character_sum).then(|| Discrepancy {
                subject: lambda.to_string(),
                left: recurrence.to_string(),
                right: character_sum.to_string(),
            })
        })
        .collect();
    report.extend_violations(mismatches);
    report.finish()
}

/// Engine vs the checked-in reference table.  Absence of coverage for an `n`
/// is a finding, not a failure; compared row counts are reported.
pub fn verify_golden(n: u32, cache: &EtaCache) -> VerificationReport {
    let mut report = ReportBuilder::new("golden", n);
    let rows = golden::rows_for(n);
    if rows.is_empty() {
        report.finding("coverage", "no reference rows", format!("n={n}"));
        return report.finish();
    }
    let compared = rows.len();
    for (lambda, expected) in rows {
        let computed = cache.eta(&lambda);
        if computed != expected {
            report.violation(lambda.to_string(), &computed, &expected);
        }
    }
    report.finding("coverage", compared, "rows compared");
    report.finish()
}
