//! Command-line surface: compute spectra, evaluate single eigenvalues, run
//! verification sweeps, and manage the on-disk eigenvalue memo.
//!
//! Exit codes: 0 on success (for `verify`: every selected check passed),
//! 1 when a verification check fails, 2 on usage or input errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use derangement_spectrum::eigenvalues::{spectrum, EtaCache};
use derangement_spectrum::output::{render_csv, render_json, render_text, OutputRecord};
use derangement_spectrum::partition::Partition;
use derangement_spectrum::report::{Status, VerificationReport};
use derangement_spectrum::verify;

/// Canonical check order; a `verify` run with no `--checks` runs all of them.
const ALL_CHECKS: &[&str] = &[
    "asp",
    "main2",
    "main3",
    "lexscan",
    "minimum",
    "trace",
    "conjecture",
    "hoffman",
    "oracle",
    "golden",
];

/// Character-sum equivalence above this `n` needs `--allow-slow`.
const ORACLE_FAST_LIMIT: u32 = 10;

#[derive(Parser)]
#[command(
    name = "derspec",
    version,
    about = "Exact eigenvalue spectrum of the derangement graph"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print the full spectrum with multiplicities for one n
    Spectrum {
        /// Ground-set size; every partition of n contributes one eigenvalue
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Load the eigenvalue memo from this file first and save it back after
        #[arg(long)]
        cache_file: Option<PathBuf>,
        /// Worker threads (default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Print one eigenvalue for a partition in exponent notation (e.g. "5,3,1^2")
    Eta {
        /// The partition; an empty string denotes the empty partition
        #[arg(long)]
        partition: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        cache_file: Option<PathBuf>,
    },
    /// Run verification sweeps; exit 0 only if every selected check passes
    Verify {
        #[arg(long)]
        n: u32,
        /// Comma-separated subset of: asp, main2, main3, lexscan, minimum,
        /// trace, conjecture, hoffman, oracle, golden (default: all)
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        cache_file: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
        /// Unlock slow checks (character-sum equivalence above n = 10)
        #[arg(long)]
        allow_slow: bool,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Spectrum {
            n,
            format,
            cache_file,
            jobs,
        } => {
            if n < 1 {
                return Err("--n must be at least 1".to_string());
            }
            configure_jobs(jobs);
            let cache = load_cache(cache_file.as_deref())?;
            let records: Vec<OutputRecord> = spectrum(n, &cache)
                .iter()
                .map(|record| OutputRecord::from_record(n, record))
                .collect();
            print!("{}", render_records(&records, format));
            save_cache(&cache, cache_file.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Eta {
            partition,
            format,
            cache_file,
        } => {
            let lambda = Partition::from_str(&partition)
                .map_err(|e| format!("--partition {partition:?}: {e}"))?;
            let cache = load_cache(cache_file.as_deref())?;
            let eta = cache.eta(&lambda);
            let record = OutputRecord::from_eta(&lambda, &eta);
            print!("{}", render_records(std::slice::from_ref(&record), format));
            save_cache(&cache, cache_file.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            n,
            checks,
            format,
            cache_file,
            jobs,
            allow_slow,
        } => {
            if n < 2 {
                return Err("--n must be at least 2 for verification sweeps".to_string());
            }
            let selected = select_checks(&checks)?;
            if selected.contains(&"oracle") && n > ORACLE_FAST_LIMIT && !allow_slow {
                return Err(format!(
                    "the oracle check sums characters over every partition and is slow for n > {ORACLE_FAST_LIMIT}; pass --allow-slow to run it at n = {n}"
                ));
            }
            configure_jobs(jobs);
            let cache = load_cache(cache_file.as_deref())?;
            let reports: Vec<VerificationReport> = selected
                .iter()
                .map(|check| run_check(check, n, &cache))
                .collect();
            print!("{}", render_reports(&reports, format));
            save_cache(&cache, cache_file.as_deref())?;
            if reports.iter().all(VerificationReport::passed) {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::FAILURE)
            }
        }
    }
}

fn configure_jobs(jobs: Option<usize>) {
    if let Some(count) = jobs {
        // Build the global worker pool up front; later sweeps share it.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(count)
            .build_global();
    }
}

fn select_checks(requested: &[String]) -> Result<Vec<&'static str>, String> {
    if requested.is_empty() {
        return Ok(ALL_CHECKS.to_vec());
    }
    let mut selected = Vec::new();
    for name in requested {
        let canonical = ALL_CHECKS
            .iter()
            .find(|known| **known == name.as_str())
            .ok_or_else(|| {
                format!(
                    "unknown check {name:?}; valid checks: {}",
                    ALL_CHECKS.join(", ")
                )
            })?;
        if !selected.contains(canonical) {
            selected.push(*canonical);
        }
    }
    Ok(selected)
}

fn run_check(check: &str, n: u32, cache: &EtaCache) -> VerificationReport {
    match check {
        "asp" => verify::verify_asp(n, cache),
        "main2" => verify::verify_main2(n, cache),
        "main3" => verify::verify_main3(n, cache),
        "lexscan" => verify::scan_lex_monotonicity(n, cache),
        "minimum" => verify::verify_smallest_eigenvalue(n, cache),
        "trace" => verify::verify_trace_identities(n, cache),
        "conjecture" => verify::scan_conjecture(n, cache),
        "hoffman" => verify::verify_hoffman(n, cache),
        "oracle" => verify::verify_oracle_equivalence(n, cache),
        "golden" => verify::verify_golden(n, cache),
        other => unreachable!("check {other} was validated before dispatch"),
    }
}

fn load_cache(path: Option<&Path>) -> Result<EtaCache, String> {
    let cache = EtaCache::new();
    if let Some(path) = path {
        if path.exists() {
            cache
                .load_from_file(path)
                .map_err(|e| format!("cache file {}: {e}", path.display()))?;
        }
    }
    Ok(cache)
}

fn save_cache(cache: &EtaCache, path: Option<&Path>) -> Result<(), String> {
    if let Some(path) = path {
        cache
            .save_to_file(path)
            .map_err(|e| format!("cache file {}: {e}", path.display()))?;
    }
    Ok(())
}

fn render_records(records: &[OutputRecord], format: Format) -> String {
    match format {
        Format::Text => render_text(records),
        Format::Json => render_json(records),
        Format::Csv => render_csv(records),
    }
}

fn render_reports(reports: &[VerificationReport], format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            for report in reports {
                let verdict = match report.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                };
                out.push_str(&format!(
                    "check {} (n={}): {verdict} ({} violations, {} findings) [{:.3}s]\n",
                    report.check_name,
                    report.n,
                    report.violations.len(),
                    report.findings.len(),
                    report.elapsed.as_secs_f64(),
                ));
                for discrepancy in &report.violations {
                    out.push_str(&format!(
                        "  violation {}: {} vs {}\n",
                        discrepancy.subject, discrepancy.left, discrepancy.right
                    ));
                }
                for discrepancy in &report.findings {
                    out.push_str(&format!(
                        "  finding {}: {} vs {}\n",
                        discrepancy.subject, discrepancy.left, discrepancy.right
                    ));
                }
            }
            out
        }
        Format::Json => {
            let mut text =
                serde_json::to_string_pretty(reports).expect("reports serialize");
            text.push('\n');
            text
        }
        Format::Csv => {
            let mut out = String::from("check_name,n,status,violations,findings,elapsed_seconds\n");
            for report in reports {
                let status = match report.status {
                    Status::Pass => "pass",
                    Status::Fail => "fail",
                };
                out.push_str(&format!(
                    "{},{},{},{},{},{:.6}\n",
                    report.check_name,
                    report.n,
                    status,
                    report.violations.len(),
                    report.findings.len(),
                    report.elapsed.as_secs_f64(),
                ));
            }
            out
        }
    }
}
