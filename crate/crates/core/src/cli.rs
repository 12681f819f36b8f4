//! Command-line front end. Every command prints one JSON document on
//! success; failures print a single `{"error", "detail"}` object to the
//! error stream and nothing on standard output.
//!
//! Exit codes: 0 success, 1 malformed input, 2 precondition violation or
//! usage error, 3 internal verification inconsistency.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::{Error, ErrorKind};
use crate::io::{load_distribution, load_system, system_to_json};
use crate::reliability::{diagnose, reliability_curve, system_reliability, verify_theorems};
use crate::scalar::Scalar;
use crate::signature::{boland_signature, probability_signature};
use crate::structure::{appendix_basis, rank_over_rationals, SystemClass};
use crate::{probability_signature_oracle, Rational};

#[derive(Debug, Parser)]
#[command(name = "cohsig", version, about = "Exact signature and reliability analysis of coherent systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// System signature of a structure function.
    Signature {
        #[arg(long)]
        system: PathBuf,
    },
    /// Probability signature from the relative quality function and from the atoms.
    ProbSignature {
        #[arg(long)]
        system: PathBuf,
        #[arg(long)]
        dist: PathBuf,
    },
    /// Reliability curve, or a single value with --t.
    Reliability {
        #[arg(long)]
        system: PathBuf,
        #[arg(long)]
        dist: PathBuf,
        /// Time as `a/b` or an integer.
        #[arg(long)]
        t: Option<String>,
    },
    /// Distributional conditions and predicted verdicts.
    Diagnose {
        #[arg(long)]
        dist: PathBuf,
    },
    /// Exhaustive check of both representations over a system class.
    Verify {
        #[arg(long)]
        dist: PathBuf,
        #[arg(long, value_parser = parse_class)]
        class: SystemClass,
    },
    /// Linearly independent basis of structure functions.
    Basis {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_class, default_value = "coherent")]
        class: SystemClass,
        #[arg(long)]
        check_rank: bool,
    },
}

fn parse_class(s: &str) -> Result<SystemClass, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failed command: error category, detail, exit code.
struct Failure {
    category: &'static str,
    detail: String,
    code: i32,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (category, code) = match e.kind() {
            ErrorKind::Malformed => ("malformed_input", 1),
            ErrorKind::Precondition => ("precondition", 2),
            ErrorKind::Inconsistency => ("inconsistency", 3),
        };
        Failure {
            category,
            detail: e.to_string(),
            code,
        }
    }
}

fn texts<T: Scalar>(values: &[T]) -> Value {
    Value::from(values.iter().map(Scalar::to_text).collect::<Vec<_>>())
}

fn execute(command: Command) -> Result<Value, Failure> {
    match command {
        Command::Signature { system } => {
            let phi = load_system(&system)?;
            let s = boland_signature::<Rational>(&phi)?;
            Ok(Value::from(s.to_texts()))
        }
        Command::ProbSignature { system, dist } => {
            let phi = load_system(&system)?;
            let d = load_distribution::<Rational>(&dist)?;
            d.require_no_ties()?;
            let q_based = probability_signature(&phi, &d.relative_quality())?;
            let oracle = probability_signature_oracle(&phi, &d)?;
            let system_sig = boland_signature::<Rational>(&phi)?;
            Ok(json!({
                "probability_signature": q_based.to_texts(),
                "oracle": oracle.to_texts(),
                "oracle_agrees": q_based == oracle,
                "system_signature": system_sig.to_texts(),
                "signatures_agree": q_based == system_sig,
            }))
        }
        Command::Reliability { system, dist, t } => {
            let phi = load_system(&system)?;
            let d = load_distribution::<Rational>(&dist)?;
            match t {
                Some(text) => {
                    let t = Rational::parse_text(&text).ok_or_else(|| Failure {
                        category: "usage",
                        detail: format!("invalid time `{text}`"),
                        code: 2,
                    })?;
                    let value = system_reliability(&phi, &d, &t)?;
                    Ok(json!({ "t": t.to_text(), "reliability": value.to_text() }))
                }
                None => {
                    let curve = reliability_curve(&phi, &d)?;
                    Ok(json!({
                        "breakpoints": texts(&curve.breakpoints),
                        "values": texts(&curve.values),
                    }))
                }
            }
        }
        Command::Diagnose { dist } => {
            let d = load_distribution::<Rational>(&dist)?;
            Ok(diagnose(&d)?.to_json())
        }
        Command::Verify { dist, class } => {
            let d = load_distribution::<Rational>(&dist)?;
            Ok(verify_theorems(&d, class)?.to_json())
        }
        Command::Basis { n, class, check_rank } => {
            let basis = appendix_basis(n, class)?;
            let expected = (1usize << n) - 1;
            let mut out = json!({
                "n": n,
                "class": class.as_str(),
                "functions": basis.iter().map(system_to_json).collect::<Vec<_>>(),
                "expected": expected,
            });
            if check_rank {
                let rank = rank_over_rationals(&basis)?;
                if rank != expected {
                    return Err(Failure {
                        category: "inconsistency",
                        detail: format!("basis rank {rank} differs from {expected}"),
                        code: 3,
                    });
                }
                out["rank"] = json!(rank);
            }
            Ok(out)
        }
    }
}

/// Runs the command line `argv` (program name first), writing JSON to `out`
/// or an error object to `err`, and returns the process exit code.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind as ClapKind;
            if matches!(e.kind(), ClapKind::DisplayHelp | ClapKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let failure = Failure {
                category: "usage",
                detail: e.kind().to_string(),
                code: 2,
            };
            return report_failure(failure, err, Some(e.to_string()));
        }
    };
    match execute(cli.command) {
        Ok(value) => {
            let text = serde_json::to_string_pretty(&value).expect("JSON values serialize");
            let _ = writeln!(out, "{text}");
            0
        }
        Err(failure) => report_failure(failure, err, None),
    }
}

fn report_failure(failure: Failure, err: &mut dyn Write, usage: Option<String>) -> i32 {
    let mut value = json!({ "error": failure.category, "detail": failure.detail });
    if let Some(usage) = usage {
        value["usage"] = json!(usage.trim_end());
    }
    let _ = writeln!(err, "{value}");
    failure.code
}
