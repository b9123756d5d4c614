//! `powersum <formula|table|eval|bernoulli|check|bench>`.
//!
//! Every command returns a [`CommandResult`] instead of printing, so the
//! binary writes each stream once and tests can inspect exact bytes.
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::ffi::OsString;
use std::fmt::Write;
use std::time::{Duration, Instant};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde_json::json;

use crate::arith::{parse_decimal, rat_is_integer};
use crate::engine::{BernoulliSequence, PowerSumTable};
use crate::oracle::brute_force_sum;
use crate::render::{render_bernoulli, render_formula, render_table, OutputFormat};
use crate::verify::{run_check, CheckInputs, CheckSummary, DEFAULT_N_MAX, DEFAULT_R_MAX};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn ok(stdout: String) -> Self {
        CommandResult {
            exit_code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        CommandResult {
            exit_code: EXIT_USAGE,
            stdout: String::new(),
            stderr,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "powersum", version, about = "Exact closed forms for sums of powers 1^r + 2^r + ... + N^r")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the polynomial S(N;r)
    #[command(allow_negative_numbers = true)]
    Formula {
        r: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Print S(N;0) through S(N;r_max)
    #[command(allow_negative_numbers = true)]
    Table {
        r_max: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Print the exact value of 1^r + ... + N^r via the closed form
    #[command(allow_negative_numbers = true)]
    Eval {
        r: String,
        #[arg(value_name = "N")]
        n: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Print the Bernoulli numbers B_0 through B_j_max (B_1 = -1/2)
    #[command(allow_negative_numbers = true)]
    Bernoulli {
        j_max: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Verify the closed forms against brute force and Faulhaber's formula
    #[command(allow_negative_numbers = true)]
    Check {
        #[arg(long)]
        r_max: Option<String>,
        #[arg(long)]
        n_max: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Time the closed form against direct summation
    #[command(allow_negative_numbers = true)]
    Bench {
        r: String,
        #[arg(value_name = "N")]
        n: String,
        reps: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
}

fn parse_index(name: &str, s: &str) -> Result<usize, String> {
    let value: BigInt =
        parse_decimal(s, true).ok_or_else(|| format!("invalid {name} {s:?}: expected a non-negative integer"))?;
    if value.sign() == num_bigint::Sign::Minus {
        return Err(format!("invalid {name} {s:?}: must not be negative"));
    }
    value.to_usize().ok_or_else(|| format!("{name} {s} is too large"))
}

fn parse_positive(name: &str, s: &str) -> Result<BigInt, String> {
    let value: BigInt =
        parse_decimal(s, true).ok_or_else(|| format!("invalid {name} {s:?}: expected a positive integer"))?;
    if value < BigInt::one() {
        return Err(format!("invalid {name} {s:?}: must be at least 1"));
    }
    Ok(value)
}

fn require_format(command: &str, format: OutputFormat, allowed: &[OutputFormat]) -> Result<(), String> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(format!("{command} does not support --format {format:?}").to_lowercase())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CommandResult::ok(e.to_string()),
                _ => CommandResult::usage(e.render().to_string()),
            };
        }
    };
    dispatch(cli.command).unwrap_or_else(CommandResult::usage)
}

fn dispatch(command: Command) -> Result<CommandResult, String> {
    use OutputFormat::*;
    match command {
        Command::Formula { r, format } => Ok(cmd_formula(parse_index("r", &r)?, format)),
        Command::Table { r_max, format } => Ok(cmd_table(parse_index("r_max", &r_max)?, format)),
        Command::Eval { r, n, format } => {
            require_format("eval", format, &[Text, Json])?;
            Ok(cmd_eval(parse_index("r", &r)?, &parse_positive("N", &n)?, format))
        }
        Command::Bernoulli { j_max, format } => Ok(cmd_bernoulli(parse_index("j_max", &j_max)?, format)),
        Command::Check { r_max, n_max, format } => {
            require_format("check", format, &[Text, Json])?;
            let r_max = r_max.map_or(Ok(DEFAULT_R_MAX), |s| parse_index("--r-max", &s))?;
            let n_max = match n_max {
                Some(s) => parse_positive("--n-max", &s)?
                    .to_u64()
                    .ok_or_else(|| format!("--n-max {s} is too large"))?,
                None => DEFAULT_N_MAX,
            };
            Ok(cmd_check(r_max, n_max, format))
        }
        Command::Bench { r, n, reps, format } => {
            require_format("bench", format, &[Text, Json])?;
            let r = parse_index("r", &r)?;
            if u32::try_from(r).is_err() {
                return Err(format!("r {r} is too large to sum by brute force"));
            }
            let n = parse_positive("N", &n)?;
            let reps = parse_positive("reps", &reps)?
                .to_usize()
                .ok_or_else(|| "reps is too large".to_string())?;
            Ok(cmd_bench(r, &n, reps, format))
        }
    }
}

pub fn cmd_formula(r: usize, format: OutputFormat) -> CommandResult {
    let table = PowerSumTable::<BigInt>::build(r);
    CommandResult::ok(render_formula(r, &table.entries()[r], format))
}

pub fn cmd_table(r_max: usize, format: OutputFormat) -> CommandResult {
    let table = PowerSumTable::<BigInt>::build(r_max);
    CommandResult::ok(render_table(table.entries(), format))
}

/// `S(N; r)` through the closed form.
pub fn closed_form_value(table: &PowerSumTable<BigInt>, r: usize, n: &BigInt) -> BigRational {
    table.entries()[r].eval(&BigRational::from_integer(n.clone()))
}

pub fn cmd_eval(r: usize, n: &BigInt, format: OutputFormat) -> CommandResult {
    let table = PowerSumTable::<BigInt>::build(r);
    let value = closed_form_value(&table, r, n);
    let Some(value) = rat_is_integer(&value) else {
        return CommandResult {
            exit_code: EXIT_VERIFICATION_FAILED,
            stdout: String::new(),
            stderr: format!("closed form gave non-integer {value} at r={r}, N={n}\n"),
        };
    };
    let stdout = match format {
        OutputFormat::Json => {
            format!("{}\n", json!({"r": r, "N": n.to_string(), "value": value.to_string()}))
        }
        _ => format!("{value}\n"),
    };
    CommandResult::ok(stdout)
}

pub fn cmd_bernoulli(j_max: usize, format: OutputFormat) -> CommandResult {
    let seq = BernoulliSequence::<BigInt>::up_to(j_max);
    CommandResult::ok(render_bernoulli(seq.values(), format))
}

pub fn cmd_check(r_max: usize, n_max: u64, format: OutputFormat) -> CommandResult {
    cmd_check_with(&CheckInputs::build(r_max), n_max, format)
}

/// Runs the check suites against the given tables.
pub fn cmd_check_with(inputs: &CheckInputs, n_max: u64, format: OutputFormat) -> CommandResult {
    let summary = run_check(inputs, n_max);
    let json = format!("{}\n", serde_json::to_string(&summary).expect("plain data serializes"));
    if !summary.passed {
        let failed: Vec<_> = summary.suites.iter().filter(|s| !s.passed()).map(|s| s.name).collect();
        return CommandResult {
            exit_code: EXIT_VERIFICATION_FAILED,
            stdout: json,
            stderr: format!("verification failed: {}\n", failed.join(", ")),
        };
    }
    match format {
        OutputFormat::Json => CommandResult::ok(json),
        _ => CommandResult::ok(summary_text(&summary, inputs.r_max(), n_max)),
    }
}

fn summary_text(summary: &CheckSummary, r_max: usize, n_max: u64) -> String {
    let mut out = String::new();
    writeln!(out, "grid: 0 <= r <= {r_max}, 1 <= N <= {n_max}").unwrap();
    for suite in &summary.suites {
        writeln!(out, "{}: {} checks, {} failures", suite.name, suite.checks_run, suite.failures.len()).unwrap();
    }
    out.push_str("all suites passed\n");
    out
}

fn median(mut samples: Vec<Duration>) -> Duration {
    samples.sort();
    let mid = samples.len() / 2;
    if samples.len().is_multiple_of(2) {
        (samples[mid - 1] + samples[mid]) / 2
    } else {
        samples[mid]
    }
}

fn micros(d: Duration) -> f64 {
    d.as_secs_f64() * 1e6
}

pub fn cmd_bench(r: usize, n: &BigInt, reps: usize, format: OutputFormat) -> CommandResult {
    let table = PowerSumTable::<BigInt>::build(r);
    let power = u32::try_from(r).expect("checked by caller");

    let mut closed_times = Vec::with_capacity(reps);
    let mut closed = BigRational::default();
    for _ in 0..reps {
        let start = Instant::now();
        closed = closed_form_value(&table, r, n);
        closed_times.push(start.elapsed());
    }

    let mut brute_times = Vec::with_capacity(reps);
    let mut brute = BigInt::default();
    for _ in 0..reps {
        let start = Instant::now();
        brute = brute_force_sum(n, power).expect("N >= 1 checked by caller");
        brute_times.push(start.elapsed());
    }

    let closed_us = micros(median(closed_times));
    let brute_us = micros(median(brute_times));
    let matched = closed == BigRational::from_integer(brute.clone());

    let stdout = match format {
        OutputFormat::Json => {
            let mut record = json!({
                "r": r,
                "N": n.to_string(),
                "reps": reps,
                "closed_form_value": closed.to_string(),
                "brute_force_value": brute.to_string(),
                "closed_form_median_us": closed_us,
                "brute_force_median_us": brute_us,
            });
            if matched {
                record["value"] = json!(brute.to_string());
            }
            format!("{record}\n")
        }
        _ => {
            let mut out = String::new();
            writeln!(out, "r: {r}").unwrap();
            writeln!(out, "N: {n}").unwrap();
            writeln!(out, "reps: {reps}").unwrap();
            if matched {
                writeln!(out, "value: {brute}").unwrap();
            }
            writeln!(out, "closed_form_value: {closed}").unwrap();
            writeln!(out, "brute_force_value: {brute}").unwrap();
            writeln!(out, "closed_form_median_us: {closed_us:.3}").unwrap();
            writeln!(out, "brute_force_median_us: {brute_us:.3}").unwrap();
            out
        }
    };
    if matched {
        CommandResult::ok(stdout)
    } else {
        CommandResult {
            exit_code: EXIT_VERIFICATION_FAILED,
            stdout,
            stderr: format!("closed form {closed} disagrees with direct summation {brute}\n"),
        }
    }
}
