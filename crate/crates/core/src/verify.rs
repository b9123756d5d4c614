//! The full self-check run by `powersum check`: the three oracle sweeps,
//! recursive-vs-Faulhaber equivalence and the linear-constant identity.

use num_bigint::BigInt;
use serde::Serialize;

use crate::arith::format_rational;
use crate::engine::{constant_identity, faulhaber, BernoulliSequence, PowerSumTable};
use crate::oracle::{check_closed_form, finite_difference_check, integrality_check, VerificationReport};

pub const DEFAULT_R_MAX: usize = 12;
pub const DEFAULT_N_MAX: u64 = 500;

/// Witness value for suites that compare whole polynomials or constants
/// rather than values at a particular `N`.
pub const SYMBOLIC_N: &str = "N";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteWitness {
    pub r: usize,
    #[serde(rename = "N")]
    pub n: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checks_run: usize,
    pub failures: Vec<SuiteWitness>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn from_report(name: &'static str, report: VerificationReport) -> Self {
        SuiteResult {
            name,
            checks_run: report.checks_run,
            failures: report
                .failures
                .into_iter()
                .map(|w| SuiteWitness {
                    r: w.r,
                    n: w.n.to_string(),
                    expected: w.expected.to_string(),
                    actual: format_rational(&w.actual),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub passed: bool,
    pub suites: Vec<SuiteResult>,
}

/// The tables under test. Normally both come straight from the engine; tests
/// swap in corrupted copies.
#[derive(Debug, Clone)]
pub struct CheckInputs {
    pub table: PowerSumTable<BigInt>,
    pub bernoulli: BernoulliSequence<BigInt>,
}

impl CheckInputs {
    pub fn build(r_max: usize) -> Self {
        CheckInputs {
            table: PowerSumTable::build(r_max),
            bernoulli: BernoulliSequence::up_to(r_max),
        }
    }

    pub fn r_max(&self) -> usize {
        self.table.built_up_to()
    }
}

fn method_equivalence(inputs: &CheckInputs) -> SuiteResult {
    let failures = inputs
        .table
        .entries()
        .iter()
        .enumerate()
        .filter_map(|(r, recursive)| {
            let direct = faulhaber(r, &inputs.bernoulli);
            (direct.as_ref() != Some(recursive)).then(|| SuiteWitness {
                r,
                n: SYMBOLIC_N.to_string(),
                expected: direct.map_or_else(|| "missing B_r".to_string(), |p| p.to_string()),
                actual: recursive.to_string(),
            })
        })
        .collect();
    SuiteResult {
        name: "method-equivalence",
        checks_run: inputs.table.entries().len(),
        failures,
    }
}

fn constant_identity_suite(inputs: &CheckInputs) -> SuiteResult {
    let r_max = inputs.r_max();
    let failures = (1..=r_max)
        .filter_map(|r| match constant_identity(r, &inputs.table, &inputs.bernoulli) {
            Some(id) if id.equal => None,
            Some(id) => Some(SuiteWitness {
                r,
                n: SYMBOLIC_N.to_string(),
                expected: format_rational(&id.rhs),
                actual: format_rational(&id.lhs),
            }),
            None => Some(SuiteWitness {
                r,
                n: SYMBOLIC_N.to_string(),
                expected: "(-1)^r B_r".to_string(),
                actual: "missing".to_string(),
            }),
        })
        .collect();
    SuiteResult {
        name: "constant-identity",
        checks_run: r_max,
        failures,
    }
}

pub fn run_check(inputs: &CheckInputs, n_max: u64) -> CheckSummary {
    let sums = inputs.table.entries();
    let suites = vec![
        SuiteResult::from_report("closed-form", check_closed_form(sums, n_max)),
        SuiteResult::from_report("finite-difference", finite_difference_check(sums, n_max)),
        SuiteResult::from_report("integrality", integrality_check(sums, n_max)),
        method_equivalence(inputs),
        constant_identity_suite(inputs),
    ];
    CheckSummary {
        passed: suites.iter().all(SuiteResult::passed),
        suites,
    }
}
