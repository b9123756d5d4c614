//! Definition-level verifiers for power-sum polynomials.
//!
//! Nothing here calls into [`engine`](crate::engine): the brute-force sum is
//! accumulated term by term, and the sweeps take the polynomials to check as
//! plain data so any table (including a deliberately corrupted one) can be
//! verified.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use thiserror::Error;

use crate::arith::rat_is_integer;
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("summation limit must be at least 1, got {0}")]
    NonPositiveLimit(BigInt),
}

/// `1^r + 2^r + ... + n^r`, by direct accumulation.
pub fn brute_force_sum(n: &BigInt, r: u32) -> Result<BigInt, OracleError> {
    if *n < BigInt::one() {
        return Err(OracleError::NonPositiveLimit(n.clone()));
    }
    let mut total = BigInt::zero();
    let mut k = BigInt::one();
    while k <= *n {
        total += Pow::pow(&k, r);
        k += 1u32;
    }
    Ok(total)
}

/// A grid point where a check did not hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub r: usize,
    pub n: BigInt,
    pub expected: BigInt,
    pub actual: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks_run: usize,
    pub failures: Vec<Witness>,
    pub passed: bool,
}

impl VerificationReport {
    /// Builds a report; witnesses are sorted by `(r, n)`.
    pub fn new(checks_run: usize, mut failures: Vec<Witness>) -> Self {
        failures.sort_by(|a, b| (a.r, &a.n).cmp(&(b.r, &b.n)));
        VerificationReport {
            checks_run,
            passed: failures.is_empty(),
            failures,
        }
    }
}

/// Runs `check` on every `(r, N)` with `r` indexing `sums` and `1 <= N <= n_max`.
fn sweep<F>(sums: &[Polynomial<BigRational>], n_max: u64, mut check: F) -> VerificationReport
where
    F: FnMut(usize, &Polynomial<BigRational>, &BigInt) -> Option<Witness>,
{
    let mut failures = Vec::new();
    let mut checks_run = 0;
    for (r, poly) in sums.iter().enumerate() {
        for n in 1..=n_max {
            checks_run += 1;
            if let Some(w) = check(r, poly, &BigInt::from(n)) {
                failures.push(w);
            }
        }
    }
    VerificationReport::new(checks_run, failures)
}

fn at(poly: &Polynomial<BigRational>, n: &BigInt) -> BigRational {
    poly.eval(&BigRational::from_integer(n.clone()))
}

fn power(r: usize) -> u32 {
    u32::try_from(r).expect("power index fits u32")
}

/// `sums[r](N) == brute_force_sum(N, r)` over the grid.
pub fn check_closed_form(sums: &[Polynomial<BigRational>], n_max: u64) -> VerificationReport {
    // Running totals turn the whole column into one pass per r.
    let mut failures = Vec::new();
    let mut checks_run = 0;
    for (r, poly) in sums.iter().enumerate() {
        let mut expected = BigInt::zero();
        for n in 1..=n_max {
            checks_run += 1;
            let n = BigInt::from(n);
            expected += Pow::pow(&n, power(r));
            let actual = at(poly, &n);
            if actual != BigRational::from_integer(expected.clone()) {
                failures.push(Witness {
                    r,
                    n,
                    expected: expected.clone(),
                    actual,
                });
            }
        }
    }
    debug_assert!(failures.iter().all(|w| brute_force_sum(&w.n, power(w.r)) == Ok(w.expected.clone())));
    VerificationReport::new(checks_run, failures)
}

/// `sums[r](N) - sums[r](N-1) == N^r` over the grid.
pub fn finite_difference_check(sums: &[Polynomial<BigRational>], n_max: u64) -> VerificationReport {
    sweep(sums, n_max, |r, poly, n| {
        let expected = Pow::pow(n, power(r));
        let actual = at(poly, n) - at(poly, &(n - 1u32));
        (actual != BigRational::from_integer(expected.clone())).then(|| Witness {
            r,
            n: n.clone(),
            expected,
            actual,
        })
    })
}

/// `sums[r](N)` is an integer over the grid. Witnesses carry the brute-force
/// value as `expected`.
pub fn integrality_check(sums: &[Polynomial<BigRational>], n_max: u64) -> VerificationReport {
    sweep(sums, n_max, |r, poly, n| {
        let actual = at(poly, n);
        match rat_is_integer(&actual) {
            Some(_) => None,
            None => Some(Witness {
                r,
                n: n.clone(),
                expected: brute_force_sum(n, power(r)).expect("grid starts at N = 1"),
                actual,
            }),
        }
    })
}
