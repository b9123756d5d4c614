//! Exact closed-form polynomials for the power sums `S(N; r) = 1^r + 2^r + ... + N^r`.
//!
//! The primary route is a recursion: scale `S(N; r-1)` by `r`, integrate from
//! 0 to `N`, then add the linear term `C*N` that makes `S(1; r) = 1`.
//! Faulhaber's formula with Bernoulli numbers and direct summation serve as
//! independent cross-checks.
//!
//! The polynomial and engine code is generic over its numeric type (see
//! [`scalar`]); the aliases and functions at the crate root fix it to
//! arbitrary-precision rationals.
//!
//! ```
//! let s2 = powersum::power_sum_recursive(2);
//! assert_eq!(s2.to_string(), "1/3*N^3 + 1/2*N^2 + 1/6*N");
//! let ten = powersum::Rational::from_integer(10.into());
//! assert_eq!(s2.eval(&ten), powersum::Rational::from_integer(385.into()));
//! ```

pub mod arith;
pub mod cli;
pub mod engine;
pub mod oracle;
pub mod poly;
pub mod render;
pub mod scalar;
pub mod verify;

pub use arith::ArithError;
pub use engine::{BernoulliConvention, ConstantIdentity, LinearConstant};
pub use oracle::{brute_force_sum, OracleError, VerificationReport, Witness};
pub use poly::Polynomial;
pub use render::OutputFormat;
pub use scalar::{ExactInteger, Scalar};

pub type Integer = num_bigint::BigInt;
pub type Rational = num_rational::BigRational;
pub type RationalPolynomial = Polynomial<Rational>;
pub type PowerSumTable = engine::PowerSumTable<Integer>;
pub type BernoulliSequence = engine::BernoulliSequence<Integer>;

pub fn power_sum_recursive(r: usize) -> RationalPolynomial {
    engine::power_sum_recursive::<Integer>(r)
}

pub fn power_sum_direct(r: usize) -> RationalPolynomial {
    engine::power_sum_direct::<Integer>(r)
}

pub fn fix_linear_constant(integrated: &RationalPolynomial) -> Rational {
    engine::fix_linear_constant(integrated)
}

pub fn bernoulli(j: usize) -> Rational {
    engine::bernoulli::<Integer>(j)
}

pub fn build_table(r_max: usize) -> PowerSumTable {
    PowerSumTable::build(r_max)
}

pub fn linear_constant_identity(r: usize) -> ConstantIdentity<Integer> {
    engine::linear_constant_identity::<Integer>(r)
}

/// Closed-form sweep over `0 <= r <= r_max`, `1 <= N <= n_max`.
pub fn check_closed_form(r_max: usize, n_max: u64) -> VerificationReport {
    oracle::check_closed_form(build_table(r_max).entries(), n_max)
}

pub fn finite_difference_check(r_max: usize, n_max: u64) -> VerificationReport {
    oracle::finite_difference_check(build_table(r_max).entries(), n_max)
}

pub fn integrality_check(r_max: usize, n_max: u64) -> VerificationReport {
    oracle::integrality_check(build_table(r_max).entries(), n_max)
}
