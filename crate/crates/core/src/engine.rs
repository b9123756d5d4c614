//! Closed forms for `S(N; r) = 1^r + 2^r + ... + N^r`.
//!
//! Two independent routes produce the same polynomial:
//!
//! * the recursion: scale `S(N; r-1)` by `r` (what term-by-term differentiation
//!   of the sum gives), integrate from 0 to `N`, then add `C*N` with `C` chosen
//!   so that `S(1; r) = 1`;
//! * Faulhaber's formula, `S(N; r) = 1/(r+1) * sum_j (-1)^j C(r+1, j) B_j N^(r+1-j)`,
//!   with Bernoulli numbers in the `B_1 = -1/2` convention.
//!
//! The constant added by the recursion is always `(-1)^r B_r`;
//! [`constant_identity`] checks that link exactly.
//!
//! Everything here is generic over the integer type behind the rational
//! coefficients; the crate root fixes it to `BigInt`.

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::arith::binomial;
use crate::poly::Polynomial;
use crate::scalar::ExactInteger;

type Poly<I> = Polynomial<Ratio<I>>;

fn int<I: ExactInteger>(n: usize) -> I {
    I::from_usize(n).expect("index does not fit the integer type")
}

fn binom<I: ExactInteger>(n: usize, k: usize) -> Ratio<I> {
    let c = binomial(&int::<I>(n), &int::<I>(k)).expect("0 <= k <= n by construction");
    Ratio::from_integer(c)
}

/// The coefficient `C` of the linear term added at recursion level `r`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearConstant<I: ExactInteger> {
    pub r: usize,
    pub value: Ratio<I>,
}

/// The intermediate polynomials of one recursion level.
#[derive(Debug, Clone, PartialEq)]
pub struct RecursionStep<I: ExactInteger> {
    /// `r * S(N; r-1)`, the term-by-term derivative of `S(N; r)`.
    pub lowered: Poly<I>,
    /// Integral of `lowered` from 0 to `N`.
    pub integrated: Poly<I>,
    pub constant: LinearConstant<I>,
    /// `integrated + C*N`, i.e. `S(N; r)`.
    pub result: Poly<I>,
}

/// `C = 1 - q(1)`: the linear coefficient that makes `q + C*N` equal 1 at `N = 1`.
pub fn fix_linear_constant<I: ExactInteger>(integrated: &Poly<I>) -> Ratio<I> {
    Ratio::one() - integrated.eval(&Ratio::one())
}

/// Derives `S(N; r)` from `S(N; r-1)`. `r` must be at least 1.
pub fn recursion_step<I: ExactInteger>(r: usize, lower: &Poly<I>) -> RecursionStep<I> {
    assert!(r >= 1, "recursion starts from S(N; 0) = N");
    let lowered = lower.scale(&Ratio::from_integer(int(r)));
    let integrated = lowered.antiderivative();
    let value = fix_linear_constant(&integrated);
    let result = &integrated + &Polynomial::monomial(value.clone(), 1);
    RecursionStep {
        lowered,
        integrated,
        constant: LinearConstant { r, value },
        result,
    }
}

/// Memoized `S(N; 0..=r_max)`, built bottom-up.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSumTable<I: ExactInteger> {
    entries: Vec<Poly<I>>,
    // constants[r - 1] belongs to level r; level 0 has none
    constants: Vec<LinearConstant<I>>,
}

impl<I: ExactInteger> PowerSumTable<I> {
    pub fn build(r_max: usize) -> Self {
        let mut table = PowerSumTable {
            entries: vec![Polynomial::identity()],
            constants: Vec::new(),
        };
        table.extend_to(r_max);
        table
    }

    /// Materializes levels up to `r_max`; a no-op if they already exist.
    pub fn extend_to(&mut self, r_max: usize) {
        self.entries.reserve(r_max.saturating_sub(self.built_up_to()));
        for r in self.entries.len()..=r_max {
            let step = recursion_step(r, &self.entries[r - 1]);
            self.entries.push(step.result);
            self.constants.push(step.constant);
        }
    }

    pub fn built_up_to(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn get(&self, r: usize) -> Option<&Poly<I>> {
        self.entries.get(r)
    }

    pub fn entries(&self) -> &[Poly<I>] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Poly<I>> {
        self.entries
    }

    /// The constant fixed at level `r`; `None` for `r = 0` or unbuilt levels.
    pub fn constant(&self, r: usize) -> Option<&LinearConstant<I>> {
        r.checked_sub(1).and_then(|i| self.constants.get(i))
    }

    pub fn constants(&self) -> &[LinearConstant<I>] {
        &self.constants
    }

    /// Overwrites entry `r` in place. Recorded constants and the other levels
    /// are left untouched, so this is only useful for exercising verifiers.
    pub fn replace_entry(&mut self, r: usize, poly: Poly<I>) {
        self.entries[r] = poly;
    }
}

pub fn build_table<I: ExactInteger>(r_max: usize) -> PowerSumTable<I> {
    PowerSumTable::build(r_max)
}

pub fn power_sum_recursive<I: ExactInteger>(r: usize) -> Poly<I> {
    let mut entries = PowerSumTable::<I>::build(r).into_entries();
    entries.pop().expect("table holds at least S(N; 0)")
}

/// Which sign convention `B_1` follows. Only `B_1 = -1/2` is produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BernoulliConvention {
    MinusHalf,
}

/// Memoized Bernoulli numbers `B_0..=B_j`, from the recurrence
/// `sum_{j=0}^{m} C(m+1, j) B_j = 0` for `m >= 1`, `B_0 = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct BernoulliSequence<I: ExactInteger> {
    values: Vec<Ratio<I>>,
}

impl<I: ExactInteger> BernoulliSequence<I> {
    pub const CONVENTION: BernoulliConvention = BernoulliConvention::MinusHalf;

    pub fn up_to(j_max: usize) -> Self {
        let mut seq = BernoulliSequence {
            values: vec![Ratio::one()],
        };
        seq.extend_to(j_max);
        seq
    }

    pub fn extend_to(&mut self, j_max: usize) {
        for m in self.values.len()..=j_max {
            // C(m+1, m) B_m = -sum_{j<m} C(m+1, j) B_j, and C(m+1, m) = m + 1
            let partial = self
                .values
                .iter()
                .enumerate()
                .fold(Ratio::zero(), |acc, (j, b)| acc + binom::<I>(m + 1, j) * b.clone());
            let next = -partial / Ratio::from_integer(int::<I>(m + 1));
            self.values.push(next);
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, j: usize) -> Option<&Ratio<I>> {
        self.values.get(j)
    }

    pub fn values(&self) -> &[Ratio<I>] {
        &self.values
    }

    /// `sum_{j=0}^{m} C(m+1, j) B_j`, which is zero for a correct sequence
    /// and every `1 <= m < len`.
    pub fn recurrence_residual(&self, m: usize) -> Option<Ratio<I>> {
        let terms = self.values.get(..=m)?;
        Some(
            terms
                .iter()
                .enumerate()
                .fold(Ratio::zero(), |acc, (j, b)| acc + binom::<I>(m + 1, j) * b.clone()),
        )
    }

    /// True when every stored odd-index value from `B_3` on is exactly zero.
    pub fn odd_values_vanish(&self) -> bool {
        self.values.iter().skip(3).step_by(2).all(Zero::is_zero)
    }

    /// Overwrites `B_j` in place. Only useful for exercising verifiers.
    pub fn replace_value(&mut self, j: usize, value: Ratio<I>) {
        self.values[j] = value;
    }
}

pub fn bernoulli<I: ExactInteger>(j: usize) -> Ratio<I> {
    BernoulliSequence::<I>::up_to(j).values[j].clone()
}

/// Faulhaber's formula assembled from a given Bernoulli table.
/// Returns `None` if the table stops before `B_r`.
pub fn faulhaber<I: ExactInteger>(r: usize, bernoulli: &BernoulliSequence<I>) -> Option<Poly<I>> {
    let b = bernoulli.values.get(..=r)?;
    let mut coeffs = vec![Ratio::zero(); r + 2];
    for (j, b_j) in b.iter().enumerate() {
        let mut term = binom::<I>(r + 1, j) * b_j.clone();
        if j % 2 == 1 {
            term = -term;
        }
        coeffs[r + 1 - j] = term;
    }
    let inv = Ratio::from_integer(int::<I>(r + 1)).recip();
    Some(Polynomial::new(coeffs).scale(&inv))
}

pub fn power_sum_direct<I: ExactInteger>(r: usize) -> Poly<I> {
    faulhaber(r, &BernoulliSequence::up_to(r)).expect("sequence covers B_r")
}

/// Both sides of `C_r = (-1)^r B_r`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstantIdentity<I: ExactInteger> {
    pub r: usize,
    /// The constant fixed by the recursion.
    pub lhs: Ratio<I>,
    /// `(-1)^r B_r`.
    pub rhs: Ratio<I>,
    pub equal: bool,
}

/// Compares a table's recorded constant at level `r >= 1` with `(-1)^r B_r`.
/// `None` when either table does not reach `r`, or for `r = 0`.
pub fn constant_identity<I: ExactInteger>(
    r: usize,
    table: &PowerSumTable<I>,
    bernoulli: &BernoulliSequence<I>,
) -> Option<ConstantIdentity<I>> {
    let lhs = table.constant(r)?.value.clone();
    let b_r = bernoulli.get(r)?.clone();
    let rhs = if r % 2 == 1 { -b_r } else { b_r };
    Some(ConstantIdentity {
        r,
        equal: lhs == rhs,
        lhs,
        rhs,
    })
}

pub fn linear_constant_identity<I: ExactInteger>(r: usize) -> ConstantIdentity<I> {
    assert!(r >= 1, "the identity concerns recursion levels r >= 1");
    constant_identity(r, &PowerSumTable::build(r), &BernoulliSequence::up_to(r))
        .expect("both tables reach r")
}
