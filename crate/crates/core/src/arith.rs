//! Exact rational arithmetic over arbitrary-precision integers.
//!
//! `Ratio` already reduces eagerly on construction and after every
//! operation, so values here are always canonical: positive denominator,
//! coprime numerator and denominator, zero as `0/1`. This module adds the
//! fallible operations, the binomial coefficient and the textual grammar
//! (`p/q`, `p` when `q = 1`, sign on the numerator only).

use num_rational::Ratio;
use num_traits::Zero;
use thiserror::Error;

use crate::scalar::ExactInteger;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("binomial({n}, {k}) is undefined: need 0 <= k <= n")]
    BinomialDomain { n: String, k: String },
    #[error("invalid rational literal {0:?}")]
    Parse(String),
}

pub fn rat_add<I: ExactInteger>(a: &Ratio<I>, b: &Ratio<I>) -> Ratio<I> {
    a + b
}

pub fn rat_mul<I: ExactInteger>(a: &Ratio<I>, b: &Ratio<I>) -> Ratio<I> {
    a * b
}

pub fn rat_div<I: ExactInteger>(a: &Ratio<I>, b: &Ratio<I>) -> Result<Ratio<I>, ArithError> {
    if b.is_zero() {
        return Err(ArithError::DivisionByZero);
    }
    Ok(a / b)
}

/// Returns the integer value of `a` when its denominator is 1.
pub fn rat_is_integer<I: ExactInteger>(a: &Ratio<I>) -> Option<I> {
    if a.denom().is_one() {
        Some(a.numer().clone())
    } else {
        None
    }
}

/// True when `a` is in lowest terms with a positive denominator.
pub fn is_canonical<I: ExactInteger>(a: &Ratio<I>) -> bool {
    let den = a.denom();
    den.is_positive() && a.numer().gcd(den).is_one()
}

/// Exact binomial coefficient, accumulated as a running product with an
/// exact division at each step: after step `i` the accumulator is `C(n-k+i, i)`.
pub fn binomial<I: ExactInteger>(n: &I, k: &I) -> Result<I, ArithError> {
    if n.is_negative() || k.is_negative() || k > n {
        return Err(ArithError::BinomialDomain {
            n: n.to_string(),
            k: k.to_string(),
        });
    }
    let complement = n.clone() - k.clone();
    let k = if complement < *k { complement } else { k.clone() };
    let base = n.clone() - k.clone();

    let mut acc = I::one();
    let mut i = I::one();
    while i <= k {
        acc = acc * (base.clone() + i.clone()) / i.clone();
        i = i + I::one();
    }
    Ok(acc)
}

/// Renders `a` as `p/q`, or `p` when `q = 1`.
pub fn format_rational<I: ExactInteger>(a: &Ratio<I>) -> String {
    if a.denom().is_one() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

/// Parses the `p/q` / `p` grammar. The denominator must be a positive
/// decimal; the result is reduced.
pub fn parse_rational<I: ExactInteger>(s: &str) -> Result<Ratio<I>, ArithError> {
    let bad = || ArithError::Parse(s.to_string());
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer = parse_decimal::<I>(num_str, true).ok_or_else(bad)?;
    let denom = match den_str {
        Some(d) => parse_decimal::<I>(d, false).ok_or_else(bad)?,
        None => I::one(),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Ratio::new(numer, denom))
}

/// Plain decimal integer; `-` allowed only when `signed`, no `+`, no spaces.
pub fn parse_decimal<I: ExactInteger>(s: &str, signed: bool) -> Option<I> {
    let digits = match s.strip_prefix('-') {
        Some(rest) if signed => rest,
        Some(_) => return None,
        None => s,
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let value = I::from_str_radix(digits, 10).ok()?;
    Some(if s.starts_with('-') { -value } else { value })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn z(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn add_examples() {
        assert_eq!(rat_add(&q(0, 1), &q(5, 6)), q(5, 6));
        assert_eq!(rat_add(&q(1, 2), &q(1, 3)), q(5, 6));
        let zero = rat_add(&q(1, 4), &q(-1, 4));
        assert_eq!(zero, q(0, 1));
        assert_eq!(zero.denom(), &z(1));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(rat_mul(&q(1, 1), &q(7, 3)), q(7, 3));
        assert_eq!(rat_mul(&q(2, 3), &q(3, 2)), q(1, 1));
        let p = rat_mul(&q(4, 1), &q(-1, 30));
        assert_eq!(p.numer(), &z(-2));
        assert_eq!(p.denom(), &z(15));
    }

    #[test]
    fn div_examples() {
        assert_eq!(rat_div(&q(5, 6), &q(5, 6)), Ok(q(1, 1)));
        assert_eq!(rat_div(&q(1, 1), &q(3, 1)), Ok(q(1, 3)));
        assert_eq!(rat_div(&q(1, 2), &q(0, 1)), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn integrality() {
        assert_eq!(rat_is_integer(&q(385, 1)), Some(z(385)));
        assert_eq!(rat_is_integer(&q(1, 6)), None);
        assert_eq!(rat_is_integer(&q(0, 1)), Some(z(0)));
        // 770/2 reduces on construction
        assert_eq!(rat_is_integer(&q(770, 2)), Some(z(385)));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(&z(5), &z(0)), Ok(z(1)));
        assert_eq!(binomial(&z(5), &z(5)), Ok(z(1)));
        assert_eq!(binomial(&z(5), &z(2)), Ok(z(10)));
        assert_eq!(binomial(&z(0), &z(0)), Ok(z(1)));
        assert_eq!(binomial(&z(100), &z(50)).unwrap().to_string(), "100891344545564193334812497256");
    }

    #[test]
    fn binomial_domain_errors() {
        assert!(matches!(binomial(&z(3), &z(4)), Err(ArithError::BinomialDomain { .. })));
        assert!(matches!(binomial(&z(-1), &z(0)), Err(ArithError::BinomialDomain { .. })));
        assert!(matches!(binomial(&z(3), &z(-1)), Err(ArithError::BinomialDomain { .. })));
    }

    #[test]
    fn binomial_fixed_width() {
        assert_eq!(binomial(&10i64, &3i64), Ok(120));
    }

    #[test]
    fn pascal_identity() {
        for n in 2..=30i64 {
            for k in 1..n {
                let lhs = binomial(&z(n), &z(k)).unwrap();
                let rhs = binomial(&z(n - 1), &z(k - 1)).unwrap() + binomial(&z(n - 1), &z(k)).unwrap();
                assert_eq!(lhs, rhs, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn rendering() {
        assert_eq!(format_rational(&q(-1, 30)), "-1/30");
        assert_eq!(format_rational(&q(385, 1)), "385");
        assert_eq!(format_rational(&q(1, -2)), "-1/2");
        assert_eq!(format_rational(&q(0, 7)), "0");
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_rational::<BigInt>("-1/30"), Ok(q(-1, 30)));
        assert_eq!(parse_rational::<BigInt>("385"), Ok(q(385, 1)));
        assert_eq!(parse_rational::<BigInt>("2/4"), Ok(q(1, 2)));
        for bad in ["", "1/", "/2", "1/0", "1/-2", "+1", "1.5", " 1", "--1", "-"] {
            assert!(parse_rational::<BigInt>(bad).is_err(), "{bad:?} should fail");
        }
    }

    fn arb_rational() -> impl Strategy<Value = BigRational> {
        (-1_000_000i64..1_000_000, 1i64..1_000_000).prop_map(|(n, d)| q(n, d))
    }

    proptest! {
        #[test]
        fn results_are_canonical(a in arb_rational(), b in arb_rational()) {
            prop_assert!(is_canonical(&rat_add(&a, &b)));
            prop_assert!(is_canonical(&rat_mul(&a, &b)));
            if let Ok(d) = rat_div(&a, &b) {
                prop_assert!(is_canonical(&d));
            }
        }

        #[test]
        fn field_axioms(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
            prop_assert_eq!(rat_add(&a, &b), rat_add(&b, &a));
            prop_assert_eq!(rat_mul(&a, &b), rat_mul(&b, &a));
            prop_assert_eq!(rat_add(&rat_add(&a, &b), &c), rat_add(&a, &rat_add(&b, &c)));
            prop_assert_eq!(rat_mul(&rat_mul(&a, &b), &c), rat_mul(&a, &rat_mul(&b, &c)));
            prop_assert_eq!(
                rat_mul(&a, &rat_add(&b, &c)),
                rat_add(&rat_mul(&a, &b), &rat_mul(&a, &c))
            );
        }

        #[test]
        fn grammar_round_trip(a in arb_rational()) {
            let s = format_rational(&a);
            prop_assert_eq!(parse_rational::<BigInt>(&s).unwrap(), a);
        }
    }
}
