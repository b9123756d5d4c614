//! Dense univariate polynomials in the formal variable `N`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::scalar::Scalar;

/// A polynomial stored as ascending coefficients: `coeffs[i]` multiplies `N^i`.
///
/// The highest stored coefficient is never zero, so the zero polynomial is the
/// empty vector and derived equality is mathematical equality.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<T: Scalar> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    /// `c * N^power`.
    pub fn monomial(c: T, power: usize) -> Self {
        let mut coeffs = vec![T::zero(); power];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The polynomial `N`.
    pub fn identity() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `N^power`, zero past the degree.
    pub fn coeff(&self, power: usize) -> T {
        self.coeffs.get(power).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Nonzero terms as `(power, coefficient)`, highest power first.
    pub fn terms_descending(&self) -> impl Iterator<Item = (usize, &T)> {
        self.coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a.clone() * T::from_index(i))
                .collect(),
        )
    }

    /// The antiderivative vanishing at zero, i.e. the definite integral from 0 to `N`.
    pub fn antiderivative(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(T::zero());
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, a)| a.clone() / T::from_index(i + 1)),
        );
        Self::new(coeffs)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Replaces one coefficient, re-establishing the no-trailing-zero invariant.
    pub fn with_coeff(&self, power: usize, c: T) -> Self {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() <= power {
            coeffs.resize(power + 1, T::zero());
        }
        coeffs[power] = c;
        Self::new(coeffs)
    }
}

fn zip_with<T: Scalar>(p: &Polynomial<T>, q: &Polynomial<T>, f: impl Fn(T, T) -> T) -> Polynomial<T> {
    let len = p.coeffs.len().max(q.coeffs.len());
    Polynomial::new((0..len).map(|i| f(p.coeff(i), q.coeff(i))).collect())
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        zip_with(self, rhs, |a, b| a + b)
    }
}

impl<T: Scalar> Add for Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: Polynomial<T>) -> Polynomial<T> {
        &self + &rhs
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        zip_with(self, rhs, |a, b| a - b)
    }
}

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|a| -a.clone()).collect())
    }
}

/// Plain-text form, e.g. `1/5*N^5 + 1/2*N^4 + 1/3*N^3 - 1/30*N`.
///
/// Descending powers, `N^1` written `N`, unit coefficients dropped except on
/// the constant term, signs carried by the joiners. The zero polynomial is `0`.
impl<T: Scalar> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (power, c)) in self.terms_descending().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = c.abs();
            match power {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !magnitude.is_one() {
                        write!(f, "{magnitude}*")?;
                    }
                    match power {
                        1 => f.write_str("N")?,
                        k => write!(f, "N^{k}")?,
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    type P = Polynomial<BigRational>;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    /// Ascending coefficients from `(num, den)` pairs.
    fn p(cs: &[(i64, i64)]) -> P {
        P::new(cs.iter().map(|&(n, d)| q(n, d)).collect())
    }

    #[test]
    fn add_examples() {
        let n2_n = p(&[(0, 1), (1, 1), (1, 1)]);
        assert_eq!(&n2_n + &P::zero(), n2_n);

        let n2 = p(&[(0, 1), (0, 1), (1, 1)]);
        let sum = &n2 + &(-&n2);
        assert!(sum.is_zero());
        assert_eq!(sum.degree(), None);

        let lhs = p(&[(0, 1), (0, 1), (1, 2), (1, 3)]);
        let rhs = p(&[(0, 1), (1, 6)]);
        assert_eq!(&lhs + &rhs, p(&[(0, 1), (1, 6), (1, 2), (1, 3)]));
    }

    #[test]
    fn scale_examples() {
        let half = p(&[(0, 1), (1, 2), (1, 2)]);
        assert_eq!(half.scale(&q(2, 1)), p(&[(0, 1), (1, 1), (1, 1)]));
        assert_eq!(half.scale(&q(1, 1)), half);
        let cube = P::monomial(q(1, 1), 3);
        assert!(cube.scale(&q(0, 1)).is_zero());
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p(&[(0, 1), (1, 1), (1, 1)]).derivative(), p(&[(1, 1), (2, 1)]));
        assert!(P::zero().derivative().is_zero());
        assert!(P::monomial(q(7, 1), 0).derivative().is_zero());
        let s2 = p(&[(0, 1), (1, 6), (1, 2), (1, 3)]);
        assert_eq!(s2.derivative(), p(&[(1, 6), (1, 1), (1, 1)]));
    }

    #[test]
    fn antiderivative_examples() {
        let n2_n = p(&[(0, 1), (1, 1), (1, 1)]);
        assert_eq!(n2_n.antiderivative(), p(&[(0, 1), (0, 1), (1, 2), (1, 3)]));
        assert!(P::zero().antiderivative().is_zero());
        let r4 = p(&[(0, 1), (0, 1), (1, 1), (2, 1), (1, 1)]);
        assert_eq!(
            r4.antiderivative(),
            p(&[(0, 1), (0, 1), (0, 1), (1, 3), (1, 2), (1, 5)])
        );
    }

    #[test]
    fn eval_examples() {
        let s2 = p(&[(0, 1), (1, 6), (1, 2), (1, 3)]);
        assert_eq!(s2.eval(&q(1, 1)), q(1, 1));
        assert_eq!(s2.eval(&q(10, 1)), q(385, 1));
        let shifted = p(&[(7, 5), (1, 1)]);
        assert_eq!(shifted.eval(&q(0, 1)), q(7, 5));
        assert_eq!(P::zero().eval(&q(3, 1)), q(0, 1));
    }

    #[test]
    fn equality_examples() {
        let s3 = p(&[(0, 1), (0, 1), (1, 4), (1, 2), (1, 4)]);
        assert_eq!(s3, s3.clone());
        assert_eq!(p(&[(0, 1), (0, 1), (1, 1), (0, 1)]), P::monomial(q(1, 1), 2));
        assert_ne!(s3, p(&[(0, 1), (0, 1), (0, 1), (1, 2), (1, 4)]));
    }

    #[test]
    fn degree_and_leading() {
        let s2 = p(&[(0, 1), (1, 6), (1, 2), (1, 3)]);
        assert_eq!(s2.degree(), Some(3));
        assert_eq!(s2.leading_coeff(), Some(&q(1, 3)));
        assert_eq!(P::monomial(q(4, 1), 0).degree(), Some(0));
        assert_eq!(P::monomial(q(0, 1), 5), P::zero());
    }

    #[test]
    fn with_coeff_restrims() {
        let s2 = p(&[(0, 1), (1, 6), (1, 2), (1, 3)]);
        assert_eq!(s2.with_coeff(3, q(0, 1)).degree(), Some(2));
        assert_eq!(s2.with_coeff(5, q(1, 1)).degree(), Some(5));
    }

    #[test]
    fn text_rendering() {
        let s4 = p(&[(0, 1), (-1, 30), (0, 1), (1, 3), (1, 2), (1, 5)]);
        assert_eq!(s4.to_string(), "1/5*N^5 + 1/2*N^4 + 1/3*N^3 - 1/30*N");
        assert_eq!(P::identity().to_string(), "N");
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(p(&[(1, 1), (-1, 1), (0, 1), (-2, 3)]).to_string(), "-2/3*N^3 - N + 1");
        assert_eq!(p(&[(-1, 1)]).to_string(), "-1");
    }

    #[test]
    fn float_scalar() {
        let p = Polynomial::<f64>::new(vec![0.0, 1.0 / 6.0, 0.5, 1.0 / 3.0]);
        assert!((p.eval(&10.0) - 385.0).abs() < 1e-9);
        assert_eq!(Polynomial::new(vec![1.0, 2.0, 0.0]).derivative(), Polynomial::new(vec![2.0f64]));
        assert_eq!(
            Polynomial::new(vec![2.0f32]).antiderivative(),
            Polynomial::new(vec![0.0f32, 2.0])
        );
    }

    fn arb_poly() -> impl Strategy<Value = P> {
        prop::collection::vec((-1000i64..1000, 1i64..1000), 0..=21)
            .prop_map(|cs| P::new(cs.into_iter().map(|(n, d)| q(n, d)).collect()))
    }

    fn arb_q() -> impl Strategy<Value = BigRational> {
        (-1000i64..1000, 1i64..1000).prop_map(|(n, d)| q(n, d))
    }

    proptest! {
        #[test]
        fn no_trailing_zero(a in arb_poly()) {
            prop_assert!(a.leading_coeff().is_none_or(|c| *c != q(0, 1)));
        }

        #[test]
        fn fundamental_theorem(a in arb_poly()) {
            prop_assert_eq!(a.antiderivative().derivative(), a.clone());
            prop_assert_eq!(a.antiderivative().eval(&q(0, 1)), q(0, 1));
        }

        #[test]
        fn linearity(a in arb_poly(), b in arb_poly(), c in arb_q()) {
            prop_assert_eq!((&a + &b).derivative(), &a.derivative() + &b.derivative());
            prop_assert_eq!((&a + &b).antiderivative(), &a.antiderivative() + &b.antiderivative());
            prop_assert_eq!((&a + &b).scale(&c), &a.scale(&c) + &b.scale(&c));
            prop_assert_eq!(a.scale(&c).derivative(), a.derivative().scale(&c));
            prop_assert_eq!(a.scale(&c).antiderivative(), a.antiderivative().scale(&c));
        }

        #[test]
        fn evaluation_homomorphism(a in arb_poly(), b in arb_poly(), x in arb_q()) {
            prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
            prop_assert_eq!(a.scale(&x).eval(&x), a.eval(&x) * x.clone());
        }
    }
}
