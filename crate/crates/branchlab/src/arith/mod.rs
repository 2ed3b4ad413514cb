//! Exact scalar arithmetic.
//!
//! Three coefficient domains, all exact:
//! - [`QQ`]: arbitrary-precision rationals (backed by `num-rational`),
//! - [`TowerView`]: simple algebraic extension towers over the rationals,
//! - [`EpsField`]: rational functions in one perturbation symbol ε.
//!
//! Generic code is written against the [`Field`] trait in the field-object
//! style: a lightweight descriptor performs the operations, elements are
//! plain data.

pub mod eps;
pub mod factor;
pub mod tower;
pub mod upoly;

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt::Debug;

/// Arbitrary-precision rational scalar.
pub type Rational = BigRational;

/// A field of coefficients. The descriptor owns whatever context the
/// elements need (an extension tower, the ε symbol); elements are inert
/// values interpreted against it.
pub trait Field: Clone + PartialEq + Debug {
    type El: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::El;
    fn one(&self) -> Self::El;
    fn is_zero(&self, a: &Self::El) -> bool;
    fn add(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn neg(&self, a: &Self::El) -> Self::El;
    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn inv(&self, a: &Self::El) -> Result<Self::El>;
    fn from_rat(&self, q: &Rational) -> Self::El;
    /// Render an element for reports and error messages.
    fn render(&self, a: &Self::El) -> String;

    fn sub(&self, a: &Self::El, b: &Self::El) -> Self::El {
        self.add(a, &self.neg(b))
    }
    fn div(&self, a: &Self::El, b: &Self::El) -> Result<Self::El> {
        Ok(self.mul(a, &self.inv(b)?))
    }
    fn from_int(&self, n: i64) -> Self::El {
        self.from_rat(&BigRational::from_integer(BigInt::from(n)))
    }
    fn is_one(&self, a: &Self::El) -> bool {
        *a == self.one()
    }
    /// Some(q) when the element is (exactly) a rational number.
    fn to_rat(&self, _a: &Self::El) -> Option<Rational> {
        None
    }
    fn pow(&self, a: &Self::El, n: u32) -> Self::El {
        let mut acc = self.one();
        let mut base = a.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            n >>= 1;
        }
        acc
    }
}

/// The rational field.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct QQ;

impl Field for QQ {
    type El = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Result<BigRational> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(a.recip())
    }
    fn from_rat(&self, q: &BigRational) -> BigRational {
        q.clone()
    }
    fn render(&self, a: &BigRational) -> String {
        render_rat(a)
    }
    fn to_rat(&self, a: &BigRational) -> Option<Rational> {
        Some(a.clone())
    }
}

/// Canonical "p/q" form with the denominator omitted when it is 1.
pub fn render_rat(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Deterministic small "generic" rational drawn from a seeded stream:
/// numerator in [-bound, bound], positive denominator up to bound.
pub fn random_rat<R: rand::Rng>(rng: &mut R, bound: i64) -> BigRational {
    let num = rng.gen_range(-bound..=bound);
    let den = rng.gen_range(1..=bound);
    rat(num, den)
}

/// Nonzero variant of [`random_rat`].
pub fn random_rat_nonzero<R: rand::Rng>(rng: &mut R, bound: i64) -> BigRational {
    loop {
        let q = random_rat(rng, bound);
        if !q.is_zero() {
            return q;
        }
    }
}

pub fn rat_abs(q: &BigRational) -> BigRational {
    q.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_basics() {
        let f = QQ;
        assert_eq!(f.add(&rat(1, 2), &rat(1, 3)), rat(5, 6));
        assert_eq!(f.inv(&rat(2, 3)).unwrap(), rat(3, 2));
        assert!(f.inv(&int(0)).is_err());
        assert_eq!(render_rat(&rat(-4, 6)), "-2/3");
        assert_eq!(render_rat(&int(7)), "7");
    }
}
