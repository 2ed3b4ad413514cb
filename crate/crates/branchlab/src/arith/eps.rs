//! Rational functions in one perturbation symbol ε.
//!
//! `RatFunc` is a reduced fraction of univariate polynomials over a base
//! field; `EpsField` makes the fractions a `Field` so they can serve as
//! polynomial and series coefficients. ε is the single distinguished
//! transcendental of the whole library; nested perturbations are higher
//! powers of it.

use super::upoly;
use super::{Field, Rational};
use crate::arith::tower::{TElem, TowerView};
use crate::error::{Error, Result};
use num_rational::BigRational;

/// Reduced fraction num/den with the denominator monic and nonzero.
#[derive(Clone, PartialEq, Debug)]
pub struct RatFunc<E> {
    pub num: Vec<E>,
    pub den: Vec<E>,
}

/// The field of rational functions in ε over `base`.
#[derive(Clone, PartialEq, Debug)]
pub struct EpsField<F: Field> {
    pub base: F,
}

impl<F: Field> EpsField<F> {
    pub fn new(base: F) -> Self {
        EpsField { base }
    }

    /// ε itself.
    pub fn eps(&self) -> RatFunc<F::El> {
        RatFunc { num: vec![self.base.zero(), self.base.one()], den: vec![self.base.one()] }
    }

    /// A polynomial in ε as a fraction.
    pub fn from_poly(&self, num: Vec<F::El>) -> RatFunc<F::El> {
        self.reduce(num, vec![self.base.one()])
    }

    pub fn from_base(&self, c: F::El) -> RatFunc<F::El> {
        self.from_poly(vec![c])
    }

    fn reduce(&self, num: Vec<F::El>, den: Vec<F::El>) -> RatFunc<F::El> {
        let f = &self.base;
        let num = upoly::trim(f, num);
        let den = upoly::trim(f, den);
        assert!(!den.is_empty(), "zero denominator");
        if num.is_empty() {
            return RatFunc { num, den: vec![f.one()] };
        }
        let g = upoly::gcd(f, &num, &den).expect("gcd over a field");
        let (num, den) = if upoly::deg::<F>(&g) == Some(0) {
            (num, den)
        } else {
            (
                upoly::exact_div(f, &num, &g).expect("gcd divides"),
                upoly::exact_div(f, &den, &g).expect("gcd divides"),
            )
        };
        let lead_inv = f.inv(den.last().unwrap()).expect("nonzero leading coefficient");
        RatFunc {
            num: upoly::scale(f, &num, &lead_inv),
            den: upoly::scale(f, &den, &lead_inv),
        }
    }

    /// Value at a base point; errors at a pole.
    pub fn eval_at(&self, a: &RatFunc<F::El>, x: &F::El) -> Result<F::El> {
        let d = upoly::eval(&self.base, &a.den, x);
        if self.base.is_zero(&d) {
            return Err(Error::DivisionByZero);
        }
        let n = upoly::eval(&self.base, &a.num, x);
        self.base.div(&n, &d)
    }

    /// ε-adic valuation of a nonzero fraction: ord(num) − ord(den).
    pub fn valuation(&self, a: &RatFunc<F::El>) -> Option<i64> {
        let ord = |v: &[F::El]| v.iter().position(|c| !self.base.is_zero(c));
        let n = ord(&a.num)?;
        let d = ord(&a.den).expect("denominator nonzero");
        Some(n as i64 - d as i64)
    }
}

impl<F: Field> Field for EpsField<F> {
    type El = RatFunc<F::El>;

    fn zero(&self) -> Self::El {
        RatFunc { num: vec![], den: vec![self.base.one()] }
    }
    fn one(&self) -> Self::El {
        RatFunc { num: vec![self.base.one()], den: vec![self.base.one()] }
    }
    fn is_zero(&self, a: &Self::El) -> bool {
        a.num.is_empty()
    }
    fn add(&self, a: &Self::El, b: &Self::El) -> Self::El {
        let f = &self.base;
        let num = upoly::add(
            f,
            &upoly::mul(f, &a.num, &b.den),
            &upoly::mul(f, &b.num, &a.den),
        );
        let den = upoly::mul(f, &a.den, &b.den);
        self.reduce(num, den)
    }
    fn neg(&self, a: &Self::El) -> Self::El {
        RatFunc { num: upoly::neg(&self.base, &a.num), den: a.den.clone() }
    }
    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El {
        let f = &self.base;
        self.reduce(upoly::mul(f, &a.num, &b.num), upoly::mul(f, &a.den, &b.den))
    }
    fn inv(&self, a: &Self::El) -> Result<Self::El> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        Ok(self.reduce(a.den.clone(), a.num.clone()))
    }
    fn from_rat(&self, q: &BigRational) -> Self::El {
        self.from_base(self.base.from_rat(q))
    }
    fn render(&self, a: &Self::El) -> String {
        let n = upoly::render(&self.base, &a.num, "eps");
        if upoly::deg::<F>(&a.den) == Some(0) {
            n
        } else {
            format!("({n}) / ({})", upoly::render(&self.base, &a.den, "eps"))
        }
    }
    fn to_rat(&self, a: &Self::El) -> Option<Rational> {
        if upoly::deg::<F>(&a.den) != Some(0) {
            return None;
        }
        match a.num.len() {
            0 => Some(BigRational::from_integer(0.into())),
            1 => self.base.to_rat(&a.num[0]),
            _ => None,
        }
    }
}

/// A perturbation scalar over an extension tower: the concrete fraction
/// field used for "generic member near λ" computations.
#[derive(Clone, Debug)]
pub struct PerturbationScalar {
    pub field: EpsField<TowerView>,
    pub value: RatFunc<TElem>,
}

impl PerturbationScalar {
    pub fn eps_over(view: TowerView) -> PerturbationScalar {
        let field = EpsField::new(view);
        let value = field.eps();
        PerturbationScalar { field, value }
    }

    pub fn rational(view: TowerView, q: Rational) -> PerturbationScalar {
        let field = EpsField::new(view);
        let value = field.from_rat(&q);
        PerturbationScalar { field, value }
    }

    pub fn add(&self, other: &PerturbationScalar) -> PerturbationScalar {
        PerturbationScalar {
            field: self.field.clone(),
            value: self.field.add(&self.value, &other.value),
        }
    }

    pub fn mul(&self, other: &PerturbationScalar) -> PerturbationScalar {
        PerturbationScalar {
            field: self.field.clone(),
            value: self.field.mul(&self.value, &other.value),
        }
    }

    pub fn neg(&self) -> PerturbationScalar {
        PerturbationScalar { field: self.field.clone(), value: self.field.neg(&self.value) }
    }

    pub fn inv(&self) -> Result<PerturbationScalar> {
        Ok(PerturbationScalar {
            field: self.field.clone(),
            value: self.field.inv(&self.value)?,
        })
    }

    /// Evaluate at a rational ε that is not a pole.
    pub fn eval(&self, eps: &Rational) -> Result<TElem> {
        let x = self.field.base.from_rat(eps);
        self.field.eval_at(&self.value, &x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat, QQ};

    #[test]
    fn inverse_law_in_q_eps() {
        let f = EpsField::new(QQ);
        // (1/(1-eps)) * (1-eps) = 1
        let one_minus = f.from_poly(vec![int(1), int(-1)]);
        let inv = f.inv(&one_minus).unwrap();
        assert_eq!(f.mul(&inv, &one_minus), f.one());
    }

    #[test]
    fn evaluation_commutes_with_arithmetic() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let f = EpsField::new(QQ);
        for _ in 0..30 {
            let a = f.from_poly(vec![
                crate::arith::random_rat(&mut rng, 4),
                crate::arith::random_rat(&mut rng, 4),
            ]);
            let b = {
                let num = vec![crate::arith::random_rat(&mut rng, 4), int(1)];
                let den = vec![int(1), crate::arith::random_rat(&mut rng, 4)];
                f.reduce(num, den)
            };
            let x = rat(1, 3);
            let sum = f.add(&a, &b);
            let prod = f.mul(&a, &b);
            let ea = f.eval_at(&a, &x);
            let eb = f.eval_at(&b, &x);
            if let (Ok(ea), Ok(eb)) = (ea, eb) {
                if let Ok(es) = f.eval_at(&sum, &x) {
                    assert_eq!(es, &ea + &eb);
                }
                if let Ok(ep) = f.eval_at(&prod, &x) {
                    assert_eq!(ep, &ea * &eb);
                }
            }
        }
    }

    #[test]
    fn valuation() {
        let f = EpsField::new(QQ);
        let e = f.eps();
        let e2 = f.mul(&e, &e);
        assert_eq!(f.valuation(&e2), Some(2));
        let inv = f.inv(&e).unwrap();
        assert_eq!(f.valuation(&inv), Some(-1));
        assert_eq!(f.valuation(&f.zero()), None);
    }
}
