//! Truncated power series in one parameter over an arbitrary field.
//!
//! A series carries its own precision: coefficients are trusted for
//! exponents `<= prec`, or for all exponents when `prec` is `None`
//! (polynomial-exact series, e.g. monomial branches given literally).

use crate::arith::Field;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Debug)]
pub struct Series<F: Field> {
    /// `coeffs[i]` is the coefficient of `t^i`; trailing zeros allowed.
    pub coeffs: Vec<F::El>,
    /// Largest trusted exponent; `None` means exact polynomial.
    pub prec: Option<usize>,
}

impl<F: Field> Series<F> {
    pub fn zero(prec: Option<usize>) -> Self {
        Series { coeffs: vec![], prec }
    }

    pub fn exact(coeffs: Vec<F::El>) -> Self {
        Series { coeffs, prec: None }
    }

    pub fn truncated(coeffs: Vec<F::El>, prec: usize) -> Self {
        let mut s = Series { coeffs, prec: Some(prec) };
        s.coeffs.truncate(prec + 1);
        s
    }

    pub fn coeff(&self, f: &F, i: usize) -> F::El {
        self.coeffs.get(i).cloned().unwrap_or_else(|| f.zero())
    }

    /// t-adic order. `Ok(n)` for a visible leading term; `Err(prec)` when
    /// every trusted coefficient vanishes (exactly zero if `prec` is None).
    pub fn order(&self, f: &F) -> std::result::Result<usize, Option<usize>> {
        for (i, c) in self.coeffs.iter().enumerate() {
            if self.prec.map(|p| i > p).unwrap_or(false) {
                break;
            }
            if !f.is_zero(c) {
                return Ok(i);
            }
        }
        Err(self.prec)
    }

    pub fn is_exactly_zero(&self, f: &F) -> bool {
        self.prec.is_none() && self.coeffs.iter().all(|c| f.is_zero(c))
    }

    fn join_prec(&self, other: &Series<F>) -> Option<usize> {
        // adding: trusted range is the min of the trusted ranges
        match (self.prec, other.prec) {
            (None, None) => None,
            (Some(p), None) | (None, Some(p)) => Some(p),
            (Some(a), Some(b)) => Some(a.min(b)),
        }
    }

    pub fn add(&self, f: &F, other: &Series<F>) -> Series<F> {
        let prec = self.join_prec(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(f.add(&self.coeff(f, i), &other.coeff(f, i)));
        }
        clamp(Series { coeffs, prec })
    }

    pub fn neg(&self, f: &F) -> Series<F> {
        Series { coeffs: self.coeffs.iter().map(|c| f.neg(c)).collect(), prec: self.prec }
    }

    pub fn sub(&self, f: &F, other: &Series<F>) -> Series<F> {
        self.add(f, &other.neg(f))
    }

    pub fn scale(&self, f: &F, c: &F::El) -> Series<F> {
        Series { coeffs: self.coeffs.iter().map(|x| f.mul(x, c)).collect(), prec: self.prec }
    }

    /// Multiply; the product's trusted range accounts for the orders of
    /// both factors (an error term `t^(p+1)`·other shifts by the order of
    /// other).
    pub fn mul(&self, f: &F, other: &Series<F>) -> Series<F> {
        let ord_a = self.order(f).unwrap_or(usize::MAX);
        let ord_b = other.order(f).unwrap_or(usize::MAX);
        let prec = match (self.prec, other.prec) {
            (None, None) => None,
            (Some(p), None) => Some(p.saturating_add(ord_b)),
            (None, Some(p)) => Some(p.saturating_add(ord_a)),
            (Some(a), Some(b)) => {
                Some((a.saturating_add(ord_b)).min(b.saturating_add(ord_a)))
            }
        };
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Series { coeffs: vec![], prec };
        }
        let cap = prec.map(|p| p + 1);
        let full_len = self.coeffs.len() + other.coeffs.len() - 1;
        let len = cap.map(|c| c.min(full_len)).unwrap_or(full_len);
        let mut coeffs = vec![f.zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len || f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                coeffs[i + j] = f.add(&coeffs[i + j], &f.mul(a, b));
            }
        }
        clamp(Series { coeffs, prec })
    }

    /// t^k · self.
    pub fn shift(&self, f: &F, k: usize) -> Series<F> {
        let mut out = Vec::with_capacity(self.coeffs.len() + k);
        for _ in 0..k {
            out.push(f.zero());
        }
        out.extend(self.coeffs.iter().cloned());
        Series { coeffs: out, prec: self.prec.map(|p| p + k) }
    }

    /// Divide by t^k; requires the low coefficients to vanish.
    pub fn unshift(&self, f: &F, k: usize) -> Result<Series<F>> {
        for i in 0..k.min(self.coeffs.len()) {
            if !f.is_zero(&self.coeffs[i]) {
                return Err(Error::NotDivisible);
            }
        }
        let coeffs = if self.coeffs.len() > k { self.coeffs[k..].to_vec() } else { vec![] };
        Ok(Series { coeffs, prec: self.prec.map(|p| p.saturating_sub(k)) })
    }

    /// Substitute t -> inner(t) with ord(inner) >= 1; Horner over series.
    pub fn compose(&self, f: &F, inner: &Series<F>) -> Series<F> {
        let mut acc = Series::zero(self.prec.or(inner.prec));
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(f, inner);
            acc = acc.add(f, &Series { coeffs: vec![c.clone()], prec: acc.prec });
        }
        // composing into a truncated inner also caps precision
        let prec = match (self.prec, inner.prec) {
            (None, None) => None,
            (Some(a), None) => Some(a),
            (None, Some(b)) => Some(b),
            (Some(a), Some(b)) => Some(a.min(b)),
        };
        clamp(Series { coeffs: acc.coeffs, prec })
    }

    pub fn truncate_to(&self, prec: usize) -> Series<F> {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(prec + 1);
        Series {
            coeffs,
            prec: Some(self.prec.map(|p| p.min(prec)).unwrap_or(prec)),
        }
    }

    pub fn render(&self, f: &F, var: &str, max_terms: usize) -> String {
        let mut parts = Vec::new();
        let mut shown = 0usize;
        let mut truncated_display = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            if shown == max_terms {
                truncated_display = true;
                break;
            }
            let cs = f.render(c);
            let cs = if cs.contains(['+', ' ']) { format!("({cs})") } else { cs };
            parts.push(match i {
                0 => cs,
                1 if cs == "1" => var.to_string(),
                1 => format!("{cs}*{var}"),
                _ if cs == "1" => format!("{var}^{i}"),
                _ => format!("{cs}*{var}^{i}"),
            });
            shown += 1;
        }
        let mut s = if parts.is_empty() { "0".to_string() } else { parts.join(" + ") };
        if truncated_display {
            let next = self.coeffs.iter().enumerate().filter(|(_, c)| !f.is_zero(c)).nth(max_terms);
            if let Some((i, _)) = next {
                s.push_str(&format!(" + O({var}^{i})"));
            }
        } else if let Some(p) = self.prec {
            s.push_str(&format!(" + O({var}^{})", p + 1));
        }
        s
    }
}

fn clamp<F: Field>(mut s: Series<F>) -> Series<F> {
    if let Some(p) = s.prec {
        s.coeffs.truncate(p + 1);
    }
    s
}

/// Evaluate a dense univariate polynomial at a series (ord >= 0).
pub fn poly_at_series<F: Field>(f: &F, poly: &[F::El], s: &Series<F>) -> Series<F> {
    let as_series = Series { coeffs: poly.to_vec(), prec: None };
    as_series.compose(f, s)
}

/// The series t (exact).
pub fn series_t<F: Field>(f: &F) -> Series<F> {
    Series::exact(vec![f.zero(), f.one()])
}

/// Monomial c·t^k (exact).
pub fn monomial<F: Field>(f: &F, c: F::El, k: usize) -> Series<F> {
    let mut coeffs = vec![f.zero(); k + 1];
    coeffs[k] = c;
    Series::exact(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, QQ};

    #[test]
    fn mul_precision() {
        let f = QQ;
        // a = t + t^2 + O(t^3), b = t^3 exact
        let a = Series::truncated(vec![int(0), int(1), int(1)], 2);
        let b = monomial(&f, int(1), 3);
        let p = a.mul(&f, &b);
        // error t^3 * t^3 => trusted through t^5
        assert_eq!(p.prec, Some(5));
        assert_eq!(p.coeff(&f, 4), int(1));
        assert_eq!(p.coeff(&f, 5), int(1));
    }

    #[test]
    fn compose_and_order() {
        let f = QQ;
        // (t + t^2) o (2t) = 2t + 4t^2
        let outer = Series::exact(vec![int(0), int(1), int(1)]);
        let inner = Series::exact(vec![int(0), int(2)]);
        let c = outer.compose(&f, &inner);
        assert_eq!(c.coeff(&f, 1), int(2));
        assert_eq!(c.coeff(&f, 2), int(4));
        assert_eq!(c.order(&f), Ok(1));
        let z: Series<QQ> = Series::zero(Some(5));
        assert_eq!(z.order(&f), Err(Some(5)));
    }

    #[test]
    fn poly_substitution() {
        let f = QQ;
        // y^2 - x^3 at x = t^2, y = t^3 -> 0 (checked via two polys)
        let x = monomial(&f, int(1), 2);
        let y = monomial(&f, int(1), 3);
        let y2 = y.mul(&f, &y);
        let x3 = x.mul(&f, &x).mul(&f, &x);
        let diff = y2.sub(&f, &x3);
        assert!(diff.is_exactly_zero(&f));
    }
}
