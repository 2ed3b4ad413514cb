//! Sparse exact multivariate polynomials.
//!
//! Terms are kept sorted in graded lexicographic order (leading term
//! first) with no zero coefficients, so printing is canonical. The
//! coefficient field is generic; curves use rationals, branch-local
//! computations promote into extension towers, perturbation families use
//! the ε function field.

pub mod curve;
pub mod gcd;
pub mod parse;

use crate::arith::{Field, QQ};
use crate::error::{Error, Result};
use crate::series::Series;
use num_rational::BigRational;
use std::cmp::Ordering;

#[derive(Clone, PartialEq, Debug)]
pub struct MultiPoly<F: Field> {
    pub field: F,
    pub vars: Vec<String>,
    /// (exponent vector, coefficient), grlex-descending, no zeros.
    pub terms: Vec<(Vec<u32>, F::El)>,
}

/// Graded lexicographic comparison: total degree first, then lex with
/// earlier variables weighing more.
fn cmp_grlex(a: &[u32], b: &[u32]) -> Ordering {
    let ta: u32 = a.iter().sum();
    let tb: u32 = b.iter().sum();
    ta.cmp(&tb).then_with(|| a.cmp(b))
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(field: F, vars: &[&str]) -> Self {
        MultiPoly { field, vars: vars.iter().map(|s| s.to_string()).collect(), terms: vec![] }
    }

    pub fn constant(field: F, vars: &[&str], c: F::El) -> Self {
        let mut p = Self::zero(field, vars);
        if !p.field.is_zero(&c) {
            p.terms.push((vec![0; p.vars.len()], c));
        }
        p
    }

    pub fn var(field: F, vars: &[&str], name: &str) -> Result<Self> {
        let mut p = Self::zero(field, vars);
        let idx = p.var_index(name)?;
        let mut exps = vec![0; p.vars.len()];
        exps[idx] = 1;
        p.terms.push((exps, p.field.one()));
        Ok(p)
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars.iter().position(|v| v == name).ok_or_else(|| Error::VariableMismatch {
            expected: self.vars.join(","),
            got: name.to_string(),
        })
    }

    pub fn from_terms(field: F, vars: Vec<String>, terms: Vec<(Vec<u32>, F::El)>) -> Self {
        let mut p = MultiPoly { field, vars, terms };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        self.terms.sort_by(|a, b| cmp_grlex(&b.0, &a.0));
        let mut out: Vec<(Vec<u32>, F::El)> = Vec::with_capacity(self.terms.len());
        for (e, c) in self.terms.drain(..) {
            if let Some(last) = out.last_mut() {
                if last.0 == e {
                    last.1 = self.field.add(&last.1, &c);
                    continue;
                }
            }
            out.push((e, c));
        }
        out.retain(|(_, c)| !self.field.is_zero(c));
        self.terms = out;
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.iter().all(|&e| e == 0))
    }

    pub fn constant_value(&self) -> Option<&F::El> {
        if self.terms.len() == 1 && self.terms[0].0.iter().all(|&e| e == 0) {
            Some(&self.terms[0].1)
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(e, _)| e.iter().sum()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.iter().map(|(e, _)| e[var]).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|(e, _)| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VariableMismatch {
                expected: self.vars.join(","),
                got: other.vars.join(","),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Ok(Self::from_terms(self.field.clone(), self.vars.clone(), terms))
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), self.field.neg(c))).collect();
        MultiPoly { field: self.field.clone(), vars: self.vars.clone(), terms }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                terms.push((e, self.field.mul(ca, cb)));
            }
        }
        Ok(Self::from_terms(self.field.clone(), self.vars.clone(), terms))
    }

    pub fn scale(&self, c: &F::El) -> Self {
        if self.field.is_zero(c) {
            return MultiPoly {
                field: self.field.clone(),
                vars: self.vars.clone(),
                terms: vec![],
            };
        }
        let terms = self.terms.iter().map(|(e, k)| (e.clone(), self.field.mul(k, c))).collect();
        MultiPoly { field: self.field.clone(), vars: self.vars.clone(), terms }
    }

    pub fn pow(&self, n: u32) -> Result<Self> {
        let mut acc = Self::constant(self.field.clone(), &self.var_refs(), self.field.one());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn var_refs(&self) -> Vec<&str> {
        self.vars.iter().map(|s| s.as_str()).collect()
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut terms = Vec::new();
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[var] -= 1;
            terms.push((e2, self.field.mul(c, &self.field.from_int(e[var] as i64))));
        }
        Self::from_terms(self.field.clone(), self.vars.clone(), terms)
    }

    /// View as a dense univariate polynomial in `var`; the coefficients
    /// keep the full variable list with `var`-exponent zero.
    pub fn to_univariate(&self, var: usize) -> Vec<MultiPoly<F>> {
        let d = self.degree_in(var).map(|d| d as usize + 1).unwrap_or(0);
        let mut coeffs =
            vec![MultiPoly::zero(self.field.clone(), &self.var_refs()); d.max(1)];
        for (e, c) in &self.terms {
            let k = e[var] as usize;
            let mut e2 = e.clone();
            e2[var] = 0;
            coeffs[k].terms.push((e2, c.clone()));
        }
        for c in &mut coeffs {
            c.normalize();
        }
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) && coeffs.len() > 1 {
            coeffs.pop();
        }
        if coeffs.len() == 1 && coeffs[0].is_zero() {
            coeffs.clear();
        }
        coeffs
    }

    pub fn from_univariate(field: F, vars: Vec<String>, var: usize, coeffs: Vec<MultiPoly<F>>) -> Self {
        let mut terms = Vec::new();
        for (k, c) in coeffs.into_iter().enumerate() {
            for (mut e, v) in c.terms {
                e[var] += k as u32;
                terms.push((e, v));
            }
        }
        Self::from_terms(field, vars, terms)
    }

    /// Substitute a polynomial for one variable.
    pub fn substitute(&self, var: usize, value: &MultiPoly<F>) -> Result<Self> {
        self.check_vars(value)?;
        let coeffs = self.to_univariate(var);
        let mut acc = MultiPoly::zero(self.field.clone(), &self.var_refs());
        for c in coeffs.into_iter().rev() {
            acc = acc.mul(value)?.add(&c)?;
        }
        Ok(acc)
    }

    /// Full evaluation at a point.
    pub fn eval(&self, point: &[F::El]) -> F::El {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = self.field.zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    term = self.field.mul(&term, &self.field.pow(&point[i], k));
                }
            }
            acc = self.field.add(&acc, &term);
        }
        acc
    }

    /// Shift coordinates so that `point` becomes the origin:
    /// result(x) = self(x + point).
    pub fn translate(&self, point: &[F::El]) -> Self {
        assert_eq!(point.len(), self.vars.len());
        let vars = self.var_refs();
        let mut out = self.clone();
        for (i, p) in point.iter().enumerate() {
            if self.field.is_zero(p) {
                continue;
            }
            let shifted = {
                let x = MultiPoly::var(self.field.clone(), &vars, &self.vars[i].clone())
                    .expect("own variable");
                let c = MultiPoly::constant(self.field.clone(), &vars, p.clone());
                x.add(&c).expect("same vars")
            };
            out = out.substitute(i, &shifted).expect("same vars");
        }
        out
    }

    /// Substitute a series for every variable.
    pub fn eval_series(&self, assign: &[Series<F>]) -> Series<F> {
        assert_eq!(assign.len(), self.vars.len());
        self.eval_series_inner(assign, self.vars.len())
    }

    fn eval_series_inner(&self, assign: &[Series<F>], nvars: usize) -> Series<F> {
        if self.is_zero() {
            return Series::zero(None);
        }
        if nvars == 0 {
            let c = self.terms[0].1.clone();
            return Series::exact(vec![c]);
        }
        let var = nvars - 1;
        let coeffs = self.to_univariate(var);
        let mut acc: Series<F> = Series::zero(None);
        for c in coeffs.into_iter().rev() {
            let cs = c.eval_series_inner(assign, var);
            acc = acc.mul(&self.field, &assign[var]).add(&self.field, &cs);
        }
        acc
    }

    /// Map coefficients into another field.
    pub fn map_field<G: Field>(&self, g: G, map: impl Fn(&F::El) -> G::El) -> MultiPoly<G> {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), map(c))).collect();
        MultiPoly { field: g, vars: self.vars.clone(), terms }
    }

    /// Reinterpret over a renamed variable list (arity must match).
    pub fn rename_vars(&self, vars: &[&str]) -> Self {
        assert_eq!(vars.len(), self.vars.len());
        MultiPoly {
            field: self.field.clone(),
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: self.terms.clone(),
        }
    }

    /// Drop a variable that no longer occurs.
    pub fn drop_var(&self, var: usize) -> Self {
        assert!(self.degree_in(var).unwrap_or(0) == 0);
        let vars: Vec<String> =
            self.vars.iter().enumerate().filter(|(i, _)| *i != var).map(|(_, v)| v.clone()).collect();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let e2: Vec<u32> =
                    e.iter().enumerate().filter(|(i, _)| *i != var).map(|(_, &x)| x).collect();
                (e2, c.clone())
            })
            .collect();
        MultiPoly { field: self.field.clone(), vars, terms }
    }

    /// Insert a fresh variable (exponent zero everywhere) at `pos`.
    pub fn insert_var(&self, pos: usize, name: &str) -> Self {
        let mut vars = self.vars.clone();
        vars.insert(pos, name.to_string());
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e2 = e.clone();
                e2.insert(pos, 0);
                (e2, c.clone())
            })
            .collect();
        MultiPoly { field: self.field.clone(), vars, terms }
    }

    pub fn leading_coeff(&self) -> Option<&F::El> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Scale so the leading grlex coefficient is one.
    pub fn monic(&self) -> Result<Self> {
        match self.leading_coeff() {
            None => Ok(self.clone()),
            Some(c) => {
                let инв = self.field.inv(c)?;
                Ok(self.scale(&инв))
            }
        }
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let cs = self.field.render(c);
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) if !rest.contains(['+', '-']) => (true, rest.to_string()),
                _ => (false, cs),
            };
            let mag = if mag.contains(['+', '-', ' ']) { format!("({mag})") } else { mag };
            let mut factors: Vec<String> = Vec::new();
            for (vi, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(self.vars[vi].clone()),
                    _ => factors.push(format!("{}^{}", self.vars[vi], k)),
                }
            }
            let body = if factors.is_empty() {
                mag
            } else if mag == "1" {
                factors.join("*")
            } else {
                format!("{}*{}", mag, factors.join("*"))
            };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
}

impl MultiPoly<QQ> {
    /// Homogenize with respect to a fresh last variable to the total
    /// degree of the polynomial.
    pub fn homogenize(&self, vars_out: &[&str]) -> MultiPoly<QQ> {
        assert_eq!(vars_out.len(), self.vars.len() + 1);
        let d = self.total_degree().unwrap_or(0);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let t: u32 = e.iter().sum();
                let mut e2 = e.clone();
                e2.push(d - t);
                (e2, c.clone())
            })
            .collect();
        MultiPoly::from_terms(QQ, vars_out.iter().map(|s| s.to_string()).collect(), terms)
    }

    /// Set the last variable to one and drop it.
    pub fn dehomogenize(&self, vars_out: &[&str]) -> MultiPoly<QQ> {
        assert_eq!(vars_out.len() + 1, self.vars.len());
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e[..e.len() - 1].to_vec(), c.clone()))
            .collect();
        MultiPoly::from_terms(QQ, vars_out.iter().map(|s| s.to_string()).collect(), terms)
    }

    /// Promote rational coefficients into a tower view.
    pub fn to_tower(&self, view: &crate::arith::tower::TowerView) -> MultiPoly<crate::arith::tower::TowerView> {
        self.map_field(view.clone(), |c| crate::arith::tower::TElem::Rat(c.clone()))
    }

    pub fn eval_rat(&self, point: &[BigRational]) -> BigRational {
        self.eval(point)
    }
}

/// Exact division, recursing variable by variable.
pub fn exact_div<F: Field>(num: &MultiPoly<F>, den: &MultiPoly<F>) -> Result<MultiPoly<F>> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if num.is_zero() {
        return Ok(num.clone());
    }
    num.check_vars(den)?;
    if let Some(c) = den.constant_value() {
        let inv = num.field.inv(c)?;
        return Ok(num.scale(&inv));
    }
    // main variable: last variable occurring in the denominator
    let var = (0..den.vars.len())
        .rev()
        .find(|&v| den.degree_in(v).unwrap_or(0) > 0)
        .expect("nonconstant denominator");
    let dc = den.to_univariate(var);
    let nc = num.to_univariate(var);
    let dd = dc.len() - 1;
    if nc.len() < dc.len() {
        return Err(Error::NotDivisible);
    }
    let mut rem = nc;
    let mut quot = vec![MultiPoly::zero(num.field.clone(), &num.var_refs()); rem.len() - dd];
    while rem.len() > dd {
        let dr = rem.len() - 1;
        if rem[dr].is_zero() {
            rem.pop();
            continue;
        }
        let q = exact_div(&rem[dr], &dc[dd])?;
        let shift = dr - dd;
        for (i, d) in dc.iter().enumerate() {
            let t = q.mul(d)?;
            rem[shift + i] = rem[shift + i].sub(&t)?;
        }
        quot[shift] = q;
        rem.pop();
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return Err(Error::NotDivisible);
    }
    Ok(MultiPoly::from_univariate(num.field.clone(), num.vars.clone(), var, quot))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn xy(text: &str) -> MultiPoly<QQ> {
        parse::parse_poly(text, &["x", "y"]).unwrap()
    }

    #[test]
    fn translate_examples() {
        // translate(y^2 - x^3, (0,0)) is the identity
        let f = xy("y^2 - x^3");
        assert_eq!(f.translate(&[int(0), int(0)]), f);
        // translate(y - x^2, (1,1)) = y - 2x - x^2
        let g = xy("y - x^2").translate(&[int(1), int(1)]);
        assert_eq!(g, xy("y - 2*x - x^2"));
        // translate(F, p)(0,0) = F(p)
        let h = xy("y^2 - x^3 + 7");
        let t = h.translate(&[int(2), int(3)]);
        assert_eq!(t.eval_rat(&[int(0), int(0)]), h.eval_rat(&[int(2), int(3)]));
    }

    #[test]
    fn homogenize_roundtrip() {
        let f = xy("y^2 - x^3");
        let h = f.homogenize(&["x", "y", "z"]);
        assert!(h.is_homogeneous());
        assert_eq!(h.render(), "-x^3 + y^2*z");
        assert_eq!(h.dehomogenize(&["x", "y"]), f);
    }

    #[test]
    fn exact_division() {
        let f = xy("y^2 - x^2");
        let g = xy("y - x");
        let q = exact_div(&f, &g).unwrap();
        assert_eq!(q, xy("y + x"));
        assert!(exact_div(&xy("y^2 - x^3"), &g).is_err());
    }

    #[test]
    fn series_substitution() {
        use crate::series::monomial;
        let f = xy("y^2 - x^3");
        let x = monomial(&QQ, int(1), 2);
        let y = monomial(&QQ, int(1), 3);
        let s = f.eval_series(&[x, y]);
        assert!(s.is_exactly_zero(&QQ));
        let fy = xy("y");
        let s = fy.eval_series(&[monomial(&QQ, int(1), 2), monomial(&QQ, int(1), 3)]);
        assert_eq!(s.order(&QQ), Ok(3));
    }

    #[test]
    fn grlex_render_is_canonical() {
        let f = xy("1 + y + x + x*y + y^2 + x^2");
        assert_eq!(f.render(), "x^2 + x*y + y^2 + x + y + 1");
    }
}
