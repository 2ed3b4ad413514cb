//! Dense univariate polynomial helpers over an arbitrary [`Field`].
//!
//! A polynomial is a coefficient vector with `v[i]` the coefficient of
//! `x^i`, trailing zeros trimmed; the zero polynomial is the empty vector.

use super::Field;
use crate::error::{Error, Result};

pub type UPoly<F> = Vec<<F as Field>::El>;

pub fn trim<F: Field>(f: &F, mut v: UPoly<F>) -> UPoly<F> {
    while v.last().map(|c| f.is_zero(c)).unwrap_or(false) {
        v.pop();
    }
    v
}

pub fn deg<F: Field>(v: &[F::El]) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

pub fn is_zero<F: Field>(v: &[F::El]) -> bool {
    v.is_empty()
}

pub fn constant<F: Field>(f: &F, c: F::El) -> UPoly<F> {
    if f.is_zero(&c) {
        vec![]
    } else {
        vec![c]
    }
}

pub fn add<F: Field>(f: &F, a: &[F::El], b: &[F::El]) -> UPoly<F> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = if i < a.len() { a[i].clone() } else { f.zero() };
        let y = if i < b.len() { b[i].clone() } else { f.zero() };
        out.push(f.add(&x, &y));
    }
    trim(f, out)
}

pub fn neg<F: Field>(f: &F, a: &[F::El]) -> UPoly<F> {
    a.iter().map(|c| f.neg(c)).collect()
}

pub fn sub<F: Field>(f: &F, a: &[F::El], b: &[F::El]) -> UPoly<F> {
    add(f, a, &neg(f, b))
}

pub fn mul<F: Field>(f: &F, a: &[F::El], b: &[F::El]) -> UPoly<F> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    trim(f, out)
}

pub fn scale<F: Field>(f: &F, a: &[F::El], c: &F::El) -> UPoly<F> {
    if f.is_zero(c) {
        return vec![];
    }
    a.iter().map(|x| f.mul(x, c)).collect()
}

pub fn eval<F: Field>(f: &F, a: &[F::El], x: &F::El) -> F::El {
    let mut acc = f.zero();
    for c in a.iter().rev() {
        acc = f.add(&f.mul(&acc, x), c);
    }
    acc
}

pub fn derivative<F: Field>(f: &F, a: &[F::El]) -> UPoly<F> {
    if a.len() <= 1 {
        return vec![];
    }
    let mut out = Vec::with_capacity(a.len() - 1);
    for (i, c) in a.iter().enumerate().skip(1) {
        out.push(f.mul(c, &f.from_int(i as i64)));
    }
    trim(f, out)
}

/// Quotient and remainder; errors only on division by the zero polynomial.
pub fn divrem<F: Field>(f: &F, a: &[F::El], b: &[F::El]) -> Result<(UPoly<F>, UPoly<F>)> {
    if b.is_empty() {
        return Err(Error::DivisionByZero);
    }
    let db = b.len() - 1;
    let lead_inv = f.inv(&b[db])?;
    if db == 0 {
        return Ok((scale(f, a, &lead_inv), vec![]));
    }
    if a.len() <= db {
        return Ok((vec![], a.to_vec()));
    }
    let mut rem: Vec<F::El> = a.to_vec();
    let mut quot = vec![f.zero(); rem.len() - db];
    while rem.len() > db {
        let dr = rem.len() - 1;
        let c = f.mul(&rem[dr], &lead_inv);
        let shift = dr - db;
        quot[shift] = c.clone();
        for i in 0..db {
            let t = f.mul(&b[i], &c);
            rem[shift + i] = f.sub(&rem[shift + i], &t);
        }
        rem.truncate(dr);
        rem = trim(f, rem);
    }
    Ok((trim(f, quot), rem))
}

/// Exact quotient; errors with `NotDivisible` when a remainder survives.
pub fn exact_div<F: Field>(f: &F, a: &[F::El], b: &[F::El]) -> Result<UPoly<F>> {
    let (q, r) = divrem(f, a, b)?;
    if !r.is_empty() {
        return Err(Error::NotDivisible);
    }
    Ok(q)
}

pub fn monic<F: Field>(f: &F, a: &[F::El]) -> Result<UPoly<F>> {
    if a.is_empty() {
        return Ok(vec![]);
    }
    let inv = f.inv(a.last().unwrap())?;
    Ok(scale(f, a, &inv))
}

/// Monic gcd by the Euclidean algorithm.
pub fn gcd<F: Field>(f: &F, a: &[F::El], b: &[F::El]) -> Result<UPoly<F>> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while !y.is_empty() {
        let (_, r) = divrem(f, &x, &y)?;
        x = y;
        y = r;
    }
    monic(f, &x)
}

/// Extended gcd: returns (g, s, t) monic with s·a + t·b = g.
pub fn ext_gcd<F: Field>(f: &F, a: &[F::El], b: &[F::El]) -> Result<(UPoly<F>, UPoly<F>, UPoly<F>)> {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    let mut s0: UPoly<F> = vec![f.one()];
    let mut s1: UPoly<F> = vec![];
    let mut t0: UPoly<F> = vec![];
    let mut t1: UPoly<F> = vec![f.one()];
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1)?;
        let ns = sub(f, &s0, &mul(f, &q, &s1));
        let nt = sub(f, &t0, &mul(f, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, ns);
        t0 = std::mem::replace(&mut t1, nt);
    }
    if r0.is_empty() {
        return Ok((vec![], s0, t0));
    }
    let c = f.inv(r0.last().unwrap())?;
    Ok((scale(f, &r0, &c), scale(f, &s0, &c), scale(f, &t0, &c)))
}

/// f / gcd(f, f'); keeps each root once.
pub fn squarefree_part<F: Field>(f: &F, a: &[F::El]) -> Result<UPoly<F>> {
    if deg::<F>(a).unwrap_or(0) == 0 {
        return Ok(a.to_vec());
    }
    let g = gcd(f, a, &derivative(f, a))?;
    if deg::<F>(&g) == Some(0) {
        return Ok(a.to_vec());
    }
    exact_div(f, a, &g)
}

/// Yun's squarefree decomposition: returns (factor, multiplicity) pairs
/// with the factors monic, pairwise coprime, product reconstructing the
/// monic part of the input.
pub fn squarefree_decomposition<F: Field>(f: &F, a: &[F::El]) -> Result<Vec<(UPoly<F>, u32)>> {
    let a = monic(f, a)?;
    if deg::<F>(&a).unwrap_or(0) == 0 {
        return Ok(vec![]);
    }
    let da = derivative(f, &a);
    let g = gcd(f, &a, &da)?;
    let mut c = exact_div(f, &a, &g)?;
    let mut d = sub(f, &exact_div(f, &da, &g)?, &derivative(f, &c));
    let mut out = Vec::new();
    let mut mult = 1u32;
    while deg::<F>(&c) != Some(0) {
        let p = gcd(f, &c, &d)?;
        if deg::<F>(&p).unwrap_or(0) > 0 {
            out.push((p.clone(), mult));
        }
        c = exact_div(f, &c, &p)?;
        d = sub(f, &exact_div(f, &d, &p)?, &derivative(f, &c));
        mult += 1;
    }
    Ok(out)
}

pub fn render<F: Field>(f: &F, a: &[F::El], var: &str) -> String {
    if a.is_empty() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (i, c) in a.iter().enumerate().rev() {
        if f.is_zero(c) {
            continue;
        }
        let cs = f.render(c);
        let term = match i {
            0 => cs,
            1 if cs == "1" => var.to_string(),
            1 => format!("{cs}*{var}"),
            _ if cs == "1" => format!("{var}^{i}"),
            _ => format!("{cs}*{var}^{i}"),
        };
        parts.push(term);
    }
    parts.join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, QQ};

    fn p(cs: &[i64]) -> Vec<num_rational::BigRational> {
        trim(&QQ, cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn division_and_gcd() {
        let f = QQ;
        // (x^2 - 1) = (x - 1)(x + 1)
        let a = p(&[-1, 0, 1]);
        let b = p(&[-1, 1]);
        let (q, r) = divrem(&f, &a, &b).unwrap();
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_empty());
        let g = gcd(&f, &a, &p(&[1, 1])).unwrap();
        assert_eq!(g, p(&[1, 1]));
    }

    #[test]
    fn ext_gcd_identity() {
        let f = QQ;
        let a = p(&[-2, 0, 1]); // x^2 - 2
        let b = p(&[1, 1]); // x + 1
        let (g, s, t) = ext_gcd(&f, &a, &b).unwrap();
        assert_eq!(g, vec![int(1)]);
        let lhs = add(&f, &mul(&f, &s, &a), &mul(&f, &t, &b));
        assert_eq!(lhs, vec![int(1)]);
    }

    #[test]
    fn yun_squarefree() {
        let f = QQ;
        // (x-1)^2 (x+2)^3
        let sq = mul(&f, &p(&[-1, 1]), &p(&[-1, 1]));
        let cube = mul(&f, &mul(&f, &p(&[2, 1]), &p(&[2, 1])), &p(&[2, 1]));
        let a = mul(&f, &sq, &cube);
        let dec = squarefree_decomposition(&f, &a).unwrap();
        assert_eq!(dec.len(), 2);
        assert_eq!(dec[0], (p(&[-1, 1]), 2));
        assert_eq!(dec[1], (p(&[2, 1]), 3));
    }
}
