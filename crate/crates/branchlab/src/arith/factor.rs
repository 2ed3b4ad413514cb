//! Univariate factorization over the rationals.
//!
//! Zassenhaus: factor modulo a good small prime (Berlekamp), Hensel-lift
//! to a Landau-Mignotte bound, recombine subsets. Inputs are small here
//! (degrees bounded by the Bezout totals of the corpus), so the classic
//! algorithm with deterministic splitting is plenty.

use super::upoly;
use super::{Rational, QQ};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Monic irreducible factors with multiplicities, sorted by (degree,
/// coefficient string) so output order is deterministic.
pub fn factor_rational(poly: &[BigRational]) -> Vec<(Vec<BigRational>, u32)> {
    let f = QQ;
    let poly = upoly::trim(&f, poly.to_vec());
    if upoly::deg::<QQ>(&poly).unwrap_or(0) == 0 {
        return vec![];
    }
    let mut out: Vec<(Vec<BigRational>, u32)> = Vec::new();
    for (sf, mult) in upoly::squarefree_decomposition(&f, &poly).expect("rational arithmetic") {
        let zpoly = clear_denominators(&sf);
        for zf in factor_primitive_squarefree(&zpoly) {
            let monic = upoly::monic(&f, &to_rational(&zf)).expect("nonzero factor");
            out.push((monic, mult));
        }
    }
    out.sort_by(|a, b| {
        (a.0.len(), render_key(&a.0), a.1).cmp(&(b.0.len(), render_key(&b.0), b.1))
    });
    out
}

/// True when the polynomial is irreducible over the rationals.
pub fn is_irreducible(poly: &[BigRational]) -> bool {
    let d = match upoly::deg::<QQ>(poly) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    let fs = factor_rational(poly);
    fs.len() == 1 && fs[0].1 == 1 && fs[0].0.len() - 1 == d
}

/// Rational roots (the degree-one factors), each with its multiplicity.
pub fn rational_roots(poly: &[BigRational]) -> Vec<(BigRational, u32)> {
    factor_rational(poly)
        .into_iter()
        .filter(|(g, _)| g.len() == 2)
        .map(|(g, m)| (-g[0].clone(), m))
        .collect()
}

fn render_key(p: &[BigRational]) -> String {
    p.iter().map(super::render_rat).collect::<Vec<_>>().join(",")
}

fn to_rational(z: &[BigInt]) -> Vec<BigRational> {
    z.iter().map(|c| BigRational::from_integer(c.clone())).collect()
}

/// Scale a rational polynomial to a primitive integer polynomial with
/// positive leading coefficient.
fn clear_denominators(p: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in p {
        lcm = lcm.lcm(c.denom());
    }
    let mut out: Vec<BigInt> = p.iter().map(|c| (c * &lcm).to_integer()).collect();
    let mut content = BigInt::zero();
    for c in &out {
        content = content.gcd(c);
    }
    if !content.is_zero() && !content.is_one() {
        for c in &mut out {
            *c = &*c / &content;
        }
    }
    if out.last().map(|c| c.is_negative()).unwrap_or(false) {
        for c in &mut out {
            *c = -&*c;
        }
    }
    out
}

fn zeval_trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
    p
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division in Z[x]; None when not divisible.
fn zdiv_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    if b.is_empty() {
        return None;
    }
    let mut rem = a.to_vec();
    rem = zeval_trim(rem);
    let db = b.len() - 1;
    if rem.is_empty() {
        return Some(vec![]);
    }
    if rem.len() <= db {
        return None;
    }
    let mut quot = vec![BigInt::zero(); rem.len() - db];
    while rem.len() > db {
        let dr = rem.len() - 1;
        let (q, r) = rem[dr].div_rem(&b[db]);
        if !r.is_zero() {
            return None;
        }
        let shift = dr - db;
        quot[shift] = q.clone();
        for i in 0..=db {
            let t = &b[i] * &q;
            rem[shift + i] -= t;
        }
        rem = zeval_trim(rem);
        if rem.len() <= db {
            break;
        }
    }
    if rem.is_empty() {
        Some(quot)
    } else {
        None
    }
}

const PRIME_SCAN: u64 = 2000;

fn small_primes() -> impl Iterator<Item = u64> {
    (3..PRIME_SCAN).filter(|&n| {
        if n % 2 == 0 {
            return false;
        }
        let mut d = 3;
        while d * d <= n {
            if n % d == 0 {
                return false;
            }
            d += 2;
        }
        true
    })
}

/// Factor a primitive squarefree integer polynomial into primitive
/// irreducible integer factors (positive leading coefficients).
fn factor_primitive_squarefree(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let f = zeval_trim(f.to_vec());
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f];
    }
    // Monicize: F(x) = L^(n-1) f(x/L) is monic with the same splitting.
    let lead = f[n].clone();
    let mut monic = Vec::with_capacity(n + 1);
    for (i, c) in f.iter().enumerate() {
        monic.push(c * lead.pow((n - 1 - i.min(n - 1)) as u32));
    }
    monic[n] = BigInt::one();

    let (p, modular) = loop_primes_and_factor(&monic);
    if modular.len() == 1 {
        return vec![f];
    }

    // Landau-Mignotte style bound on factor coefficients of the monic poly.
    let norm2_sq: BigInt = monic.iter().map(|c| c * c).sum();
    let norm2 = sqrt_ceil(&norm2_sq) + 1;
    let bound: BigInt = (BigInt::one() << (n + 1)) * norm2;
    let mut modulus = BigInt::from(p);
    let mut k = 1u32;
    while modulus <= &bound * 2 {
        modulus = &modulus * BigInt::from(p);
        k += 1;
    }
    let lifted = hensel_tree(&monic, &modular, p, k);

    let factors_of_monic = recombine(&monic, lifted, &modulus);
    factors_of_monic
        .into_iter()
        .map(|g| {
            // Undo the monicizing substitution: g(x) -> primitive(g(L x)).
            let mut back = Vec::with_capacity(g.len());
            for (i, c) in g.iter().enumerate() {
                back.push(c * lead.pow(i as u32));
            }
            primitive_positive(back)
        })
        .collect()
}

fn primitive_positive(p: Vec<BigInt>) -> Vec<BigInt> {
    let mut p = zeval_trim(p);
    let mut content = BigInt::zero();
    for c in &p {
        content = content.gcd(c);
    }
    if !content.is_zero() && !content.is_one() {
        for c in &mut p {
            *c = &*c / &content;
        }
    }
    if p.last().map(|c| c.is_negative()).unwrap_or(false) {
        for c in &mut p {
            *c = -&*c;
        }
    }
    p
}

fn sqrt_ceil(n: &BigInt) -> BigInt {
    if n.is_zero() {
        return BigInt::zero();
    }
    let mut x = BigInt::one() << ((n.bits() as usize + 1) / 2 + 1);
    loop {
        let next = (&x + n / &x) >> 1;
        if next >= x {
            break;
        }
        x = next;
    }
    while &x * &x < *n {
        x += 1;
    }
    x
}

/// First prime keeping the monic polynomial squarefree, plus its monic
/// Berlekamp factorization modulo that prime.
fn loop_primes_and_factor(monic: &[BigInt]) -> (u64, Vec<Vec<u64>>) {
    for p in small_primes() {
        let fp = reduce_mod(monic, p);
        if fp.len() != monic.len() {
            continue; // cannot happen for monic input, kept for safety
        }
        let dfp = modp::deriv(&fp, p);
        let g = modp::gcd(&fp, &dfp, p);
        if g.len() != 1 {
            continue;
        }
        let factors = modp::berlekamp(&fp, p);
        return (p, factors);
    }
    panic!("no squarefree prime found below {PRIME_SCAN}; discriminant unreasonably smooth");
}

fn reduce_mod(f: &[BigInt], p: u64) -> Vec<u64> {
    let bp = BigInt::from(p);
    let mut out: Vec<u64> = f
        .iter()
        .map(|c| {
            let r = c.mod_floor(&bp);
            r.to_u64().unwrap()
        })
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

// --- arithmetic mod a prime p (u64 coefficients) ---------------------------

mod modp {
    fn inv(a: u64, p: u64) -> u64 {
        // Fermat
        pow(a, p - 2, p)
    }
    fn pow(mut b: u64, mut e: u64, p: u64) -> u64 {
        let mut acc = 1u64;
        b %= p;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulm(acc, b, p);
            }
            b = mulm(b, b, p);
            e >>= 1;
        }
        acc
    }
    fn mulm(a: u64, b: u64, p: u64) -> u64 {
        ((a as u128 * b as u128) % p as u128) as u64
    }
    fn trim(mut v: Vec<u64>) -> Vec<u64> {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }
    pub fn deriv(f: &[u64], p: u64) -> Vec<u64> {
        trim(
            f.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mulm(c, (i as u64) % p, p))
                .collect(),
        )
    }
    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + mulm(x, y, p)) % p;
            }
        }
        trim(out)
    }
    pub fn divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
        let b = trim(b.to_vec());
        assert!(!b.is_empty());
        let db = b.len() - 1;
        let li = inv(b[db], p);
        let mut rem = trim(a.to_vec());
        if rem.len() <= db {
            return (vec![], rem);
        }
        let mut quot = vec![0u64; rem.len() - db];
        while rem.len() > db {
            let dr = rem.len() - 1;
            let c = mulm(rem[dr], li, p);
            let shift = dr - db;
            quot[shift] = c;
            for i in 0..=db {
                let t = mulm(b[i], c, p);
                rem[shift + i] = (rem[shift + i] + p - t) % p;
            }
            rem = trim(rem);
        }
        (trim(quot), rem)
    }
    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut x = trim(a.to_vec());
        let mut y = trim(b.to_vec());
        while !y.is_empty() {
            let (_, r) = divrem(&x, &y, p);
            x = y;
            y = r;
        }
        if let Some(&l) = x.last() {
            let li = inv(l, p);
            for c in &mut x {
                *c = mulm(*c, li, p);
            }
        }
        x
    }
    fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        let mut out = vec![0u64; n];
        for i in 0..n {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            out[i] = (x + p - y) % p;
        }
        trim(out)
    }
    pub fn ext_gcd(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>, Vec<u64>) {
        let mut r0 = trim(a.to_vec());
        let mut r1 = trim(b.to_vec());
        let mut s0 = vec![1u64];
        let mut s1: Vec<u64> = vec![];
        let mut t0: Vec<u64> = vec![];
        let mut t1 = vec![1u64];
        while !r1.is_empty() {
            let (q, r) = divrem(&r0, &r1, p);
            let ns = sub(&s0, &mul(&q, &s1, p), p);
            let nt = sub(&t0, &mul(&q, &t1, p), p);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, ns);
            t0 = std::mem::replace(&mut t1, nt);
        }
        let l = *r0.last().expect("gcd of nonzero polys");
        let li = inv(l, p);
        let scale = |v: Vec<u64>| -> Vec<u64> { v.into_iter().map(|c| mulm(c, li, p)).collect() };
        (scale(r0), scale(s0), scale(t0))
    }
    fn poly_powmod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
        let mut acc = vec![1u64];
        let mut b = divrem(base, f, p).1;
        while e > 0 {
            if e & 1 == 1 {
                acc = divrem(&mul(&acc, &b, p), f, p).1;
            }
            b = divrem(&mul(&b, &b, p), f, p).1;
            e >>= 1;
        }
        acc
    }

    /// Berlekamp factorization of a monic squarefree polynomial mod p.
    pub fn berlekamp(f: &[u64], p: u64) -> Vec<Vec<u64>> {
        let n = f.len() - 1;
        if n <= 1 {
            return vec![f.to_vec()];
        }
        // rows of Q: x^{ip} mod f
        let xp = poly_powmod(&[0, 1], p, f, p);
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(n);
        let mut cur = vec![1u64];
        for _ in 0..n {
            let mut row = vec![0u64; n];
            for (j, &c) in cur.iter().enumerate() {
                row[j] = c;
            }
            rows.push(row);
            cur = divrem(&mul(&cur, &xp, p), f, p).1;
        }
        // nullspace of (Q - I)^T, i.e. v with v Q = v
        let mut m = vec![vec![0u64; n]; n];
        for i in 0..n {
            for j in 0..n {
                m[j][i] = rows[i][j]; // transpose
            }
            m[i][i] = (m[i][i] + p - 1) % p;
        }
        let basis = nullspace(m, p);
        let r = basis.len();
        let mut factors = vec![f.to_vec()];
        if r == 1 {
            return factors;
        }
        'outer: for v in basis {
            let v = trim(v);
            if v.len() <= 1 {
                continue; // constant vector
            }
            for c in 0..p {
                let mut next: Vec<Vec<u64>> = Vec::new();
                let mut shifted = v.clone();
                shifted[0] = (shifted[0] + p - c % p) % p;
                let shifted = trim(shifted);
                for u in &factors {
                    if u.len() - 1 <= 1 {
                        next.push(u.clone());
                        continue;
                    }
                    let g = gcd(u, &shifted, p);
                    if g.len() > 1 && g.len() < u.len() {
                        let (q, _) = divrem(u, &g, p);
                        next.push(g);
                        next.push(q);
                    } else {
                        next.push(u.clone());
                    }
                }
                factors = next;
                if factors.len() == r {
                    break 'outer;
                }
            }
        }
        factors.sort();
        factors
    }

    fn nullspace(mut m: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
        let n = m.len();
        let mut pivot_col_of_row = vec![usize::MAX; n];
        let mut row = 0;
        for col in 0..n {
            let mut sel = None;
            for r in row..n {
                if m[r][col] != 0 {
                    sel = Some(r);
                    break;
                }
            }
            let Some(sel) = sel else { continue };
            m.swap(row, sel);
            let piv_inv = inv(m[row][col], p);
            for c in 0..n {
                m[row][c] = mulm(m[row][c], piv_inv, p);
            }
            for r in 0..n {
                if r != row && m[r][col] != 0 {
                    let factor = m[r][col];
                    for c in 0..n {
                        let t = mulm(factor, m[row][c], p);
                        m[r][c] = (m[r][c] + p - t) % p;
                    }
                }
            }
            pivot_col_of_row[row] = col;
            row += 1;
            if row == n {
                break;
            }
        }
        let pivot_cols: Vec<usize> = pivot_col_of_row[..row].to_vec();
        let mut basis = Vec::new();
        for free in 0..n {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![0u64; n];
            v[free] = 1;
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = (p - m[r][free]) % p;
            }
            basis.push(v);
        }
        basis
    }
}

// --- Hensel lifting over Z/p^k ---------------------------------------------

fn lift_to_bigint(v: &[u64]) -> Vec<BigInt> {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

fn modm_trim(mut v: Vec<BigInt>, m: &BigInt) -> Vec<BigInt> {
    for c in &mut v {
        *c = c.mod_floor(m);
    }
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
    v
}

fn sub_full(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); n];
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i).cloned().unwrap_or_default();
        out[i] = x - y;
    }
    out
}

/// Lift f = g·h (mod p), everything monic and g, h coprime mod p, to
/// modulus p^k by linear Hensel steps. The corrections are remainders
/// mod g and h, so degrees and monicity are preserved exactly.
fn hensel_pair(f: &[BigInt], g0: &[u64], h0: &[u64], p: u64, k: u32) -> (Vec<BigInt>, Vec<BigInt>) {
    let (one, s0, t0) = modp::ext_gcd(g0, h0, p);
    assert_eq!(one, vec![1u64], "modular factors must be coprime");
    let mut g = lift_to_bigint(g0);
    let mut h = lift_to_bigint(h0);
    let mut m = BigInt::from(p);
    for _ in 1..k {
        // e = (f - g h)/m, needed only mod p
        let diff = zeval_trim(sub_full(f, &zmul(&g, &h)));
        let e: Vec<BigInt> = diff
            .iter()
            .map(|c| {
                let (q, r) = c.div_rem(&m);
                debug_assert!(r.is_zero(), "lift invariant broken");
                q
            })
            .collect();
        let e_p = reduce_mod(&e, p);
        // u h + v g = e (mod p) with deg u < deg g, deg v < deg h
        let u = modp::divrem(&modp::mul(&t0, &e_p, p), g0, p).1;
        let v = modp::divrem(&modp::mul(&s0, &e_p, p), h0, p).1;
        for (i, c) in u.iter().enumerate() {
            g[i] += &m * BigInt::from(*c);
        }
        for (i, c) in v.iter().enumerate() {
            h[i] += &m * BigInt::from(*c);
        }
        m = &m * BigInt::from(p);
    }
    (g, h)
}

/// Multifactor Hensel lifting by binary splitting of the factor list.
fn hensel_tree(f: &[BigInt], factors: &[Vec<u64>], p: u64, k: u32) -> Vec<Vec<BigInt>> {
    if factors.len() == 1 {
        let target = BigInt::from(p).pow(k);
        return vec![modm_trim(f.to_vec(), &target)];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let mut lp = vec![1u64];
    for g in left {
        lp = modp::mul(&lp, g, p);
    }
    let mut rp = vec![1u64];
    for g in right {
        rp = modp::mul(&rp, g, p);
    }
    let (gl, gr) = hensel_pair(f, &lp, &rp, p, k);
    let mut out = hensel_tree(&gl, left, p, k);
    out.extend(hensel_tree(&gr, right, p, k));
    out
}

/// Symmetric representative in (-m/2, m/2].
fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// Zassenhaus recombination of lifted modular factors of a monic integer
/// polynomial.
fn recombine(f: &[BigInt], lifted: Vec<Vec<BigInt>>, modulus: &BigInt) -> Vec<Vec<BigInt>> {
    let mut rest = f.to_vec();
    let mut pool: Vec<Vec<BigInt>> = lifted;
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    let mut size = 1usize;
    while 2 * size <= pool.len() {
        let mut advanced = false;
        let indices: Vec<usize> = (0..pool.len()).collect();
        for combo in combinations(&indices, size) {
            let mut prod = vec![BigInt::one()];
            for &i in &combo {
                prod = modm_trim(zmul(&prod, &pool[i]), modulus);
            }
            let candidate: Vec<BigInt> =
                zeval_trim(prod.iter().map(|c| symmetric(c, modulus)).collect());
            if candidate.is_empty() {
                continue;
            }
            if let Some(quot) = zdiv_exact(&rest, &candidate) {
                out.push(candidate);
                rest = zeval_trim(quot);
                let keep: Vec<Vec<BigInt>> = pool
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !combo.contains(i))
                    .map(|(_, v)| v.clone())
                    .collect();
                pool = keep;
                advanced = true;
                break;
            }
        }
        if !advanced {
            size += 1;
        }
    }
    if rest.len() > 1 {
        out.push(rest);
    }
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let n = items.len();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Convenience: factor and render, for diagnostics and reports.
pub fn factor_summary(poly: &[Rational]) -> String {
    factor_rational(poly)
        .iter()
        .map(|(f, m)| {
            let s = upoly::render(&QQ, f, "x");
            if *m == 1 {
                format!("({s})")
            } else {
                format!("({s})^{m}")
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn p(cs: &[i64]) -> Vec<BigRational> {
        cs.iter().map(|&c| int(c)).collect()
    }

    #[test]
    fn quadratics() {
        // x^2 - 1 = (x-1)(x+1)
        let fs = factor_rational(&p(&[-1, 0, 1]));
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().all(|(f, m)| f.len() == 2 && *m == 1));
        // x^2 - 2 irreducible
        assert!(is_irreducible(&p(&[-2, 0, 1])));
        // x^2 + 1 irreducible
        assert!(is_irreducible(&p(&[1, 0, 1])));
    }

    #[test]
    fn resultant_style_input() {
        // x^4 - x = x (x-1) (x^2+x+1)
        let fs = factor_rational(&p(&[0, -1, 0, 0, 1]));
        let degs: Vec<usize> = fs.iter().map(|(f, _)| f.len() - 1).collect();
        assert_eq!(degs, vec![1, 1, 2]);
        let roots = rational_roots(&p(&[0, -1, 0, 0, 1]));
        assert_eq!(roots.len(), 2);
    }

    #[test]
    fn multiplicities_and_scaling() {
        // 4x^2 - 4 = 4(x-1)(x+1); (x-1)^3(x+2)
        let fs = factor_rational(&p(&[-4, 0, 4]));
        assert_eq!(fs.len(), 2);
        let cube = {
            let a = p(&[-1, 1]);
            let f = QQ;
            let c2 = upoly::mul(&f, &a, &a);
            let c3 = upoly::mul(&f, &c2, &a);
            upoly::mul(&f, &c3, &p(&[2, 1]))
        };
        let fs = factor_rational(&cube);
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().any(|(f, m)| *m == 3 && f == &p(&[-1, 1])));
        assert!(fs.iter().any(|(f, m)| *m == 1 && f == &p(&[2, 1])));
    }

    #[test]
    fn degree_six_mix() {
        // (x^2+x+1)(x^2-2)(x-3)(x+5)
        let f = QQ;
        let a = upoly::mul(&f, &p(&[1, 1, 1]), &p(&[-2, 0, 1]));
        let b = upoly::mul(&f, &p(&[-3, 1]), &p(&[5, 1]));
        let prod = upoly::mul(&f, &a, &b);
        let fs = factor_rational(&prod);
        assert_eq!(fs.len(), 4);
        let degs: Vec<usize> = fs.iter().map(|(g, _)| g.len() - 1).collect();
        assert_eq!(degs, vec![1, 1, 2, 2]);
    }

    #[test]
    fn irreducible_qurtic_and_big_lead() {
        assert!(is_irreducible(&p(&[2, 0, 0, 0, 1]))); // x^4 + 2 (Eisenstein)
        // 6x^2 - x - 2 = (2x+1)(3x-2) -> monic rational factors
        let fs = factor_rational(&p(&[-2, -1, 6]));
        assert_eq!(fs.len(), 2);
        for (g, _) in &fs {
            assert_eq!(g.len(), 2);
            assert!(g[1].is_one());
        }
    }
}
