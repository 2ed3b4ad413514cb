//! Algebraic extension towers over the rationals.
//!
//! A tower is a frozen sequence of simple extensions, each generator
//! carrying a monic minimal polynomial over the level below. Elements
//! are nested polynomial expressions in the generators, kept in reduced
//! canonical form so equality is structural.
//!
//! Irreducibility of a minimal polynomial is verified by factorization
//! when its coefficients are rational; over genuinely algebraic
//! coefficients only a squarefree check (plus a no-root probe on cheap
//! candidates) runs, and the assumption is recorded on the level.

use super::factor;
use super::upoly;
use super::{render_rat, Field, Rational, QQ};
use crate::error::{Error, Result};
use num_rational::BigRational;
use num_traits::Zero;
use std::fmt;
use std::sync::Arc;

/// Default maximum number of extension levels.
pub const TOWER_DEPTH_CAP: usize = 4;

/// One simple extension step.
#[derive(Clone, PartialEq, Debug)]
pub struct TowerLevel {
    pub name: String,
    /// Monic minimal polynomial of the generator, coefficients at the
    /// level below, constant-first.
    pub min_poly: Vec<TElem>,
    /// True when irreducibility over the level below was not verified.
    pub assumed_irreducible: bool,
}

/// A frozen extension tower; level 0 is the rationals.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct FieldTower {
    pub levels: Vec<TowerLevel>,
}

impl FieldTower {
    pub fn rationals() -> Arc<FieldTower> {
        Arc::new(FieldTower::default())
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn is_prefix_of(&self, other: &FieldTower) -> bool {
        self.levels.len() <= other.levels.len()
            && self.levels[..] == other.levels[..self.levels.len()]
    }

    /// Degree of the generator at 1-based level `k`.
    fn gen_degree(&self, k: usize) -> usize {
        self.levels[k - 1].min_poly.len() - 1
    }

    pub fn describe(&self) -> String {
        if self.levels.is_empty() {
            return "Q".to_string();
        }
        let mut s = "Q".to_string();
        for (i, lvl) in self.levels.iter().enumerate() {
            let view = TowerView { tower: Arc::new(self.clone()), level: i };
            let mp = upoly::render(&view, &lvl.min_poly, &lvl.name);
            s.push_str(&format!("({}; {} = 0)", lvl.name, mp));
        }
        s
    }
}

/// An element of some level of a tower. `Rat` is a level-0 value, valid
/// in any tower; `Ext` is a reduced polynomial in the generator of its
/// level with coefficients from lower levels.
#[derive(Clone, PartialEq, Debug)]
pub enum TElem {
    Rat(BigRational),
    Ext { level: usize, coeffs: Vec<TElem> },
}

impl TElem {
    pub fn level(&self) -> usize {
        match self {
            TElem::Rat(_) => 0,
            TElem::Ext { level, .. } => *level,
        }
    }

    pub fn from_rat(q: BigRational) -> TElem {
        TElem::Rat(q)
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, TElem::Rat(_))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            TElem::Rat(q) => Some(q),
            _ => None,
        }
    }

    /// Coefficient vector of this element viewed at level `k` (so entries
    /// live strictly below `k`). The element's level must be ≤ `k`.
    fn coeffs_at(&self, k: usize) -> Vec<TElem> {
        debug_assert!(self.level() <= k);
        match self {
            TElem::Ext { level, coeffs } if *level == k => coeffs.clone(),
            other => vec![other.clone()],
        }
    }
}

/// Canonical form: trim trailing zeros, collapse singletons.
fn normalize(level: usize, mut coeffs: Vec<TElem>) -> TElem {
    while coeffs
        .last()
        .map(|c| matches!(c, TElem::Rat(q) if q.is_zero()))
        .unwrap_or(false)
    {
        coeffs.pop();
    }
    match coeffs.len() {
        0 => TElem::Rat(BigRational::zero()),
        1 => coeffs.pop().unwrap(),
        _ => TElem::Ext { level, coeffs },
    }
}

/// Field view of a tower truncated at `level` (0 = rationals). Elements
/// of any lower level embed transparently.
#[derive(Clone, Debug)]
pub struct TowerView {
    pub tower: Arc<FieldTower>,
    pub level: usize,
}

impl PartialEq for TowerView {
    fn eq(&self, other: &Self) -> bool {
        self.level == other.level
            && self.tower.levels[..self.level] == other.tower.levels[..other.level]
    }
}

impl TowerView {
    pub fn top(tower: Arc<FieldTower>) -> TowerView {
        let level = tower.depth();
        TowerView { tower, level }
    }

    pub fn rationals() -> TowerView {
        TowerView { tower: FieldTower::rationals(), level: 0 }
    }

    fn sub(&self, level: usize) -> TowerView {
        TowerView { tower: Arc::clone(&self.tower), level }
    }

    /// The generator of 1-based level `k` as an element.
    pub fn generator(&self, k: usize) -> TElem {
        assert!(k >= 1 && k <= self.level);
        TElem::Ext {
            level: k,
            coeffs: vec![TElem::Rat(BigRational::zero()), TElem::Rat(BigRational::from_integer(1.into()))],
        }
    }

    /// Generator of the top level, if any.
    pub fn top_generator(&self) -> Option<TElem> {
        if self.level == 0 {
            None
        } else {
            Some(self.generator(self.level))
        }
    }

    fn reduce_at(&self, k: usize, coeffs: Vec<TElem>) -> Result<TElem> {
        let min_poly = &self.tower.levels[k - 1].min_poly;
        let subview = self.sub(k - 1);
        let (_, rem) = upoly::divrem(&subview, &coeffs, min_poly)?;
        Ok(normalize(k, rem))
    }
}

impl Field for TowerView {
    type El = TElem;

    fn zero(&self) -> TElem {
        TElem::Rat(BigRational::zero())
    }

    fn one(&self) -> TElem {
        TElem::Rat(BigRational::from_integer(1.into()))
    }

    fn is_zero(&self, a: &TElem) -> bool {
        matches!(a, TElem::Rat(q) if q.is_zero())
    }

    fn add(&self, a: &TElem, b: &TElem) -> TElem {
        match (a, b) {
            (TElem::Rat(x), TElem::Rat(y)) => TElem::Rat(x + y),
            _ => {
                let k = a.level().max(b.level());
                let va = a.coeffs_at(k);
                let vb = b.coeffs_at(k);
                let sub = self.sub(k - 1);
                normalize(k, upoly::add(&sub, &va, &vb))
            }
        }
    }

    fn neg(&self, a: &TElem) -> TElem {
        match a {
            TElem::Rat(q) => TElem::Rat(-q),
            TElem::Ext { level, coeffs } => {
                let sub = self.sub(level - 1);
                normalize(*level, coeffs.iter().map(|c| sub.neg(c)).collect())
            }
        }
    }

    fn mul(&self, a: &TElem, b: &TElem) -> TElem {
        match (a, b) {
            (TElem::Rat(x), TElem::Rat(y)) => TElem::Rat(x * y),
            _ => {
                let k = a.level().max(b.level());
                let va = a.coeffs_at(k);
                let vb = b.coeffs_at(k);
                let sub = self.sub(k - 1);
                let prod = upoly::mul(&sub, &va, &vb);
                self.reduce_at(k, prod).expect("reduction by monic minimal polynomial")
            }
        }
    }

    fn inv(&self, a: &TElem) -> Result<TElem> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        match a {
            TElem::Rat(q) => Ok(TElem::Rat(q.recip())),
            TElem::Ext { level, coeffs } => {
                let k = *level;
                let sub = self.sub(k - 1);
                let min_poly = &self.tower.levels[k - 1].min_poly;
                let (g, s, _) = upoly::ext_gcd(&sub, coeffs, min_poly)?;
                if upoly::deg::<TowerView>(&g) != Some(0) {
                    return Err(Error::TowerNotAField { level: k });
                }
                self.reduce_at(k, s)
            }
        }
    }

    fn from_rat(&self, q: &BigRational) -> TElem {
        TElem::Rat(q.clone())
    }

    fn to_rat(&self, a: &TElem) -> Option<Rational> {
        a.as_rational().cloned()
    }

    fn render(&self, a: &TElem) -> String {
        match a {
            TElem::Rat(q) => render_rat(q),
            TElem::Ext { level, coeffs } => {
                let sub = self.sub(level - 1);
                let name = &self.tower.levels[level - 1].name;
                let parts: Vec<String> = coeffs
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !sub.is_zero(c))
                    .map(|(i, c)| {
                        let cs = sub.render(c);
                        let cs = if cs.contains(['+', '-', ' ']) && i > 0 {
                            format!("({cs})")
                        } else {
                            cs
                        };
                        match i {
                            0 => cs,
                            1 if cs == "1" => name.clone(),
                            1 => format!("{cs}*{name}"),
                            _ if cs == "1" => format!("{name}^{i}"),
                            _ => format!("{cs}*{name}^{i}"),
                        }
                    })
                    .collect();
                parts.join(" + ")
            }
        }
    }
}

/// An element of a specific tower: the public-facing pairing of value
/// and context.
#[derive(Clone, Debug)]
pub struct AlgebraicNumber {
    pub tower: Arc<FieldTower>,
    pub value: TElem,
}

impl AlgebraicNumber {
    pub fn rational(q: BigRational) -> AlgebraicNumber {
        AlgebraicNumber { tower: FieldTower::rationals(), value: TElem::Rat(q) }
    }

    pub fn view(&self) -> TowerView {
        TowerView::top(Arc::clone(&self.tower))
    }

    /// Common tower of two elements, by level-prefix embedding.
    fn join(&self, other: &AlgebraicNumber) -> Result<Arc<FieldTower>> {
        if self.tower.is_prefix_of(&other.tower) {
            Ok(Arc::clone(&other.tower))
        } else if other.tower.is_prefix_of(&self.tower) {
            Ok(Arc::clone(&self.tower))
        } else {
            Err(Error::TowerMismatch)
        }
    }

    pub fn add(&self, other: &AlgebraicNumber) -> Result<AlgebraicNumber> {
        let tower = self.join(other)?;
        let view = TowerView::top(Arc::clone(&tower));
        Ok(AlgebraicNumber { tower, value: view.add(&self.value, &other.value) })
    }

    pub fn mul(&self, other: &AlgebraicNumber) -> Result<AlgebraicNumber> {
        let tower = self.join(other)?;
        let view = TowerView::top(Arc::clone(&tower));
        Ok(AlgebraicNumber { tower, value: view.mul(&self.value, &other.value) })
    }

    pub fn neg(&self) -> AlgebraicNumber {
        let view = self.view();
        AlgebraicNumber { tower: Arc::clone(&self.tower), value: view.neg(&self.value) }
    }

    pub fn sub(&self, other: &AlgebraicNumber) -> Result<AlgebraicNumber> {
        self.add(&other.neg())
    }

    pub fn inv(&self) -> Result<AlgebraicNumber> {
        let view = self.view();
        Ok(AlgebraicNumber { tower: Arc::clone(&self.tower), value: view.inv(&self.value)? })
    }

    pub fn eq_value(&self, other: &AlgebraicNumber) -> Result<bool> {
        let _ = self.join(other)?;
        Ok(self.value == other.value)
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.view().render(&self.value))
    }
}

/// Extend a tower by a root of `p`, a univariate polynomial with
/// coefficients in the tower (constant-first).
///
/// Over the rationals the factor must be irreducible (verified by
/// factorization). Over higher levels the polynomial must be squarefree
/// and pass a cheap no-root probe; the remaining assumption is recorded
/// on the new level.
pub fn adjoin_root(
    tower: &Arc<FieldTower>,
    p: &[TElem],
) -> Result<(Arc<FieldTower>, AlgebraicNumber)> {
    adjoin_root_capped(tower, p, TOWER_DEPTH_CAP)
}

pub fn adjoin_root_capped(
    tower: &Arc<FieldTower>,
    p: &[TElem],
    cap: usize,
) -> Result<(Arc<FieldTower>, AlgebraicNumber)> {
    if tower.depth() >= cap {
        return Err(Error::TowerDepthExceeded { cap });
    }
    let view = TowerView::top(Arc::clone(tower));
    let p = upoly::trim(&view, p.to_vec());
    let deg = match upoly::deg::<TowerView>(&p) {
        Some(d) if d >= 1 => d,
        _ => return Err(Error::input("cannot adjoin a root of a constant")),
    };
    let p = upoly::monic(&view, &p)?;

    let all_rational = p.iter().all(|c| c.is_rational());
    let assumed = if all_rational {
        let pq: Vec<BigRational> = p.iter().map(|c| c.as_rational().unwrap().clone()).collect();
        if !factor::is_irreducible(&pq) {
            return Err(Error::NotIrreducible { poly: upoly::render(&QQ, &pq, "x") });
        }
        false
    } else {
        let sf = upoly::squarefree_part(&view, &p)?;
        if upoly::deg::<TowerView>(&sf) != Some(deg) {
            return Err(Error::NotIrreducible { poly: upoly::render(&view, &p, "x") });
        }
        // no-root probe on cheap candidates: small integers and generators
        let mut candidates: Vec<TElem> = (-2i64..=2).map(|n| view.from_int(n)).collect();
        for k in 1..=view.level {
            candidates.push(view.generator(k));
            candidates.push(view.neg(&view.generator(k)));
        }
        for c in &candidates {
            if view.is_zero(&upoly::eval(&view, &p, c)) {
                return Err(Error::NotIrreducible { poly: upoly::render(&view, &p, "x") });
            }
        }
        true
    };

    let mut levels = tower.levels.clone();
    let name = format!("g{}", levels.len() + 1);
    levels.push(TowerLevel { name, min_poly: p, assumed_irreducible: assumed });
    let new_tower = Arc::new(FieldTower { levels });
    let k = new_tower.depth();
    let gen = TowerView::top(Arc::clone(&new_tower)).generator(k);
    Ok((Arc::clone(&new_tower), AlgebraicNumber { tower: new_tower, value: gen }))
}

/// Degree of the whole tower over the rationals.
pub fn tower_degree(tower: &FieldTower) -> usize {
    (1..=tower.depth()).map(|k| tower.gen_degree(k)).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn q(n: i64) -> TElem {
        TElem::Rat(int(n))
    }

    #[test]
    fn adjoin_sqrt2() {
        let base = FieldTower::rationals();
        // x^2 - 2
        let (tower, g) = adjoin_root(&base, &[q(-2), q(0), q(1)]).unwrap();
        let view = TowerView::top(Arc::clone(&tower));
        let sq = view.mul(&g.value, &g.value);
        assert_eq!(sq, q(2));
        // (1 + sqrt2)(-1 + sqrt2) = 1
        let a = view.add(&view.one(), &g.value);
        let b = view.add(&view.neg(&view.one()), &g.value);
        assert_eq!(view.mul(&a, &b), view.one());
        // inverse of sqrt2 is sqrt2/2
        let inv = view.inv(&g.value).unwrap();
        assert_eq!(view.mul(&inv, &g.value), view.one());
        assert_eq!(view.mul(&inv, &view.from_int(2)), g.value);
    }

    #[test]
    fn reducible_rejected_over_q() {
        let base = FieldTower::rationals();
        let err = adjoin_root(&base, &[q(-1), q(0), q(1)]).unwrap_err();
        assert!(matches!(err, Error::NotIrreducible { .. }));
    }

    #[test]
    fn depth_two_fourth_root_of_two() {
        let base = FieldTower::rationals();
        let (t1, sqrt2) = adjoin_root(&base, &[q(-2), q(0), q(1)]).unwrap();
        // x^2 - sqrt2 over Q(sqrt2)
        let view1 = TowerView::top(Arc::clone(&t1));
        let p = vec![view1.neg(&sqrt2.value), q(0), q(1)];
        let (t2, g2) = adjoin_root(&t1, &p).unwrap();
        let view2 = TowerView::top(Arc::clone(&t2));
        let fourth = view2.pow(&g2.value, 4);
        assert_eq!(fourth, q(2));
        assert!(t2.levels[1].assumed_irreducible);
        assert_eq!(tower_degree(&t2), 4);
        // canonical reduction: (g2^2)^2 equals 2 no matter how constructed
        let sq = view2.mul(&g2.value, &g2.value);
        assert_eq!(sq, sqrt2.value);
    }

    #[test]
    fn depth_cap_enforced() {
        let base = FieldTower::rationals();
        let mut tower = base;
        for _ in 0..TOWER_DEPTH_CAP {
            // repeatedly adjoin sqrt of (previous generator + 3); all
            // are assumed irreducible except the first
            let view = TowerView::top(Arc::clone(&tower));
            let c = match view.top_generator() {
                Some(g) => view.add(&g, &view.from_int(3)),
                None => view.from_int(3),
            };
            let p = vec![view.neg(&c), view.zero(), view.one()];
            let (t, _) = adjoin_root(&tower, &p).unwrap();
            tower = t;
        }
        let view = TowerView::top(Arc::clone(&tower));
        let p = vec![view.from_int(5), view.zero(), view.one()];
        assert!(matches!(
            adjoin_root(&tower, &p),
            Err(Error::TowerDepthExceeded { .. })
        ));
    }

    #[test]
    fn field_axioms_random() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let base = FieldTower::rationals();
        let (t1, _) = adjoin_root(&base, &[q(-2), q(0), q(1)]).unwrap();
        let view1 = TowerView::top(Arc::clone(&t1));
        let p = vec![view1.neg(&view1.generator(1)), q(0), q(1)];
        let (t2, _) = adjoin_root(&t1, &p).unwrap();
        let view = TowerView::top(Arc::clone(&t2));
        let rand_el = |rng: &mut rand_chacha::ChaCha8Rng| -> TElem {
            let c0 = crate::arith::random_rat(rng, 5);
            let c1 = crate::arith::random_rat(rng, 5);
            let c2 = crate::arith::random_rat(rng, 5);
            let g1 = view.generator(1);
            let g2 = view.generator(2);
            let mut el = view.from_rat(&c0);
            el = view.add(&el, &view.mul(&view.from_rat(&c1), &g1));
            el = view.add(&el, &view.mul(&view.from_rat(&c2), &g2));
            el
        };
        for _ in 0..40 {
            let a = rand_el(&mut rng);
            let b = rand_el(&mut rng);
            let c = rand_el(&mut rng);
            // associativity and distributivity
            assert_eq!(view.mul(&view.mul(&a, &b), &c), view.mul(&a, &view.mul(&b, &c)));
            assert_eq!(
                view.mul(&a, &view.add(&b, &c)),
                view.add(&view.mul(&a, &b), &view.mul(&a, &c))
            );
            // inverse law
            if !view.is_zero(&a) {
                let ai = view.inv(&a).unwrap();
                assert_eq!(view.mul(&a, &ai), view.one());
            }
        }
        let _ = rat(1, 2);
    }
}
