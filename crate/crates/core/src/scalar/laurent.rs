//! Sparse multivariate Laurent polynomials over an arbitrary coefficient ring.
//!
//! Exponent vectors are stored with trailing zeros trimmed, so constants need
//! no knowledge of the number of variables and `zero()`/`one()` are static.

use super::ring::{Field, Ring};
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::Arc;

pub type Exps = Vec<i32>;

fn trim(mut e: Exps) -> Exps {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

fn add_exps(a: &[i32], b: &[i32]) -> Exps {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)).collect())
}

/// Exponent of variable `i` in a trimmed exponent vector.
#[inline]
pub fn exp_at(e: &[i32], i: usize) -> i32 {
    e.get(i).copied().unwrap_or(0)
}

/// Pad a trimmed exponent vector to length `n`.
pub fn padded(e: &[i32], n: usize) -> Exps {
    (0..n).map(|i| exp_at(e, i)).collect()
}

#[derive(Clone, PartialEq, Debug, Default)]
pub struct LaurentPoly<C> {
    terms: BTreeMap<Exps, C>,
}

#[derive(Serialize)]
pub struct TermJson<'a, C> {
    pub exponents: Vec<i32>,
    pub coeff: &'a C,
}

impl<C: Ring> LaurentPoly<C> {
    pub fn constant(c: C) -> Self {
        Self::monomial(Vec::new(), c)
    }

    pub fn monomial(e: Exps, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(trim(e), c);
        }
        LaurentPoly { terms }
    }

    /// The variable `x_i` (0-based) raised to `p`.
    pub fn var_pow(i: usize, p: i32) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = p;
        Self::monomial(e, C::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Exps, C)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: Exps, c: C) {
        if c.is_zero() {
            return;
        }
        let e = trim(e);
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v = v.plus(&c);
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &C)> {
        self.terms.iter()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &[i32]) -> C {
        let t = trim(e.to_vec());
        self.terms.get(&t).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.is_empty())
    }

    /// The constant coefficient if the polynomial has no other terms.
    pub fn as_constant(&self) -> Option<C> {
        if self.is_constant() {
            Some(self.coeff(&[]))
        } else {
            None
        }
    }

    /// Largest variable index that occurs, plus one.
    pub fn nvars(&self) -> usize {
        self.terms.keys().map(|e| e.len()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, v)| (e.clone(), v.times(c))))
    }

    pub fn mul_monomial(&self, e: &[i32]) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(x, v)| (add_exps(x, e), v.clone())).collect() }
    }

    pub fn map_coeffs<D: Ring, F: Fn(&C) -> D>(&self, f: F) -> LaurentPoly<D> {
        LaurentPoly::from_terms(self.terms.iter().map(|(e, v)| (e.clone(), f(v))))
    }

    /// Change variables monomially: each exponent vector is mapped by `f`,
    /// and the coefficient multiplied by `g(e)`.
    pub fn transform<F, G>(&self, f: F, g: G) -> Self
    where
        F: Fn(&[i32]) -> Exps,
        G: Fn(&[i32]) -> C,
    {
        Self::from_terms(self.terms.iter().map(|(e, v)| (f(e), v.times(&g(e)))))
    }

    /// Evaluate at a point given per-variable values and inverses in a ring `D`
    /// that receives coefficients via `lift`.
    pub fn eval_with<D: Ring, L: Fn(&C) -> D>(&self, vals: &[D], invs: &[D], lift: L) -> D {
        let mut acc = D::zero();
        for (e, c) in &self.terms {
            let mut t = lift(c);
            for (i, &p) in e.iter().enumerate() {
                if p > 0 {
                    t = t.times(&vals[i].pow_u(p as u32));
                } else if p < 0 {
                    t = t.times(&invs[i].pow_u((-p) as u32));
                }
            }
            acc = acc.plus(&t);
        }
        acc
    }

    pub fn to_json_terms(&self, n: usize) -> Vec<TermJson<'_, C>> {
        self.terms.iter().map(|(e, c)| TermJson { exponents: padded(e, n), coeff: c }).collect()
    }

    /// Coordinatewise minimum exponent over all terms (length `n`).
    pub fn min_exps(&self, n: usize) -> Exps {
        (0..n).map(|i| self.terms.keys().map(|e| exp_at(e, i)).min().unwrap_or(0)).collect()
    }
}

impl<C: Field> LaurentPoly<C> {
    /// Exact quotient by `d`, or `None` if `d` does not divide `self` in the
    /// Laurent polynomial ring over `C`. Both sides are shifted to ordinary
    /// polynomials and divided in lex order.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.terms.is_empty() {
            return None;
        }
        if self.terms.is_empty() {
            return Some(Self::zero());
        }
        let n = self.nvars().max(d.nvars());
        let sa = self.min_exps(n);
        let sd = d.min_exps(n);
        let neg = |v: &Exps| v.iter().map(|x| -x).collect::<Exps>();
        let a = self.mul_monomial(&neg(&sa));
        let b = d.mul_monomial(&neg(&sd));
        let key = |e: &[i32]| padded(e, n);
        let mut rem: BTreeMap<Exps, C> = a.terms.iter().map(|(e, c)| (key(e), c.clone())).collect();
        let (lead_e, lead_c) = b.terms.iter().map(|(e, c)| (key(e), c.clone())).max_by(|x, y| x.0.cmp(&y.0))?;
        let lead_inv = lead_c.inv()?;
        let mut quo = Self::zero();
        while let Some((e0, c0)) = rem.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            let diff: Exps = e0.iter().zip(&lead_e).map(|(x, y)| x - y).collect();
            if diff.iter().any(|&x| x < 0) {
                return None;
            }
            let qc = c0.times(&lead_inv);
            for (e, c) in &b.terms {
                let k = key(&add_exps(e, &diff));
                let nv = rem.get(&k).cloned().unwrap_or_else(C::zero).minus(&qc.times(c));
                if nv.is_zero() {
                    rem.remove(&k);
                } else {
                    rem.insert(k, nv);
                }
            }
            quo.add_term(diff, qc);
        }
        let shift: Exps = sa.iter().zip(&sd).map(|(x, y)| x - y).collect();
        Some(quo.mul_monomial(&shift))
    }
}

impl<C: Ring> Ring for LaurentPoly<C> {
    fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }
    fn one() -> Self {
        Self::constant(C::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_int(n: i64) -> Self {
        Self::constant(C::from_int(n))
    }
    fn plus(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }
    fn minus(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.negate());
        }
        r
    }
    fn times(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                r.add_term(add_exps(e1, e2), c1.times(c2));
            }
        }
        r
    }
    fn negate(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e.clone(), c.negate())).collect() }
    }
}

/// A linear weight on exponents and an upper bound: terms of larger weight are dropped.
#[derive(Clone, Debug, PartialEq)]
pub struct Cut {
    pub weights: Arc<Vec<i64>>,
    pub bound: i64,
}

impl Cut {
    pub fn weight(&self, e: &[i32]) -> i64 {
        e.iter().zip(self.weights.iter()).map(|(&x, &w)| x as i64 * w).sum()
    }
}

/// Laurent polynomial truncated above a weight bound; a ring when all
/// truncated operands share the same [`Cut`]. Elements without a cut behave as
/// exact constants.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncLaurent<C> {
    pub poly: LaurentPoly<C>,
    pub cut: Option<Cut>,
}

impl<C: Ring> TruncLaurent<C> {
    pub fn new(poly: LaurentPoly<C>, cut: Option<Cut>) -> Self {
        let mut t = TruncLaurent { poly, cut };
        t.apply_cut();
        t
    }

    fn apply_cut(&mut self) {
        if let Some(cut) = &self.cut {
            self.poly.terms.retain(|e, _| cut.weight(e) <= cut.bound);
        }
    }

    fn join(&self, o: &Self) -> Option<Cut> {
        match (&self.cut, &o.cut) {
            (Some(a), Some(b)) => Some(if a.bound <= b.bound { a.clone() } else { b.clone() }),
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (None, None) => None,
        }
    }
}

impl<C: Ring> Ring for TruncLaurent<C> {
    fn zero() -> Self {
        TruncLaurent { poly: LaurentPoly::zero(), cut: None }
    }
    fn one() -> Self {
        TruncLaurent { poly: LaurentPoly::one(), cut: None }
    }
    fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
    fn from_int(n: i64) -> Self {
        TruncLaurent { poly: LaurentPoly::from_int(n), cut: None }
    }
    fn plus(&self, o: &Self) -> Self {
        Self::new(self.poly.plus(&o.poly), self.join(o))
    }
    fn minus(&self, o: &Self) -> Self {
        Self::new(self.poly.minus(&o.poly), self.join(o))
    }
    fn times(&self, o: &Self) -> Self {
        let cut = self.join(o);
        let mut r = LaurentPoly::zero();
        for (e1, c1) in &self.poly.terms {
            for (e2, c2) in &o.poly.terms {
                let e = add_exps(e1, e2);
                if let Some(cut) = &cut {
                    if cut.weight(&e) > cut.bound {
                        continue;
                    }
                }
                r.add_term(e, c1.times(c2));
            }
        }
        TruncLaurent { poly: r, cut }
    }
    fn negate(&self) -> Self {
        TruncLaurent { poly: self.poly.negate(), cut: self.cut.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::RatQK;

    type P = LaurentPoly<RatQK>;

    fn x(i: usize, p: i32) -> P {
        P::var_pow(i, p)
    }

    #[test]
    fn ring_operations() {
        let a = x(0, 1).plus(&x(1, -1));
        let b = x(0, 1).minus(&x(1, -1));
        let prod = a.times(&b);
        assert_eq!(prod, x(0, 2).minus(&x(1, -2)));
        assert_eq!(a.minus(&a), P::zero());
    }

    #[test]
    fn exact_division_in_laurent_ring() {
        let a = x(0, 1).minus(&x(1, 1));
        let b = x(0, -2).plus(&x(2, 3)).plus(&P::constant(RatQK::k()));
        let prod = a.times(&b);
        assert_eq!(prod.exact_div(&a).unwrap(), b);
        assert!(b.exact_div(&a).is_none());
    }

    #[test]
    fn truncation_drops_heavy_terms() {
        let cut = Cut { weights: Arc::new(vec![1, 1]), bound: 2 };
        let a = TruncLaurent::new(x(0, 1).plus(&x(1, 1)).plus(&P::one()), Some(cut));
        let sq = a.times(&a).times(&a);
        assert!(sq.poly.terms().all(|(e, _)| e.iter().sum::<i32>() <= 2));
        assert_eq!(sq.poly.coeff(&[1, 1]), RatQK::int(6));
    }
}
