//! Torus points and the action of `𝕎 = ℤ₂ ⋉ (W × W)` on pairs `(t, γ)`.
//!
//! Exact points have coordinates that are monomials `q^a k^b v^e` in `q`, `k`
//! and optional symbolic variables `v_0, v_1, …`. Fully specialised points
//! (no symbolic part) are the monomial points `q^a k^b`; symbolic coordinates
//! let one cocycle engine serve the exact, Laurent, series and numeric modes.

use super::affine::ExtAffineElt;
use super::perm::Perm;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// A monomial `q^q k^k ∏ v_i^{vars[i]}`; `vars` has trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
pub struct Coord {
    pub q: i64,
    pub k: i64,
    pub vars: Vec<i32>,
}

fn trimmed(mut v: Vec<i32>) -> Vec<i32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

impl Coord {
    pub fn one() -> Self {
        Coord::default()
    }

    pub fn scalar(q: i64, k: i64) -> Self {
        Coord { q, k, vars: Vec::new() }
    }

    /// The symbolic variable `v_i`.
    pub fn var(i: usize) -> Self {
        let mut v = vec![0; i + 1];
        v[i] = 1;
        Coord { q: 0, k: 0, vars: v }
    }

    pub fn is_scalar(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn var_exp(&self, i: usize) -> i32 {
        self.vars.get(i).copied().unwrap_or(0)
    }

    pub fn mul(&self, o: &Coord) -> Coord {
        let n = self.vars.len().max(o.vars.len());
        let vars = (0..n).map(|i| self.var_exp(i) + o.var_exp(i)).collect();
        Coord { q: self.q + o.q, k: self.k + o.k, vars: trimmed(vars) }
    }

    pub fn inv(&self) -> Coord {
        Coord { q: -self.q, k: -self.k, vars: self.vars.iter().map(|x| -x).collect() }
    }

    pub fn div(&self, o: &Coord) -> Coord {
        self.mul(&o.inv())
    }

    pub fn pow(&self, e: i64) -> Coord {
        Coord {
            q: self.q * e,
            k: self.k * e,
            vars: trimmed(self.vars.iter().map(|&x| x * e as i32).collect()),
        }
    }

    pub fn times_q(&self, a: i64) -> Coord {
        Coord { q: self.q + a, ..self.clone() }
    }

    /// Numeric value given `q`, `k` and values of the symbolic variables.
    pub fn eval(&self, q: Complex64, k: Complex64, vals: &[Complex64]) -> Complex64 {
        let mut z = q.powi(self.q as i32) * k.powi(self.k as i32);
        for (i, &e) in self.vars.iter().enumerate() {
            if e != 0 {
                z *= vals[i].powi(e);
            }
        }
        z
    }
}

/// Operations a torus point must support for the `W`-action.
pub trait TorusPoint: Clone {
    fn n(&self) -> usize;
    /// `(u t)_i = t_{u^{-1}(i)}`.
    fn permute(&self, u: &Perm) -> Self;
    /// `t ↦ q^λ t`.
    fn scale_q(&self, lambda: &[i64]) -> Self;
    /// `t ↦ t^{-1}`.
    fn invert(&self) -> Self;
}

/// Exact torus point with monomial coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TorusMonomialPoint {
    pub coords: Vec<Coord>,
}

impl TorusMonomialPoint {
    pub fn new(coords: Vec<Coord>) -> Self {
        TorusMonomialPoint { coords }
    }

    /// `t_i = q^{a_i} k^{b_i}`.
    pub fn from_exponents(a: &[i64], b: &[i64]) -> Self {
        assert_eq!(a.len(), b.len());
        TorusMonomialPoint { coords: a.iter().zip(b).map(|(&a, &b)| Coord::scalar(a, b)).collect() }
    }

    /// `t_i = v_{offset+i}`.
    pub fn symbolic(n: usize, offset: usize) -> Self {
        TorusMonomialPoint { coords: (0..n).map(|i| Coord::var(offset + i)).collect() }
    }

    pub fn ones(n: usize) -> Self {
        TorusMonomialPoint { coords: vec![Coord::one(); n] }
    }

    /// `δ = (N-1, N-3, …, 1-N)`.
    pub fn delta(n: usize) -> Vec<i64> {
        (0..n).map(|i| n as i64 - 1 - 2 * i as i64).collect()
    }

    /// The point `q^{a} k^{c δ}`.
    pub fn q_k_delta(a: &[i64], c: i64) -> Self {
        let d = Self::delta(a.len());
        let b: Vec<i64> = d.iter().map(|x| c * x).collect();
        Self::from_exponents(a, &b)
    }

    pub fn is_scalar(&self) -> bool {
        self.coords.iter().all(Coord::is_scalar)
    }

    /// `t^α` for an integer vector `α`.
    pub fn monomial(&self, alpha: &[i64]) -> Coord {
        let mut c = Coord::one();
        for (x, &a) in self.coords.iter().zip(alpha) {
            if a != 0 {
                c = c.mul(&x.pow(a));
            }
        }
        c
    }

    pub fn mul(&self, o: &Self) -> Self {
        TorusMonomialPoint { coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn eval(&self, q: Complex64, k: Complex64, vals: &[Complex64]) -> ComplexPoint {
        ComplexPoint { coords: self.coords.iter().map(|c| c.eval(q, k, vals)).collect(), q }
    }
}

impl TorusPoint for TorusMonomialPoint {
    fn n(&self) -> usize {
        self.coords.len()
    }

    fn permute(&self, u: &Perm) -> Self {
        TorusMonomialPoint { coords: u.act_vec(&self.coords) }
    }

    fn scale_q(&self, lambda: &[i64]) -> Self {
        TorusMonomialPoint { coords: self.coords.iter().zip(lambda).map(|(c, &l)| c.times_q(l)).collect() }
    }

    fn invert(&self) -> Self {
        TorusMonomialPoint { coords: self.coords.iter().map(Coord::inv).collect() }
    }
}

/// Numeric torus point; carries `q` so that translations can act.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexPoint {
    pub coords: Vec<Complex64>,
    pub q: Complex64,
}

impl ComplexPoint {
    pub fn new(coords: Vec<Complex64>, q: Complex64) -> Self {
        ComplexPoint { coords, q }
    }

    pub fn dist(&self, o: &Self) -> f64 {
        self.coords.iter().zip(&o.coords).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }
}

impl TorusPoint for ComplexPoint {
    fn n(&self) -> usize {
        self.coords.len()
    }

    fn permute(&self, u: &Perm) -> Self {
        ComplexPoint { coords: u.act_vec(&self.coords), q: self.q }
    }

    fn scale_q(&self, lambda: &[i64]) -> Self {
        ComplexPoint {
            coords: self.coords.iter().zip(lambda).map(|(c, &l)| c * self.q.powi(l as i32)).collect(),
            q: self.q,
        }
    }

    fn invert(&self) -> Self {
        ComplexPoint { coords: self.coords.iter().map(|c| c.inv()).collect(), q: self.q }
    }
}

/// `w t` for `w = λ·u`: `(w t)_i = q^{λ_i} t_{u^{-1}(i)}`.
pub fn act_affine<P: TorusPoint>(w: &ExtAffineElt, t: &P) -> P {
    t.permute(&w.perm).scale_q(&w.trans)
}

/// The element `ι^iota · (left, right)` of `𝕎`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DoubleElt {
    pub iota: bool,
    pub left: ExtAffineElt,
    pub right: ExtAffineElt,
}

impl DoubleElt {
    pub fn identity(n: usize) -> Self {
        DoubleElt { iota: false, left: ExtAffineElt::identity(n), right: ExtAffineElt::identity(n) }
    }

    pub fn pair(left: ExtAffineElt, right: ExtAffineElt) -> Self {
        DoubleElt { iota: false, left, right }
    }

    pub fn left_only(w: ExtAffineElt) -> Self {
        let n = w.n();
        Self::pair(w, ExtAffineElt::identity(n))
    }

    pub fn right_only(w: ExtAffineElt) -> Self {
        let n = w.n();
        Self::pair(ExtAffineElt::identity(n), w)
    }

    pub fn iota(n: usize) -> Self {
        DoubleElt { iota: true, ..Self::identity(n) }
    }

    pub fn n(&self) -> usize {
        self.left.n()
    }

    /// `ι (w, w') ι = (w', w)`.
    fn swapped(&self) -> (ExtAffineElt, ExtAffineElt) {
        (self.right.clone(), self.left.clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (a, b) = if o.iota { self.swapped() } else { (self.left.clone(), self.right.clone()) };
        DoubleElt { iota: self.iota ^ o.iota, left: a.mul(&o.left), right: b.mul(&o.right) }
    }

    pub fn inverse(&self) -> Self {
        let g = DoubleElt { iota: false, left: self.left.inverse(), right: self.right.inverse() };
        if self.iota {
            g.mul(&Self::iota(self.n()))
        } else {
            g
        }
    }

    /// `(w, w')(t, γ) = (w t, w'^♦ γ)`, then `ι(t, γ) = (γ^{-1}, t^{-1})` if present.
    pub fn act<P: TorusPoint>(&self, t: &P, g: &P) -> (P, P) {
        let t2 = act_affine(&self.left, t);
        let g2 = act_affine(&self.right.diamond(), g);
        if self.iota {
            (g2.invert(), t2.invert())
        } else {
            (t2, g2)
        }
    }
}

/// `λ ≤ μ` in dominance order, i.e. `μ - λ ∈ Q₊`.
pub fn dominance_order_leq(lambda: &[i64], mu: &[i64]) -> Result<bool, String> {
    if lambda.len() != mu.len() {
        return Err(format!("length mismatch: {} vs {}", lambda.len(), mu.len()));
    }
    let (sl, sm): (i64, i64) = (lambda.iter().sum(), mu.iter().sum());
    if sl != sm {
        return Err(format!("unequal sums {sl} and {sm}"));
    }
    let mut acc = 0;
    for (l, m) in lambda.iter().zip(mu) {
        acc += m - l;
        if acc < 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> (TorusMonomialPoint, TorusMonomialPoint) {
        (TorusMonomialPoint::symbolic(n, 0), TorusMonomialPoint::symbolic(n, n))
    }

    #[test]
    fn pi_rotates_with_q() {
        let (t, _) = sym(2);
        let pt = act_affine(&ExtAffineElt::pi(2), &t);
        assert_eq!(pt.coords, vec![Coord::var(1).times_q(1), Coord::var(0)]);
    }

    #[test]
    fn iota_squared_is_identity() {
        let (t, g) = sym(3);
        let i = DoubleElt::iota(3);
        let (a, b) = i.act(&t, &g);
        assert_eq!(i.act(&a, &b), (t.clone(), g.clone()));
        assert_eq!(i.mul(&i), DoubleElt::identity(3));
    }

    #[test]
    fn right_translation_is_negated() {
        let (t, g) = sym(2);
        let e = DoubleElt::right_only(ExtAffineElt::eps(2, 1));
        let (t2, g2) = e.act(&t, &g);
        assert_eq!(t2, t);
        assert_eq!(g2.coords[0], Coord::var(2).times_q(-1));
        assert_eq!(g2.coords[1], Coord::var(3));
    }

    #[test]
    fn dominance() {
        assert_eq!(dominance_order_leq(&[1, 1], &[2, 0]), Ok(true));
        assert_eq!(dominance_order_leq(&[2, 0], &[1, 1]), Ok(false));
        assert_eq!(dominance_order_leq(&[2, 1, 0], &[2, 1, 0]), Ok(true));
        assert!(dominance_order_leq(&[1, 0], &[1, 1]).is_err());
    }
}
