//! Coefficient modes for cocycle evaluation.
//!
//! Every cocycle value is a product of factors `R_i(z)` and `η(π^{±1})(γ)`
//! whose arguments are monomials ([`Coord`]). A mode decides how such a
//! monomial becomes a ring element and how `c_k(z)^{-1}` is realised.

use super::CocycleError;
use crate::scalar::{Cut, LaurentPoly, Params, RatQK, Ring, TruncLaurent};
use crate::weyl::Coord;
use num_complex::Complex64;
use std::sync::Arc;

pub trait CocycleEval {
    type C: Ring;
    fn params(&self) -> &Params<Self::C>;
    /// The value of a point coordinate.
    fn coord(&self, c: &Coord) -> Result<Self::C, CocycleError>;
    /// `c_k(z)^{-1} = k(1 - z)/(1 - k² z)`, the coefficient in `R_i(z) = 1 + c_k(z)^{-1}(η(T_i) - k)`.
    fn r_coeff(&self, z: &Coord) -> Result<Self::C, CocycleError>;
}

fn scalar_or_err(c: &Coord) -> Result<(i64, i64), CocycleError> {
    if c.is_scalar() {
        Ok((c.q, c.k))
    } else {
        Err(CocycleError::NotScalar(format!("{c:?}")))
    }
}

/// `k(1 - z)/(1 - k² z)` for `z = q^a k^b`; the pole `z = k^{-2}` is an error.
pub fn r_coeff_exact(a: i64, b: i64) -> Result<RatQK, CocycleError> {
    if a == 0 && b == -2 {
        return Err(CocycleError::Pole(format!("q^{a} k^{b}")));
    }
    let z = RatQK::qk(a, b);
    let num = RatQK::k().times(&RatQK::one().minus(&z));
    let den = RatQK::one().minus(&RatQK::qk(a, b + 2));
    Ok(num.try_div(&den).expect("denominator nonzero away from the pole"))
}

fn exact_params() -> Params<RatQK> {
    Params::new(RatQK::q(), RatQK::k())
}

/// Mode (i): all coordinates are monomials `q^a k^b`; values in ℚ(q,k).
#[derive(Clone, Debug)]
pub struct ExactEval {
    params: Params<RatQK>,
}

impl Default for ExactEval {
    fn default() -> Self {
        ExactEval { params: exact_params() }
    }
}

impl CocycleEval for ExactEval {
    type C = RatQK;
    fn params(&self) -> &Params<RatQK> {
        &self.params
    }
    fn coord(&self, c: &Coord) -> Result<RatQK, CocycleError> {
        let (a, b) = scalar_or_err(c)?;
        Ok(RatQK::qk(a, b))
    }
    fn r_coeff(&self, z: &Coord) -> Result<RatQK, CocycleError> {
        let (a, b) = scalar_or_err(z)?;
        r_coeff_exact(a, b)
    }
}

/// Mode (ii): coordinates may be Laurent monomials in symbolic variables, but
/// every `R`-argument must be a scalar.
#[derive(Clone, Debug)]
pub struct LaurentEval {
    params: Params<LaurentPoly<RatQK>>,
}

impl Default for LaurentEval {
    fn default() -> Self {
        LaurentEval { params: exact_params().map(|c| LaurentPoly::constant(c.clone())) }
    }
}

pub fn coord_to_laurent(c: &Coord) -> LaurentPoly<RatQK> {
    LaurentPoly::monomial(c.vars.clone(), RatQK::qk(c.q, c.k))
}

impl CocycleEval for LaurentEval {
    type C = LaurentPoly<RatQK>;
    fn params(&self) -> &Params<Self::C> {
        &self.params
    }
    fn coord(&self, c: &Coord) -> Result<Self::C, CocycleError> {
        Ok(coord_to_laurent(c))
    }
    fn r_coeff(&self, z: &Coord) -> Result<Self::C, CocycleError> {
        let (a, b) = scalar_or_err(z)?;
        Ok(LaurentPoly::constant(r_coeff_exact(a, b)?))
    }
}

/// Mode (iii): truncated expansions. Each `R`-argument `c v^β` with symbolic
/// part is expanded as a geometric series in whichever of `v^β`, `v^{-β}` has
/// positive weight; products drop terms of weight above the bound.
#[derive(Clone, Debug)]
pub struct SeriesEval {
    params: Params<TruncLaurent<RatQK>>,
    cut: Cut,
}

impl SeriesEval {
    pub fn new(weights: Vec<i64>, bound: i64) -> Self {
        let params = exact_params().map(|c| TruncLaurent::new(LaurentPoly::constant(c.clone()), None));
        SeriesEval { params, cut: Cut { weights: Arc::new(weights), bound } }
    }

    /// Weights for `x_1..x_N, y_1..y_N` making `x^{-α_i}` and `y^{α_j}` weight one.
    pub fn torus_weights(n: usize) -> Vec<i64> {
        let mut w: Vec<i64> = (0..n).map(|i| -((n - 1 - i) as i64)).collect();
        w.extend((0..n).map(|i| (n - 1 - i) as i64));
        w
    }

    pub fn cut(&self) -> &Cut {
        &self.cut
    }

    pub fn lift(&self, p: LaurentPoly<RatQK>) -> TruncLaurent<RatQK> {
        TruncLaurent::new(p, Some(self.cut.clone()))
    }

    /// `pre · Σ_{n ≥ 0} (ratio · v^β)^n` up to the weight bound.
    fn geometric(&self, pre: LaurentPoly<RatQK>, ratio: RatQK, beta: &[i32]) -> TruncLaurent<RatQK> {
        let w = self.cut.weight(beta);
        debug_assert!(w > 0);
        let mut acc = LaurentPoly::zero();
        let mut term = LaurentPoly::one();
        let mut n = 0i64;
        let lowest = self.cut.weight(&pre.min_exps(self.cut.weights.len())).min(0);
        while n * w + lowest <= self.cut.bound {
            acc = acc.plus(&term);
            term = term.times(&LaurentPoly::monomial(beta.to_vec(), ratio.clone()));
            n += 1;
        }
        self.lift(pre.times(&acc))
    }
}

impl CocycleEval for SeriesEval {
    type C = TruncLaurent<RatQK>;
    fn params(&self) -> &Params<Self::C> {
        &self.params
    }
    fn coord(&self, c: &Coord) -> Result<Self::C, CocycleError> {
        Ok(self.lift(coord_to_laurent(c)))
    }
    fn r_coeff(&self, z: &Coord) -> Result<Self::C, CocycleError> {
        if z.is_scalar() {
            return Ok(TruncLaurent::new(LaurentPoly::constant(r_coeff_exact(z.q, z.k)?), None));
        }
        let w = self.cut.weight(&z.vars);
        let k = RatQK::k();
        let zl = coord_to_laurent(z);
        if w > 0 {
            // k(1 - z) Σ (k² z)^n
            let pre = LaurentPoly::constant(k.clone()).times(&LaurentPoly::one().minus(&zl));
            Ok(self.geometric(pre, RatQK::qk(z.q, z.k + 2), &z.vars))
        } else if w < 0 {
            // with v = 1/z: k^{-1}(1 - v) Σ (k^{-2} v)^n
            let v = z.inv();
            let vl = coord_to_laurent(&v);
            let pre = LaurentPoly::constant(RatQK::qk(0, -1)).times(&LaurentPoly::one().minus(&vl));
            Ok(self.geometric(pre, RatQK::qk(v.q, v.k - 2), &v.vars))
        } else {
            Err(CocycleError::NotExpandable(format!("{z:?}")))
        }
    }
}

/// Mode (iv): numeric values for `q`, `k` and every symbolic variable.
#[derive(Clone, Debug)]
pub struct NumericEval {
    params: Params<Complex64>,
    vals: Vec<Complex64>,
    pole_tol: f64,
}

impl NumericEval {
    pub fn new(q: Complex64, k: Complex64, vals: Vec<Complex64>) -> Self {
        NumericEval { params: Params::new(q, k), vals, pole_tol: 1e-12 }
    }

    pub fn with_values(&self, vals: Vec<Complex64>) -> Self {
        NumericEval { vals, ..self.clone() }
    }

    pub fn q(&self) -> Complex64 {
        self.params.q
    }

    pub fn k(&self) -> Complex64 {
        self.params.k
    }
}

impl CocycleEval for NumericEval {
    type C = Complex64;
    fn params(&self) -> &Params<Complex64> {
        &self.params
    }
    fn coord(&self, c: &Coord) -> Result<Complex64, CocycleError> {
        Ok(c.eval(self.params.q, self.params.k, &self.vals))
    }
    fn r_coeff(&self, z: &Coord) -> Result<Complex64, CocycleError> {
        let zv = self.coord(z)?;
        let k = self.params.k;
        let den = 1.0 - k * k * zv;
        if den.norm() < self.pole_tol {
            return Err(CocycleError::Pole(format!("{zv}")));
        }
        Ok(k * (1.0 - zv) / den)
    }
}
