//! The matrix-valued cocycle `C` of `𝕎`: R-matrices, cocycle values along
//! words, the q-connection matrices `C_{(λ,μ)}`, their asymptotic leading
//! terms, singularity predicates and the shift action on solutions.

mod eval;
mod program;
mod singular;

pub use eval::{coord_to_laurent, r_coeff_exact, CocycleEval, ExactEval, LaurentEval, NumericEval, SeriesEval};
pub use program::{Block, CocycleProgram, Step};
pub use singular::{SingularKind, SingularSetPredicate};

use crate::hecke::{eta_y, eta_y_inv, sym_group, HeckeMatrix, HeckeVector, SpectralPoint};
use crate::scalar::{LaurentPoly, Params, RatQK, Ring, TruncLaurent};
use crate::weyl::{Coord, DoubleElt, ExtAffineElt, TorusMonomialPoint, Word};
use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CocycleError {
    #[error("pole of R at argument {0} (z = k^-2)")]
    Pole(String),
    #[error("pole of R_{reflection} at factor {step}: argument {arg} (z = k^-2)")]
    PoleAt { step: usize, reflection: usize, arg: String },
    #[error("coordinate {0} is not a q,k-monomial in this mode")]
    NotScalar(String),
    #[error("argument {0} has weight zero and cannot be expanded")]
    NotExpandable(String),
    #[error("mixed coefficient modes: {0} and {1}")]
    ModeMismatch(&'static str, &'static str),
    #[error("point lies on the singular set: {0}")]
    Singular(String),
}

impl CocycleError {
    fn at_step(self, step: usize, reflection: usize) -> Self {
        match self {
            CocycleError::Pole(arg) => CocycleError::PoleAt { step, reflection, arg },
            e => e,
        }
    }
}

/// `C_g(t, γ)` for `g ∈ 𝕎` in the coefficient mode of `ev`.
pub fn cocycle_value<E: CocycleEval>(
    ev: &E,
    g: &DoubleElt,
    t: &TorusMonomialPoint,
    gamma: &TorusMonomialPoint,
) -> Result<HeckeMatrix<E::C>, CocycleError> {
    CocycleProgram::new(g, t, gamma).evaluate(ev)
}

/// `C_{ι^a (w,w')}(t, γ)` along explicit words for `w` and `w'`.
pub fn cocycle_value_words<E: CocycleEval>(
    ev: &E,
    iota: bool,
    left: &Word,
    right: &Word,
    t: &TorusMonomialPoint,
    gamma: &TorusMonomialPoint,
) -> Result<HeckeMatrix<E::C>, CocycleError> {
    CocycleProgram::for_words(iota, left, right, t, gamma).evaluate(ev)
}

/// The q-connection matrix `C_{(λ,μ)}(t, γ)`.
pub fn connection_matrix<E: CocycleEval>(
    ev: &E,
    lambda: &[i64],
    mu: &[i64],
    t: &TorusMonomialPoint,
    gamma: &TorusMonomialPoint,
) -> Result<HeckeMatrix<E::C>, CocycleError> {
    let g = DoubleElt::pair(ExtAffineElt::translation(lambda), ExtAffineElt::translation(mu));
    cocycle_value(ev, &g, t, gamma)
}

/// `R_i(z) = 1 + c_k(z)^{-1}(η(T_i) - k)`.
pub fn r_matrix<E: CocycleEval>(ev: &E, n: usize, i: usize, z: &Coord) -> Result<HeckeMatrix<E::C>, CocycleError> {
    let mut m = HeckeMatrix::identity(n);
    m.right_mul_r(i, &ev.r_coeff(z)?, ev.params());
    Ok(m)
}

/// `R_i(z)` for a scalar `z` in any ring, given `c_k(z)^{-1}`.
pub fn r_matrix_from_coeff<C: Ring>(n: usize, i: usize, r: &C, p: &Params<C>) -> HeckeMatrix<C> {
    let mut m = HeckeMatrix::identity(n);
    m.right_mul_r(i, r, p);
    m
}

/// `lim_{z→0} R_i(z) = 1 + k(η(T_i) - k)` and `lim_{z→∞} R_i(z) = k^{-1} η(T_i)`.
pub fn r_matrix_limit(n: usize, i: usize, at_zero: bool) -> HeckeMatrix<RatQK> {
    let p = Params::new(RatQK::q(), RatQK::k());
    let r = if at_zero { RatQK::k() } else { RatQK::qk(0, -1) };
    r_matrix_from_coeff(n, i, &r, &p)
}

/// `(1 - k² z) R_i(z) = (1 - k² z) + k(1 - z)(η(T_i) - k)`: the R-matrix with
/// its denominator cleared, for `z` in any ring.
pub fn r_numerator<C: Ring>(n: usize, i: usize, z: &C, p: &Params<C>) -> HeckeMatrix<C> {
    let one = C::one();
    let den = one.minus(&p.k.times(&p.k).times(z));
    let c = p.k.times(&one.minus(z));
    let t_minus_k = HeckeMatrix::eta_t(n, i, p).sub(&HeckeMatrix::scalar(n, p.k.clone()));
    HeckeMatrix::scalar(n, den).add(&t_minus_k.scale(&c))
}

/// The braid-type relation `R_j(z) R_{j+1}(zz') R_j(z') = R_{j+1}(z') R_j(zz') R_{j+1}(z)`
/// for all `j`, checked with symbolic `z, z'` after clearing the (identical)
/// scalar denominators on both sides. Variables: `k = v_0`, `z = v_1`, `z' = v_2`.
pub fn yang_baxter_holds(n: usize) -> bool {
    use num_bigint::BigInt;
    type L = LaurentPoly<BigInt>;
    let p = Params { q: L::zero(), k: L::var_pow(0, 1), kinv: L::var_pow(0, -1) };
    let z = L::var_pow(1, 1);
    let z2 = L::var_pow(2, 1);
    let zz = z.times(&z2);
    (1..n.saturating_sub(1)).all(|j| {
        let lhs = r_numerator(n, j, &z, &p).mul(&r_numerator(n, j + 1, &zz, &p)).mul(&r_numerator(n, j, &z2, &p));
        let rhs = r_numerator(n, j + 1, &z2, &p).mul(&r_numerator(n, j, &zz, &p)).mul(&r_numerator(n, j + 1, &z, &p));
        lhs == rhs
    })
}

/// Symbolic `t = (x_1..x_N)` using variables `0..N`.
pub fn symbolic_t(n: usize) -> TorusMonomialPoint {
    TorusMonomialPoint::symbolic(n, 0)
}

/// Symbolic `γ = (y_1..y_N)` using variables `N..2N`.
pub fn symbolic_gamma(n: usize) -> TorusMonomialPoint {
    TorusMonomialPoint::symbolic(n, n)
}

/// Exact limit of `C_{(λ,e)}(t, γ)` as `x^{-α_i} → 0` for all `i`, at a monomial `γ`.
pub fn asymptotic_leading_term(lambda: &[i64], gamma: &TorusMonomialPoint) -> Result<HeckeMatrix<RatQK>, CocycleError> {
    let n = lambda.len();
    let ev = SeriesEval::new(SeriesEval::torus_weights(n), 0);
    let g = DoubleElt::left_only(ExtAffineElt::translation(lambda));
    let m = cocycle_value(&ev, &g, &symbolic_t(n), gamma)?;
    constant_terms(&m)
}

/// The constant parts of a truncated matrix; fails if a weight-zero entry has
/// a nonconstant term (which would mean the limit does not exist).
pub fn constant_terms(m: &HeckeMatrix<TruncLaurent<RatQK>>) -> Result<HeckeMatrix<RatQK>, CocycleError> {
    if let Some(e) = m.entries().iter().find(|e| e.poly.terms().any(|(x, _)| !x.is_empty())) {
        return Err(CocycleError::NotExpandable(format!("{:?}", e.poly)));
    }
    Ok(m.map(|e| e.poly.coeff(&[])))
}

/// `η(Y^μ)(γ) = ∏_j η(Y_j)^{μ_j}`.
pub fn eta_y_power<C: Ring>(mu: &[i64], g: &SpectralPoint<C>, p: &Params<C>) -> HeckeMatrix<C> {
    let n = mu.len();
    let mut m = HeckeMatrix::identity(n);
    for (j, &e) in mu.iter().enumerate() {
        let f = if e >= 0 { eta_y(j + 1, g, p) } else { eta_y_inv(j + 1, g, p) };
        for _ in 0..e.unsigned_abs() {
            m = m.mul(&f);
        }
    }
    m
}

/// The predicted leading term `k^{⟨δ,λ⟩} η(T_{w₀} Y^{w₀(λ)} T_{w₀}^{-1})(γ)`.
pub fn asymptotic_prediction(lambda: &[i64], gamma: &TorusMonomialPoint) -> HeckeMatrix<RatQK> {
    let n = lambda.len();
    let p = Params::new(RatQK::q(), RatQK::k());
    let grp = sym_group(n);
    let sp = exact_spectral(gamma);
    let w0l: Vec<i64> = lambda.iter().rev().copied().collect();
    let y = eta_y_power(&w0l, &sp, &p);
    let tw0 = HeckeMatrix::left_mul_basis(n, grp.w0, &p);
    // T_{w₀}^{-1} = T_{i_r}^{-1} ⋯ T_{i_1}^{-1} for a reduced word i_1 ⋯ i_r
    let mut tw0_inv = HeckeMatrix::identity(n);
    for &i in grp.words[grp.w0].iter().rev() {
        tw0_inv = tw0_inv.mul(&HeckeMatrix::eta_t_inv(n, i, &p));
    }
    let d = TorusMonomialPoint::delta(n);
    let pair: i64 = d.iter().zip(lambda).map(|(a, b)| a * b).sum();
    tw0.mul(&y).mul(&tw0_inv).scale(&RatQK::qk(0, pair))
}

/// A monomial point as a spectral point over ℚ(q,k).
pub fn exact_spectral(g: &TorusMonomialPoint) -> SpectralPoint<RatQK> {
    assert!(g.is_scalar(), "spectral point must be a q,k-monomial point");
    SpectralPoint::new(
        g.coords.iter().map(|c| RatQK::qk(c.q, c.k)).collect(),
        g.coords.iter().map(|c| RatQK::qk(-c.q, -c.k)).collect(),
    )
}

/// `f ↦ C_{(e,w)}(·, ζ) f` on samples `(t, f(t))`.
pub fn shift_solution<E: CocycleEval>(
    ev: &E,
    w: &ExtAffineElt,
    zeta: &TorusMonomialPoint,
    samples: &[(TorusMonomialPoint, HeckeVector<E::C>)],
) -> Result<Vec<(TorusMonomialPoint, HeckeVector<E::C>)>, CocycleError> {
    let g = DoubleElt::right_only(w.clone());
    samples
        .iter()
        .map(|(t, f)| Ok((t.clone(), cocycle_value(ev, &g, t, zeta)?.apply(f))))
        .collect()
}

/// A cocycle value tagged with its coefficient mode.
#[derive(Clone, Debug, PartialEq)]
pub enum CocycleMatrix {
    Exact(HeckeMatrix<RatQK>),
    Laurent(HeckeMatrix<LaurentPoly<RatQK>>),
    Numeric(HeckeMatrix<Complex64>),
}

#[derive(Serialize)]
pub struct CocycleMatrixJson {
    pub mode: &'static str,
    pub n: usize,
    pub perms: Vec<Vec<usize>>,
    pub rows: Vec<Vec<serde_json::Value>>,
}

impl CocycleMatrix {
    pub fn mode(&self) -> &'static str {
        match self {
            CocycleMatrix::Exact(_) => "exact",
            CocycleMatrix::Laurent(_) => "laurent",
            CocycleMatrix::Numeric(_) => "numeric",
        }
    }

    pub fn mul(&self, o: &Self) -> Result<Self, CocycleError> {
        match (self, o) {
            (CocycleMatrix::Exact(a), CocycleMatrix::Exact(b)) => Ok(CocycleMatrix::Exact(a.mul(b))),
            (CocycleMatrix::Laurent(a), CocycleMatrix::Laurent(b)) => Ok(CocycleMatrix::Laurent(a.mul(b))),
            (CocycleMatrix::Numeric(a), CocycleMatrix::Numeric(b)) => Ok(CocycleMatrix::Numeric(a.mul(b))),
            _ => Err(CocycleError::ModeMismatch(self.mode(), o.mode())),
        }
    }

    /// Whether every Laurent entry is a single term (always true in the other modes).
    pub fn entries_are_monomial(&self) -> bool {
        match self {
            CocycleMatrix::Laurent(m) => m.entries().iter().all(|e| e.nterms() <= 1),
            _ => true,
        }
    }

    pub fn to_json(&self) -> CocycleMatrixJson {
        fn rows<C: Ring, F: Fn(&C) -> serde_json::Value>(m: &HeckeMatrix<C>, f: F) -> Vec<Vec<serde_json::Value>> {
            (0..m.dim()).map(|r| (0..m.dim()).map(|c| f(m.get(r, c))).collect()).collect()
        }
        let (n, rows) = match self {
            CocycleMatrix::Exact(m) => (m.n(), rows(m, |c| serde_json::Value::String(c.render()))),
            CocycleMatrix::Laurent(m) => (
                m.n(),
                rows(m, |c| serde_json::to_value(c.to_json_terms(2 * m.n())).expect("serialisable")),
            ),
            CocycleMatrix::Numeric(m) => (m.n(), rows(m, |c| serde_json::json!([c.re, c.im]))),
        };
        let perms = sym_group(n).perms.iter().map(|p| p.one_based()).collect();
        CocycleMatrixJson { mode: self.mode(), n, perms, rows }
    }
}

#[cfg(test)]
mod tests;
