//! Numeric evaluation of `Φ_κ = W_κ Ψ` and the relations it satisfies.

use super::HcError;
use crate::cocycle::{cocycle_value, shift_solution, symbolic_gamma, symbolic_t, CocycleError, ExactEval, NumericEval, SingularKind, SingularSetPredicate};
use crate::hecke::{sym_group, HeckeMatrix, HeckeVector};
use crate::macpoly::LaurentHeckePoly;
use crate::scalar::{default_terms, qpoch, theta, MultiIndex, Params, RatQK, TruncSeries};
use crate::weyl::{ComplexPoint, DoubleElt, ExtAffineElt, Perm, TorusMonomialPoint};
use nalgebra::DMatrix;
use num_complex::Complex64 as C64;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NumericParams {
    pub q: C64,
    pub k: C64,
    pub kappa: C64,
    pub theta_terms: usize,
}

impl NumericParams {
    pub fn new(q: C64, k: C64, kappa: C64) -> Self {
        NumericParams { q, k, kappa, theta_terms: default_terms(q) }
    }

    pub fn with_kappa(&self, kappa: C64) -> Self {
        NumericParams { kappa, ..*self }
    }

    fn theta(&self, z: C64) -> Result<C64, HcError> {
        Ok(theta(z, self.q, self.theta_terms)?)
    }

    fn hecke(&self) -> Params<C64> {
        Params::new(self.q, self.k)
    }
}

/// Sup norm of a complex Hecke vector.
pub fn vnorm(v: &HeckeVector<C64>) -> f64 {
    v.coeffs().iter().map(|c| c.norm()).fold(0.0, f64::max)
}

fn rel_diff(a: &HeckeVector<C64>, b: &HeckeVector<C64>) -> f64 {
    vnorm(&a.sub(b)) / vnorm(b).max(f64::MIN_POSITIVE)
}

fn eval_exact_matrix(m: &HeckeMatrix<RatQK>, p: &NumericParams) -> HeckeMatrix<C64> {
    m.map(|c| c.eval_complex(p.q, p.k))
}

/// `W_κ(t, γ) = ∏_i θ(κ t_i/γ_{N+1-i}) / (θ(κ k^{⟨δ,ε_i⟩} t_i) θ(κ k^{-⟨δ,ε_i⟩}/γ_{N+1-i}))`.
pub fn w_kappa(t: &[C64], g: &[C64], p: &NumericParams) -> Result<C64, HcError> {
    let n = t.len();
    let mut acc = C64::new(1.0, 0.0);
    for i in 0..n {
        let d = (n as i32) - 1 - 2 * i as i32;
        let gi = g[n - 1 - i];
        let kd = p.k.powi(d);
        acc *= p.theta(p.kappa * t[i] / gi)? / (p.theta(p.kappa * kd * t[i])? * p.theta(p.kappa / (kd * gi))?);
    }
    Ok(acc)
}

/// The monomial factor in `W(q^{-λ}t, q^μ γ) = k^{-⟨δ,λ+μ⟩} t^{w₀(μ)} γ^{-w₀(λ)} q^{-⟨w₀(λ),μ⟩} W(t, γ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WShift {
    pub t_exp: Vec<i64>,
    pub gamma_exp: Vec<i64>,
    pub q_exp: i64,
    pub k_exp: i64,
}

impl WShift {
    pub fn new(lambda: &[i64], mu: &[i64]) -> Self {
        let n = lambda.len();
        let delta = TorusMonomialPoint::delta(n);
        let w0l: Vec<i64> = lambda.iter().rev().copied().collect();
        let w0m: Vec<i64> = mu.iter().rev().copied().collect();
        WShift {
            k_exp: -delta.iter().zip(lambda.iter().zip(mu)).map(|(d, (l, m))| d * (l + m)).sum::<i64>(),
            q_exp: -w0l.iter().zip(mu).map(|(a, b)| a * b).sum::<i64>(),
            t_exp: w0m,
            gamma_exp: w0l.iter().map(|x| -x).collect(),
        }
    }

    pub fn eval(&self, t: &[C64], g: &[C64], p: &NumericParams) -> C64 {
        let mut acc = p.q.powi(self.q_exp as i32) * p.k.powi(self.k_exp as i32);
        for (x, &e) in t.iter().zip(&self.t_exp) {
            acc *= x.powi(e as i32);
        }
        for (x, &e) in g.iter().zip(&self.gamma_exp) {
            acc *= x.powi(e as i32);
        }
        acc
    }
}

fn shift_point(t: &[C64], q: C64, lambda: &[i64], sign: i32) -> Vec<C64> {
    t.iter().zip(lambda).map(|(x, &l)| x * q.powi(sign * l as i32)).collect()
}

/// `C_{(λ,μ)}(t, γ)` at complex points.
pub fn numeric_connection(lambda: &[i64], mu: &[i64], t: &[C64], g: &[C64], p: &NumericParams) -> Result<HeckeMatrix<C64>, CocycleError> {
    let n = t.len();
    let ev = NumericEval::new(p.q, p.k, t.iter().chain(g).copied().collect());
    let el = DoubleElt::pair(ExtAffineElt::translation(lambda), ExtAffineElt::translation(mu));
    cocycle_value(&ev, &el, &symbolic_t(n), &symbolic_gamma(n))
}

/// `C_{(e,w)}(γ)` at a complex point.
pub fn numeric_right_finite(w: &Perm, g: &[C64], p: &NumericParams) -> Result<HeckeMatrix<C64>, CocycleError> {
    let n = g.len();
    let ev = NumericEval::new(p.q, p.k, vec![C64::new(1.0, 0.0); n].into_iter().chain(g.iter().copied()).collect());
    cocycle_value(&ev, &DoubleElt::right_only(ExtAffineElt::from_perm(w.clone())), &symbolic_t(n), &symbolic_gamma(n))
}

/// A value of `Φ_κ` with the truncation estimate (last shell relative to
/// the total) and the shifts `λ = a ρ`, `μ = b ρ` used to reach the sector.
#[derive(Clone, Debug)]
pub struct PhiValue {
    pub value: HeckeVector<C64>,
    pub residual: f64,
    pub shift_t: u32,
    pub shift_gamma: u32,
}

/// Numeric coefficients `K_{α,β}` plus everything needed to evaluate `Φ_κ`.
#[derive(Clone, Debug)]
pub struct PhiEvaluator {
    pub n: usize,
    pub params: NumericParams,
    pub degree: u32,
    pub sector: f64,
    coeffs: Vec<(MultiIndex, HeckeVector<C64>)>,
}

impl PhiEvaluator {
    pub fn from_exact(sol: &TruncSeries<HeckeVector<RatQK>>, n: usize, params: NumericParams) -> Self {
        let coeffs = sol.iter().map(|(m, v)| (m.clone(), v.map(|c| c.eval_complex(params.q, params.k)))).collect();
        PhiEvaluator { n, params, degree: sol.degree(), sector: 0.1, coeffs }
    }

    pub fn from_numeric(sol: &TruncSeries<HeckeVector<C64>>, n: usize, params: NumericParams) -> Self {
        let coeffs = sol.iter().map(|(m, v)| (m.clone(), v.clone())).collect();
        PhiEvaluator { n, params, degree: sol.degree(), sector: 0.1, coeffs }
    }

    pub fn with_kappa(&self, kappa: C64) -> Self {
        PhiEvaluator { params: self.params.with_kappa(kappa), ..self.clone() }
    }

    /// `(x^{-α_r})_r` followed by `(y^{α_r})_r`.
    pub fn z_coords(t: &[C64], g: &[C64]) -> Vec<C64> {
        let n = t.len();
        let mut z: Vec<C64> = (0..n - 1).map(|r| t[r + 1] / t[r]).collect();
        z.extend((0..n - 1).map(|r| g[r] / g[r + 1]));
        z
    }

    /// The truncated series `Σ K_{α,β} t^{-α} γ^β` and its last-shell norm.
    pub fn psi_series(&self, t: &[C64], g: &[C64]) -> (HeckeVector<C64>, f64) {
        let z = Self::z_coords(t, g);
        let mut acc = HeckeVector::zero(self.n);
        let mut last = HeckeVector::zero(self.n);
        for (m, v) in &self.coeffs {
            let mono = m.iter().zip(&z).fold(C64::new(1.0, 0.0), |a, (&e, zz)| a * zz.powu(e));
            let term = v.scale(&mono);
            if m.iter().sum::<u32>() == self.degree {
                last = last.add(&term);
            }
            acc = acc.add(&term);
        }
        let rel = vnorm(&last) / vnorm(&acc).max(f64::MIN_POSITIVE);
        (acc, rel)
    }

    fn steps_into_sector(&self, z: &[C64]) -> Result<u32, HcError> {
        let big = z.iter().map(|x| x.norm()).fold(0.0, f64::max);
        let r = self.params.q.norm();
        let mut m = 0u32;
        let mut cur = big;
        while cur > self.sector {
            cur *= r;
            m += 1;
            if m > 400 {
                return Err(HcError::NotInSector(format!("|z| = {big}")));
            }
        }
        Ok(m)
    }

    /// `Φ_κ(t, γ) = C_{(λ,μ)}(t, γ) W_κ(t', γ') Ψ(t', γ')` with
    /// `(t', γ') = (q^{-λ} t, q^μ γ)` in the sector `max |z| ≤ sector`.
    pub fn phi(&self, t: &[C64], g: &[C64]) -> Result<PhiValue, HcError> {
        self.phi_with(t, g, true, true)
    }

    /// As [`Self::phi`], but a block that may not be shifted must already
    /// lie in the sector. Relations that move `t` (or `γ`) are only a test
    /// of `Ψ` when that block is summed directly; otherwise both sides
    /// reduce to the same sector point and the check is the cocycle law.
    pub fn phi_with(&self, t: &[C64], g: &[C64], shift_t: bool, shift_gamma: bool) -> Result<PhiValue, HcError> {
        let n = self.n;
        let h = n - 1;
        let z = Self::z_coords(t, g);
        let a = self.steps_into_sector(&z[..h])?;
        let b = self.steps_into_sector(&z[h..])?;
        if (a > 0 && !shift_t) || (b > 0 && !shift_gamma) {
            return Err(HcError::NotInSector(format!("z = {z:?} with sector {}", self.sector)));
        }
        let rho: Vec<i64> = (0..n).map(|i| (n - 1 - i) as i64).collect();
        let lam: Vec<i64> = rho.iter().map(|x| x * a as i64).collect();
        let mu: Vec<i64> = rho.iter().map(|x| x * b as i64).collect();
        let ts = shift_point(t, self.params.q, &lam, -1);
        let gs = shift_point(g, self.params.q, &mu, 1);
        let (psi, residual) = self.psi_series(&ts, &gs);
        let mut value = psi.scale(&w_kappa(&ts, &gs, &self.params)?);
        if a > 0 || b > 0 {
            value = numeric_connection(&lam, &mu, t, g, &self.params)?.apply(&value);
        }
        Ok(PhiValue { value, residual, shift_t: a, shift_gamma: b })
    }

    /// `χ₊(Φ_κ)(t, γ)`.
    pub fn phi_plus(&self, t: &[C64], g: &[C64]) -> Result<C64, HcError> {
        self.phi_plus_with(t, g, true, true)
    }

    fn phi_plus_with(&self, t: &[C64], g: &[C64], st: bool, sg: bool) -> Result<C64, HcError> {
        Ok(self.phi_with(t, g, st, sg)?.value.chi_plus(&self.params.hecke()))
    }

    /// `‖C_{(λ,μ)}(t,γ) Φ(q^{-λ}t, q^μ γ) - Φ(t,γ)‖ / ‖Φ(t,γ)‖`; a block
    /// that is shifted is summed directly at both points.
    pub fn bqkz_residual(&self, t: &[C64], g: &[C64], lambda: &[i64], mu: &[i64]) -> Result<f64, HcError> {
        let free_t = lambda.iter().all(|&x| x == 0);
        let free_g = mu.iter().all(|&x| x == 0);
        let base = self.phi_with(t, g, free_t, free_g)?.value;
        let ts = shift_point(t, self.params.q, lambda, -1);
        let gs = shift_point(g, self.params.q, mu, 1);
        let shifted = numeric_connection(lambda, mu, t, g, &self.params)?.apply(&self.phi_with(&ts, &gs, free_t, free_g)?.value);
        Ok(rel_diff(&shifted, &base))
    }

    /// `‖Φ(t,γ) - C_ι Φ(γ^{-1}, t^{-1})‖ / ‖Φ(t,γ)‖`.
    pub fn self_duality_residual(&self, t: &[C64], g: &[C64]) -> Result<f64, HcError> {
        let base = self.phi(t, g)?.value;
        let ti: Vec<C64> = t.iter().map(|x| x.inv()).collect();
        let gi: Vec<C64> = g.iter().map(|x| x.inv()).collect();
        Ok(rel_diff(&self.phi(&gi, &ti)?.value.c_iota(), &base))
    }

    /// Residuals of `L^x_{e_1} Φ⁺ = e_1(γ^{-1}) Φ⁺` and of the dual equation
    /// `L^y_{e_1} Φ⁺ = e_1(t) Φ⁺`, where `L^y = ι L^x ι` acts as
    /// `Σ_r A_r(γ^{-1}) f(t, q^{ε_r} γ)`. The shifted block is summed directly.
    pub fn bispectral_residuals(&self, t: &[C64], g: &[C64]) -> Result<(f64, f64), HcError> {
        let n = self.n;
        let (q, k) = (self.params.q, self.params.k);
        let coeff = |x: &[C64], r: usize| {
            (0..n).filter(|&s| s != r).fold(C64::new(1.0, 0.0), |a, s| a * (k * x[r] - x[s] / k) / (x[r] - x[s]))
        };
        let base_x = self.phi_plus_with(t, g, false, true)?;
        let base_y = self.phi_plus_with(t, g, true, false)?;
        let gi: Vec<C64> = g.iter().map(|x| x.inv()).collect();
        let mut lx = C64::new(0.0, 0.0);
        let mut ly = C64::new(0.0, 0.0);
        for r in 0..n {
            let mut ts = t.to_vec();
            ts[r] /= q;
            lx += coeff(t, r) * self.phi_plus_with(&ts, g, false, true)?;
            let mut gs = g.to_vec();
            gs[r] *= q;
            ly += coeff(&gi, r) * self.phi_plus_with(t, &gs, true, false)?;
        }
        let e1g: C64 = gi.iter().sum();
        let e1t: C64 = t.iter().sum();
        let rx = (lx - e1g * base_x).norm() / (e1g * base_x).norm().max(f64::MIN_POSITIVE);
        let ry = (ly - e1t * base_y).norm() / (e1t * base_y).norm().max(f64::MIN_POSITIVE);
        Ok((rx, ry))
    }
}

/// `r_κ = θ(κ)^N k^{-C(N,2)} ∏_{i<j} (k^{2(j-i+1)}; q)_∞ / (k^{2(j-i)}; q)_∞`.
pub fn r_kappa(n: usize, p: &NumericParams) -> Result<C64, HcError> {
    let mut acc = p.theta(p.kappa)?.powi(n as i32) * p.k.powi(-((n * (n - 1) / 2) as i32));
    for i in 0..n {
        for j in i + 1..n {
            let d = (j - i) as i32;
            acc *= qpoch(p.k.powi(2 * (d + 1)), p.q, p.theta_terms)? / qpoch(p.k.powi(2 * d), p.q, p.theta_terms)?;
        }
    }
    Ok(acc)
}

/// `γ = q^a k^{cδ}` at numeric `q, k`.
pub fn numeric_point(a: &[i64], c: i64, p: &NumericParams) -> Vec<C64> {
    let d = TorusMonomialPoint::delta(a.len());
    a.iter().zip(&d).map(|(&x, &y)| p.q.powi(x as i32) * p.k.powi((c * y) as i32)).collect()
}

/// Evaluate an exact `H₀`-valued Laurent polynomial at numeric `q, k, t`.
pub fn eval_hecke_poly(f: &LaurentHeckePoly, t: &[C64], p: &NumericParams) -> HeckeVector<C64> {
    let invs: Vec<C64> = t.iter().map(|x| x.inv()).collect();
    f.vec.map(|c| c.eval_with(t, &invs, |r| r.eval_complex(p.q, p.k)))
}

#[derive(Clone, Debug, Serialize)]
pub struct PolredPoint {
    pub t: Vec<[f64; 2]>,
    pub relative_error: f64,
    pub truncation_residual: f64,
}

/// `Q_λ(t)` against `r_κ C_{(e,w₀)}(q^λ k^{-δ}) Φ_κ(t, q^{w₀(λ)} k^δ)`.
pub fn polred_check(lambda: &[i64], q_lambda: &LaurentHeckePoly, ev: &PhiEvaluator, points: &[Vec<C64>]) -> Result<Vec<PolredPoint>, HcError> {
    let n = lambda.len();
    let p = &ev.params;
    let grp = sym_group(n);
    let c = cocycle_value(
        &ExactEval::default(),
        &DoubleElt::right_only(ExtAffineElt::from_perm(grp.perms[grp.w0].clone())),
        &TorusMonomialPoint::ones(n),
        &TorusMonomialPoint::q_k_delta(lambda, -1),
    )?;
    let c = eval_exact_matrix(&c, p).scale(&r_kappa(n, p)?);
    let w0l: Vec<i64> = lambda.iter().rev().copied().collect();
    let gamma = numeric_point(&w0l, 1, p);
    points
        .iter()
        .map(|t| {
            let lhs = eval_hecke_poly(q_lambda, t, p);
            let phi = ev.phi(t, &gamma)?;
            let rhs = c.apply(&phi.value);
            Ok(PolredPoint {
                t: t.iter().map(|x| [x.re, x.im]).collect(),
                relative_error: rel_diff(&rhs, &lhs),
                truncation_residual: phi.residual,
            })
        })
        .collect()
}

/// `|W_κ(t, w₀(q^λ k^{-δ})) / (k^{⟨δ,λ⟩} θ(κ)^{-N} t^λ) - 1|`.
pub fn w_evaluation_residual(lambda: &[i64], t: &[C64], p: &NumericParams) -> Result<f64, HcError> {
    let n = lambda.len();
    let w0l: Vec<i64> = lambda.iter().rev().copied().collect();
    let g = numeric_point(&w0l, 1, p);
    let w = w_kappa(t, &g, p)?;
    let pair: i64 = TorusMonomialPoint::delta(n).iter().zip(lambda).map(|(a, b)| a * b).sum();
    let mut expect = p.k.powi(pair as i32) / p.theta(p.kappa)?.powi(n as i32);
    for (x, &l) in t.iter().zip(lambda) {
        expect *= x.powi(l as i32);
    }
    Ok((w / expect - 1.0).norm())
}

#[derive(Clone, Debug, Serialize)]
pub struct FundamentalSample {
    pub t: Vec<[f64; 2]>,
    pub min_singular_value: f64,
    pub qkz_residual: f64,
}

fn to_dmatrix(m: &HeckeMatrix<C64>) -> DMatrix<C64> {
    DMatrix::from_fn(m.dim(), m.dim(), |r, c| *m.get(r, c))
}

/// Whether `ζ` is numerically on `𝒮` or has `ζ^α ∈ q^ℤ` for a root `α`.
pub fn degenerate_zeta(zeta: &[C64], p: &NumericParams) -> bool {
    let pred = SingularSetPredicate::new(SingularKind::S);
    if pred.contains_numeric(&ComplexPoint::new(zeta.to_vec(), p.q), p.k) {
        return true;
    }
    let n = zeta.len();
    (0..n).any(|i| (0..n).any(|j| i != j && pred.near_q_power(zeta[i] / zeta[j], p.q, &|_| true)))
}

impl PhiEvaluator {
    /// `U_ζ(t)`: column `w` is `C_{(e,w)}(ζ) Φ_κ(t, w^{-1} ζ)`.
    pub fn fundamental_matrix(&self, zeta: &[C64], t: &[C64]) -> Result<HeckeMatrix<C64>, HcError> {
        self.fundamental_matrix_with(zeta, t, true)
    }

    fn fundamental_matrix_with(&self, zeta: &[C64], t: &[C64], shift_t: bool) -> Result<HeckeMatrix<C64>, HcError> {
        let n = self.n;
        let grp = sym_group(n);
        let cols: Vec<HeckeVector<C64>> = grp
            .perms
            .iter()
            .map(|w| {
                let wz = w.inverse().act_vec(zeta);
                Ok(numeric_right_finite(w, zeta, &self.params)?.apply(&self.phi_with(t, &wz, shift_t, true)?.value))
            })
            .collect::<Result<_, HcError>>()?;
        Ok(HeckeMatrix::from_columns(n, &cols))
    }

    /// Smallest singular value of `U_ζ(t)` and the quantum KZ residual
    /// `max_j ‖C_{(ε_j,e)}(t,ζ) U_ζ(q^{-ε_j} t) - U_ζ(t)‖ / ‖U_ζ(t)‖`, with `t`
    /// and every `q^{-ε_j} t` summed directly in the sector.
    pub fn fundamental_matrix_sample(&self, zeta: &[C64], points: &[Vec<C64>]) -> Result<Vec<FundamentalSample>, HcError> {
        if degenerate_zeta(zeta, &self.params) {
            return Err(HcError::Singular(format!("ζ = {zeta:?}")));
        }
        let n = self.n;
        points
            .iter()
            .map(|t| {
                let u = self.fundamental_matrix_with(zeta, t, false)?;
                let du = to_dmatrix(&u);
                let smin = du.clone().svd(false, false).singular_values.min();
                let unorm = du.iter().map(|c| c.norm()).fold(0.0, f64::max);
                let mut res = 0.0f64;
                for j in 0..n {
                    let mut eps = vec![0i64; n];
                    eps[j] = 1;
                    let ts = shift_point(t, self.params.q, &eps, -1);
                    let us = self.fundamental_matrix_with(zeta, &ts, false)?;
                    let c = numeric_connection(&eps, &vec![0; n], t, zeta, &self.params)?;
                    let diff = to_dmatrix(&c.mul(&us)) - &du;
                    res = res.max(diff.iter().map(|c| c.norm()).fold(0.0, f64::max) / unorm);
                }
                Ok(FundamentalSample { t: t.iter().map(|x| [x.re, x.im]).collect(), min_singular_value: smin, qkz_residual: res })
            })
            .collect()
    }

    /// Coordinates in the `U_ζ` basis of a second solution, built with
    /// another `κ` and moved by `shift_solution`, at `t` and at `q^{-λ} t`;
    /// returns the largest relative change of the coordinates. Both `t` and
    /// `q^{-λ} t` are summed directly.
    pub fn basis_coordinate_drift(&self, zeta: &[C64], other_kappa: C64, w: &Perm, t: &[C64], lambda: &[i64]) -> Result<f64, HcError> {
        let n = self.n;
        let other = self.with_kappa(other_kappa);
        let wz = w.inverse().act_vec(zeta);
        let coords = |tt: &[C64]| -> Result<DMatrix<C64>, HcError> {
            let f = other.phi_with(tt, &wz, false, true)?.value;
            let ev = NumericEval::new(self.params.q, self.params.k, tt.iter().chain(zeta).copied().collect());
            let zeta_sym = symbolic_gamma(n);
            let moved = shift_solution(&ev, &ExtAffineElt::from_perm(w.clone()), &zeta_sym, &[(symbolic_t(n), f)])?;
            let g = &moved[0].1;
            let u = to_dmatrix(&self.fundamental_matrix_with(zeta, tt, false)?);
            let rhs = DMatrix::from_column_slice(g.coeffs().len(), 1, g.coeffs());
            u.lu().solve(&rhs).ok_or_else(|| HcError::Singular("U_ζ(t) not invertible".into()))
        };
        let a = coords(t)?;
        let b = coords(&shift_point(t, self.params.q, lambda, -1))?;
        let scale = a.iter().map(|c| c.norm()).fold(0.0, f64::max);
        Ok((a - b).iter().map(|c| c.norm()).fold(0.0, f64::max) / scale)
    }
}

/// `max ‖K^{exact}_m(q,k) - K^{numeric}_m‖ / max(1, ‖K^{exact}_m‖)` over all coefficients.
pub fn cross_check(exact: &TruncSeries<HeckeVector<RatQK>>, numeric: &TruncSeries<HeckeVector<C64>>, p: &NumericParams) -> f64 {
    let n = exact.iter().next().map_or(1, |(_, v)| v.n());
    let mut worst = 0.0f64;
    let keys: std::collections::BTreeSet<_> = exact.iter().map(|(m, _)| m.clone()).chain(numeric.iter().map(|(m, _)| m.clone())).collect();
    for m in keys {
        let a = exact.get(&m).map(|v| v.map(|c| c.eval_complex(p.q, p.k))).unwrap_or_else(|| HeckeVector::zero(n));
        let b = numeric.get(&m).cloned().unwrap_or_else(|| HeckeVector::zero(n));
        worst = worst.max(vnorm(&a.sub(&b)) / vnorm(&a).max(1.0));
    }
    worst
}
