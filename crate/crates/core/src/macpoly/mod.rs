//! Polynomial solutions `Q_λ` of the quantum KZ equations, symmetric
//! Macdonald polynomials obtained from them, Ruijsenaars operators and an
//! independent eigen-solver used as an oracle.

mod ruijsenaars;

pub use ruijsenaars::{elementary_at, monomial_symmetric, oracle_macdonald, ruijsenaars_apply, value_at_k_delta};

use crate::cocycle::{
    cocycle_value, symbolic_t, CocycleError, ExactEval, LaurentEval,
};
use crate::hecke::{sym_group, HeckeVector};
use crate::scalar::{LaurentPoly, Params, RatQK, Ring};
use crate::weyl::{dominance_order_leq, DoubleElt, ExtAffineElt, Perm, TorusMonomialPoint, TorusPoint};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MacError {
    #[error("weight {0:?} is not dominant (must be weakly decreasing)")]
    NotDominant(Vec<i64>),
    #[error("weight {0:?} is not a partition")]
    NotPartition(Vec<i64>),
    #[error(transparent)]
    Cocycle(#[from] CocycleError),
    #[error("operator result is not a Laurent polynomial: {0}")]
    DivisionFailure(String),
    #[error("eigenvalues of {0:?} and {1:?} coincide")]
    EigenCollision(Vec<i64>, Vec<i64>),
    #[error("N must be at least 2, got {0}")]
    BadRank(usize),
}

pub type Laurent = LaurentPoly<RatQK>;

fn params() -> Params<RatQK> {
    Params::new(RatQK::q(), RatQK::k())
}

/// `δ = (N-1, N-3, …, 1-N)`.
pub fn delta(n: usize) -> Vec<i64> {
    TorusMonomialPoint::delta(n)
}

/// The point `q^{-μ} k^{δ}`.
pub fn spectral_point(mu: &[i64]) -> TorusMonomialPoint {
    let neg: Vec<i64> = mu.iter().map(|x| -x).collect();
    TorusMonomialPoint::q_k_delta(&neg, 1)
}

/// Evaluate a Laurent polynomial in `x_1..x_N` at a `q,k`-monomial point.
pub fn eval_laurent(f: &Laurent, t: &TorusMonomialPoint) -> RatQK {
    let mut acc = RatQK::zero();
    for (e, c) in f.terms() {
        let (mut a, mut b) = (0i64, 0i64);
        for (i, &x) in e.iter().enumerate() {
            a += x as i64 * t.coords[i].q;
            b += x as i64 * t.coords[i].k;
        }
        acc = acc.plus(&c.times(&RatQK::qk(a, b)));
    }
    acc
}

/// `f(w^{-1} x)`, i.e. `x^e ↦ x^{w e}`.
pub fn permute_laurent(f: &Laurent, w: &Perm) -> Laurent {
    let n = w.n();
    Laurent::from_terms(f.terms().map(|(e, c)| {
        let full: Vec<i32> = (0..n).map(|i| e.get(i).copied().unwrap_or(0)).collect();
        (w.act_vec(&full), c.clone())
    }))
}

fn is_dominant(l: &[i64]) -> bool {
    l.windows(2).all(|w| w[0] >= w[1])
}

/// An `H₀`-valued Laurent polynomial in `x_1..x_N`, stored coordinatewise
/// in the `T_w` basis.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentHeckePoly {
    pub n: usize,
    pub vec: HeckeVector<Laurent>,
}

impl LaurentHeckePoly {
    pub fn eval_at(&self, t: &TorusMonomialPoint) -> HeckeVector<RatQK> {
        self.vec.map(|f| eval_laurent(f, t))
    }

    /// All exponent vectors with a nonzero coefficient.
    pub fn support(&self) -> Vec<Vec<i32>> {
        let mut s: Vec<Vec<i32>> = self
            .vec
            .coeffs()
            .iter()
            .flat_map(|f| f.terms().map(|(e, _)| crate::scalar::laurent::padded(e, self.n)).collect::<Vec<_>>())
            .collect();
        s.sort();
        s.dedup();
        s
    }

    /// The `H₀` coefficient of `x^e`.
    pub fn coefficient(&self, e: &[i32]) -> HeckeVector<RatQK> {
        self.vec.map(|f| f.coeff(e))
    }

    /// `Q(s_i x)` as a polynomial.
    pub fn permuted(&self, w: &Perm) -> Self {
        LaurentHeckePoly { n: self.n, vec: self.vec.map(|f| permute_laurent(f, w)) }
    }

    pub fn chi_plus(&self) -> Laurent {
        let p = params().map(|c| Laurent::constant(c.clone()));
        self.vec.chi_plus(&p)
    }

    pub fn to_json(&self) -> HeckePolyJson {
        HeckePolyJson {
            n: self.n,
            terms: self
                .support()
                .into_iter()
                .map(|e| HeckePolyTermJson {
                    entries: self.coefficient(&e).to_json_entries(|c| c.render()),
                    exponents: e,
                })
                .collect(),
        }
    }

    /// `supp ⊆ λ - Q₊`.
    pub fn is_triangular(&self, lambda: &[i64]) -> bool {
        self.support().iter().all(|e| {
            let e64: Vec<i64> = e.iter().map(|&x| x as i64).collect();
            dominance_order_leq(&e64, lambda).unwrap_or(false)
        })
    }

    /// `R_i(x_i/x_{i+1}) Q(s_i x) = Q(x)` with the denominator `1 - k² x_i/x_{i+1}` cleared.
    pub fn is_invariant_under_generator(&self, i: usize) -> bool {
        let n = self.n;
        let p = params();
        let pl = p.map(|c| Laurent::constant(c.clone()));
        let mut e = vec![0i32; n];
        e[i - 1] = 1;
        e[i] = -1;
        let z = Laurent::monomial(e, RatQK::one());
        let qs = self.permuted(&Perm::s(n, i)).vec;
        let lhs = crate::cocycle::r_numerator(n, i, &z, &pl).apply(&qs);
        let den = Laurent::one().minus(&pl.k.times(&pl.k).times(&z));
        lhs == self.vec.scale(&den)
    }

    /// `C_{(w,e)}(t) Q(w^{-1} t) = Q(t)` at a monomial point.
    pub fn is_invariant_at(&self, w: &Perm, t: &TorusMonomialPoint) -> Result<bool, CocycleError> {
        let n = self.n;
        let c = cocycle_value(
            &ExactEval::default(),
            &DoubleElt::left_only(ExtAffineElt::from_perm(w.clone())),
            t,
            &TorusMonomialPoint::ones(n),
        )?;
        let wt = t.permute(&w.inverse());
        Ok(c.apply(&self.eval_at(&wt)) == self.eval_at(t))
    }

    /// `C_{(w,e)}(t, γ) Q(w^{-1} t) = Q(t)` for affine `w`; `Q_λ` satisfies
    /// this at its central character `γ = q^λ k^{-δ}`.
    pub fn is_invariant_under(&self, w: &ExtAffineElt, t: &TorusMonomialPoint, gamma: &TorusMonomialPoint) -> Result<bool, CocycleError> {
        let c = cocycle_value(&ExactEval::default(), &DoubleElt::left_only(w.clone()), t, gamma)?;
        let wt = crate::weyl::act_affine(&w.inverse(), t);
        Ok(c.apply(&self.eval_at(&wt)) == self.eval_at(t))
    }
}

/// `Q_λ = C_{(e,-λ)}(x, q^λ k^{-δ}) v₊`.
pub fn q_lambda(lambda: &[i64]) -> Result<LaurentHeckePoly, MacError> {
    let n = lambda.len();
    if n < 2 {
        return Err(MacError::BadRank(n));
    }
    if !is_dominant(lambda) {
        return Err(MacError::NotDominant(lambda.to_vec()));
    }
    let neg: Vec<i64> = lambda.iter().map(|x| -x).collect();
    let gamma = TorusMonomialPoint::q_k_delta(lambda, -1);
    let g = DoubleElt::right_only(ExtAffineElt::translation(&neg));
    let m = cocycle_value(&LaurentEval::default(), &g, &symbolic_t(n), &gamma)?;
    let vp = HeckeVector::v_plus(n, &params()).map(|c| Laurent::constant(c.clone()));
    Ok(LaurentHeckePoly { n, vec: m.apply(&vp) })
}

/// `P(k²) = ∏_{i<j} (1 - k^{2(j-i+1)})/(1 - k^{2(j-i)})`.
pub fn poincare(n: usize) -> RatQK {
    let mut acc = RatQK::one();
    for i in 1..=n as i64 {
        for j in i + 1..=n as i64 {
            let num = RatQK::one().minus(&RatQK::qk(0, 2 * (j - i + 1)));
            let den = RatQK::one().minus(&RatQK::qk(0, 2 * (j - i)));
            acc = acc.times(&num.try_div(&den).expect("nonzero"));
        }
    }
    acc
}

/// A symmetric Laurent polynomial in `x_1..x_N` over ℚ(q,k).
#[derive(Clone, Debug, PartialEq)]
pub struct SymLaurentPoly {
    pub n: usize,
    pub poly: Laurent,
}

/// `Σ_e x^e Σ_w c_{e,w} T_w` with the `T_w` labelled by one-based permutations.
#[derive(Serialize)]
pub struct HeckePolyJson {
    pub n: usize,
    pub terms: Vec<HeckePolyTermJson>,
}

#[derive(Serialize)]
pub struct HeckePolyTermJson {
    pub exponents: Vec<i32>,
    pub entries: Vec<crate::hecke::VectorEntryJson>,
}

#[derive(Serialize)]
pub struct SymJson {
    pub n: usize,
    pub terms: Vec<SymTermJson>,
}

#[derive(Serialize)]
pub struct SymTermJson {
    pub exponents: Vec<i32>,
    pub coeff: String,
}

impl SymLaurentPoly {
    pub fn new(n: usize, poly: Laurent) -> Self {
        SymLaurentPoly { n, poly }
    }

    pub fn eval_at(&self, t: &TorusMonomialPoint) -> RatQK {
        eval_laurent(&self.poly, t)
    }

    pub fn is_symmetric(&self) -> bool {
        (1..self.n).all(|i| permute_laurent(&self.poly, &Perm::s(self.n, i)) == self.poly)
    }

    pub fn scale(&self, c: &RatQK) -> Self {
        SymLaurentPoly { n: self.n, poly: self.poly.scale(c) }
    }

    pub fn coeff(&self, e: &[i64]) -> RatQK {
        let e: Vec<i32> = e.iter().map(|&x| x as i32).collect();
        self.poly.coeff(&e)
    }

    pub fn to_json(&self) -> SymJson {
        SymJson {
            n: self.n,
            terms: self
                .poly
                .terms()
                .map(|(e, c)| SymTermJson {
                    exponents: crate::scalar::laurent::padded(e, self.n),
                    coeff: c.render(),
                })
                .collect(),
        }
    }

    /// Human-readable form such as `(k)/(k^2 + 1)*x1 + …`.
    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        for (e, c) in self.poly.terms().collect::<Vec<_>>().into_iter().rev() {
            let mono: Vec<String> = crate::scalar::laurent::padded(e, self.n)
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(i, &x)| if x == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, x) })
                .collect();
            let coeff = format!("({c})");
            parts.push(if mono.is_empty() { coeff } else { format!("{coeff}*{}", mono.join("*")) });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// `E_λ = P(k²)^{-1} χ₊(Q_λ)`.
pub fn macdonald_e(lambda: &[i64]) -> Result<SymLaurentPoly, MacError> {
    let q = q_lambda(lambda)?;
    let inv = poincare(lambda.len()).inverse().expect("nonzero");
    Ok(SymLaurentPoly::new(lambda.len(), q.chi_plus().scale(&inv)))
}

/// `k^{-⟨δ,λ⟩} ∏_{i<j} ∏_{m=0}^{λ_i-λ_j-1} (1 - q^{-m} k^{2(j-i+1)})/(1 - q^{-m} k^{2(j-i)})`.
pub fn evaluation_product(lambda: &[i64]) -> RatQK {
    let n = lambda.len();
    let d = delta(n);
    let pair: i64 = d.iter().zip(lambda).map(|(a, b)| a * b).sum();
    let mut acc = RatQK::qk(0, -pair);
    for i in 0..n {
        for j in i + 1..n {
            let gap = (j - i) as i64;
            for m in 0..(lambda[i] - lambda[j]) {
                let num = RatQK::one().minus(&RatQK::qk(-m, 2 * (gap + 1)));
                let den = RatQK::one().minus(&RatQK::qk(-m, 2 * gap));
                acc = acc.times(&num.try_div(&den).expect("nonzero"));
            }
        }
    }
    acc
}

/// Monic `P_λ`, its value at `k^δ` by substitution, and the closed product.
#[derive(Clone, Debug)]
pub struct MacdonaldP {
    pub e: SymLaurentPoly,
    pub p: SymLaurentPoly,
    pub leading: RatQK,
    pub value_at_k_delta: RatQK,
    pub product_formula: RatQK,
}

pub fn macdonald_p_and_eval(lambda: &[i64]) -> Result<MacdonaldP, MacError> {
    let e = macdonald_e(lambda)?;
    let leading = e.coeff(lambda);
    let p = e.scale(&leading.inverse().expect("leading coefficient nonzero"));
    let value = p.eval_at(&spectral_point(&vec![0; lambda.len()]));
    Ok(MacdonaldP { product_formula: evaluation_product(lambda), value_at_k_delta: value, e, p, leading })
}

/// All weakly decreasing nonnegative vectors of length `n` summing to `size`.
pub fn partitions(n: usize, size: i64) -> Vec<Vec<i64>> {
    fn rec(n: usize, left: i64, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == n {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for x in (0..=left.min(max)).rev() {
            cur.push(x);
            rec(n, left - x, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, size, size, &mut Vec::new(), &mut out);
    out
}

/// The vector identity for the leading coefficient:
/// `K₀(λ) = k^{⟨δ,λ⟩} ∏(…)^{-1} k^{-C(N,2)} P(k²) C_{(e,w₀)}(q^λ k^{-δ}) T_{w₀}`.
pub fn leading_coefficient_prediction(lambda: &[i64]) -> Result<HeckeVector<RatQK>, MacError> {
    let n = lambda.len();
    let grp = sym_group(n);
    let gamma = TorusMonomialPoint::q_k_delta(lambda, -1);
    let c = cocycle_value(
        &ExactEval::default(),
        &DoubleElt::right_only(ExtAffineElt::from_perm(grp.perms[grp.w0].clone())),
        &TorusMonomialPoint::ones(n),
        &gamma,
    )?;
    let v = c.apply(&HeckeVector::t_w0(n));
    let binom = (n * (n - 1) / 2) as i64;
    // evaluation_product already contains k^{-⟨δ,λ⟩}, so its inverse supplies k^{⟨δ,λ⟩}
    let scal = evaluation_product(lambda).inverse().expect("nonzero").times(&RatQK::qk(0, -binom)).times(&poincare(n));
    Ok(v.scale(&scal))
}

#[cfg(test)]
mod tests;
