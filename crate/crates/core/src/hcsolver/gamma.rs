//! Regrouping the series solution by `t`-degree, the closed form of `Γ₀`,
//! and coefficientwise self-duality.

use crate::hecke::HeckeVector;
use crate::scalar::{series_mul, Field, MultiIndex, Params, RatQK, Ring, TruncSeries};
use serde::Serialize;
use std::collections::BTreeMap;

/// `Γ_α(γ) = Σ_β K_{α,β} γ^β`, keyed by the x-part `α` of the multi-index.
pub fn gamma_series(sol: &TruncSeries<HeckeVector<RatQK>>, n: usize) -> BTreeMap<MultiIndex, TruncSeries<HeckeVector<RatQK>>> {
    let h = n - 1;
    let mut out: BTreeMap<MultiIndex, TruncSeries<HeckeVector<RatQK>>> = BTreeMap::new();
    for (m, v) in sol.iter() {
        out.entry(m[..h].to_vec())
            .or_insert_with(|| TruncSeries::zero(h, sol.degree()))
            .insert(m[h..].to_vec(), v.clone());
    }
    out
}

/// `Γ_α⁺ = χ₊(Γ_α)`.
pub fn gamma_plus_series(sol: &TruncSeries<HeckeVector<RatQK>>, n: usize) -> BTreeMap<MultiIndex, TruncSeries<RatQK>> {
    let p = Params::new(RatQK::q(), RatQK::k());
    gamma_series(sol, n).into_iter().map(|(a, s)| (a, s.map(|v| v.chi_plus(&p)))).collect()
}

/// The same regrouping reached the other way round: apply `χ₊` to every
/// `K_{α,β}` first, then collect by `α`.
pub fn chi_plus_then_group(sol: &TruncSeries<HeckeVector<RatQK>>, n: usize) -> BTreeMap<MultiIndex, TruncSeries<RatQK>> {
    let p = Params::new(RatQK::q(), RatQK::k());
    let h = n - 1;
    let scalar = sol.map(|v| v.chi_plus(&p));
    let mut out: BTreeMap<MultiIndex, TruncSeries<RatQK>> = BTreeMap::new();
    for (m, c) in scalar.iter() {
        out.entry(m[..h].to_vec()).or_insert_with(|| TruncSeries::zero(h, sol.degree())).insert(m[h..].to_vec(), c.clone());
    }
    out
}

/// `K(γ) = ∏_{i<j} (qγ_i/γ_j; q)_∞ / (qk²γ_i/γ_j; q)_∞` in `y^{α_r}`, each
/// factor expanded by the q-binomial theorem as
/// `Σ_m (k^{-2}; q)_m / (q; q)_m (qk² u)^m`.
pub fn k_gamma_series(n: usize, degree: u32) -> TruncSeries<RatQK> {
    let h = n - 1;
    let mut acc = TruncSeries::constant(h, degree, RatQK::one());
    for i in 0..n {
        for j in i + 1..n {
            let mono: Vec<u32> = (0..h).map(|r| u32::from(r >= i && r < j)).collect();
            let mut factor = TruncSeries::zero(h, degree);
            let mut c = RatQK::one();
            for m in 0..=degree {
                if m > 0 {
                    let mi = m as i64;
                    let num = RatQK::one().minus(&RatQK::qk(mi - 1, -2));
                    let den = RatQK::one().minus(&RatQK::qk(mi, 0));
                    c = c.times(&num).times(&RatQK::qk(1, 2)).times(&den.inv().expect("1 - q^m is invertible"));
                }
                let idx: MultiIndex = mono.iter().map(|x| x * m).collect();
                factor.insert(idx, c.clone());
            }
            acc = series_mul(&acc, &factor).expect("shape");
        }
    }
    acc
}

/// `Γ₀ ≡ K(γ) T_{w₀}` modulo degree `D`.
pub fn gamma0_matches(sol: &TruncSeries<HeckeVector<RatQK>>, n: usize) -> bool {
    let g = gamma_series(sol, n);
    let zero = vec![0u32; n - 1];
    let expect = k_gamma_series(n, sol.degree()).map(|c| HeckeVector::t_w0(n).scale(c));
    g.get(&zero).is_some_and(|g0| *g0 == expect)
}

/// `Γ₀⁺ ≡ k^{C(N,2)} K(γ)` modulo degree `D`.
pub fn gamma0_plus_matches(sol: &TruncSeries<HeckeVector<RatQK>>, n: usize) -> bool {
    let g = gamma_plus_series(sol, n);
    let binom = (n * (n - 1) / 2) as i64;
    let expect = k_gamma_series(n, sol.degree()).map(|c| c.times(&RatQK::qk(0, binom)));
    g.get(&vec![0u32; n - 1]).is_some_and(|g0| *g0 == expect)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityViolation {
    pub alpha: MultiIndex,
    pub beta: MultiIndex,
}

/// Every `(α, β)` with `K_{α,β} ≠ C_ι(K_{β,α})`.
pub fn self_duality_check(sol: &TruncSeries<HeckeVector<RatQK>>, n: usize) -> Vec<DualityViolation> {
    let h = n - 1;
    let mut bad = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (m, _) in sol.iter() {
        let (a, b) = (m[..h].to_vec(), m[h..].to_vec());
        let mut sw = b.clone();
        sw.extend_from_slice(&a);
        for key in [m.clone(), sw] {
            if !seen.insert(key.clone()) {
                continue;
            }
            let (a, b) = (key[..h].to_vec(), key[h..].to_vec());
            let mut dual = b.clone();
            dual.extend_from_slice(&a);
            let lhs = sol.get(&key).cloned().unwrap_or_else(|| HeckeVector::zero(n));
            let rhs = sol.get(&dual).map(|v| v.c_iota()).unwrap_or_else(|| HeckeVector::zero(n));
            if lhs != rhs {
                bad.push(DualityViolation { alpha: a, beta: b });
            }
        }
    }
    bad
}
