//! The BqKZ system gauged by `W_κ`, in the variables `z_i = x^{-α_i}`,
//! `z_{N-1+j} = y^{α_j}`.

use super::system::QDiffSystem;
use super::HcError;
use crate::cocycle::{cocycle_value, symbolic_gamma, symbolic_t, SeriesEval};
use crate::hecke::{sym_group, HeckeMatrix};
use crate::scalar::{laurent::exp_at, LaurentPoly, MultiIndex, RatQK, Ring, TruncSeries};
use crate::weyl::{act_affine, varpi_vec, DoubleElt, ExtAffineElt, TorusMonomialPoint};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    /// `A_i = D_{(ϖ_i, e)}`.
    A(usize),
    /// `B_j = D_{(e, ϖ_j)}`.
    B(usize),
}

/// Generators `A_1..A_{N-1}`, `B_1..B_{N-1}` to total degree `D`.
#[derive(Clone, Debug)]
pub struct GaugedBqKZ {
    pub n: usize,
    pub degree: u32,
    pub a: Vec<TruncSeries<HeckeMatrix<RatQK>>>,
    pub b: Vec<TruncSeries<HeckeMatrix<RatQK>>>,
}

type Laurent = LaurentPoly<RatQK>;

/// Coordinates of `-a` (x-part) and `b` (y-part) in the simple-root basis,
/// or `None` outside `x^{-Q₊} y^{Q₊}`.
fn z_index(e: &[i32], n: usize) -> Option<MultiIndex> {
    let mut m = Vec::with_capacity(2 * (n - 1));
    for (offset, sign) in [(0usize, -1i64), (n, 1)] {
        let mut partial = 0i64;
        for r in 0..n {
            partial += exp_at(e, offset + r) as i64;
            if r + 1 < n {
                let c = sign * partial;
                if c < 0 {
                    return None;
                }
                m.push(c as u32);
            }
        }
        if partial != 0 {
            return None;
        }
    }
    Some(m)
}

/// Regroup a matrix of Laurent polynomials in `x, y` as a series in `z`.
fn to_z_series(m: &HeckeMatrix<Laurent>, n: usize, degree: u32) -> Result<TruncSeries<HeckeMatrix<RatQK>>, HcError> {
    let dim = m.dim();
    let mut by_index: BTreeMap<MultiIndex, HeckeMatrix<RatQK>> = BTreeMap::new();
    for r in 0..dim {
        for c in 0..dim {
            for (e, coeff) in m.get(r, c).terms() {
                let idx = z_index(e, n).ok_or_else(|| HcError::OutsideCone(format!("{e:?}")))?;
                let cell = by_index.entry(idx).or_insert_with(|| HeckeMatrix::zero(n));
                let v = cell.get(r, c).plus(coeff);
                cell.set(r, c, v);
            }
        }
    }
    let mut s = TruncSeries::zero(2 * (n - 1), degree);
    for (idx, mat) in by_index {
        s.insert(idx, mat);
    }
    Ok(s)
}

/// `A_i = k^{-⟨δ,ϖ_i⟩} γ^{-w₀(ϖ_i)} η(π)(γ)^i C_{(u,e)}(π^{-i} t)` where
/// `ϖ_i = π^i u` with `u` finite. Each factor has entries of nonnegative
/// z-degree, so truncating the factors separately is exact.
fn build_a(n: usize, i: usize, degree: u32) -> Result<TruncSeries<HeckeMatrix<RatQK>>, HcError> {
    let varpi = varpi_vec(n, i);
    let pi_i = ExtAffineElt::pi(n).pow(i as i64);
    let u = pi_i.inverse().mul(&ExtAffineElt::translation(&varpi));
    debug_assert!(u.is_finite());
    let ev = SeriesEval::new(SeriesEval::torus_weights(n), degree as i64);
    let t = act_affine(&pi_i.inverse(), &symbolic_t(n));
    let gamma = symbolic_gamma(n);
    let finite = cocycle_value(&ev, &DoubleElt::left_only(u), &t, &gamma)?.map(|c| c.poly.clone());

    let gvals: Vec<Laurent> = (0..n).map(|j| Laurent::var_pow(n + j, 1)).collect();
    let mut pre = HeckeMatrix::identity(n);
    for _ in 0..i {
        pre.right_mul_eta_pi(&gvals);
    }
    // γ^{-w₀(ϖ_i)} k^{-⟨δ,ϖ_i⟩}
    let w0v: Vec<i64> = varpi.iter().rev().copied().collect();
    let delta = TorusMonomialPoint::delta(n);
    let pair: i64 = delta.iter().zip(&varpi).map(|(a, b)| a * b).sum();
    let mut e = vec![0i32; 2 * n];
    for (j, x) in w0v.iter().enumerate() {
        e[n + j] = -(*x as i32);
    }
    let scal = Laurent::monomial(e, RatQK::qk(0, -pair));
    let pre = pre.scale(&scal);
    let pre_s = to_z_series(&pre, n, degree)?;
    let fin_s = to_z_series(&finite, n, degree)?;
    Ok(pre_s.mul_with(&fin_s, |a, b| a.mul(b))?)
}

/// `B_j(t, γ) = C_ι A_j(γ^{-1}, t^{-1}) C_ι`: swap the x- and y-blocks of
/// the multi-index and conjugate by `C_ι`.
fn b_from_a(a: &TruncSeries<HeckeMatrix<RatQK>>, n: usize) -> TruncSeries<HeckeMatrix<RatQK>> {
    let h = n - 1;
    let mut s = TruncSeries::zero(2 * h, a.degree());
    for (m, v) in a.iter() {
        let mut sw = m[h..].to_vec();
        sw.extend_from_slice(&m[..h]);
        s.insert(sw, v.c_iota());
    }
    s
}

/// One gauged generator; `A_N` and `B_N` are included for completeness.
pub fn build_gauged_generator(n: usize, kind: GeneratorKind, degree: u32) -> Result<TruncSeries<HeckeMatrix<RatQK>>, HcError> {
    match kind {
        GeneratorKind::A(i) if (1..=n).contains(&i) => build_a(n, i, degree),
        GeneratorKind::B(j) if (1..=n).contains(&j) => Ok(b_from_a(&build_a(n, j, degree)?, n)),
        _ => Err(HcError::BadIndex(format!("{kind:?} for N = {n}"))),
    }
}

impl GaugedBqKZ {
    pub fn new(n: usize, degree: u32) -> Result<Self, HcError> {
        if n < 2 {
            return Err(HcError::BadIndex(format!("N = {n}")));
        }
        let a: Vec<_> = (1..n).map(|i| build_a(n, i, degree)).collect::<Result<_, _>>()?;
        let b = a.iter().map(|s| b_from_a(s, n)).collect();
        Ok(GaugedBqKZ { n, degree, a, b })
    }

    pub fn nvars(&self) -> usize {
        2 * (self.n - 1)
    }

    pub fn system(&self) -> QDiffSystem<RatQK> {
        let gens: Vec<_> = self.a.iter().chain(&self.b).cloned().collect();
        QDiffSystem::new(vec![RatQK::q(); gens.len()], gens).expect("2(N-1) generators")
    }

    /// Constant terms against the predicted action on `T_{w₀}T_w`: the
    /// identity when `w` fixes the relevant weight, zero otherwise.
    pub fn constant_terms_match(&self) -> bool {
        let n = self.n;
        let grp = sym_group(n);
        let p = crate::scalar::Params::new(RatQK::q(), RatQK::k());
        let zero = vec![0u32; self.nvars()];
        let w0 = &grp.perms[grp.w0];
        (1..n).all(|i| {
            let varpi = varpi_vec(n, i);
            let w0v = w0.act_vec(&varpi);
            let a0 = self.a[i - 1].get(&zero).cloned().unwrap_or_else(|| HeckeMatrix::zero(n));
            let b0 = self.b[i - 1].get(&zero).cloned().unwrap_or_else(|| HeckeMatrix::zero(n));
            grp.perms.iter().enumerate().all(|(wi, w)| {
                let v = crate::hecke::HeckeVector::t_w0(n).mul_basis_right(wi, &p);
                let a_fix = w.inverse().act_vec(&w0v) == w0v;
                let b_fix = w.act_vec(&varpi) == varpi;
                let a_ok = a0.apply(&v) == if a_fix { v.clone() } else { v.scale(&RatQK::zero()) };
                let b_ok = b0.apply(&v) == if b_fix { v.clone() } else { v.scale(&RatQK::zero()) };
                a_ok && b_ok
            })
        })
    }

    /// Every leading term is idempotent, so its eigenvalues lie in `{0, 1}`
    /// and none is in `q^{-ℕ}`.
    pub fn leading_terms_idempotent(&self) -> bool {
        let sys = self.system();
        (0..sys.nvars).all(|i| {
            let l = sys.leading(i);
            l.mul(&l) == l
        })
    }
}
