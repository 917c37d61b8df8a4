//! The principal series action `η` at a spectral point and its eigenvectors `ξ_w`.

use super::group::sym_group;
use super::matrix::HeckeMatrix;
use super::vector::HeckeVector;
use crate::scalar::{Params, Ring};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HeckeError {
    #[error("degenerate spectral point: γ_{0} = γ_{1}")]
    Degenerate(usize, usize),
    #[error("eigenvector ξ for permutation index {0} vanished")]
    VanishingEigenvector(usize),
}

/// Coordinates `γ_j` together with their inverses, realised in a ring.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralPoint<C> {
    pub vals: Vec<C>,
    pub invs: Vec<C>,
}

impl<C: Ring> SpectralPoint<C> {
    pub fn new(vals: Vec<C>, invs: Vec<C>) -> Self {
        assert_eq!(vals.len(), invs.len());
        SpectralPoint { vals, invs }
    }

    pub fn n(&self) -> usize {
        self.vals.len()
    }
}

/// `η(π)(γ)`.
pub fn eta_pi<C: Ring>(g: &SpectralPoint<C>) -> HeckeMatrix<C> {
    HeckeMatrix::eta_pi(g.n(), &g.vals)
}

/// `η(Y_j)(γ)` with `Y_j = T_{j-1}^{-1} ⋯ T_1^{-1} π T_{N-1} ⋯ T_j` (1-based `j`).
pub fn eta_y<C: Ring>(j: usize, g: &SpectralPoint<C>, p: &Params<C>) -> HeckeMatrix<C> {
    let n = g.n();
    let mut m = HeckeMatrix::identity(n);
    for i in (1..j).rev() {
        m = m.mul(&HeckeMatrix::eta_t_inv(n, i, p));
    }
    m.right_mul_eta_pi(&g.vals);
    for i in (j..n).rev() {
        m = m.mul(&HeckeMatrix::eta_t(n, i, p));
    }
    m
}

/// `η(Y_j^{-1})(γ) = η(T_j^{-1} ⋯ T_{N-1}^{-1} π^{-1} T_1 ⋯ T_{j-1})`.
pub fn eta_y_inv<C: Ring>(j: usize, g: &SpectralPoint<C>, p: &Params<C>) -> HeckeMatrix<C> {
    let n = g.n();
    let mut m = HeckeMatrix::identity(n);
    for i in j..n {
        m = m.mul(&HeckeMatrix::eta_t_inv(n, i, p));
    }
    m.right_mul_eta_pi_inv(&g.invs);
    for i in 1..j {
        m = m.mul(&HeckeMatrix::eta_t(n, i, p));
    }
    m
}

/// `η(S̃_i^*)(γ) = (η(T_i) - k)(1 - Z) + k - k^{-1} Z` with `Z = η(Y_i Y_{i+1}^{-1})(γ)`.
pub fn eta_s_tilde_star<C: Ring>(i: usize, g: &SpectralPoint<C>, p: &Params<C>) -> HeckeMatrix<C> {
    let n = g.n();
    let z = eta_y(i, g, p).mul(&eta_y_inv(i + 1, g, p));
    let one = HeckeMatrix::identity(n);
    let t_minus_k = HeckeMatrix::eta_t(n, i, p).sub(&HeckeMatrix::scalar(n, p.k.clone()));
    t_minus_k
        .mul(&one.sub(&z))
        .add(&HeckeMatrix::scalar(n, p.k.clone()))
        .sub(&z.scale(&p.kinv))
}

/// All `ξ_w(γ)`, indexed by the lex index of `w`, built by
/// `ξ_e = T_e`, `ξ_{s_i w} = η(S̃_i^*)(γ) ξ_w` when `ℓ(s_i w) = ℓ(w) + 1`.
pub fn xi_all<C: Ring>(g: &SpectralPoint<C>, p: &Params<C>) -> Result<Vec<HeckeVector<C>>, HeckeError> {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            if g.vals[a] == g.vals[b] {
                return Err(HeckeError::Degenerate(a + 1, b + 1));
            }
        }
    }
    let grp = sym_group(n);
    let ops: Vec<HeckeMatrix<C>> = (1..n).map(|i| eta_s_tilde_star(i, g, p)).collect();
    let mut out: Vec<Option<HeckeVector<C>>> = vec![None; grp.order()];
    out[grp.identity()] = Some(HeckeVector::basis(n, grp.identity()));
    let mut frontier = vec![grp.identity()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &w in &frontier {
            for i in 1..n {
                let (sw, up) = grp.left[i - 1][w];
                if up && out[sw].is_none() {
                    let v = ops[i - 1].apply(out[w].as_ref().expect("visited"));
                    if v.is_zero() {
                        return Err(HeckeError::VanishingEigenvector(sw));
                    }
                    out[sw] = Some(v);
                    next.push(sw);
                }
            }
        }
        frontier = next;
    }
    Ok(out.into_iter().map(|v| v.expect("every permutation reached")).collect())
}

/// `ξ_w(γ)` for the permutation with lex index `w`.
pub fn xi_w<C: Ring>(w: usize, g: &SpectralPoint<C>, p: &Params<C>) -> Result<HeckeVector<C>, HeckeError> {
    xi_all(g, p).map(|mut v| v.swap_remove(w))
}
