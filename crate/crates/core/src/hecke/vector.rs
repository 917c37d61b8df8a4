//! Elements of the finite Hecke algebra `H₀` in the basis `T_w`.

use super::group::{sym_group, SymGroup};
use crate::scalar::{Params, Ring, SeriesCoeff};
use crate::weyl::Perm;
use serde::Serialize;
use std::sync::Arc;

/// Dense coordinates in the `T_w` basis, `w` in lexicographic order.
#[derive(Clone, Debug, PartialEq)]
pub struct HeckeVector<C> {
    n: usize,
    coeffs: Vec<C>,
}

#[derive(Serialize)]
pub struct VectorEntryJson {
    pub perm: Vec<usize>,
    pub coeff: String,
}

impl<C: Ring> HeckeVector<C> {
    pub fn zero(n: usize) -> Self {
        let d = sym_group(n).order();
        HeckeVector { n, coeffs: vec![C::zero(); d] }
    }

    /// `T_w` for the permutation with lex index `w`.
    pub fn basis(n: usize, w: usize) -> Self {
        let mut v = Self::zero(n);
        v.coeffs[w] = C::one();
        v
    }

    pub fn basis_perm(p: &Perm) -> Self {
        Self::basis(p.n(), p.lex_rank())
    }

    /// `T_{w₀}`.
    pub fn t_w0(n: usize) -> Self {
        Self::basis(n, sym_group(n).w0)
    }

    pub fn from_coeffs(n: usize, coeffs: Vec<C>) -> Self {
        assert_eq!(coeffs.len(), sym_group(n).order(), "coefficient count");
        HeckeVector { n, coeffs }
    }

    /// `v₊ = Σ_w k^{ℓ(w)} T_w`.
    pub fn v_plus(n: usize, p: &Params<C>) -> Self {
        let g = sym_group(n);
        HeckeVector { n, coeffs: g.length.iter().map(|&l| p.kpow(l as i64)).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn group(&self) -> Arc<SymGroup> {
        sym_group(self.n)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn get(&self, w: usize) -> &C {
        &self.coeffs[w]
    }

    pub fn set(&mut self, w: usize, c: C) {
        self.coeffs[w] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a.plus(b))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a.minus(b))
    }

    fn zip<F: Fn(&C, &C) -> C>(&self, o: &Self, f: F) -> Self {
        assert_eq!(self.n, o.n, "Hecke vectors of different rank");
        HeckeVector { n: self.n, coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| f(a, b)).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|x| x.times(c))
    }

    pub fn neg(&self) -> Self {
        self.map(Ring::negate)
    }

    pub fn map<D: Ring, F: Fn(&C) -> D>(&self, f: F) -> HeckeVector<D> {
        HeckeVector { n: self.n, coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// `T_i · v` (1-based `i`).
    pub fn mul_gen_left(&self, i: usize, p: &Params<C>) -> Self {
        self.gen_mul(i, p, true)
    }

    /// `v · T_i` (1-based `i`).
    pub fn mul_gen_right(&self, i: usize, p: &Params<C>) -> Self {
        self.gen_mul(i, p, false)
    }

    fn gen_mul(&self, i: usize, p: &Params<C>, left: bool) -> Self {
        let g = self.group();
        let table = if left { &g.left[i - 1] } else { &g.right[i - 1] };
        let kmk = p.k_minus_kinv();
        let mut out = vec![C::zero(); self.coeffs.len()];
        for (w, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sw, up) = table[w];
            out[sw] = out[sw].plus(c);
            if !up {
                out[w] = out[w].plus(&c.times(&kmk));
            }
        }
        HeckeVector { n: self.n, coeffs: out }
    }

    /// `T_i^{-1} · v` via `T_i^{-1} = T_i - (k - k^{-1})`.
    pub fn mul_gen_inv_left(&self, i: usize, p: &Params<C>) -> Self {
        self.mul_gen_left(i, p).sub(&self.scale(&p.k_minus_kinv()))
    }

    /// `T_w · v`.
    pub fn mul_basis_left(&self, w: usize, p: &Params<C>) -> Self {
        let g = self.group();
        let mut r = self.clone();
        for &i in g.words[w].iter().rev() {
            r = r.mul_gen_left(i, p);
        }
        r
    }

    /// `v · T_w`.
    pub fn mul_basis_right(&self, w: usize, p: &Params<C>) -> Self {
        let g = self.group();
        let mut r = self.clone();
        for &i in &g.words[w] {
            r = r.mul_gen_right(i, p);
        }
        r
    }

    /// The product `self · o` in `H₀`.
    pub fn hecke_mul(&self, o: &Self, p: &Params<C>) -> Self {
        let mut acc = Self::zero(self.n);
        for (u, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&o.mul_basis_left(u, p).scale(c));
            }
        }
        acc
    }

    /// `C_ι`: the linear map `T_w ↦ T_{w^{-1}}`.
    pub fn c_iota(&self) -> Self {
        let g = self.group();
        let mut out = vec![C::zero(); self.coeffs.len()];
        for (w, c) in self.coeffs.iter().enumerate() {
            out[g.inverse[w]] = c.clone();
        }
        HeckeVector { n: self.n, coeffs: out }
    }

    /// `χ₊(T_w) = k^{ℓ(w)}`.
    pub fn chi_plus(&self, p: &Params<C>) -> C {
        let g = self.group();
        let mut acc = C::zero();
        for (w, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.plus(&c.times(&p.kpow(g.length[w] as i64)));
            }
        }
        acc
    }

    /// JSON entries `{perm, coeff}` for the nonzero coordinates.
    pub fn to_json_entries<F: Fn(&C) -> String>(&self, render: F) -> Vec<VectorEntryJson> {
        let g = self.group();
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(w, c)| VectorEntryJson { perm: g.perms[w].one_based(), coeff: render(c) })
            .collect()
    }
}

impl<C: Ring> SeriesCoeff for HeckeVector<C> {
    fn add_to(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }
}
