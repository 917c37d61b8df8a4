//! Endomorphisms of `H₀` as dense `N! × N!` matrices in the `T_w` basis.

use super::group::{sym_group, SymGroup};
use super::vector::HeckeVector;
use crate::scalar::{Field, Params, Ring, SeriesCoeff};
use std::sync::Arc;

/// Row-major; column `c` holds the image of `T_{w_c}`.
#[derive(Clone, Debug, PartialEq)]
pub struct HeckeMatrix<C> {
    n: usize,
    dim: usize,
    data: Vec<C>,
}

impl<C: Ring> HeckeMatrix<C> {
    pub fn zero(n: usize) -> Self {
        let dim = sym_group(n).order();
        HeckeMatrix { n, dim, data: vec![C::zero(); dim * dim] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, C::one())
    }

    pub fn scalar(n: usize, c: C) -> Self {
        let mut m = Self::zero(n);
        for i in 0..m.dim {
            m.data[i * m.dim + i] = c.clone();
        }
        m
    }

    pub fn from_fn<F: FnMut(usize, usize) -> C>(n: usize, mut f: F) -> Self {
        let dim = sym_group(n).order();
        let mut data = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                data.push(f(r, c));
            }
        }
        HeckeMatrix { n, dim, data }
    }

    pub fn from_columns(n: usize, cols: &[HeckeVector<C>]) -> Self {
        let dim = sym_group(n).order();
        assert_eq!(cols.len(), dim, "column count");
        Self::from_fn(n, |r, c| cols[c].get(r).clone())
    }

    /// Matrix of the linear map `v ↦ f(v)` from its action on the basis.
    pub fn from_linear_map<F: Fn(&HeckeVector<C>) -> HeckeVector<C>>(n: usize, f: F) -> Self {
        let dim = sym_group(n).order();
        let cols: Vec<_> = (0..dim).map(|w| f(&HeckeVector::basis(n, w))).collect();
        Self::from_columns(n, &cols)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn group(&self) -> Arc<SymGroup> {
        sym_group(self.n)
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &C {
        &self.data[r * self.dim + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: C) {
        self.data[r * self.dim + c] = v;
    }

    pub fn entries(&self) -> &[C] {
        &self.data
    }

    pub fn column(&self, c: usize) -> HeckeVector<C> {
        HeckeVector::from_coeffs(self.n, (0..self.dim).map(|r| self.get(r, c).clone()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn map<D: Ring, F: Fn(&C) -> D>(&self, f: F) -> HeckeMatrix<D> {
        HeckeMatrix { n: self.n, dim: self.dim, data: self.data.iter().map(f).collect() }
    }

    fn zip<F: Fn(&C, &C) -> C>(&self, o: &Self, f: F) -> Self {
        assert_eq!(self.n, o.n, "Hecke matrices of different rank");
        HeckeMatrix { n: self.n, dim: self.dim, data: self.data.iter().zip(&o.data).map(|(a, b)| f(a, b)).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a.plus(b))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a.minus(b))
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|x| x.times(c))
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n, "Hecke matrices of different rank");
        let d = self.dim;
        let mut out = vec![C::zero(); d * d];
        for r in 0..d {
            for m in 0..d {
                let a = &self.data[r * d + m];
                if a.is_zero() {
                    continue;
                }
                for c in 0..d {
                    let b = &o.data[m * d + c];
                    if !b.is_zero() {
                        let cell = &mut out[r * d + c];
                        *cell = cell.plus(&a.times(b));
                    }
                }
            }
        }
        HeckeMatrix { n: self.n, dim: d, data: out }
    }

    pub fn apply(&self, v: &HeckeVector<C>) -> HeckeVector<C> {
        let d = self.dim;
        let x = v.coeffs();
        let coeffs = (0..d)
            .map(|r| {
                let mut acc = C::zero();
                for (c, xc) in x.iter().enumerate() {
                    let a = &self.data[r * d + c];
                    if !a.is_zero() && !xc.is_zero() {
                        acc = acc.plus(&a.times(xc));
                    }
                }
                acc
            })
            .collect();
        HeckeVector::from_coeffs(self.n, coeffs)
    }

    /// `C_ι A C_ι`.
    pub fn c_iota(&self) -> Self {
        let g = self.group();
        Self::from_fn(self.n, |r, c| self.get(g.inverse[r], g.inverse[c]).clone())
    }

    /// `C_ι A`.
    pub fn iota_left(&self) -> Self {
        let g = self.group();
        Self::from_fn(self.n, |r, c| self.get(g.inverse[r], c).clone())
    }

    /// `η(T_i)`: left multiplication by `T_i`.
    pub fn eta_t(n: usize, i: usize, p: &Params<C>) -> Self {
        Self::from_linear_map(n, |v| v.mul_gen_left(i, p))
    }

    /// `η(T_i)^{-1} = η(T_i) - (k - k^{-1})`.
    pub fn eta_t_inv(n: usize, i: usize, p: &Params<C>) -> Self {
        Self::eta_t(n, i, p).sub(&Self::scalar(n, p.k_minus_kinv()))
    }

    /// Replace `M` by `M · R` where `R = 1 + r (η(T_i) - k)`.
    pub fn right_mul_r(&mut self, i: usize, r: &C, p: &Params<C>) {
        if r.is_zero() {
            return;
        }
        let g = self.group();
        let d = self.dim;
        let table = &g.left[i - 1];
        let kmk = p.k_minus_kinv();
        let diag = C::one().minus(&r.times(&p.k));
        let old = std::mem::replace(&mut self.data, vec![C::zero(); d * d]);
        for w in 0..d {
            let (sw, up) = table[w];
            // column w of M η(T_i) is col(s_i w), plus (k - k^{-1}) col(w) on a descent
            let dw = if up { diag.clone() } else { diag.plus(&r.times(&kmk)) };
            for row in 0..d {
                let a = &old[row * d + w];
                let b = &old[row * d + sw];
                let mut v = if a.is_zero() { C::zero() } else { a.times(&dw) };
                if !b.is_zero() {
                    v = v.plus(&b.times(r));
                }
                self.data[row * d + w] = v;
            }
        }
    }

    /// Replace `M` by `M · η(π)(γ)`; `gamma[j]` is `γ_{j+1}`.
    pub fn right_mul_eta_pi(&mut self, gamma: &[C]) {
        let g = self.group();
        let d = self.dim;
        let old = std::mem::replace(&mut self.data, vec![C::zero(); d * d]);
        for w in 0..d {
            let src = g.sigma_left[w];
            let f = &gamma[g.preimage_last[w]];
            for row in 0..d {
                let a = &old[row * d + src];
                if !a.is_zero() {
                    self.data[row * d + w] = a.times(f);
                }
            }
        }
    }

    /// Replace `M` by `M · η(π)(γ)^{-1}`; `gamma_inv[j]` is `γ_{j+1}^{-1}`.
    pub fn right_mul_eta_pi_inv(&mut self, gamma_inv: &[C]) {
        let g = self.group();
        let d = self.dim;
        let old = std::mem::replace(&mut self.data, vec![C::zero(); d * d]);
        for u in 0..d {
            let src = g.sigma_inv_left[u];
            let f = &gamma_inv[g.preimage_first[u]];
            for row in 0..d {
                let a = &old[row * d + src];
                if !a.is_zero() {
                    self.data[row * d + u] = a.times(f);
                }
            }
        }
    }

    /// `η(π)(γ)`: `T_w ↦ γ_{w^{-1}(N)} T_{σw}`.
    pub fn eta_pi(n: usize, gamma: &[C]) -> Self {
        let mut m = Self::identity(n);
        m.right_mul_eta_pi(gamma);
        m
    }

    /// `η(π)(γ)^{-1}`: `T_u ↦ γ_{u^{-1}(1)}^{-1} T_{σ^{-1}u}`.
    pub fn eta_pi_inv(n: usize, gamma_inv: &[C]) -> Self {
        let mut m = Self::identity(n);
        m.right_mul_eta_pi_inv(gamma_inv);
        m
    }

    /// Right multiplication `h ↦ h · T_w` as a matrix.
    pub fn right_mul_basis(n: usize, w: usize, p: &Params<C>) -> Self {
        Self::from_linear_map(n, |v| v.mul_basis_right(w, p))
    }

    /// Left multiplication `h ↦ T_w · h` as a matrix.
    pub fn left_mul_basis(n: usize, w: usize, p: &Params<C>) -> Self {
        Self::from_linear_map(n, |v| v.mul_basis_left(w, p))
    }
}

impl<C: Field> HeckeMatrix<C> {
    /// Inverse by Gauss–Jordan elimination; `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        let d = self.dim;
        let mut a = self.data.clone();
        let mut inv = Self::identity(self.n).data;
        for col in 0..d {
            let piv = (col..d).find(|&r| !a[r * d + col].is_zero())?;
            if piv != col {
                for c in 0..d {
                    a.swap(piv * d + c, col * d + c);
                    inv.swap(piv * d + c, col * d + c);
                }
            }
            let pinv = a[col * d + col].inv()?;
            for c in 0..d {
                a[col * d + c] = a[col * d + c].times(&pinv);
                inv[col * d + c] = inv[col * d + c].times(&pinv);
            }
            for r in 0..d {
                if r == col {
                    continue;
                }
                let f = a[r * d + col].clone();
                if f.is_zero() {
                    continue;
                }
                for c in 0..d {
                    let (x, y) = (a[col * d + c].clone(), inv[col * d + c].clone());
                    if !x.is_zero() {
                        a[r * d + c] = a[r * d + c].minus(&f.times(&x));
                    }
                    if !y.is_zero() {
                        inv[r * d + c] = inv[r * d + c].minus(&f.times(&y));
                    }
                }
            }
        }
        Some(HeckeMatrix { n: self.n, dim: d, data: inv })
    }

    /// Rank by row reduction.
    pub fn rank(&self) -> usize {
        let d = self.dim;
        let mut a = self.data.clone();
        let mut rank = 0;
        for col in 0..d {
            let Some(piv) = (rank..d).find(|&r| !a[r * d + col].is_zero()) else {
                continue;
            };
            for c in 0..d {
                a.swap(piv * d + c, rank * d + c);
            }
            let pinv = a[rank * d + col].inv().expect("nonzero pivot");
            for r in rank + 1..d {
                let f = a[r * d + col].times(&pinv);
                if f.is_zero() {
                    continue;
                }
                for c in col..d {
                    let x = a[rank * d + c].clone();
                    a[r * d + c] = a[r * d + c].minus(&f.times(&x));
                }
            }
            rank += 1;
        }
        rank
    }
}

impl<C: Ring> SeriesCoeff for HeckeMatrix<C> {
    fn add_to(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }
}
