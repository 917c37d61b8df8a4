//! Multivariate power series truncated at a total degree, with coefficients in
//! any additive structure (scalars, Hecke vectors, Hecke matrices).

use super::ratqk::RatQK;
use super::ring::Ring;
use std::collections::BTreeMap;
use thiserror::Error;

pub type MultiIndex = Vec<u32>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("series shapes differ: ({0} vars, degree {1}) vs ({2} vars, degree {3})")]
    ShapeMismatch(usize, u32, usize, u32),
    #[error("geometric series needs a nonzero monomial")]
    ZeroMonomial,
}

/// Coefficient spaces usable in a [`TruncSeries`].
pub trait SeriesCoeff: Clone + PartialEq + std::fmt::Debug {
    fn add_to(&self, o: &Self) -> Self;
    fn is_zero_coeff(&self) -> bool;
}

impl<C: Ring> SeriesCoeff for C {
    fn add_to(&self, o: &Self) -> Self {
        self.plus(o)
    }
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<V> {
    nvars: usize,
    degree: u32,
    coeffs: BTreeMap<MultiIndex, V>,
}

pub fn total(m: &[u32]) -> u32 {
    m.iter().sum()
}

impl<V: SeriesCoeff> TruncSeries<V> {
    pub fn zero(nvars: usize, degree: u32) -> Self {
        TruncSeries { nvars, degree, coeffs: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, degree: u32, v: V) -> Self {
        let mut s = Self::zero(nvars, degree);
        s.insert(vec![0; nvars], v);
        s
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Add `v` to the coefficient of `m`; indices beyond the degree are dropped.
    pub fn insert(&mut self, m: MultiIndex, v: V) {
        assert_eq!(m.len(), self.nvars, "multi-index length");
        if total(&m) > self.degree || v.is_zero_coeff() {
            return;
        }
        match self.coeffs.get_mut(&m) {
            Some(old) => {
                *old = old.add_to(&v);
                if old.is_zero_coeff() {
                    self.coeffs.remove(&m);
                }
            }
            None => {
                self.coeffs.insert(m, v);
            }
        }
    }

    pub fn get(&self, m: &[u32]) -> Option<&V> {
        self.coeffs.get(m)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MultiIndex, &V)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, o: &Self) -> Result<Self, SeriesError> {
        self.check_shape(o.nvars, o.degree)?;
        let mut r = self.clone();
        for (m, v) in &o.coeffs {
            r.insert(m.clone(), v.clone());
        }
        Ok(r)
    }

    fn check_shape(&self, nvars: usize, degree: u32) -> Result<(), SeriesError> {
        if self.nvars != nvars || self.degree != degree {
            Err(SeriesError::ShapeMismatch(self.nvars, self.degree, nvars, degree))
        } else {
            Ok(())
        }
    }

    /// Cauchy product with an arbitrary bilinear coefficient pairing, modulo
    /// total degree `D + 1`.
    pub fn mul_with<W: SeriesCoeff, U: SeriesCoeff, F: Fn(&V, &W) -> U>(
        &self,
        o: &TruncSeries<W>,
        f: F,
    ) -> Result<TruncSeries<U>, SeriesError> {
        self.check_shape(o.nvars, o.degree)?;
        let mut r = TruncSeries::zero(self.nvars, self.degree);
        for (m1, v1) in &self.coeffs {
            let d1 = total(m1);
            for (m2, v2) in &o.coeffs {
                if d1 + total(m2) > self.degree {
                    continue;
                }
                let m: MultiIndex = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                r.insert(m, f(v1, v2));
            }
        }
        Ok(r)
    }

    pub fn map<U: SeriesCoeff, F: Fn(&V) -> U>(&self, f: F) -> TruncSeries<U> {
        let mut r = TruncSeries::zero(self.nvars, self.degree);
        for (m, v) in &self.coeffs {
            r.insert(m.clone(), f(v));
        }
        r
    }

    /// Keep only coefficients of total degree ≤ `d` and lower the degree to `d`.
    pub fn truncate(&self, d: u32) -> Self {
        let mut r = Self::zero(self.nvars, d.min(self.degree));
        for (m, v) in &self.coeffs {
            r.insert(m.clone(), v.clone());
        }
        r
    }

    /// Substitute `z_i ↦ s_i z_i` for scalar factors given per multi-index.
    pub fn rescale<F: Fn(&MultiIndex, &V) -> V>(&self, f: F) -> Self {
        let mut r = Self::zero(self.nvars, self.degree);
        for (m, v) in &self.coeffs {
            r.insert(m.clone(), f(m, v));
        }
        r
    }
}

/// Product of two series over a ring.
pub fn series_mul<C: Ring>(a: &TruncSeries<C>, b: &TruncSeries<C>) -> Result<TruncSeries<C>, SeriesError> {
    a.mul_with(b, |x, y| x.times(y))
}

/// `1/(1 - c z^mono)` expanded to total degree `degree`.
pub fn series_geom(c: &RatQK, mono: &[u32], degree: u32) -> Result<TruncSeries<RatQK>, SeriesError> {
    geometric(c, mono, degree)
}

/// [`series_geom`] over any ring.
pub fn geometric<C: Ring>(c: &C, mono: &[u32], degree: u32) -> Result<TruncSeries<C>, SeriesError> {
    let step = total(mono);
    if step == 0 {
        return Err(SeriesError::ZeroMonomial);
    }
    let mut s = TruncSeries::zero(mono.len(), degree);
    let mut pow = C::one();
    let mut n = 0u32;
    while n * step <= degree {
        s.insert(mono.iter().map(|&x| x * n).collect(), pow.clone());
        pow = pow.times(c);
        n += 1;
        if pow.is_zero() {
            break;
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(u32, i64)], d: u32) -> TruncSeries<RatQK> {
        let mut s = TruncSeries::zero(1, d);
        for &(e, c) in terms {
            s.insert(vec![e], RatQK::int(c));
        }
        s
    }

    #[test]
    fn product_truncates() {
        let a = poly(&[(0, 1), (1, 1)], 2);
        let b = poly(&[(0, 1), (1, -1)], 2);
        assert_eq!(series_mul(&a, &b).unwrap(), poly(&[(0, 1), (2, -1)], 2));
    }

    #[test]
    fn geometric_inverts_binomial() {
        let k2 = RatQK::qk(0, 2);
        let g = series_geom(&k2, &[1], 3).unwrap();
        assert_eq!(g.get(&[2]), Some(&RatQK::qk(0, 4)));
        let mut lin = TruncSeries::constant(1, 3, RatQK::int(1));
        lin.insert(vec![1], k2.negate());
        assert_eq!(series_mul(&g, &lin).unwrap(), TruncSeries::constant(1, 3, RatQK::int(1)));
        let zero = series_geom(&RatQK::int(0), &[1], 3).unwrap();
        assert_eq!(zero, TruncSeries::constant(1, 3, RatQK::int(1)));
        assert!(series_geom(&k2, &[0], 3).is_err());
    }

    #[test]
    fn shape_mismatch_is_rejected() {
        let a = poly(&[(0, 1)], 2);
        let b = poly(&[(0, 1)], 3);
        assert!(series_mul(&a, &b).is_err());
    }
}
