//! Minimal ring and field abstractions shared by exact and numeric code paths.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};
use std::fmt::Debug;

/// Commutative ring with identity. Methods take references so generic code
/// never has to clone operands just to combine them.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_int(n: i64) -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow_u(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;

    fn divide(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.times(&r))
    }

    fn pow_i(&self, e: i64) -> Option<Self> {
        if e >= 0 {
            Some(self.pow_u(e as u32))
        } else {
            self.inv().map(|r| r.pow_u((-e) as u32))
        }
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_int(n: i64) -> Self {
        BigInt::from(n)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
}

impl Ring for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn from_int(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
}

impl Field for Complex64 {
    fn inv(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            None
        } else {
            Some(self.inv())
        }
    }
}

/// The deformation parameters `q` and `k` realised in a coefficient field.
#[derive(Clone, Debug, PartialEq)]
pub struct Params<C> {
    pub q: C,
    pub k: C,
    pub kinv: C,
}

impl<C: Field> Params<C> {
    pub fn new(q: C, k: C) -> Self {
        let kinv = k.inv().expect("k must be invertible");
        Params { q, k, kinv }
    }

    /// `q^a k^b` in the coefficient field.
    pub fn qk(&self, a: i64, b: i64) -> C {
        let qa = self.q.pow_i(a).expect("q must be invertible");
        let kb = if b >= 0 { self.k.pow_u(b as u32) } else { self.kinv.pow_u((-b) as u32) };
        qa.times(&kb)
    }

}

impl<C: Ring> Params<C> {
    /// `k - k^{-1}`.
    pub fn k_minus_kinv(&self) -> C {
        self.k.minus(&self.kinv)
    }

    /// `k^e` for any integer `e`.
    pub fn kpow(&self, e: i64) -> C {
        if e >= 0 {
            self.k.pow_u(e as u32)
        } else {
            self.kinv.pow_u((-e) as u32)
        }
    }

    /// Reinterpret the parameters in another ring.
    pub fn map<D: Ring, F: Fn(&C) -> D>(&self, f: F) -> Params<D> {
        Params { q: f(&self.q), k: f(&self.k), kinv: f(&self.kinv) }
    }
}
