//! Exact elements of the rational function field ℚ(q,k).

use super::poly2::Poly2;
use super::ring::{Field, Ring};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Signed;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RatError {
    #[error("division by zero in Q(q,k)")]
    DivisionByZero,
    #[error("cannot parse rational function: {0}")]
    Parse(String),
}

/// `num / den` with `gcd(num, den) = 1` and the leading coefficient of `den`
/// (graded-lex, `q ≺ k`) positive. Equal values have identical representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatQK {
    num: Poly2,
    den: Poly2,
}

impl RatQK {
    fn raw(num: Poly2, den: Poly2) -> Self {
        RatQK { num, den }
    }

    /// Reduce an arbitrary fraction to canonical form.
    pub fn from_parts(num: Poly2, den: Poly2) -> Result<Self, RatError> {
        if den.is_zero() {
            return Err(RatError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero_value());
        }
        let g = Poly2::gcd(&num, &den);
        let (mut n, mut d) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"))
        };
        if d.lc().is_negative() {
            n = n.neg();
            d = d.neg();
        }
        Ok(Self::raw(n, d))
    }

    fn zero_value() -> Self {
        Self::raw(Poly2::zero(), Poly2::one())
    }

    pub fn numer(&self) -> &Poly2 {
        &self.num
    }

    pub fn denom(&self) -> &Poly2 {
        &self.den
    }

    pub fn int(n: i64) -> Self {
        Self::raw(Poly2::constant(BigInt::from(n)), Poly2::one())
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::raw(Poly2::constant(n), Poly2::one())
    }

    pub fn poly(p: Poly2) -> Self {
        Self::raw(p, Poly2::one())
    }

    /// The monomial `q^a k^b` for arbitrary integer exponents.
    pub fn qk(a: i64, b: i64) -> Self {
        let (na, da) = if a >= 0 { (a as u32, 0) } else { (0, (-a) as u32) };
        let (nb, db) = if b >= 0 { (b as u32, 0) } else { (0, (-b) as u32) };
        Self::raw(Poly2::monomial(na, nb, BigInt::from(1)), Poly2::monomial(da, db, BigInt::from(1)))
    }

    pub fn q() -> Self {
        Self::qk(1, 0)
    }

    pub fn k() -> Self {
        Self::qk(0, 1)
    }

    /// If the value is `c q^a k^b`, return `(c, a, b)`.
    pub fn as_monomial(&self) -> Option<(BigInt, i64, i64)> {
        if self.num.is_monomial() && self.den.is_monomial() {
            let (na, nb, nc) = &self.num.terms()[0];
            let (da, db, dc) = &self.den.terms()[0];
            if *dc == BigInt::from(1) {
                return Some((nc.clone(), *na as i64 - *da as i64, *nb as i64 - *db as i64));
            }
        }
        None
    }

    pub fn try_div(&self, o: &Self) -> Result<Self, RatError> {
        o.inverse().map(|inv| self.times(&inv))
    }

    pub fn inverse(&self) -> Result<Self, RatError> {
        if self.num.is_zero() {
            return Err(RatError::DivisionByZero);
        }
        let (mut n, mut d) = (self.den.clone(), self.num.clone());
        if d.lc().is_negative() {
            n = n.neg();
            d = d.neg();
        }
        Ok(Self::raw(n, d))
    }

    pub fn pow(&self, e: i64) -> Self {
        if e >= 0 {
            Self::raw(self.num.pow(e as u32), self.den.pow(e as u32))
        } else {
            self.inverse().expect("nonzero base for negative power").pow(-e)
        }
    }

    pub fn eval_complex(&self, q: Complex64, k: Complex64) -> Complex64 {
        self.num.eval_complex(q, k) / self.den.eval_complex(q, k)
    }

    /// Canonical `P(q,k)/Q(q,k)` text.
    pub fn render(&self) -> String {
        format!("({})/({})", self.num.render(), self.den.render())
    }

    pub fn parse(s: &str) -> Result<Self, RatError> {
        let t = s.trim();
        let (n, d) = match split_fraction(t) {
            Some((n, d)) => (n, d),
            None => (strip_parens(t), "1"),
        };
        let (num, na, nb) = Poly2::parse_laurent(n).map_err(RatError::Parse)?;
        let (den, da, db) = Poly2::parse_laurent(d).map_err(RatError::Parse)?;
        let r = Self::from_parts(num, den).map_err(|_| RatError::Parse(format!("zero denominator in '{s}'")))?;
        Ok(r.times(&Self::qk(da as i64 - na as i64, db as i64 - nb as i64)))
    }
}

fn strip_parens(s: &str) -> &str {
    let s = s.trim();
    if s.starts_with('(') && s.ends_with(')') {
        &s[1..s.len() - 1]
    } else {
        s
    }
}

fn split_fraction(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '/' if depth == 0 => return Some((strip_parens(&s[..i]), strip_parens(&s[i + 1..]))),
            _ => {}
        }
    }
    None
}

impl Ring for RatQK {
    fn zero() -> Self {
        Self::zero_value()
    }

    fn one() -> Self {
        Self::raw(Poly2::one(), Poly2::one())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    fn from_int(n: i64) -> Self {
        Self::int(n)
    }

    fn plus(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            let n = self.num.add(&o.num);
            if self.den.is_one() {
                return Self::raw(n, Poly2::one());
            }
            return Self::from_parts(n, self.den.clone()).expect("nonzero denominator");
        }
        if self.den.is_one() {
            return Self::raw(self.num.mul(&o.den).add(&o.num), o.den.clone());
        }
        if o.den.is_one() {
            return Self::raw(o.num.mul(&self.den).add(&self.num), self.den.clone());
        }
        let g = Poly2::gcd(&self.den, &o.den);
        let ad = self.den.exact_div(&g).expect("gcd divides");
        let od = o.den.exact_div(&g).expect("gcd divides");
        let n = self.num.mul(&od).add(&o.num.mul(&ad));
        if n.is_zero() {
            return Self::zero_value();
        }
        let den = ad.mul(&o.den);
        if g.is_one() {
            return Self::raw(n, den);
        }
        let h = Poly2::gcd(&n, &g);
        if h.is_one() {
            Self::raw(n, den)
        } else {
            let (n, d) = (n.exact_div(&h).expect("gcd divides"), den.exact_div(&h).expect("gcd divides"));
            if d.lc().is_negative() {
                Self::raw(n.neg(), d.neg())
            } else {
                Self::raw(n, d)
            }
        }
    }

    fn minus(&self, o: &Self) -> Self {
        self.plus(&o.negate())
    }

    fn times(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero_value();
        }
        if self.den.is_one() && o.den.is_one() {
            return Self::raw(self.num.mul(&o.num), Poly2::one());
        }
        let g1 = Poly2::gcd(&self.num, &o.den);
        let g2 = Poly2::gcd(&o.num, &self.den);
        let (n1, d2) = if g1.is_one() {
            (self.num.clone(), o.den.clone())
        } else {
            (self.num.exact_div(&g1).unwrap(), o.den.exact_div(&g1).unwrap())
        };
        let (n2, d1) = if g2.is_one() {
            (o.num.clone(), self.den.clone())
        } else {
            (o.num.exact_div(&g2).unwrap(), self.den.exact_div(&g2).unwrap())
        };
        let (n, d) = (n1.mul(&n2), d1.mul(&d2));
        if d.lc().is_negative() {
            Self::raw(n.neg(), d.neg())
        } else {
            Self::raw(n, d)
        }
    }

    fn negate(&self) -> Self {
        Self::raw(self.num.neg(), self.den.clone())
    }
}

impl Field for RatQK {
    fn inv(&self) -> Option<Self> {
        self.inverse().ok()
    }
}

impl fmt::Display for RatQK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            f.write_str(&self.num.render())
        } else {
            f.write_str(&self.render())
        }
    }
}

impl fmt::Debug for RatQK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Serialize for RatQK {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.render())
    }
}

impl<'de> Deserialize<'de> for RatQK {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        RatQK::parse(&s).map_err(serde::de::Error::custom)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr for RatQK {
            type Output = RatQK;
            fn $m(self, o: RatQK) -> RatQK {
                $body(&self, &o)
            }
        }
        impl<'a> $tr<&'a RatQK> for &'a RatQK {
            type Output = RatQK;
            fn $m(self, o: &'a RatQK) -> RatQK {
                $body(self, o)
            }
        }
    };
}

binop!(Add, add, |a: &RatQK, b: &RatQK| a.plus(b));
binop!(Sub, sub, |a: &RatQK, b: &RatQK| a.minus(b));
binop!(Mul, mul, |a: &RatQK, b: &RatQK| a.times(b));
binop!(Div, div, |a: &RatQK, b: &RatQK| a.try_div(b).expect("division by zero in Q(q,k)"));

impl Neg for RatQK {
    type Output = RatQK;
    fn neg(self) -> RatQK {
        self.negate()
    }
}

impl Default for RatQK {
    fn default() -> Self {
        Self::zero_value()
    }
}

impl From<i64> for RatQK {
    fn from(n: i64) -> Self {
        Self::int(n)
    }
}
