//! Dense univariate polynomials over ℤ. Used internally by the bivariate gcd.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficients in ascending degree order, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UPoly(pub Vec<BigInt>);

impl UPoly {
    pub fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().map_or(false, |x| x.is_zero()) {
            c.pop();
        }
        UPoly(c)
    }

    pub fn constant(c: BigInt) -> Self {
        UPoly::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn lc(&self) -> BigInt {
        self.0.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.0.len().max(o.0.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.0.get(i);
            let b = o.0.get(i);
            c.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                _ => unreachable!(),
            });
        }
        UPoly::new(c)
    }

    pub fn neg(&self) -> UPoly {
        UPoly(self.0.iter().map(|x| -x).collect())
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::default();
        }
        let mut c = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UPoly::new(c)
    }

    pub fn scale(&self, s: &BigInt) -> UPoly {
        UPoly::new(self.0.iter().map(|x| x * s).collect())
    }

    pub fn shift(&self, d: usize) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![BigInt::zero(); d];
        c.extend(self.0.iter().cloned());
        UPoly(c)
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide out the integer content and make the leading coefficient positive.
    pub fn primitive(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        UPoly(self.0.iter().map(|x| x / &g).collect())
    }

    pub fn max_norm(&self) -> BigInt {
        self.0.iter().map(|x| x.abs()).max().unwrap_or_else(BigInt::zero)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact quotient in ℤ[x], or `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &UPoly) -> Option<UPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(UPoly::default());
        }
        let dd = d.0.len() - 1;
        if self.0.len() - 1 < dd {
            return None;
        }
        let mut r = self.0.clone();
        let mut quo = vec![BigInt::zero(); r.len() - dd];
        let lc = d.lc();
        for i in (0..quo.len()).rev() {
            let top = &r[i + dd];
            if top.is_zero() {
                continue;
            }
            let (qi, rem) = top.div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            for (j, dc) in d.0.iter().enumerate() {
                r[i + j] -= &qi * dc;
            }
            quo[i] = qi;
        }
        if r.iter().all(|x| x.is_zero()) {
            Some(UPoly::new(quo))
        } else {
            None
        }
    }

    /// Pseudo-remainder: `lc(d)^(deg a - deg d + 1) a mod d`.
    pub fn prem(&self, d: &UPoly) -> UPoly {
        let dd = d.0.len() - 1;
        let lc = d.lc();
        let mut r = self.clone();
        while !r.is_zero() && r.0.len() - 1 >= dd {
            let shift = r.0.len() - 1 - dd;
            let t = r.lc();
            r = r.scale(&lc).sub(&d.shift(shift).scale(&t));
        }
        r
    }

    fn gcd_prs(a: &UPoly, b: &UPoly) -> UPoly {
        let (mut a, mut b) = (a.primitive(), b.primitive());
        if a.0.len() < b.0.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.prem(&b);
            a = b;
            b = r.primitive();
        }
        a.primitive()
    }

    /// Greatest common divisor in ℤ[x], normalised to positive leading coefficient.
    pub fn gcd(a: &UPoly, b: &UPoly) -> UPoly {
        if a.is_zero() {
            return b.primitive().scale(&b.content());
        }
        if b.is_zero() {
            return a.primitive().scale(&a.content());
        }
        let c = a.content().gcd(&b.content());
        let (pa, pb) = (a.primitive(), b.primitive());
        if pa.0.len() == 1 || pb.0.len() == 1 {
            return UPoly::constant(c);
        }
        if let Some(g) = Self::gcd_heuristic(&pa, &pb) {
            return g.scale(&c);
        }
        Self::gcd_prs(&pa, &pb).scale(&c)
    }

    fn gcd_heuristic(a: &UPoly, b: &UPoly) -> Option<UPoly> {
        let mut xi: BigInt = a.max_norm().min(b.max_norm()) * 2 + 29;
        for _ in 0..6 {
            let h = a.eval(&xi).gcd(&b.eval(&xi));
            let g = balanced_digits(&h, &xi);
            let g = UPoly::new(g).primitive();
            if !g.is_zero() && a.exact_div(&g).is_some() && b.exact_div(&g).is_some() {
                return Some(g);
            }
            xi = xi * 73794 / 27011;
        }
        None
    }
}

/// Balanced base-`xi` digits of `h` (each digit in `(-xi/2, xi/2]`), least significant first.
pub(crate) fn balanced_digits(h: &BigInt, xi: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut h = h.clone();
    let half: BigInt = xi / 2;
    while !h.is_zero() {
        let mut d = h.mod_floor(xi);
        if d > half {
            d -= xi;
        }
        out.push(d.clone());
        h = (h - d) / xi;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> UPoly {
        UPoly::new(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn gcd_of_products() {
        let f = p(&[1, -1]); // 1 - x
        let g = p(&[1, 1, 1]);
        let h = p(&[3, 0, 2]);
        let a = f.mul(&g).mul(&g);
        let b = f.mul(&h).mul(&g);
        let d = UPoly::gcd(&a, &b);
        assert_eq!(d, f.mul(&g).primitive());
        assert_eq!(UPoly::gcd_prs(&a, &b), f.mul(&g).primitive());
    }

    #[test]
    fn exact_division_rejects_remainders() {
        let a = p(&[1, 0, -1]);
        assert_eq!(a.exact_div(&p(&[1, 1])), Some(p(&[1, -1])));
        assert_eq!(a.exact_div(&p(&[2, 1])), None);
    }

    #[test]
    fn digits_reconstruct() {
        let xi = BigInt::from(101);
        let h = BigInt::from(-3 * 101 * 101 + 50 * 101 - 7);
        let d = balanced_digits(&h, &xi);
        assert_eq!(d, vec![BigInt::from(-7), BigInt::from(50), BigInt::from(-3)]);
    }
}
