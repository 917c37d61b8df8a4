//! Sparse bivariate integer polynomials in `q` and `k`.
//!
//! Terms are kept sorted in descending graded-lex order with `q ≺ k`, so the
//! first term is the leading term.

use super::upoly::{balanced_digits, UPoly};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly2 {
    /// `(deg_q, deg_k, coeff)`, descending graded-lex, nonzero coefficients.
    terms: Vec<(u32, u32, BigInt)>,
}

#[inline]
fn key(a: u32, b: u32) -> (u32, u32, u32) {
    (a + b, b, a)
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2 { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(a: u32, b: u32, c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly2 { terms: vec![(a, b, c)] }
        }
    }

    /// Build from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (u32, u32, BigInt)>>(it: I) -> Self {
        let mut m: BTreeMap<(u32, u32, u32), BigInt> = BTreeMap::new();
        for (a, b, c) in it {
            *m.entry(key(a, b)).or_insert_with(BigInt::zero) += c;
        }
        let terms = m
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|((_, b, a), c)| (a, b, c))
            .collect();
        Poly2 { terms }
    }

    pub fn terms(&self) -> &[(u32, u32, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1 == 0 && self.terms[0].2.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1 == 0)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn lc(&self) -> BigInt {
        self.terms.first().map(|t| t.2.clone()).unwrap_or_else(BigInt::zero)
    }

    pub fn deg_q(&self) -> u32 {
        self.terms.iter().map(|t| t.0).max().unwrap_or(0)
    }

    pub fn deg_k(&self) -> u32 {
        self.terms.iter().map(|t| t.1).max().unwrap_or(0)
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> (u32, u32) {
        let a = self.terms.iter().map(|t| t.0).min().unwrap_or(0);
        let b = self.terms.iter().map(|t| t.1).min().unwrap_or(0);
        (a, b)
    }

    pub fn div_monomial(&self, a: u32, b: u32) -> Self {
        Poly2 { terms: self.terms.iter().map(|(x, y, c)| (x - a, y - b, c.clone())).collect() }
    }

    pub fn mul_monomial(&self, a: u32, b: u32) -> Self {
        Poly2 { terms: self.terms.iter().map(|(x, y, c)| (x + a, y + b, c.clone())).collect() }
    }

    pub fn neg(&self) -> Self {
        Poly2 { terms: self.terms.iter().map(|(a, b, c)| (*a, *b, -c)).collect() }
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Poly2 { terms: self.terms.iter().map(|(a, b, c)| (*a, *b, c * s)).collect() }
    }

    pub fn div_scalar_exact(&self, s: &BigInt) -> Self {
        Poly2 { terms: self.terms.iter().map(|(a, b, c)| (*a, *b, c / s)).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < o.terms.len() {
            let (a1, b1, c1) = &self.terms[i];
            let (a2, b2, c2) = &o.terms[j];
            match key(*a1, *b1).cmp(&key(*a2, *b2)) {
                std::cmp::Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(o.terms[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = c1 + c2;
                    if !c.is_zero() {
                        out.push((*a1, *b1, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&o.terms[j..]);
        Poly2 { terms: out }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if o.terms.len() == 1 {
            let (a, b, c) = &o.terms[0];
            return Poly2 { terms: self.terms.iter().map(|(x, y, d)| (x + a, y + b, d * c)).collect() };
        }
        if self.terms.len() == 1 {
            return o.mul(self);
        }
        let dq = (self.deg_q() + o.deg_q() + 1) as usize;
        let dk = (self.deg_k() + o.deg_k() + 1) as usize;
        let mut acc = vec![BigInt::zero(); dq * dk];
        for (a1, b1, c1) in &self.terms {
            for (a2, b2, c2) in &o.terms {
                acc[(a1 + a2) as usize * dk + (b1 + b2) as usize] += c1 * c2;
            }
        }
        let mut terms: Vec<(u32, u32, BigInt)> = Vec::new();
        for (idx, c) in acc.into_iter().enumerate() {
            if !c.is_zero() {
                terms.push(((idx / dk) as u32, (idx % dk) as u32, c));
            }
        }
        terms.sort_by(|x, y| key(y.0, y.1).cmp(&key(x.0, x.1)));
        Poly2 { terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self` in ℤ[q,k].
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.deg_q() > self.deg_q() || d.deg_k() > self.deg_k() {
            return None;
        }
        if d.terms.len() == 1 {
            let (a, b, c) = &d.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for (x, y, e) in &self.terms {
                if x < a || y < b {
                    return None;
                }
                let (qq, r) = e.div_rem(c);
                if !r.is_zero() {
                    return None;
                }
                out.push((x - a, y - b, qq));
            }
            return Some(Poly2 { terms: out });
        }
        let (la, lb, lcoef) = d.terms[0].clone();
        let mut rem: BTreeMap<(u32, u32, u32), BigInt> =
            self.terms.iter().map(|(a, b, c)| (key(*a, *b), c.clone())).collect();
        let mut quo = Vec::new();
        while let Some((&k0, c0)) = rem.iter().next_back() {
            let (_, b0, a0) = k0;
            if a0 < la || b0 < lb {
                return None;
            }
            let (qc, r) = c0.div_rem(&lcoef);
            if !r.is_zero() {
                return None;
            }
            let (qa, qb) = (a0 - la, b0 - lb);
            for (a, b, c) in &d.terms {
                let kk = key(a + qa, b + qb);
                let e = rem.entry(kk).or_insert_with(BigInt::zero);
                *e -= &qc * c;
                if e.is_zero() {
                    rem.remove(&kk);
                }
            }
            quo.push((qa, qb, qc));
        }
        Some(Poly2 { terms: quo })
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, _, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn max_norm(&self) -> BigInt {
        self.terms.iter().map(|t| t.2.abs()).max().unwrap_or_else(BigInt::zero)
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        if g.is_one() {
            self.clone()
        } else {
            self.div_scalar_exact(&g)
        }
    }

    /// Substitute an integer for `k`, giving a univariate polynomial in `q`.
    fn eval_k(&self, xi: &BigInt) -> UPoly {
        let mut c = vec![BigInt::zero(); self.deg_q() as usize + 1];
        let mut pows: Vec<BigInt> = vec![BigInt::one()];
        for _ in 0..self.deg_k() {
            let next = pows.last().unwrap() * xi;
            pows.push(next);
        }
        for (a, b, v) in &self.terms {
            c[*a as usize] += v * &pows[*b as usize];
        }
        UPoly::new(c)
    }

    pub fn eval_complex(&self, q: Complex64, k: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (a, b, c) in &self.terms {
            let cf = c.to_f64().unwrap_or(f64::NAN);
            acc += q.powu(*a) * k.powu(*b) * cf;
        }
        acc
    }

    fn to_rec(&self) -> Vec<UPoly> {
        let mut rows = vec![vec![BigInt::zero(); self.deg_q() as usize + 1]; self.deg_k() as usize + 1];
        for (a, b, c) in &self.terms {
            rows[*b as usize][*a as usize] = c.clone();
        }
        rows.into_iter().map(UPoly::new).collect()
    }

    fn from_rec(rows: &[UPoly]) -> Self {
        Self::from_terms(
            rows.iter()
                .enumerate()
                .flat_map(|(b, p)| p.0.iter().enumerate().map(move |(a, c)| (a as u32, b as u32, c.clone()))),
        )
    }

    /// Greatest common divisor in ℤ[q,k], primitive up to the integer content gcd,
    /// with positive leading coefficient.
    pub fn gcd(x: &Self, y: &Self) -> Self {
        if x.is_zero() {
            return y.primitive().scale(&y.content());
        }
        if y.is_zero() {
            return x.primitive().scale(&x.content());
        }
        let (xa, xb) = x.monomial_content();
        let (ya, yb) = y.monomial_content();
        let (ma, mb) = (xa.min(ya), xb.min(yb));
        let c = x.content().gcd(&y.content());
        let px = x.div_monomial(xa, xb).primitive();
        let py = y.div_monomial(ya, yb).primitive();
        let core = if px.is_constant() || py.is_constant() {
            Self::one()
        } else if px == py {
            px
        } else if py.exact_div(&px).is_some() {
            px
        } else if px.exact_div(&py).is_some() {
            py
        } else {
            Self::gcd_heuristic(&px, &py).unwrap_or_else(|| Self::gcd_prs(&px, &py))
        };
        core.mul_monomial(ma, mb).scale(&c)
    }

    fn gcd_heuristic(a: &Self, b: &Self) -> Option<Self> {
        let mut xi: BigInt = a.max_norm().min(b.max_norm()) * 2 + 29;
        for _ in 0..6 {
            let h = UPoly::gcd(&a.eval_k(&xi), &b.eval_k(&xi));
            let terms = h.0.iter().enumerate().flat_map(|(qa, c)| {
                balanced_digits(c, &xi).into_iter().enumerate().map(move |(kb, d)| (qa as u32, kb as u32, d))
            });
            let g = Self::from_terms(terms).primitive();
            if !g.is_zero() && a.exact_div(&g).is_some() && b.exact_div(&g).is_some() {
                return Some(g);
            }
            xi = xi * 73794 / 27011;
        }
        None
    }

    /// Primitive PRS over ℤ[q][k]; slow but unconditional.
    fn gcd_prs(a: &Self, b: &Self) -> Self {
        fn content(p: &[UPoly]) -> UPoly {
            let mut g = UPoly::default();
            for c in p {
                g = UPoly::gcd(&g, c);
            }
            g
        }
        fn divc(p: &[UPoly], c: &UPoly) -> Vec<UPoly> {
            p.iter().map(|x| x.exact_div(c).expect("content divides")).collect()
        }
        fn trim(mut p: Vec<UPoly>) -> Vec<UPoly> {
            while p.last().map_or(false, |x| x.is_zero()) {
                p.pop();
            }
            p
        }
        fn prem(a: &[UPoly], d: &[UPoly]) -> Vec<UPoly> {
            let dd = d.len() - 1;
            let lc = d[dd].clone();
            let mut r = a.to_vec();
            while !r.is_empty() && r.len() - 1 >= dd {
                let sh = r.len() - 1 - dd;
                let t = r.last().unwrap().clone();
                let mut nr: Vec<UPoly> = r.iter().map(|x| x.mul(&lc)).collect();
                for (j, dc) in d.iter().enumerate() {
                    nr[j + sh] = nr[j + sh].sub(&dc.mul(&t));
                }
                r = trim(nr);
            }
            r
        }
        let ra = a.to_rec();
        let rb = b.to_rec();
        let ca = content(&ra);
        let cb = content(&rb);
        let cg = UPoly::gcd(&ca, &cb);
        let mut x = divc(&ra, &ca);
        let mut y = divc(&rb, &cb);
        if x.len() < y.len() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_empty() {
            let r = prem(&x, &y);
            x = y;
            if r.is_empty() {
                y = r;
            } else {
                let c = content(&r);
                y = divc(&r, &c);
            }
        }
        let c = content(&x);
        let x = divc(&x, &c);
        let g: Vec<UPoly> = x.iter().map(|p| p.mul(&cg)).collect();
        Self::from_rec(&g).primitive()
    }

    /// Canonical text form, e.g. `2*q^3*k - q + 1`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (a, b, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || (*a == 0 && *b == 0) {
                factors.push(mag.to_string());
            }
            for (name, e) in [("q", *a), ("k", *b)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            s.push_str(&factors.join("*"));
        }
        s
    }

    /// Parse the output of [`Poly2::render`] (and slightly more liberal input).
    pub fn parse(src: &str) -> Result<Self, String> {
        let terms = parse_terms(src)?;
        if terms.iter().any(|&(a, b, _)| a < 0 || b < 0) {
            return Err(format!("negative exponent in polynomial '{src}'"));
        }
        Ok(Self::from_terms(terms.into_iter().map(|(a, b, c)| (a as u32, b as u32, c))))
    }

    /// Parse a Laurent polynomial in `q, k`, returned as `(p, a, b)` meaning `p · q^{-a} k^{-b}`.
    pub fn parse_laurent(src: &str) -> Result<(Self, u32, u32), String> {
        let terms = parse_terms(src)?;
        let a = terms.iter().map(|t| -t.0).max().unwrap_or(0).max(0);
        let b = terms.iter().map(|t| -t.1).max().unwrap_or(0).max(0);
        let p = Self::from_terms(terms.into_iter().map(|(x, y, c)| ((x + a) as u32, (y + b) as u32, c)));
        Ok((p, a as u32, b as u32))
    }
}

fn parse_terms(src: &str) -> Result<Vec<(i64, i64, BigInt)>, String> {
    let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty polynomial".into());
    }
    let bytes = s.as_bytes();
    // a sign directly after '^' belongs to the exponent
    let is_sep = |j: usize| (bytes[j] == b'+' || bytes[j] == b'-') && (j == 0 || bytes[j - 1] != b'^');
    let mut i = 0;
    let mut terms = Vec::new();
    while i < bytes.len() {
        let mut sign = 1i64;
        if is_sep(i) {
            if bytes[i] == b'-' {
                sign = -1;
            }
            i += 1;
        } else if i != 0 {
            return Err(format!("expected sign at offset {i} in '{src}'"));
        }
        let start = i;
        while i < bytes.len() && !is_sep(i) {
            i += 1;
        }
        let term = &s[start..i];
        if term.is_empty() {
            return Err(format!("empty term in '{src}'"));
        }
        let mut coeff = BigInt::from(sign);
        let (mut qa, mut kb) = (0i64, 0i64);
        for f in term.split('*') {
            let (base, exp) = match f.split_once('^') {
                Some((b, e)) => (b, e.parse::<i64>().map_err(|e| format!("bad exponent '{f}': {e}"))?),
                None => (f, 1),
            };
            match base {
                "q" => qa += exp,
                "k" => kb += exp,
                num => {
                    if exp < 0 {
                        return Err(format!("negative power of a number in '{f}'"));
                    }
                    let v: BigInt = num.parse().map_err(|_| format!("bad factor '{f}'"))?;
                    coeff *= num_traits::pow(v, exp as usize);
                }
            }
        }
        terms.push((qa, kb, coeff));
    }
    Ok(terms)
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly2 {
        Poly2::parse(s).unwrap()
    }

    #[test]
    fn render_parse_round_trip() {
        for s in ["2*q^3*k - q + 1", "-k^2 + 7", "0", "q*k"] {
            assert_eq!(p(s).render(), s);
        }
    }

    #[test]
    fn leading_term_is_graded_lex_with_k_above_q() {
        let x = p("q^2 + q*k + 3");
        assert_eq!(x.terms()[0], (1, 1, BigInt::from(1)));
    }

    #[test]
    fn division_and_gcd() {
        let a = p("1 - k^2*q");
        let b = p("1 + q + k");
        let c = p("q^2 - k^3 + 2");
        let x = a.mul(&b).mul(&b);
        let y = a.mul(&c).mul(&b).mul(&p("q*k^2"));
        assert_eq!(x.exact_div(&a).unwrap(), b.mul(&b));
        assert!(x.exact_div(&c).is_none());
        let g = Poly2::gcd(&x, &y);
        assert_eq!(g, a.mul(&b).primitive());
        assert_eq!(Poly2::gcd_prs(&x, &y), a.mul(&b).primitive());
    }

    #[test]
    fn cyclotomic_factors() {
        let a = p("1 - q^6*k^12");
        let b = p("1 - q^4*k^8");
        assert_eq!(Poly2::gcd(&a, &b), p("q^2*k^4 - 1").primitive());
    }
}
