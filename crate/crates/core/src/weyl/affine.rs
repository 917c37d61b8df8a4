//! The extended affine Weyl group `W ≅ S_N ⋉ ℤ^N` and words in `s_i`, `π`.

use super::perm::Perm;
use serde::{Deserialize, Serialize};
use std::fmt;

/// The element `λ·u` (translation after permutation).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExtAffineElt {
    pub perm: Perm,
    pub trans: Vec<i64>,
}

/// A generator letter. `S(0)` is the affine reflection `π s_{N-1} π^{-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Letter {
    S(usize),
    Pi(i64),
}

/// A word in the generators, read left to right as a product.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Word(pub Vec<Letter>);

/// Normal form `s_{i_1} ⋯ s_{i_r} π^m` with letters in `{0, …, N-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedWord {
    pub letters: Vec<usize>,
    pub pi_power: i64,
}

impl ExtAffineElt {
    pub fn identity(n: usize) -> Self {
        ExtAffineElt { perm: Perm::identity(n), trans: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    pub fn from_perm(p: Perm) -> Self {
        let n = p.n();
        ExtAffineElt { perm: p, trans: vec![0; n] }
    }

    pub fn translation(lambda: &[i64]) -> Self {
        ExtAffineElt { perm: Perm::identity(lambda.len()), trans: lambda.to_vec() }
    }

    pub fn s(n: usize, i: usize) -> Self {
        if i == 0 {
            let p = Self::pi(n);
            return p.mul(&Self::s(n, n - 1)).mul(&p.inverse());
        }
        Self::from_perm(Perm::s(n, i))
    }

    /// `π = σ ε_N = ε_1 σ`.
    pub fn pi(n: usize) -> Self {
        let mut t = vec![0; n];
        t[0] = 1;
        ExtAffineElt { perm: Perm::sigma(n), trans: t }
    }

    /// `ε_j` (1-based).
    pub fn eps(n: usize, j: usize) -> Self {
        let mut t = vec![0; n];
        t[j - 1] = 1;
        Self::translation(&t)
    }

    /// `ϖ_i = ε_1 + … + ε_i` (1-based).
    pub fn varpi(n: usize, i: usize) -> Self {
        Self::translation(&varpi_vec(n, i))
    }

    pub fn is_translation(&self) -> bool {
        self.perm == Perm::identity(self.n())
    }

    pub fn is_finite(&self) -> bool {
        self.trans.iter().all(|&x| x == 0)
    }

    /// `(λ,u)(μ,v) = (λ + u·μ, uv)`.
    pub fn mul(&self, o: &Self) -> Self {
        let um = self.perm.act_vec(&o.trans);
        ExtAffineElt {
            perm: self.perm.compose(&o.perm),
            trans: self.trans.iter().zip(&um).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let ui = self.perm.inverse();
        let t = ui.act_vec(&self.trans);
        ExtAffineElt { perm: ui, trans: t.into_iter().map(|x| -x).collect() }
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self::identity(self.n());
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// `♦`: identity on `S_N`, negation on translations.
    pub fn diamond(&self) -> Self {
        ExtAffineElt { perm: self.perm.clone(), trans: self.trans.iter().map(|x| -x).collect() }
    }

    /// Affine permutation `f(i) = u(i) + N λ_{u(i)}` on the window `1..=N`.
    fn window(&self) -> Vec<i64> {
        let n = self.n() as i64;
        (0..self.n())
            .map(|i| {
                let ui = self.perm.apply(i);
                ui as i64 + 1 + n * self.trans[ui]
            })
            .collect()
    }

    /// Length: inversions of the affine permutation.
    pub fn length(&self) -> usize {
        let n = self.n() as i64;
        let f = self.window();
        let mut count: i64 = 0;
        for i in 1..=n {
            let fi = f[(i - 1) as usize];
            for r in 1..=n {
                let fr = f[(r - 1) as usize];
                // j = r + N m with j > i and f(r) + N m < f(i)
                let lo = (i - r).div_euclid(n) + 1;
                let hi = (fi - fr + n - 1).div_euclid(n) - 1;
                if hi >= lo {
                    count += hi - lo + 1;
                }
            }
        }
        count as usize
    }

    /// Descent-peeling normal form `s_{i_1} ⋯ s_{i_r} π^m`; always reduced.
    pub fn normal_form(&self) -> ReducedWord {
        let n = self.n();
        let mut w = self.clone();
        let mut letters = Vec::new();
        let gens: Vec<ExtAffineElt> = (0..n).map(|i| Self::s(n, i)).collect();
        'outer: loop {
            let l = w.length();
            if l == 0 {
                break;
            }
            for (i, g) in gens.iter().enumerate() {
                let cand = g.mul(&w);
                if cand.length() < l {
                    letters.push(i);
                    w = cand;
                    continue 'outer;
                }
            }
            unreachable!("element of positive length without a left descent");
        }
        // w has length zero, hence is a power of π; π^N is the central translation ϖ_N.
        let m = w.trans.iter().sum::<i64>();
        debug_assert_eq!(w, Self::pi(n).pow(m));
        ReducedWord { letters, pi_power: m }
    }
}

pub fn varpi_vec(n: usize, i: usize) -> Vec<i64> {
    (0..n).map(|r| if r < i { 1 } else { 0 }).collect()
}

/// `σ^i = (s_i ⋯ s_{N-1})(s_{i-1} ⋯ s_{N-2}) ⋯ (s_1 ⋯ s_{N-i})`.
pub fn sigma_power_word(n: usize, i: usize) -> Vec<usize> {
    let mut w = Vec::new();
    for r in 0..i {
        let start = i - r;
        let end = n - 1 - r;
        w.extend(start..=end);
    }
    w
}

impl Word {
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn inverse(&self) -> Word {
        Word(
            self.0
                .iter()
                .rev()
                .map(|l| match l {
                    Letter::S(i) => Letter::S(*i),
                    Letter::Pi(m) => Letter::Pi(-m),
                })
                .collect(),
        )
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Word(v).simplified()
    }

    /// Merge adjacent π-powers and drop `π^0`.
    pub fn simplified(&self) -> Word {
        let mut out: Vec<Letter> = Vec::new();
        for l in &self.0 {
            match (out.last_mut(), l) {
                (Some(Letter::Pi(a)), Letter::Pi(b)) => {
                    *a += b;
                    if *a == 0 {
                        out.pop();
                    }
                }
                (_, Letter::Pi(0)) => {}
                _ => out.push(*l),
            }
        }
        Word(out)
    }

    /// Replace every `s_0` by `π s_{N-1} π^{-1}`.
    pub fn without_affine_reflection(&self, n: usize) -> Word {
        let mut out = Vec::new();
        for l in &self.0 {
            match l {
                Letter::S(0) => out.extend([Letter::Pi(1), Letter::S(n - 1), Letter::Pi(-1)]),
                other => out.push(*other),
            }
        }
        Word(out).simplified()
    }

    pub fn evaluate(&self, n: usize) -> ExtAffineElt {
        let mut acc = ExtAffineElt::identity(n);
        for l in &self.0 {
            let g = match l {
                Letter::S(i) => ExtAffineElt::s(n, *i),
                Letter::Pi(m) => ExtAffineElt::pi(n).pow(*m),
            };
            acc = acc.mul(&g);
        }
        acc
    }

    /// Number of `s_i` letters.
    pub fn reflection_count(&self) -> usize {
        self.0.iter().filter(|l| matches!(l, Letter::S(_))).count()
    }

    /// Parse text such as `"pi s2 s1"` or `"s1 pi^-2"`.
    pub fn parse(s: &str) -> Result<Word, String> {
        let mut out = Vec::new();
        for tok in s.split_whitespace() {
            if let Some(rest) = tok.strip_prefix("pi") {
                let m = match rest.strip_prefix('^') {
                    Some(e) => e.parse::<i64>().map_err(|e| format!("bad π power '{tok}': {e}"))?,
                    None if rest.is_empty() => 1,
                    None => return Err(format!("bad token '{tok}'")),
                };
                out.push(Letter::Pi(m));
            } else if let Some(rest) = tok.strip_prefix('s') {
                out.push(Letter::S(rest.parse().map_err(|e| format!("bad letter '{tok}': {e}"))?));
            } else if tok == "e" || tok == "1" {
            } else {
                return Err(format!("bad token '{tok}'"));
            }
        }
        Ok(Word(out))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|l| match l {
                Letter::S(i) => format!("s{i}"),
                Letter::Pi(1) => "pi".to_string(),
                Letter::Pi(m) => format!("pi^{m}"),
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl ReducedWord {
    pub fn to_word(&self) -> Word {
        let mut v: Vec<Letter> = self.letters.iter().map(|&i| Letter::S(i)).collect();
        v.push(Letter::Pi(self.pi_power));
        Word(v).simplified()
    }
}

/// `ε_j = s_{j-1} ⋯ s_1 π s_{N-1} ⋯ s_j`.
pub fn eps_word(n: usize, j: usize) -> Word {
    let mut v: Vec<Letter> = (1..j).rev().map(Letter::S).collect();
    v.push(Letter::Pi(1));
    v.extend((j..n).rev().map(Letter::S));
    Word(v)
}

/// `ϖ_i = π^i σ^{-i}` with `σ^{-i}` the reverse of [`sigma_power_word`].
pub fn varpi_word(n: usize, i: usize) -> Word {
    let mut v = vec![Letter::Pi(i as i64)];
    v.extend(sigma_power_word(n, i).into_iter().rev().map(Letter::S));
    Word(v).simplified()
}

/// Word for a translation via `λ = Σ c_i ϖ_i`, `c_i = λ_i - λ_{i+1}`, `c_N = λ_N`.
pub fn translation_word(lambda: &[i64]) -> Word {
    let n = lambda.len();
    let mut w = Word::default();
    for i in 1..=n {
        let c = if i < n { lambda[i - 1] - lambda[i] } else { lambda[n - 1] };
        let base = varpi_word(n, i);
        let piece = if c >= 0 { base } else { base.inverse() };
        for _ in 0..c.unsigned_abs() {
            w = w.concat(&piece);
        }
    }
    w
}

/// Word used for cocycle evaluation: translation part via the fundamental
/// weights, then a reduced word of the finite part. Contains no `s_0`.
pub fn factored_word(e: &ExtAffineElt) -> Word {
    let n = e.n();
    let mut w = translation_word(&e.trans);
    let fin = Word(e.perm.reduced_word().into_iter().map(Letter::S).collect());
    w = w.concat(&fin);
    debug_assert_eq!(w.evaluate(n), *e);
    w
}

/// The word returned to users: the closed formulas for `ε_j` and `ϖ_i`,
/// otherwise the descent normal form.
pub fn reduced_word(e: &ExtAffineElt) -> Word {
    let n = e.n();
    if e.is_translation() {
        let t = &e.trans;
        if let Some(j) = (1..=n).find(|&j| *t == ExtAffineElt::eps(n, j).trans) {
            return eps_word(n, j);
        }
        if let Some(i) = (1..=n).find(|&i| *t == varpi_vec(n, i)) {
            return varpi_word(n, i);
        }
    }
    e.normal_form().to_word()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_acts_as_rotation_with_shift() {
        let p = ExtAffineElt::pi(3);
        assert_eq!(p.length(), 0);
        assert_eq!(p.pow(3), ExtAffineElt::translation(&[1, 1, 1]));
    }

    #[test]
    fn eps_word_matches_element() {
        for n in 2..=5 {
            for j in 1..=n {
                let w = eps_word(n, j);
                assert_eq!(w.evaluate(n), ExtAffineElt::eps(n, j));
                assert_eq!(w.reflection_count(), ExtAffineElt::eps(n, j).length());
            }
        }
        assert_eq!(eps_word(3, 1).to_string(), "pi s2 s1");
    }

    #[test]
    fn varpi_word_matches_element() {
        for n in 2..=5 {
            for i in 1..=n {
                let w = varpi_word(n, i);
                assert_eq!(w.evaluate(n), ExtAffineElt::varpi(n, i));
                assert_eq!(w.reflection_count(), i * (n - i));
                assert_eq!(ExtAffineElt::varpi(n, i).length(), i * (n - i));
            }
        }
        assert_eq!(varpi_word(3, 3).to_string(), "pi^3");
    }

    #[test]
    fn normal_form_is_reduced() {
        let n = 3;
        let e = ExtAffineElt::translation(&[2, -1, 0]).mul(&ExtAffineElt::s(n, 1));
        let nf = e.normal_form();
        assert_eq!(nf.letters.len(), e.length());
        assert_eq!(nf.to_word().evaluate(n), e);
    }

    #[test]
    fn parse_and_render() {
        let w = Word::parse("s1 s2 pi^2").unwrap();
        assert_eq!(w.to_string(), "s1 s2 pi^2");
        assert_eq!(Word::parse("pi s2 s1").unwrap(), eps_word(3, 1));
    }

    #[test]
    fn affine_reflection_is_involution_of_length_one() {
        for n in 2..=4 {
            let s0 = ExtAffineElt::s(n, 0);
            assert_eq!(s0.length(), 1);
            assert_eq!(s0.mul(&s0), ExtAffineElt::identity(n));
        }
    }
}
