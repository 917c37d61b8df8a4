//! Permutations of `{1, …, N}` stored as 0-based image arrays.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm(Vec<usize>);

impl Perm {
    /// From a 0-based image array; panics if it is not a bijection.
    pub fn new(img: Vec<usize>) -> Self {
        let n = img.len();
        let mut seen = vec![false; n];
        for &x in &img {
            assert!(x < n && !seen[x], "not a permutation: {img:?}");
            seen[x] = true;
        }
        Perm(img)
    }

    /// From a 1-based image array, as printed in the documentation.
    pub fn from_one_based(img: &[usize]) -> Option<Self> {
        let v: Vec<usize> = img.iter().map(|&x| x.wrapping_sub(1)).collect();
        let n = v.len();
        let mut seen = vec![false; n];
        for &x in &v {
            if x >= n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Perm(v))
    }

    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    /// The simple transposition `s_i` (1-based, `1 ≤ i < N`).
    pub fn s(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "s_{i} undefined for N={n}");
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(i - 1, i);
        Perm(v)
    }

    /// The longest element `w₀(i) = N - i + 1`.
    pub fn longest(n: usize) -> Self {
        Perm((0..n).rev().collect())
    }

    /// `σ = s_1 ⋯ s_{N-1}`: `i ↦ i+1`, `N ↦ 1`.
    pub fn sigma(n: usize) -> Self {
        Perm((0..n).map(|i| (i + 1) % n).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|x| x + 1).collect()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `(self ∘ o)(i) = self(o(i))`.
    pub fn compose(&self, o: &Perm) -> Perm {
        Perm(o.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            v[x] = i;
        }
        Perm(v)
    }

    /// Number of inversions `#{i<j : w(i)>w(j)}`.
    pub fn length(&self) -> usize {
        let n = self.0.len();
        let mut c = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.0[i] > self.0[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// Whether `ℓ(s_i w) = ℓ(w) + 1` (1-based `i`).
    pub fn left_ascent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.0[i - 1] < inv.0[i]
    }

    /// Whether `ℓ(w s_i) = ℓ(w) + 1` (1-based `i`).
    pub fn right_ascent(&self, i: usize) -> bool {
        self.0[i - 1] < self.0[i]
    }

    /// A reduced word `[i_1, …, i_r]` with `w = s_{i_1} ⋯ s_{i_r}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let n = self.n();
        let mut w = self.clone();
        let mut word = Vec::new();
        'outer: loop {
            for i in 1..n {
                if !w.left_ascent(i) {
                    word.push(i);
                    w = Perm::s(n, i).compose(&w);
                    continue 'outer;
                }
            }
            break;
        }
        word
    }

    /// `(w·μ)_i = μ_{w^{-1}(i)}`.
    pub fn act_vec<T: Clone>(&self, mu: &[T]) -> Vec<T> {
        let inv = self.inverse();
        (0..mu.len()).map(|i| mu[inv.0[i]].clone()).collect()
    }

    /// All of `S_N` in lexicographic order of image arrays.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Perm>) {
            if cur.len() == n {
                out.push(Perm(cur.clone()));
                return;
            }
            for x in 0..n {
                if !used[x] {
                    used[x] = true;
                    cur.push(x);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[x] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }

    /// Position of `self` in [`Perm::all`] (Lehmer code).
    pub fn lex_rank(&self) -> usize {
        let n = self.n();
        let mut rank = 0;
        for i in 0..n {
            let smaller = (i + 1..n).filter(|&j| self.0[j] < self.0[i]).count();
            rank = rank * (n - i) + smaller;
        }
        rank
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_based())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_rank_matches_enumeration() {
        for n in 1..=5 {
            for (i, p) in Perm::all(n).iter().enumerate() {
                assert_eq!(p.lex_rank(), i);
            }
        }
    }

    #[test]
    fn sigma_is_product_of_simple_reflections() {
        for n in 2..=5 {
            let mut s = Perm::identity(n);
            for i in 1..n {
                s = s.compose(&Perm::s(n, i));
            }
            assert_eq!(s, Perm::sigma(n));
            assert_eq!(Perm::sigma(n).apply(n - 1), 0);
        }
    }

    #[test]
    fn reduced_words_have_length_many_letters() {
        for n in 2..=4 {
            for w in Perm::all(n) {
                let word = w.reduced_word();
                assert_eq!(word.len(), w.length());
                let mut x = Perm::identity(n);
                for &i in &word {
                    x = x.compose(&Perm::s(n, i));
                }
                assert_eq!(x, w);
            }
        }
    }

    #[test]
    fn longest_element() {
        let w0 = Perm::longest(4);
        assert_eq!(w0.length(), 6);
        assert_eq!(w0.one_based(), vec![4, 3, 2, 1]);
    }
}
