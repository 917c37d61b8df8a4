//! Multiplication tables for `S_N` in the fixed lexicographic enumeration.

use crate::weyl::Perm;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Precomputed data for `S_N`; indices refer to positions in lex order.
#[derive(Debug)]
pub struct SymGroup {
    pub n: usize,
    pub perms: Vec<Perm>,
    pub length: Vec<usize>,
    pub inverse: Vec<usize>,
    /// `left[i-1][w] = (index of s_i w, ℓ(s_i w) > ℓ(w))`.
    pub left: Vec<Vec<(usize, bool)>>,
    /// `right[i-1][w] = (index of w s_i, ℓ(w s_i) > ℓ(w))`.
    pub right: Vec<Vec<(usize, bool)>>,
    /// Index of `σ w`.
    pub sigma_left: Vec<usize>,
    /// Index of `σ^{-1} w`.
    pub sigma_inv_left: Vec<usize>,
    /// `w^{-1}(N)` (0-based).
    pub preimage_last: Vec<usize>,
    /// `w^{-1}(1)` (0-based).
    pub preimage_first: Vec<usize>,
    /// Reduced words.
    pub words: Vec<Vec<usize>>,
    pub w0: usize,
}

impl SymGroup {
    fn build(n: usize) -> Self {
        assert!(n >= 1, "N must be positive");
        let perms = Perm::all(n);
        let idx = |p: &Perm| p.lex_rank();
        let length: Vec<usize> = perms.iter().map(Perm::length).collect();
        let inverse = perms.iter().map(|p| idx(&p.inverse())).collect();
        let mut left = Vec::new();
        let mut right = Vec::new();
        for i in 1..n {
            let s = Perm::s(n, i);
            left.push(
                perms
                    .iter()
                    .enumerate()
                    .map(|(w, p)| {
                        let j = idx(&s.compose(p));
                        (j, length[j] > length[w])
                    })
                    .collect(),
            );
            right.push(
                perms
                    .iter()
                    .enumerate()
                    .map(|(w, p)| {
                        let j = idx(&p.compose(&s));
                        (j, length[j] > length[w])
                    })
                    .collect(),
            );
        }
        let sigma = Perm::sigma(n);
        let sigma_inv = sigma.inverse();
        let sigma_left = perms.iter().map(|p| idx(&sigma.compose(p))).collect();
        let sigma_inv_left = perms.iter().map(|p| idx(&sigma_inv.compose(p))).collect();
        let preimage_last = perms.iter().map(|p| p.inverse().apply(n - 1)).collect();
        let preimage_first = perms.iter().map(|p| p.inverse().apply(0)).collect();
        let words = perms.iter().map(Perm::reduced_word).collect();
        let w0 = idx(&Perm::longest(n));
        SymGroup {
            n,
            perms,
            length,
            inverse,
            left,
            right,
            sigma_left,
            sigma_inv_left,
            preimage_last,
            preimage_first,
            words,
            w0,
        }
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn index(&self, p: &Perm) -> usize {
        p.lex_rank()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn compose(&self, a: usize, b: usize) -> usize {
        self.index(&self.perms[a].compose(&self.perms[b]))
    }
}

/// Shared tables for `S_N`, built once per `N`.
pub fn sym_group(n: usize) -> Arc<SymGroup> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<SymGroup>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = cache.lock().expect("symmetric group cache poisoned");
    map.entry(n).or_insert_with(|| Arc::new(SymGroup::build(n))).clone()
}
