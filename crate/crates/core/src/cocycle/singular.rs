//! Exact membership tests for the pole loci of the cocycle.

use crate::weyl::{ComplexPoint, TorusMonomialPoint};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SingularKind {
    /// `t^α ∈ k^{-2} q^ℤ` for some root `α`.
    S,
    /// `t^α ∈ k^{-2} q^{-ℕ}` for some positive root `α` (`ℕ = {1, 2, …}`).
    SPlus,
    /// `t^{-1}` lies in `S₊`.
    SPlusInv,
    /// `k^{2j} ∈ q^ℤ` for some `1 ≤ j ≤ N`, or
    /// `k^{⟨δ, ϖ_j - w(ϖ_j)⟩} ∈ q^ℤ` for some `j < N` and `w(ϖ_j) ≠ ϖ_j`.
    GenericK,
}

/// A singular-set test. For exact monomial points membership is decided on
/// exponents; numeric points are tested against `q^m` for `|m| ≤ window`
/// with a relative margin.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SingularSetPredicate {
    pub kind: SingularKind,
    pub window: i64,
    pub margin: f64,
}

impl SingularSetPredicate {
    pub fn new(kind: SingularKind) -> Self {
        SingularSetPredicate { kind, window: 64, margin: 1e-8 }
    }

    fn root_pairs(n: usize, positive_only: bool) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && (!positive_only || i < j) {
                    v.push((i, j));
                }
            }
        }
        v
    }

    /// Exact membership for a `q,k`-monomial point. `GenericK` is about `k`
    /// alone; with `k` a formal variable it never holds.
    pub fn contains_exact(&self, t: &TorusMonomialPoint) -> bool {
        assert!(t.is_scalar(), "exact singularity test needs a monomial point");
        let n = t.coords.len();
        let test = |pts: &TorusMonomialPoint, pos: bool, q_ok: &dyn Fn(i64) -> bool| {
            Self::root_pairs(n, pos).into_iter().any(|(i, j)| {
                let c = pts.coords[i].div(&pts.coords[j]);
                c.k == -2 && q_ok(c.q)
            })
        };
        match self.kind {
            SingularKind::S => test(t, false, &|_| true),
            SingularKind::SPlus => test(t, true, &|m| m <= -1),
            SingularKind::SPlusInv => {
                use crate::weyl::TorusPoint;
                test(&t.invert(), true, &|m| m <= -1)
            }
            SingularKind::GenericK => false,
        }
    }

    /// Whether `z` is within the margin of `q^m` for an allowed `m` in the window.
    pub fn near_q_power(&self, z: Complex64, q: Complex64, allowed: &dyn Fn(i64) -> bool) -> bool {
        (-self.window..=self.window)
            .filter(|&m| allowed(m))
            .any(|m| (z - q.powi(m as i32)).norm() <= self.margin * z.norm().max(1.0))
    }

    /// Numeric membership with margin; `k` is needed for every kind.
    pub fn contains_numeric(&self, t: &ComplexPoint, k: Complex64) -> bool {
        let n = t.coords.len();
        let q = t.q;
        let k2 = k * k;
        let near = |pos: bool, inv: bool, allowed: &dyn Fn(i64) -> bool| {
            Self::root_pairs(n, pos).into_iter().any(|(i, j)| {
                let mut r = t.coords[i] / t.coords[j];
                if inv {
                    r = r.inv();
                }
                // t^α k^2 ∈ q^{…}
                self.near_q_power(r * k2, q, allowed)
            })
        };
        match self.kind {
            SingularKind::S => near(false, false, &|_| true),
            SingularKind::SPlus => near(true, false, &|m| m <= -1),
            SingularKind::SPlusInv => near(true, true, &|m| m <= -1),
            SingularKind::GenericK => {
                let delta = TorusMonomialPoint::delta(n);
                let mut bad = (1..=n as i32).any(|j| self.near_q_power(k.powi(2 * j), q, &|_| true));
                for j in 1..n {
                    // ⟨δ, ϖ_j - w(ϖ_j)⟩ over all distinct images w(ϖ_j): subsets of size j
                    let top: i64 = delta[..j].iter().sum();
                    for subset in subsets(n, j) {
                        let s: i64 = subset.iter().map(|&i| delta[i]).sum();
                        if s != top {
                            bad |= self.near_q_power(k.powi((top - s) as i32), q, &|_| true);
                        }
                    }
                }
                bad
            }
        }
    }
}

fn subsets(n: usize, j: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == j {
            out.push((0..n).filter(|&i| mask & (1 << i) != 0).collect());
        }
    }
    out
}
