//! Formal power series solutions of holonomic systems `A_i(z) f(…, q_i z_i, …) = f(z)`.

use crate::hecke::{HeckeMatrix, HeckeVector};
use crate::scalar::{series::total, Field, MultiIndex, TruncSeries};
use rayon::prelude::*;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolveError {
    #[error("system has {0} variables but {1} generators and {2} bases")]
    Shape(usize, usize, usize),
    #[error("leading vector is not fixed by the constant term of generator {0}")]
    NotFixed(usize),
    #[error("1 - q_{var}^{power} A_{var}^(0) is singular: an eigenvalue of the leading term lies in q^(-N)")]
    Resonant { var: usize, power: u32 },
    #[error("recurrences through variables {pivot} and {other} disagree at {index:?}: the generators are not holonomic")]
    Inconsistent { index: MultiIndex, pivot: usize, other: usize },
}

/// `A_i(z) f(…, q_i z_i, …) = f(z)` for `i < nvars`, with each `A_i` a
/// truncated power series of `H₀`-endomorphisms.
#[derive(Clone, Debug)]
pub struct QDiffSystem<C> {
    pub nvars: usize,
    pub bases: Vec<C>,
    pub gens: Vec<TruncSeries<HeckeMatrix<C>>>,
}

/// The coefficients `f_m` and the number of cross-pivot comparisons that agreed.
#[derive(Clone, Debug)]
pub struct SeriesSolution<C> {
    pub series: TruncSeries<HeckeVector<C>>,
    pub consistency_checks: usize,
}

impl<C: Field> QDiffSystem<C> {
    pub fn new(bases: Vec<C>, gens: Vec<TruncSeries<HeckeMatrix<C>>>) -> Result<Self, SolveError> {
        let nvars = gens.first().map_or(0, |g| g.nvars());
        if gens.len() != nvars || bases.len() != nvars {
            return Err(SolveError::Shape(nvars, gens.len(), bases.len()));
        }
        Ok(QDiffSystem { nvars, bases, gens })
    }

    pub fn degree(&self) -> u32 {
        self.gens.iter().map(|g| g.degree()).min().unwrap_or(0)
    }

    pub fn leading(&self, i: usize) -> HeckeMatrix<C> {
        let n = self.rank();
        self.gens[i].get(&vec![0; self.nvars]).cloned().unwrap_or_else(|| HeckeMatrix::zero(n))
    }

    fn rank(&self) -> usize {
        self.gens.iter().flat_map(|g| g.iter().map(|(_, m)| m.n()).next()).next().unwrap_or(1)
    }

    /// `A(…, q_i z_i, …)`.
    pub fn dilate(&self, s: &TruncSeries<HeckeMatrix<C>>, i: usize) -> TruncSeries<HeckeMatrix<C>> {
        s.rescale(|m, v| v.scale(&self.bases[i].pow_u(m[i])))
    }

    /// `A_i · 𝒯_i(A_j) = A_j · 𝒯_j(A_i)` modulo the truncation degree.
    pub fn holonomy_holds(&self, i: usize, j: usize) -> bool {
        let lhs = self.gens[i].mul_with(&self.dilate(&self.gens[j], i), |a, b| a.mul(b));
        let rhs = self.gens[j].mul_with(&self.dilate(&self.gens[i], j), |a, b| a.mul(b));
        matches!((lhs, rhs), (Ok(a), Ok(b)) if a == b)
    }
}

/// All multi-indices in `nvars` variables of total degree exactly `d`.
pub fn shell(nvars: usize, d: u32) -> Vec<MultiIndex> {
    fn rec(left: u32, slots: usize, cur: &mut MultiIndex, out: &mut Vec<MultiIndex>) {
        if slots == 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in (0..=left).rev() {
            cur.push(x);
            rec(left - x, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if nvars > 0 {
        rec(d, nvars, &mut Vec::new(), &mut out);
    }
    out
}

/// Solve `f_m = (1 - q_i^{m_i} A_i^{(0)})^{-1} Σ_{0 ≠ m' ≤ m} q_i^{(m-m')_i} A_i^{(m')} f_{m-m'}`
/// shell by shell, pivoting on `i = argmax m_i`; every other admissible `i`
/// must reproduce the same `f_m` under `same`.
pub fn solve_formal<C, F>(
    sys: &QDiffSystem<C>,
    v: &HeckeVector<C>,
    degree: u32,
    same: F,
) -> Result<SeriesSolution<C>, SolveError>
where
    C: Field,
    F: Fn(&HeckeVector<C>, &HeckeVector<C>) -> bool + Sync,
{
    let m_vars = sys.nvars;
    let degree = degree.min(sys.degree());
    for i in 0..m_vars {
        if !same(&sys.leading(i).apply(v), v) {
            return Err(SolveError::NotFixed(i));
        }
    }
    let n = v.n();
    let mut inverses: HashMap<(usize, u32), HeckeMatrix<C>> = HashMap::new();
    for i in 0..m_vars {
        let lead = sys.leading(i);
        for p in 1..=degree {
            let op = HeckeMatrix::identity(n).sub(&lead.scale(&sys.bases[i].pow_u(p)));
            let inv = op.inverse().ok_or(SolveError::Resonant { var: i, power: p })?;
            inverses.insert((i, p), inv);
        }
    }
    let mut sol: TruncSeries<HeckeVector<C>> = TruncSeries::constant(m_vars, degree, v.clone());
    let mut checks = 0;
    for d in 1..=degree {
        let idx = shell(m_vars, d);
        let found: Vec<(MultiIndex, HeckeVector<C>, usize)> = idx
            .par_iter()
            .map(|m| {
                let pivot = (0..m_vars).max_by_key(|&i| (m[i], std::cmp::Reverse(i))).expect("variables");
                let via = |i: usize| -> HeckeVector<C> {
                    let mut rhs = HeckeVector::zero(n);
                    for (mp, a) in sys.gens[i].iter() {
                        if total(mp) == 0 || mp.iter().zip(m).any(|(x, y)| x > y) {
                            continue;
                        }
                        let rest: MultiIndex = m.iter().zip(mp).map(|(x, y)| x - y).collect();
                        if let Some(f) = sol.get(&rest) {
                            let w = a.apply(f).scale(&sys.bases[i].pow_u(rest[i]));
                            rhs = rhs.add(&w);
                        }
                    }
                    inverses[&(i, m[i])].apply(&rhs)
                };
                let f = via(pivot);
                let mut ok = 0;
                for other in (0..m_vars).filter(|&j| j != pivot && m[j] > 0) {
                    if !same(&via(other), &f) {
                        return Err(SolveError::Inconsistent { index: m.clone(), pivot, other });
                    }
                    ok += 1;
                }
                Ok((m.clone(), f, ok))
            })
            .collect::<Result<_, _>>()?;
        for (m, f, ok) in found {
            checks += ok;
            sol.insert(m, f);
        }
    }
    Ok(SeriesSolution { series: sol, consistency_checks: checks })
}

/// The one-variable system `A(z) = 1/(1 - z)` with `q_1 = q`, whose solution
/// with `f_0 = 1` is `f_m = ∏_{n=1}^{m} (1 - q^n)^{-1}`.
pub fn toy_system<C: Field>(q: C, degree: u32) -> QDiffSystem<C> {
    let mut a = TruncSeries::zero(1, degree);
    for m in 0..=degree {
        a.insert(vec![m], HeckeMatrix::identity(1));
    }
    QDiffSystem::new(vec![q], vec![a]).expect("one variable, one generator")
}
