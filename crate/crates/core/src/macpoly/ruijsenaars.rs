//! Ruijsenaars' q-difference operators on symmetric Laurent polynomials and
//! a dominance-triangular eigen-solver built on them.

use super::{eval_laurent, partitions, spectral_point, Laurent, MacError, SymLaurentPoly};
use crate::scalar::{RatQK, Ring};
use crate::weyl::{dominance_order_leq, TorusMonomialPoint};
use itertools::Itertools;

/// `e_i` evaluated at a monomial point.
pub fn elementary_at(i: usize, t: &TorusMonomialPoint) -> RatQK {
    let n = t.coords.len();
    let mut acc = RatQK::zero();
    for set in (0..n).combinations(i) {
        let (a, b) = set.iter().fold((0, 0), |(a, b), &r| (a + t.coords[r].q, b + t.coords[r].k));
        acc = acc.plus(&RatQK::qk(a, b));
    }
    acc
}

fn var(n: usize, i: usize, c: RatQK) -> Laurent {
    let mut e = vec![0; n];
    e[i] = 1;
    Laurent::monomial(e, c)
}

/// `∏_{r<s} (x_r - x_s)`.
fn vandermonde(n: usize) -> Laurent {
    let mut d = Laurent::one();
    for r in 0..n {
        for s in r + 1..n {
            d = d.times(&var(n, r, RatQK::one()).minus(&var(n, s, RatQK::one())));
        }
    }
    d
}

/// `f(q^{-ε_I} x)`.
fn shift_down(f: &Laurent, set: &[usize]) -> Laurent {
    Laurent::from_terms(f.terms().map(|(e, c)| {
        let deg: i64 = set.iter().map(|&r| crate::scalar::laurent::exp_at(e, r) as i64).sum();
        (e.clone(), c.times(&RatQK::qk(-deg, 0)))
    }))
}

/// `Δ · ∏_{r∈I, s∉I} (k x_r - k^{-1} x_s)/(x_r - x_s)` as a polynomial.
fn cleared_coefficient(n: usize, set: &[usize]) -> Laurent {
    let inside = |r: usize| set.contains(&r);
    let k = RatQK::k();
    let kinv = RatQK::qk(0, -1);
    let mut acc = Laurent::one();
    let mut flips = 0;
    for r in 0..n {
        for s in r + 1..n {
            let f = match (inside(r), inside(s)) {
                (true, false) => var(n, r, k.clone()).minus(&var(n, s, kinv.clone())),
                (false, true) => {
                    flips += 1;
                    var(n, s, k.clone()).minus(&var(n, r, kinv.clone()))
                }
                _ => var(n, r, RatQK::one()).minus(&var(n, s, RatQK::one())),
            };
            acc = acc.times(&f);
        }
    }
    if flips % 2 == 1 {
        acc.negate()
    } else {
        acc
    }
}

/// `L_{e_i} f = Σ_{|I|=i} A_I(x) f(q^{-ε_I} x)` with the common denominator
/// `∏_{r<s}(x_r - x_s)` divided out exactly.
pub fn ruijsenaars_apply(i: usize, f: &SymLaurentPoly) -> Result<SymLaurentPoly, MacError> {
    let n = f.n;
    if i == 0 || i > n {
        return Err(MacError::DivisionFailure(format!("operator index {i} outside 1..={n}")));
    }
    let mut num = Laurent::zero();
    for set in (0..n).combinations(i) {
        num = num.plus(&cleared_coefficient(n, &set).times(&shift_down(&f.poly, &set)));
    }
    let out = num
        .exact_div(&vandermonde(n))
        .ok_or_else(|| MacError::DivisionFailure(format!("L_e{i} applied to {}", f.render())))?;
    Ok(SymLaurentPoly::new(n, out))
}

/// The monomial symmetric function `m_μ`.
pub fn monomial_symmetric(mu: &[i64]) -> SymLaurentPoly {
    let n = mu.len();
    let e: Vec<i32> = mu.iter().map(|&x| x as i32).collect();
    let mut poly = Laurent::zero();
    for p in e.iter().copied().permutations(n).unique() {
        poly = poly.plus(&Laurent::monomial(p, RatQK::one()));
    }
    SymLaurentPoly::new(n, poly)
}

/// Monic `P_λ` by solving `(L_{e_1} - e_1(q^{-λ}k^δ)) P = 0` on
/// `{m_μ : μ ≤ λ}` from the top of the dominance order down.
pub fn oracle_macdonald(lambda: &[i64]) -> Result<SymLaurentPoly, MacError> {
    let n = lambda.len();
    if n < 2 {
        return Err(MacError::BadRank(n));
    }
    if !lambda.windows(2).all(|w| w[0] >= w[1]) {
        return Err(MacError::NotDominant(lambda.to_vec()));
    }
    // reduce to a partition; the overall power of x_1⋯x_N is restored at the end
    let base = lambda[n - 1];
    let lam: Vec<i64> = lambda.iter().map(|x| x - base).collect();
    let size: i64 = lam.iter().sum();
    // partitions() is lex-descending, a linear extension of dominance
    let basis: Vec<Vec<i64>> =
        partitions(n, size).into_iter().filter(|mu| dominance_order_leq(mu, &lam).unwrap_or(false)).collect();
    let images: Vec<Laurent> = basis
        .iter()
        .map(|nu| ruijsenaars_apply(1, &monomial_symmetric(nu)).map(|s| s.poly))
        .collect::<Result<_, _>>()?;
    let coeff = |mu: &[i64], col: usize| images[col].coeff(&mu.iter().map(|&x| x as i32).collect::<Vec<_>>());
    let eig = elementary_at(1, &spectral_point(&lam));
    let mut cs: Vec<RatQK> = Vec::with_capacity(basis.len());
    for (row, mu) in basis.iter().enumerate() {
        if row == 0 {
            cs.push(RatQK::one());
            continue;
        }
        let diag = coeff(mu, row).minus(&eig);
        if diag.is_zero() {
            return Err(MacError::EigenCollision(mu.clone(), lam.clone()));
        }
        let mut rhs = RatQK::zero();
        for (col, c) in cs.iter().enumerate() {
            rhs = rhs.minus(&c.times(&coeff(mu, col)));
        }
        cs.push(rhs.try_div(&diag).expect("nonzero diagonal"));
    }
    let mut poly = Laurent::zero();
    for (mu, c) in basis.iter().zip(&cs) {
        poly = poly.plus(&monomial_symmetric(mu).poly.scale(c));
    }
    Ok(SymLaurentPoly::new(n, poly.mul_monomial(&vec![base as i32; n])))
}

/// `f(k^δ)`.
pub fn value_at_k_delta(f: &SymLaurentPoly) -> RatQK {
    eval_laurent(&f.poly, &spectral_point(&vec![0; f.n]))
}
