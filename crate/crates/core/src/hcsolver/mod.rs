//! Harish-Chandra series: truncated power series solutions of the gauged
//! bispectral quantum KZ system, their exact identities, and numeric
//! evaluation of the basic asymptotically free solution.

mod gamma;
mod gauged;
mod numeric;
mod system;

pub use gamma::{
    chi_plus_then_group, gamma0_matches, gamma0_plus_matches, gamma_plus_series, gamma_series, k_gamma_series,
    self_duality_check, DualityViolation,
};
pub use gauged::{build_gauged_generator, GaugedBqKZ, GeneratorKind};
pub use numeric::{
    cross_check, degenerate_zeta, eval_hecke_poly, numeric_connection, numeric_point, numeric_right_finite, polred_check,
    r_kappa, vnorm, w_evaluation_residual, w_kappa, FundamentalSample, NumericParams, PhiEvaluator, PhiValue,
    PolredPoint, WShift,
};
pub use system::{shell, solve_formal, toy_system, QDiffSystem, SeriesSolution, SolveError};

use crate::cocycle::CocycleError;
use crate::hecke::HeckeVector;
use crate::scalar::{NumericError, RatQK, SeriesError, TruncSeries};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HcError {
    #[error(transparent)]
    Cocycle(#[from] CocycleError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error("generator monomial {0} lies outside x^(-Q+) y^(Q+)")]
    OutsideCone(String),
    #[error("bad generator index: {0}")]
    BadIndex(String),
    #[error("cannot shift the point into the convergence sector: {0}")]
    NotInSector(String),
    #[error("degenerate point: {0}")]
    Singular(String),
}

/// `K_{α,β}` keyed by the x-part `α` and y-part `β` of the multi-index.
#[derive(serde::Serialize)]
pub struct SeriesCoeffJson {
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
    pub entries: Vec<crate::hecke::VectorEntryJson>,
}

/// Nonzero coefficients in multi-index order, rendered by `render`.
pub fn series_to_json<C: crate::scalar::Ring, F: Fn(&C) -> String>(
    series: &TruncSeries<HeckeVector<C>>,
    n: usize,
    render: F,
) -> Vec<SeriesCoeffJson> {
    let h = n - 1;
    series
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(m, v)| SeriesCoeffJson { alpha: m[..h].to_vec(), beta: m[h..].to_vec(), entries: v.to_json_entries(&render) })
        .collect()
}

/// `Ψ`'s coefficients `K_{α,β}` for the gauged system of rank `n` to total degree `D`.
pub fn solve_gauged(n: usize, degree: u32) -> Result<SeriesSolution<RatQK>, HcError> {
    let sys = GaugedBqKZ::new(n, degree)?.system();
    Ok(solve_formal(&sys, &HeckeVector::t_w0(n), degree, |a, b| a == b)?)
}

/// The same recurrence run in floating point after evaluating the generators at `q, k`.
pub fn solve_gauged_numeric(n: usize, degree: u32, p: &NumericParams, tol: f64) -> Result<SeriesSolution<num_complex::Complex64>, HcError> {
    let g = GaugedBqKZ::new(n, degree)?;
    let gens: Vec<TruncSeries<_>> =
        g.a.iter().chain(&g.b).map(|s| s.map(|m| m.map(|c| c.eval_complex(p.q, p.k)))).collect();
    let sys = QDiffSystem::new(vec![p.q; gens.len()], gens)?;
    let same = move |a: &HeckeVector<num_complex::Complex64>, b: &HeckeVector<num_complex::Complex64>| {
        vnorm(&a.sub(b)) <= tol * vnorm(b).max(1.0)
    };
    Ok(solve_formal(&sys, &HeckeVector::t_w0(n), degree, same)?)
}

#[cfg(test)]
mod tests;
