//! Coefficient arithmetic: exact ℚ(q,k), Laurent polynomials, truncated
//! series, and the numeric special functions.

pub mod laurent;
pub mod numeric;
pub mod poly2;
pub mod ratqk;
pub mod ring;
pub mod series;
mod upoly;

pub use laurent::{Cut, LaurentPoly, TruncLaurent};
pub use numeric::{default_terms, qpoch, theta, NumericError, M_THETA};
pub use poly2::Poly2;
pub use ratqk::{RatError, RatQK};
pub use ring::{Field, Params, Ring};
pub use series::{series_geom, series_mul, MultiIndex, SeriesCoeff, SeriesError, TruncSeries};

/// Apply a binary operation in ℚ(q,k), signalling division by zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn ratqk_arith(a: &RatQK, b: &RatQK, op: Op) -> Result<RatQK, RatError> {
    match op {
        Op::Add => Ok(a.plus(b)),
        Op::Sub => Ok(a.minus(b)),
        Op::Mul => Ok(a.times(b)),
        Op::Div => a.try_div(b),
    }
}
