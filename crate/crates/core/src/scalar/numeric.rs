//! Numeric special functions: the renormalised Jacobi theta function and the
//! q-Pochhammer symbol, both as truncated products.

use num_complex::Complex64;
use thiserror::Error;

/// Minimum number of factors kept in truncated infinite products.
pub const M_THETA: usize = 64;

/// Factor count used by default: at least [`M_THETA`], and enough that the
/// tail bound of [`theta_tail_bound`] is below `1e-15` for `1e-2 ≤ |z| ≤ 1e2`.
/// For `|q| ≤ 0.9` this stays below 512 factors.
pub fn default_terms(q: Complex64) -> usize {
    if q.norm() == 0.0 {
        return M_THETA;
    }
    let mut m = M_THETA;
    while m < 4096 && theta_tail_bound(Complex64::new(1e2, 0.0), q, m) > 1e-15 {
        m += 16;
    }
    m
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumericError {
    #[error("|q| = {0} is not below 1")]
    BadNome(f64),
    #[error("argument must be nonzero")]
    ZeroArgument,
}

fn check_nome(q: Complex64) -> Result<(), NumericError> {
    if q.norm() >= 1.0 || !q.norm().is_finite() {
        Err(NumericError::BadNome(q.norm()))
    } else {
        Ok(())
    }
}

/// `θ(z) = ∏_{m<M} (1 - q^m z)(1 - q^{m+1}/z)`.
///
/// The relative error from the omitted factors is bounded by
/// [`theta_tail_bound`]; with `M = default_terms(q)` it is below `1e-15`
/// on the annulus `1e-2 ≤ |z| ≤ 1e2`.
pub fn theta(z: Complex64, q: Complex64, m: usize) -> Result<Complex64, NumericError> {
    check_nome(q)?;
    if z == Complex64::new(0.0, 0.0) {
        return Err(NumericError::ZeroArgument);
    }
    let mut acc = Complex64::new(1.0, 0.0);
    let mut qm = Complex64::new(1.0, 0.0);
    for _ in 0..m {
        acc *= (1.0 - qm * z) * (1.0 - qm * q / z);
        qm *= q;
    }
    Ok(acc)
}

/// Upper bound for the relative error of [`theta`] from dropping factors `m ≥ M`.
pub fn theta_tail_bound(z: Complex64, q: Complex64, m: usize) -> f64 {
    let r = q.norm();
    let s = z.norm().max(1.0 / z.norm()) * r.powi(m as i32) / (1.0 - r);
    // |log ∏(1+u_j)| ≤ Σ|u_j|/(1-|u_j|) for small |u_j|
    (2.0 * s / (1.0 - s.min(0.5))).exp() - 1.0
}

/// `(z; q)_∞` truncated to `M` factors.
pub fn qpoch(z: Complex64, q: Complex64, m: usize) -> Result<Complex64, NumericError> {
    check_nome(q)?;
    let mut acc = Complex64::new(1.0, 0.0);
    let mut qm = Complex64::new(1.0, 0.0);
    for _ in 0..m {
        acc *= 1.0 - qm * z;
        qm *= q;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn theta_quasi_periodicity() {
        let q = c(0.3, 0.0);
        let z = c(0.7, 0.2);
        let lhs = theta(q * z, q, M_THETA).unwrap();
        let rhs = -theta(z, q, M_THETA).unwrap() / z;
        assert!((lhs - rhs).norm() / rhs.norm() <= 1e-10);
    }

    #[test]
    fn theta_zeros() {
        let q = c(0.4, 0.1);
        assert!(theta(c(1.0, 0.0), q, M_THETA).unwrap().norm() < 1e-15);
        assert!(theta(q, q, M_THETA).unwrap().norm() < 1e-15);
    }

    #[test]
    fn qpoch_basics() {
        let q = c(0.5, 0.0);
        assert_eq!(qpoch(c(0.0, 0.0), q, 10).unwrap(), c(1.0, 0.0));
        assert_eq!(qpoch(c(1.0, 0.0), q, 10).unwrap(), c(0.0, 0.0));
        let a = qpoch(q, q, 64).unwrap();
        let b = qpoch(q, q, 80).unwrap();
        assert!((a - b).norm() < 1e-14);
    }

    #[test]
    fn default_terms_meet_the_tail_bound() {
        for r in [0.1, 0.3, 0.5, 0.9] {
            let q = c(r, 0.0);
            let m = default_terms(q);
            assert!(m >= M_THETA && m < 512, "{r} -> {m}");
            assert!(theta_tail_bound(c(0.01, 0.0), q, m) <= 1e-15);
            let a = theta(c(3.0, 1.0), q, m).unwrap();
            let b = theta(c(3.0, 1.0), q, m + 64).unwrap();
            assert!((a - b).norm() <= 1e-14 * b.norm());
        }
    }

    #[test]
    fn rejects_bad_nome() {
        assert!(theta(c(0.5, 0.0), c(1.0, 0.0), 8).is_err());
        assert!(theta(c(0.0, 0.0), c(0.5, 0.0), 8).is_err());
        assert!(qpoch(c(0.5, 0.0), c(1.2, 0.0), 8).is_err());
    }
}
