use super::*;
use crate::hecke::HeckeMatrix;
use crate::scalar::{Field, Ring};
use num_complex::Complex64 as C64;

#[test]
fn toy_system_matches_product() {
    let sol = solve_formal(&toy_system(RatQK::q(), 5), &HeckeVector::basis(1, 0), 5, |a, b| a == b).unwrap();
    let mut expect = RatQK::one();
    for m in 0..=5u32 {
        if m > 0 {
            expect = expect.times(&RatQK::one().minus(&RatQK::qk(m as i64, 0)).inv().unwrap());
        }
        assert_eq!(sol.series.get(&[m]).unwrap().get(0), &expect, "m = {m}");
    }
}

#[test]
fn a_n_is_identity() {
    for n in 2..=3 {
        let a = build_gauged_generator(n, GeneratorKind::A(n), 2).unwrap();
        let zero = vec![0u32; 2 * (n - 1)];
        for (m, v) in a.iter() {
            if *m == zero {
                assert!(v.is_identity(), "N = {n}");
            } else {
                assert!(v.is_zero(), "N = {n}, {m:?}");
            }
        }
    }
}

#[test]
fn bad_generator_index() {
    assert!(matches!(build_gauged_generator(2, GeneratorKind::B(3), 1), Err(HcError::BadIndex(_))));
}

#[test]
fn constant_terms_and_idempotence() {
    for n in 2..=3 {
        let g = GaugedBqKZ::new(n, 0).unwrap();
        assert!(g.constant_terms_match(), "N = {n}");
        assert!(g.leading_terms_idempotent(), "N = {n}");
    }
}

#[test]
fn holonomy_n2() {
    let sys = GaugedBqKZ::new(2, 3).unwrap().system();
    assert!(sys.holonomy_holds(0, 1));
}

#[test]
fn holonomy_n3() {
    let sys = GaugedBqKZ::new(3, 2).unwrap().system();
    for i in 0..4 {
        for j in i + 1..4 {
            assert!(sys.holonomy_holds(i, j), "({i}, {j})");
        }
    }
}

#[test]
fn broken_generator_is_not_holonomic() {
    let mut sys = GaugedBqKZ::new(2, 3).unwrap().system();
    let n = 2;
    let mut bump = HeckeMatrix::zero(n);
    bump.set(0, 1, RatQK::k());
    let idx = vec![1, 0];
    let v = sys.gens[0].get(&idx).cloned().unwrap_or_else(|| HeckeMatrix::zero(n)).add(&bump);
    sys.gens[0].insert(idx, v);
    assert!(!sys.holonomy_holds(0, 1));
    let err = solve_formal(&sys, &HeckeVector::t_w0(n), 3, |a, b| a == b).unwrap_err();
    assert!(matches!(err, SolveError::Inconsistent { .. }), "{err}");
}

#[test]
fn leading_coefficient_is_t_w0() {
    let sol = solve_gauged(2, 1).unwrap();
    assert_eq!(sol.series.get(&[0, 0]).unwrap(), &HeckeVector::t_w0(2));
}

#[test]
fn series_n2_identities() {
    let sol = solve_gauged(2, 4).unwrap();
    assert!(sol.consistency_checks > 0);
    assert!(self_duality_check(&sol.series, 2).is_empty());
    assert!(gamma0_matches(&sol.series, 2));
    assert!(gamma0_plus_matches(&sol.series, 2));
    assert_eq!(gamma_plus_series(&sol.series, 2), chi_plus_then_group(&sol.series, 2));
}

#[test]
fn series_n3_identities() {
    let sol = solve_gauged(3, 2).unwrap();
    assert!(self_duality_check(&sol.series, 3).is_empty());
    assert!(gamma0_matches(&sol.series, 3));
    assert!(gamma0_plus_matches(&sol.series, 3));
}

#[test]
fn corrupted_coefficient_breaks_duality() {
    let mut sol = solve_gauged(2, 2).unwrap().series;
    let idx = vec![1, 0];
    let v = sol.get(&idx).unwrap().add(&HeckeVector::t_w0(2));
    sol.insert(idx, v);
    let bad = self_duality_check(&sol, 2);
    assert_eq!(bad.len(), 2, "{bad:?}");
}

fn params() -> NumericParams {
    NumericParams::new(C64::new(0.3, 0.0), C64::new(0.7, 0.0), C64::new(0.9, 0.1))
}

#[test]
fn w_shift_law() {
    let p = params();
    let t = [C64::new(1.3, 0.2), C64::new(-0.4, 0.9)];
    let g = [C64::new(0.8, -0.5), C64::new(1.7, 0.3)];
    let base = w_kappa(&t, &g, &p).unwrap();
    for (lam, mu) in [([1i64, 0], [0i64, 0]), ([0, 0], [0, 1]), ([2, -1], [1, 3])] {
        let ts: Vec<C64> = t.iter().zip(&lam).map(|(x, &l)| x * p.q.powi(-l as i32)).collect();
        let gs: Vec<C64> = g.iter().zip(&mu).map(|(x, &m)| x * p.q.powi(m as i32)).collect();
        let lhs = w_kappa(&ts, &gs, &p).unwrap();
        let rhs = WShift::new(&lam, &mu).eval(&t, &g, &p) * base;
        assert!((lhs / rhs - 1.0).norm() < 1e-10, "{lam:?} {mu:?}");
    }
}

#[test]
fn w_at_spectral_point() {
    let p = params();
    let t = [C64::new(1.3, 0.2), C64::new(-0.4, 0.9)];
    for lam in [[0i64, 0], [1, 0], [3, 1]] {
        assert!(w_evaluation_residual(&lam, &t, &p).unwrap() < 1e-10, "{lam:?}");
    }
}

#[test]
fn numeric_and_exact_recurrences_agree() {
    let p = params();
    let exact = solve_gauged(2, 6).unwrap();
    let num = solve_gauged_numeric(2, 6, &p, 1e-9).unwrap();
    assert!(cross_check(&exact.series, &num.series, &p) < 1e-10);
}

fn evaluator(n: usize, degree: u32) -> PhiEvaluator {
    PhiEvaluator::from_exact(&solve_gauged(n, degree).unwrap().series, n, params())
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn sector_t() -> [C64; 2] {
    [c(1.0, 0.1), c(0.02, 0.01)]
}

fn sector_gamma() -> [C64; 2] {
    [c(0.015, -0.01), c(1.1, 0.2)]
}

#[test]
fn phi_satisfies_bqkz_in_sector() {
    let ev = evaluator(2, 8);
    let (t, g) = (sector_t(), sector_gamma());
    for (lam, mu) in [([1i64, 0], [0i64, 0]), ([0, 1], [0, 0]), ([0, 0], [0, 1]), ([0, 1], [1, 0])] {
        let r = ev.bqkz_residual(&t, &g, &lam, &mu).unwrap();
        assert!(r < 1e-10, "{lam:?} {mu:?}: {r}");
    }
}

#[test]
fn truncation_is_visible_in_residual() {
    let short = PhiEvaluator::from_exact(&solve_gauged(2, 2).unwrap().series, 2, params());
    let r = short.bqkz_residual(&sector_t(), &sector_gamma(), &[1, 0], &[0, 0]).unwrap();
    assert!(r > 1e-9, "{r}");
}

#[test]
fn shifted_block_must_be_in_sector() {
    let ev = evaluator(2, 2);
    let far = [c(1.0, 0.0), c(0.8, 0.1)];
    assert!(matches!(ev.bqkz_residual(&far, &sector_gamma(), &[1, 0], &[0, 0]), Err(HcError::NotInSector(_))));
    assert!(ev.phi(&far, &sector_gamma()).unwrap().shift_t > 0);
}

#[test]
fn phi_self_duality_numeric() {
    let ev = evaluator(2, 8);
    let t = [c(1.0, 0.1), c(0.7, 0.3)];
    let g = [c(0.5, 0.1), c(0.9, -0.2)];
    assert!(ev.self_duality_residual(&t, &g).unwrap() < 1e-10);
}

#[test]
fn bispectral_eigen_equations() {
    let ev = evaluator(2, 8);
    let (rx, ry) = ev.bispectral_residuals(&sector_t(), &sector_gamma()).unwrap();
    assert!(rx < 1e-10 && ry < 1e-10, "{rx} {ry}");
}

#[test]
fn polynomial_reduction() {
    let ev = evaluator(2, 8);
    let pts = vec![vec![c(1.0, 0.1), c(0.7, 0.3)], vec![c(-0.6, 0.8), c(1.4, -0.2)]];
    for lam in [[0i64, 0], [1, 0], [2, 0], [1, 1], [3, 1]] {
        let q = crate::macpoly::q_lambda(&lam).unwrap();
        for p in polred_check(&lam, &q, &ev, &pts).unwrap() {
            assert!(p.relative_error < 1e-9, "{lam:?}: {p:?}");
        }
    }
}

#[test]
fn fundamental_matrix_is_invertible_solution() {
    let ev = evaluator(2, 8);
    let zeta = [c(0.5, 0.1), c(0.9, -0.2)];
    let s = ev.fundamental_matrix_sample(&zeta, &[sector_t().to_vec()]).unwrap();
    assert!(s[0].min_singular_value > 1e-6 && s[0].qkz_residual < 1e-10, "{s:?}");
    let w = crate::weyl::Perm::identity(2);
    assert!(ev.basis_coordinate_drift(&zeta, c(0.6, -0.3), &w, &sector_t(), &[1, 0]).unwrap() < 1e-9);
}

#[test]
fn degenerate_spectral_point_is_rejected() {
    let p = params();
    let zeta = [c(1.0, 0.0), p.q];
    assert!(degenerate_zeta(&zeta, &p));
    let ev = evaluator(2, 2);
    assert!(matches!(ev.fundamental_matrix_sample(&zeta, &[sector_t().to_vec()]), Err(HcError::Singular(_))));
}

#[test]
fn rank_three_numerics_track_truncation() {
    let ev = evaluator(3, 3);
    let t = [c(1.0, 0.1), c(0.03, 0.01), c(0.0008, 0.0002)];
    let g = [c(0.0005, -0.0001), c(0.02, 0.01), c(1.1, 0.2)];
    let phi = ev.phi(&t, &g).unwrap();
    assert!(ev.bqkz_residual(&t, &g, &[1, 0, 0], &[0, 0, 1]).unwrap() < 1e-4);
    assert!(phi.residual < 1e-3);
    let q = crate::macpoly::q_lambda(&[2, 1, 0]).unwrap();
    for p in polred_check(&[2, 1, 0], &q, &ev, &[vec![c(1.0, 0.1), c(0.7, 0.3), c(0.4, -0.5)]]).unwrap() {
        assert!(p.relative_error < 10.0 * p.truncation_residual.max(1e-12), "{p:?}");
    }
}
