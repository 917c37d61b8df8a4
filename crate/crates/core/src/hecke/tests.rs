use super::*;
use crate::scalar::{Params, RatQK, Ring};

fn params() -> Params<RatQK> {
    Params::new(RatQK::q(), RatQK::k())
}

/// `γ = q^a k^b` as a spectral point over ℚ(q,k).
fn point(a: &[i64], b: &[i64]) -> SpectralPoint<RatQK> {
    SpectralPoint::new(
        a.iter().zip(b).map(|(&a, &b)| RatQK::qk(a, b)).collect(),
        a.iter().zip(b).map(|(&a, &b)| RatQK::qk(-a, -b)).collect(),
    )
}

fn k_minus_delta(n: usize) -> SpectralPoint<RatQK> {
    let b: Vec<i64> = (0..n).map(|i| -(n as i64 - 1 - 2 * i as i64)).collect();
    point(&vec![0; n], &b)
}

#[test]
fn generator_on_identity_and_descent() {
    let p = params();
    let te = HeckeVector::<RatQK>::basis(2, 0);
    let ts = HeckeVector::<RatQK>::basis(2, 1);
    assert_eq!(te.mul_gen_left(1, &p), ts);
    let expect = ts.scale(&p.k_minus_kinv()).add(&te);
    assert_eq!(ts.mul_gen_left(1, &p), expect);
}

#[test]
fn quadratic_and_braid_relations() {
    let p = params();
    for n in 2..=4 {
        let one = HeckeMatrix::<RatQK>::identity(n);
        let t: Vec<_> = (1..n).map(|i| HeckeMatrix::eta_t(n, i, &p)).collect();
        for (i, ti) in t.iter().enumerate() {
            let a = ti.sub(&HeckeMatrix::scalar(n, p.k.clone()));
            let b = ti.add(&HeckeMatrix::scalar(n, p.kinv.clone()));
            assert!(a.mul(&b).is_zero());
            assert_eq!(ti.mul(&HeckeMatrix::eta_t_inv(n, i + 1, &p)), one);
        }
        for i in 0..n.saturating_sub(2) {
            let l = t[i].mul(&t[i + 1]).mul(&t[i]);
            let r = t[i + 1].mul(&t[i]).mul(&t[i + 1]);
            assert_eq!(l, r);
        }
        for i in 0..t.len() {
            for j in i + 2..t.len() {
                assert_eq!(t[i].mul(&t[j]), t[j].mul(&t[i]));
            }
        }
    }
}

#[test]
fn eta_pi_small_cases() {
    let g = point(&[1, 0], &[0, 3]);
    let m = eta_pi(&g);
    // T_e ↦ γ₂ T_{s₁}, T_{s₁} ↦ γ₁ T_e
    assert_eq!(m.column(0), HeckeVector::basis(2, 1).scale(&g.vals[1]));
    assert_eq!(m.column(1), HeckeVector::basis(2, 0).scale(&g.vals[0]));
    let g3 = point(&[1, -2, 0], &[1, 1, 5]);
    let mut pw = HeckeMatrix::identity(3);
    for _ in 0..3 {
        pw = pw.mul(&eta_pi(&g3));
    }
    let prod = g3.vals.iter().fold(RatQK::one(), |a, b| a.times(b));
    assert_eq!(pw, HeckeMatrix::scalar(3, prod));
    let ones = point(&[0, 0, 0], &[0, 0, 0]);
    let grp = sym_group(3);
    let m1 = eta_pi(&ones);
    for w in 0..6 {
        assert_eq!(m1.column(w), HeckeVector::basis(3, grp.sigma_left[w]));
    }
    assert_eq!(m1.mul(&HeckeMatrix::eta_pi_inv(3, &ones.invs)), HeckeMatrix::identity(3));
}

#[test]
fn y_operators_commute_and_fix_identity() {
    let p = params();
    for n in 2..=3 {
        let g = point(&[0, 1, 2][..n], &[2, 5, 8][..n]);
        let ys: Vec<_> = (1..=n).map(|j| eta_y(j, &g, &p)).collect();
        for a in 0..n {
            assert_eq!(ys[a].mul(&eta_y_inv(a + 1, &g, &p)), HeckeMatrix::identity(n));
            for b in 0..n {
                assert_eq!(ys[a].mul(&ys[b]), ys[b].mul(&ys[a]));
            }
            let te = HeckeVector::basis(n, 0);
            assert_eq!(ys[a].apply(&te), te.scale(&g.vals[a]));
        }
    }
}

#[test]
fn xi_vectors_are_joint_eigenvectors() {
    let p = params();
    let n = 3;
    let g = k_minus_delta(n);
    let grp = sym_group(n);
    let xis = xi_all(&g, &p).unwrap();
    assert_eq!(xis[0], HeckeVector::basis(n, 0));
    let ys: Vec<_> = (1..=n).map(|j| eta_y(j, &g, &p)).collect();
    for (w, xi) in xis.iter().enumerate() {
        let winv = grp.perms[w].inverse();
        let mut e1 = HeckeVector::zero(n);
        let mut eig_sum = RatQK::zero();
        for j in 0..n {
            let lam = &g.vals[winv.apply(j)];
            assert_eq!(ys[j].apply(xi), xi.scale(lam), "Y_{} on ξ_{:?}", j + 1, grp.perms[w]);
            e1 = e1.add(&ys[j].apply(xi));
            eig_sum = eig_sum.plus(lam);
        }
        assert_eq!(e1, xi.scale(&eig_sum));
    }
}

#[test]
fn xi_rejects_degenerate_points() {
    let p = params();
    assert!(matches!(xi_all(&point(&[1, 1], &[0, 0]), &p), Err(HeckeError::Degenerate(1, 2))));
}

#[test]
fn xi_form_a_basis_at_dominant_points() {
    let p = params();
    let n = 3;
    for lam in [[0i64, 0, 0], [1, 0, 0], [2, 1, 0]] {
        let g = point(&lam, &[-2, 0, 2]);
        let xis = xi_all(&g, &p).unwrap();
        let m = HeckeMatrix::from_columns(n, &xis);
        assert_eq!(m.rank(), 6, "λ = {lam:?}");
    }
}

#[test]
fn v_plus_from_longest_eigenvector() {
    let p = params();
    for n in 2..=3 {
        let g = k_minus_delta(n);
        let grp = sym_group(n);
        let xi0 = xi_w(grp.w0, &g, &p).unwrap();
        let tw0 = xi0.mul_basis_left(grp.w0, &p);
        let mut c = RatQK::one();
        for i in 1..=n as i64 {
            for j in i + 1..=n as i64 {
                c = c.times(&RatQK::one().minus(&RatQK::qk(0, 2 * (i - j))).inverse().unwrap());
            }
        }
        assert_eq!(tw0.scale(&c), HeckeVector::v_plus(n, &p));
    }
}

#[test]
fn chi_plus_values() {
    let p = params();
    assert_eq!(HeckeVector::<RatQK>::basis(3, 0).chi_plus(&p), RatQK::one());
    let vp = HeckeVector::v_plus(3, &p);
    assert_eq!(vp.chi_plus(&p), RatQK::parse("1 + 2*k^2 + 2*k^4 + k^6").unwrap());
    let h = HeckeVector::from_coeffs(3, (0..6).map(|i| RatQK::qk(i % 2, i)).collect());
    for i in 1..3 {
        let th = h.mul_gen_left(i, &p).sub(&h.scale(&p.k));
        assert!(th.chi_plus(&p).is_zero());
    }
}

#[test]
fn c_iota_is_an_anti_involution() {
    let p = params();
    let n = 3;
    let grp = sym_group(n);
    let tw0 = HeckeVector::<RatQK>::t_w0(n);
    assert_eq!(tw0.c_iota(), tw0);
    let vp = HeckeVector::v_plus(n, &p);
    assert_eq!(vp.c_iota(), vp);
    for a in 0..grp.order() {
        for b in 0..grp.order() {
            let (ta, tb) = (HeckeVector::basis(n, a), HeckeVector::basis(n, b));
            let ab = ta.hecke_mul(&tb, &p);
            assert_eq!(ab.c_iota(), tb.c_iota().hecke_mul(&ta.c_iota(), &p));
        }
    }
    let m = eta_y(2, &k_minus_delta(n), &p);
    assert_eq!(m.c_iota().c_iota(), m);
}
