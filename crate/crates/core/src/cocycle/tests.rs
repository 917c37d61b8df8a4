use super::*;
use crate::hecke::HeckeVector;
use crate::weyl::{eps_word, factored_word, varpi_vec, Letter, Perm, TorusPoint};
use num_bigint::BigInt;

fn exact_params() -> Params<RatQK> {
    Params::new(RatQK::q(), RatQK::k())
}

fn mono(a: &[i64], b: &[i64]) -> TorusMonomialPoint {
    TorusMonomialPoint::from_exponents(a, b)
}

/// Generic enough that no R-argument on short words hits `k^{-2}`.
fn generic_t(n: usize) -> TorusMonomialPoint {
    mono(&(0..n as i64).map(|i| 2 * i - 1).collect::<Vec<_>>(), &(0..n as i64).map(|i| 5 * i + 1).collect::<Vec<_>>())
}

fn generic_gamma(n: usize) -> TorusMonomialPoint {
    mono(&(0..n as i64).map(|i| 1 - i).collect::<Vec<_>>(), &(0..n as i64).map(|i| 7 * i - 3).collect::<Vec<_>>())
}

#[test]
fn r_matrix_fixes_v_plus() {
    // (1 - k²z) R_i(z) v₊ = (1 - k²z) v₊ with z symbolic
    type L = LaurentPoly<RatQK>;
    let p: Params<L> = exact_params().map(|c| L::constant(c.clone()));
    let z = L::var_pow(0, 1);
    for n in 2..=3 {
        let vp = HeckeVector::v_plus(n, &p);
        let den = L::one().minus(&p.k.times(&p.k).times(&z));
        for i in 1..n {
            assert_eq!(r_numerator(n, i, &z, &p).apply(&vp), vp.scale(&den));
        }
    }
}

#[test]
fn r_matrix_limits() {
    let p = exact_params();
    for n in 2..=3 {
        for i in 1..n {
            let k_tinv = HeckeMatrix::eta_t_inv(n, i, &p).scale(&p.k);
            assert_eq!(r_matrix_limit(n, i, true), k_tinv);
            let t_over_k = HeckeMatrix::eta_t(n, i, &p).scale(&p.kinv);
            assert_eq!(r_matrix_limit(n, i, false), t_over_k);
        }
    }
}

#[test]
fn r_matrix_unitarity_symbolic() {
    type L = LaurentPoly<BigInt>;
    let p = Params { q: L::zero(), k: L::var_pow(0, 1), kinv: L::var_pow(0, -1) };
    let z = L::var_pow(1, 1);
    let zi = L::var_pow(1, -1);
    let k2 = p.k.times(&p.k);
    let scal = L::one().minus(&k2.times(&z)).times(&L::one().minus(&k2.times(&zi)));
    for n in 2..=3 {
        for i in 1..n {
            let prod = r_numerator(n, i, &z, &p).mul(&r_numerator(n, i, &zi, &p));
            assert_eq!(prod, HeckeMatrix::scalar(n, scal.clone()));
        }
    }
}

#[test]
fn yang_baxter_small() {
    assert!(yang_baxter_holds(3));
}

#[test]
fn pole_is_reported_with_factor() {
    let ev = ExactEval::default();
    let t = mono(&[0, 0], &[-2, 0]);
    let g = DoubleElt::left_only(ExtAffineElt::s(2, 1));
    let err = cocycle_value(&ev, &g, &t, &generic_gamma(2)).unwrap_err();
    assert!(matches!(err, CocycleError::PoleAt { step: 0, reflection: 1, .. }), "{err}");
}

#[test]
fn central_translation_is_scalar() {
    let ev = ExactEval::default();
    for n in 2..=3 {
        let (t, g) = (generic_t(n), generic_gamma(n));
        let m = connection_matrix(&ev, &vec![1; n], &vec![0; n], &t, &g).unwrap();
        let prod = g.coords.iter().fold(RatQK::one(), |a, c| a.times(&RatQK::qk(c.q, c.k)));
        assert_eq!(m, HeckeMatrix::scalar(n, prod));
    }
}

#[test]
fn right_reflection_is_conjugated_r_matrix() {
    let ev = ExactEval::default();
    let n = 3;
    let (t, g) = (generic_t(n), generic_gamma(n));
    for i in 1..n {
        let m = cocycle_value(&ev, &DoubleElt::right_only(ExtAffineElt::s(n, i)), &t, &g).unwrap();
        let z = g.coords[i].div(&g.coords[i - 1]);
        assert_eq!(m, r_matrix(&ev, n, i, &z).unwrap().c_iota());
    }
}

#[test]
fn finite_parts_depend_on_one_slot_only() {
    let ev = ExactEval::default();
    let n = 3;
    let (t, g) = (generic_t(n), generic_gamma(n));
    let g2 = mono(&[3, 1, -1], &[2, -5, 9]);
    let t2 = mono(&[-2, 4, 1], &[1, 11, -6]);
    for w in Perm::all(n) {
        let we = ExtAffineElt::from_perm(w);
        let l = DoubleElt::left_only(we.clone());
        assert_eq!(cocycle_value(&ev, &l, &t, &g).unwrap(), cocycle_value(&ev, &l, &t, &g2).unwrap());
        let r = DoubleElt::right_only(we);
        assert_eq!(cocycle_value(&ev, &r, &t, &g).unwrap(), cocycle_value(&ev, &r, &t2, &g).unwrap());
    }
}

#[test]
fn reduced_word_independence_finite() {
    let ev = ExactEval::default();
    let n = 3;
    let (t, g) = (generic_t(n), generic_gamma(n));
    let e = Word::default();
    let a = Word(vec![Letter::S(1), Letter::S(2), Letter::S(1)]);
    let b = Word(vec![Letter::S(2), Letter::S(1), Letter::S(2)]);
    let ma = cocycle_value_words(&ev, false, &a, &e, &t, &g).unwrap();
    let mb = cocycle_value_words(&ev, false, &b, &e, &t, &g).unwrap();
    assert_eq!(ma, mb);
    let ra = cocycle_value_words(&ev, false, &e, &a, &t, &g).unwrap();
    let rb = cocycle_value_words(&ev, false, &e, &b, &t, &g).unwrap();
    assert_eq!(ra, rb);
}

#[test]
fn reduced_word_independence_affine() {
    let ev = ExactEval::default();
    for n in 2..=3 {
        let (t, g) = (generic_t(n), generic_gamma(n));
        for j in 1..=n {
            let e = ExtAffineElt::eps(n, j);
            let w1 = eps_word(n, j);
            let w2 = e.normal_form().to_word();
            let w3 = factored_word(&e);
            let id = Word::default();
            let m1 = cocycle_value_words(&ev, false, &w1, &id, &t, &g).unwrap();
            assert_eq!(m1, cocycle_value_words(&ev, false, &w2, &id, &t, &g).unwrap());
            assert_eq!(m1, cocycle_value_words(&ev, false, &w3, &id, &t, &g).unwrap());
        }
        let e = ExtAffineElt::translation(&varpi_vec(n, 1)).mul(&ExtAffineElt::s(n, 1));
        let id = Word::default();
        let m1 = cocycle_value_words(&ev, false, &e.normal_form().to_word(), &id, &t, &g).unwrap();
        assert_eq!(m1, cocycle_value_words(&ev, false, &factored_word(&e), &id, &t, &g).unwrap());
    }
}

#[test]
fn eps_factor_product_formula() {
    // C_{(ε_j,e)} = R_{j-1}(t_{j-1}/t_j) ⋯ R_1(t_1/t_j) η(π)(γ) R_{N-1}(q t_N/t_j) ⋯ R_j(q t_{j+1}/t_j)
    let ev = ExactEval::default();
    let n = 3;
    let (t, g) = (generic_t(n), generic_gamma(n));
    let c = |k: usize| t.coords[k - 1].clone();
    for j in 1..=n {
        let mut m = HeckeMatrix::identity(n);
        for i in (1..j).rev() {
            m = m.mul(&r_matrix(&ev, n, i, &c(i).div(&c(j))).unwrap());
        }
        m = m.mul(&HeckeMatrix::eta_pi(n, &exact_spectral(&g).vals));
        for i in (j..n).rev() {
            m = m.mul(&r_matrix(&ev, n, i, &c(i + 1).times_q(1).div(&c(j))).unwrap());
        }
        let direct = connection_matrix(&ev, &ExtAffineElt::eps(n, j).trans, &[0, 0, 0], &t, &g).unwrap();
        assert_eq!(direct, m, "ε_{j}");
    }
}

#[test]
fn iota_symmetry_of_connection_matrices() {
    let ev = ExactEval::default();
    let n = 2;
    let (t, g) = (generic_t(n), generic_gamma(n));
    for lam in [[1i64, 0], [0, 1], [1, -1], [2, 1]] {
        let right = connection_matrix(&ev, &[0, 0], &lam, &t, &g).unwrap();
        let left = connection_matrix(&ev, &lam, &[0, 0], &g.invert(), &t.invert()).unwrap();
        assert_eq!(right, left.c_iota());
    }
}

#[test]
fn asymptotics_of_translations() {
    let gamma = mono(&[1, -1], &[3, -2]);
    for lam in [[1i64, 0], [0, 1], [1, 1]] {
        let got = asymptotic_leading_term(&lam, &gamma).unwrap();
        assert_eq!(got, asymptotic_prediction(&lam, &gamma), "λ = {lam:?}");
    }
}

#[test]
fn deep_dominant_limit_of_finite_right_part() {
    // C_{(e,w)}^{(0)}(h) = k^{-ℓ(w)} h T_{w^{-1}}
    let n = 3;
    let p = exact_params();
    let ev = SeriesEval::new(SeriesEval::torus_weights(n), 0);
    let grp = sym_group(n);
    for (wi, w) in grp.perms.iter().enumerate() {
        let g = DoubleElt::right_only(ExtAffineElt::from_perm(w.clone()));
        let m = constant_terms(&cocycle_value(&ev, &g, &generic_t(n), &symbolic_gamma(n)).unwrap()).unwrap();
        let expect = HeckeMatrix::right_mul_basis(n, grp.inverse[wi], &p).scale(&p.kpow(-(grp.length[wi] as i64)));
        assert_eq!(m, expect, "w = {w:?}");
    }
}

#[test]
fn laurent_mode_rejects_symbolic_r_arguments() {
    let ev = LaurentEval::default();
    let g = DoubleElt::left_only(ExtAffineElt::s(2, 1));
    assert!(matches!(
        cocycle_value(&ev, &g, &symbolic_t(2), &generic_gamma(2)),
        Err(CocycleError::NotScalar(_))
    ));
}

#[test]
fn mixed_modes_are_rejected() {
    let a = CocycleMatrix::Exact(HeckeMatrix::identity(2));
    let b = CocycleMatrix::Numeric(HeckeMatrix::identity(2));
    assert!(matches!(a.mul(&b), Err(CocycleError::ModeMismatch("exact", "numeric"))));
    assert!(a.mul(&a).is_ok());
}

#[test]
fn singular_predicates() {
    let on_s = mono(&[3, 0], &[-2, 0]);
    assert!(SingularSetPredicate::new(SingularKind::S).contains_exact(&on_s));
    assert!(!SingularSetPredicate::new(SingularKind::SPlus).contains_exact(&on_s));
    let on_splus = mono(&[-1, 0], &[-2, 0]);
    assert!(SingularSetPredicate::new(SingularKind::SPlus).contains_exact(&on_splus));
    assert!(!SingularSetPredicate::new(SingularKind::SPlusInv).contains_exact(&on_splus));
    assert!(SingularSetPredicate::new(SingularKind::SPlusInv).contains_exact(&on_splus.invert()));
    assert!(!SingularSetPredicate::new(SingularKind::S).contains_exact(&generic_t(3)));
}

#[test]
fn shift_of_constant_solution_identity() {
    let ev = ExactEval::default();
    let n = 2;
    let p = exact_params();
    let vp = HeckeVector::v_plus(n, &p);
    let samples = vec![(generic_t(n), vp.clone())];
    let out = shift_solution(&ev, &ExtAffineElt::identity(n), &generic_gamma(n), &samples).unwrap();
    assert_eq!(out[0].1, vp);
}

