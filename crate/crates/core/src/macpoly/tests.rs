use super::*;
use crate::hecke::HeckeVector;

fn rat(s: &str) -> RatQK {
    RatQK::parse(s).unwrap()
}

fn sym(n: usize, terms: &[(&[i32], &str)]) -> SymLaurentPoly {
    SymLaurentPoly::new(n, Laurent::from_terms(terms.iter().map(|(e, c)| (e.to_vec(), rat(c)))))
}

#[test]
fn q_zero_is_v_plus() {
    let q = q_lambda(&[0, 0, 0]).unwrap();
    let vp = HeckeVector::v_plus(3, &params()).map(|c| Laurent::constant(c.clone()));
    assert_eq!(q.vec, vp);
}

#[test]
fn non_dominant_weight_is_rejected() {
    assert_eq!(q_lambda(&[0, 1]), Err(MacError::NotDominant(vec![0, 1])));
}

#[test]
fn q_lambda_at_k_delta_is_v_plus() {
    let vp = HeckeVector::v_plus(2, &params());
    for lam in [[1i64, 0], [2, 0], [1, 1], [2, -1]] {
        let q = q_lambda(&lam).unwrap();
        assert!(q.is_triangular(&lam), "{lam:?}");
        assert_eq!(q.eval_at(&spectral_point(&[0, 0])), vp, "{lam:?}");
    }
}

#[test]
fn q_lambda_invariance_n3() {
    let t = TorusMonomialPoint::from_exponents(&[1, -2, 3], &[4, 9, -7]);
    for lam in [[1i64, 0, 0], [1, 1, 0], [2, 1, 0]] {
        let q = q_lambda(&lam).unwrap();
        assert!(q.is_triangular(&lam));
        for i in 1..3 {
            assert!(q.is_invariant_under_generator(i), "{lam:?} s_{i}");
        }
        for w in Perm::all(3) {
            assert!(q.is_invariant_at(&w, &t).unwrap(), "{lam:?} {w:?}");
        }
    }
}

#[test]
fn q_lambda_duality_n2() {
    let weights = [[1i64, 0], [2, 0], [2, 1]];
    let qs: Vec<_> = weights.iter().map(|l| q_lambda(l).unwrap()).collect();
    for (a, la) in weights.iter().enumerate() {
        for (b, mu) in weights.iter().enumerate() {
            let lhs = qs[a].eval_at(&spectral_point(mu));
            let rhs = qs[b].eval_at(&spectral_point(la)).c_iota();
            assert_eq!(lhs, rhs, "λ = {la:?}, μ = {mu:?}");
        }
    }
}

#[test]
fn small_macdonald_examples() {
    assert_eq!(macdonald_e(&[0, 0]).unwrap().poly, Laurent::one());
    let e10 = macdonald_e(&[1, 0]).unwrap();
    let expect = sym(2, &[(&[1, 0], "1"), (&[0, 1], "1")]).scale(&rat("k + k^-1").inverse().unwrap());
    assert_eq!(e10, expect);
    assert_eq!(macdonald_e(&[1, 1]).unwrap(), sym(2, &[(&[1, 1], "1")]));
    let p = macdonald_p_and_eval(&[1, 0]).unwrap();
    assert_eq!(p.value_at_k_delta, rat("k + k^-1"));
    assert_eq!(p.product_formula, p.value_at_k_delta);
    assert_eq!(macdonald_p_and_eval(&[1, 1]).unwrap().value_at_k_delta, RatQK::one());
    let p3 = macdonald_p_and_eval(&[1, 0, 0]).unwrap();
    assert_eq!(p3.value_at_k_delta, p3.product_formula);
}

#[test]
fn poincare_values() {
    assert_eq!(poincare(2), rat("1 + k^2"));
    assert_eq!(poincare(3), rat("1 + 2*k^2 + 2*k^4 + k^6"));
    for n in 2..=4 {
        assert_eq!(HeckeVector::v_plus(n, &params()).chi_plus(&params()), poincare(n));
    }
}

#[test]
fn ruijsenaars_examples() {
    let one = SymLaurentPoly::new(2, Laurent::one());
    assert_eq!(ruijsenaars_apply(1, &one).unwrap().poly, Laurent::constant(rat("k + k^-1")));
    let one3 = SymLaurentPoly::new(3, Laurent::one());
    assert_eq!(ruijsenaars_apply(1, &one3).unwrap().poly, Laurent::constant(rat("k^2 + 1 + k^-2")));
    let e1 = sym(2, &[(&[1, 0], "1"), (&[0, 1], "1")]);
    assert_eq!(ruijsenaars_apply(1, &e1).unwrap(), e1.scale(&rat("q^-1*k + k^-1")));
    let e2 = sym(2, &[(&[1, 1], "1")]);
    assert_eq!(ruijsenaars_apply(2, &e2).unwrap(), e2.scale(&rat("q^-2")));
}

#[test]
fn ruijsenaars_operators_commute() {
    let f = sym(3, &[(&[2, 1, 0], "q"), (&[1, 2, 0], "q"), (&[2, 0, 1], "q"), (&[0, 2, 1], "q"), (&[1, 0, 2], "q"), (&[0, 1, 2], "q"), (&[1, 1, 1], "k^3 - 2")]);
    assert!(f.is_symmetric());
    for i in 1..=3 {
        for j in i + 1..=3 {
            let a = ruijsenaars_apply(i, &ruijsenaars_apply(j, &f).unwrap()).unwrap();
            let b = ruijsenaars_apply(j, &ruijsenaars_apply(i, &f).unwrap()).unwrap();
            assert_eq!(a, b, "L_e{i}, L_e{j}");
        }
    }
}

#[test]
fn oracle_small_cases() {
    assert_eq!(oracle_macdonald(&[0, 0]).unwrap().poly, Laurent::one());
    assert_eq!(oracle_macdonald(&[1, 0]).unwrap(), monomial_symmetric(&[1, 0]));
    let p20 = oracle_macdonald(&[2, 0]).unwrap();
    assert_eq!(p20, macdonald_p_and_eval(&[2, 0]).unwrap().p);
}

#[test]
fn eigen_equations_and_oracle_n3() {
    for lam in [[2i64, 1, 0], [2, 0, 0]] {
        let e = macdonald_e(&lam).unwrap();
        assert!(e.is_symmetric());
        assert_eq!(value_at_k_delta(&e), RatQK::one());
        for i in 1..=3 {
            let eig = elementary_at(i, &spectral_point(&lam));
            assert_eq!(ruijsenaars_apply(i, &e).unwrap(), e.scale(&eig), "{lam:?} L_e{i}");
        }
        let o = oracle_macdonald(&lam).unwrap();
        assert_eq!(e, o.scale(&value_at_k_delta(&o).inverse().unwrap()));
    }
}

#[test]
fn leading_coefficient_identity() {
    for lam in [vec![1i64, 0], vec![2, 0], vec![3, 1], vec![1, 0, 0], vec![2, 1, 0]] {
        let n = lam.len();
        let q = q_lambda(&lam).unwrap();
        let lead: Vec<i32> = lam.iter().map(|&x| x as i32).collect();
        let k0 = q.coefficient(&lead);
        assert_eq!(k0, leading_coefficient_prediction(&lam).unwrap(), "{lam:?}");
        let scalar = k0.chi_plus(&params()).try_div(&poincare(n)).unwrap();
        assert_eq!(scalar, evaluation_product(&lam).inverse().unwrap(), "{lam:?}");
    }
}

#[test]
fn e_duality_n2() {
    let ws = partitions(2, 0).into_iter().chain(partitions(2, 1)).chain(partitions(2, 2)).collect::<Vec<_>>();
    let es: Vec<_> = ws.iter().map(|w| macdonald_e(w).unwrap()).collect();
    for (a, la) in ws.iter().enumerate() {
        for (b, mu) in ws.iter().enumerate() {
            assert_eq!(es[a].eval_at(&spectral_point(mu)), es[b].eval_at(&spectral_point(la)));
        }
    }
}

#[test]
fn q_lambda_rotation_invariance() {
    let t = TorusMonomialPoint::from_exponents(&[1, -2, 3], &[4, 9, -7]);
    for lam in [vec![1i64, 0, 0], vec![2, 1, 0], vec![2, -1, -1]] {
        let q = q_lambda(&lam).unwrap();
        let gamma = TorusMonomialPoint::q_k_delta(&lam, -1);
        for w in [ExtAffineElt::pi(3), ExtAffineElt::pi(3).inverse(), ExtAffineElt::eps(3, 2)] {
            assert!(q.is_invariant_under(&w, &t, &gamma).unwrap(), "{lam:?} {w:?}");
        }
        let wrong = TorusMonomialPoint::q_k_delta(&lam, 1);
        assert!(!q.is_invariant_under(&ExtAffineElt::pi(3), &t, &wrong).unwrap());
    }
}
