//! Randomized invariants: field evaluation, group actions and the cocycle law.

use bqkz_core::cocycle::{cocycle_value, CocycleError, ExactEval};
use bqkz_core::hecke::HeckeVector;
use bqkz_core::scalar::{Field, Params, RatQK, Ring};
use bqkz_core::weyl::{act_affine, DoubleElt, ExtAffineElt, Letter, TorusMonomialPoint, Word};
use num_complex::Complex64 as C64;
use proptest::prelude::*;

fn q0() -> C64 {
    C64::new(0.37, 0.21)
}

fn k0() -> C64 {
    C64::new(0.83, -0.12)
}

fn ratqk() -> impl Strategy<Value = RatQK> {
    prop::collection::vec((-3i64..=3, -4i64..=4, -4i64..=4), 1..5)
        .prop_map(|terms| terms.into_iter().fold(RatQK::zero(), |acc, (c, a, b)| acc.plus(&RatQK::int(c).times(&RatQK::qk(a, b)))))
}

fn close(a: C64, b: C64) -> bool {
    (a - b).norm() <= 1e-9 * (1.0 + a.norm().max(b.norm()))
}

fn word(n: usize) -> impl Strategy<Value = ExtAffineElt> {
    prop::collection::vec(prop_oneof![(1..n).prop_map(Letter::S), (-1i64..=1).prop_map(Letter::Pi)], 0..7)
        .prop_map(move |ls| Word(ls).evaluate(n))
}

fn double(n: usize) -> impl Strategy<Value = DoubleElt> {
    (any::<bool>(), word(n), word(n)).prop_map(|(iota, l, r)| {
        let g = DoubleElt::pair(l, r);
        if iota {
            g.mul(&DoubleElt::iota(g.n()))
        } else {
            g
        }
    })
}

/// Monomial points with k-exponents divisible by 3, so no root ratio is `k^{-2}`.
fn point(n: usize) -> impl Strategy<Value = TorusMonomialPoint> {
    (prop::collection::vec(-4i64..=4, n), prop::collection::vec(-3i64..=3, n))
        .prop_map(|(a, b)| TorusMonomialPoint::from_exponents(&a, &b.iter().map(|x| 3 * x).collect::<Vec<_>>()))
}

fn is_pole(e: &CocycleError) -> bool {
    matches!(e, CocycleError::Pole(_) | CocycleError::PoleAt { .. })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn evaluation_is_a_field_homomorphism(a in ratqk(), b in ratqk()) {
        let (ea, eb) = (a.eval_complex(q0(), k0()), b.eval_complex(q0(), k0()));
        prop_assert!(close(a.plus(&b).eval_complex(q0(), k0()), ea + eb));
        prop_assert!(close(a.times(&b).eval_complex(q0(), k0()), ea * eb));
        if let Some(inv) = b.inv() {
            prop_assert!(close(a.times(&inv).eval_complex(q0(), k0()), ea / eb));
        }
    }

    #[test]
    fn rendered_fractions_parse_back(a in ratqk(), b in ratqk()) {
        if let Some(inv) = b.inv() {
            let x = a.times(&inv);
            prop_assert_eq!(RatQK::parse(&x.render()).unwrap(), x);
        }
    }

    #[test]
    fn affine_action_is_a_left_action(g in word(3), h in word(3), t in point(3)) {
        prop_assert_eq!(act_affine(&g, &act_affine(&h, &t)), act_affine(&g.mul(&h), &t));
    }

    #[test]
    fn double_action_is_a_left_action(g in double(3), h in double(3), t in point(3), y in point(3)) {
        let (t1, y1) = h.act(&t, &y);
        prop_assert_eq!(g.act(&t1, &y1), g.mul(&h).act(&t, &y));
        let (t2, y2) = g.inverse().act(&t, &y);
        prop_assert_eq!(g.act(&t2, &y2), (t.clone(), y.clone()));
    }

    #[test]
    fn hecke_product_is_associative(a in prop::collection::vec(-3i64..=3, 6), b in prop::collection::vec(-3i64..=3, 6), c in prop::collection::vec(-3i64..=3, 6)) {
        let p = Params::new(RatQK::q(), RatQK::k());
        let v = |x: &[i64]| HeckeVector::from_coeffs(3, x.iter().map(|&c| RatQK::int(c)).collect());
        let (a, b, c) = (v(&a), v(&b), v(&c));
        prop_assert_eq!(a.hecke_mul(&b, &p).hecke_mul(&c, &p), a.hecke_mul(&b.hecke_mul(&c, &p), &p));
    }
}

fn check_cocycle_law(g: &DoubleElt, h: &DoubleElt, t: &TorusMonomialPoint, y: &TorusMonomialPoint) -> Result<(), TestCaseError> {
    let ev = ExactEval::default();
    let (t2, y2) = g.inverse().act(t, y);
    let res: Result<_, CocycleError> = (|| {
        let lhs = cocycle_value(&ev, &g.mul(h), t, y)?;
        let rhs = cocycle_value(&ev, g, t, y)?.mul(&cocycle_value(&ev, h, &t2, &y2)?);
        Ok((lhs, rhs))
    })();
    match res {
        Ok((lhs, rhs)) => prop_assert_eq!(lhs, rhs),
        Err(e) => prop_assume!(!is_pole(&e), "{}", e),
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    /// `C_{gh}(t, γ) = C_g(t, γ) C_h(g^{-1}(t, γ))` on all of `𝕎`.
    #[test]
    fn cocycle_law_rank_two(g in double(2), h in double(2), t in point(2), y in point(2)) {
        check_cocycle_law(&g, &h, &t, &y)?;
    }

    #[test]
    fn cocycle_law_rank_three(g in double(3), h in double(3), t in point(3), y in point(3)) {
        check_cocycle_law(&g, &h, &t, &y)?;
    }
}
