use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use super::*;

fn qtpoly() -> impl Strategy<Value = QtPoly> {
    prop::collection::vec(((0u32..4, 0u32..4), -4i64..=4), 0..5)
        .prop_map(|ts| QtPoly::from_terms(ts.into_iter().map(|((a, b), c)| ((a, b), BigInt::from(c)))))
}

fn nonzero_qtpoly() -> impl Strategy<Value = QtPoly> {
    qtpoly().prop_filter("nonzero", |p| !p.is_zero())
}

fn rational() -> impl Strategy<Value = QtRational> {
    (qtpoly(), nonzero_qtpoly()).prop_map(|(a, b)| QtRational::new(a, b).unwrap())
}

fn zpoly() -> impl Strategy<Value = ZPoly<QtRational>> {
    prop::collection::vec((prop::collection::vec(0i32..3, 2), -3i64..=3, 0u32..3), 0..4).prop_map(|ts| {
        ZPoly::from_terms(
            2,
            ts.into_iter().map(|(e, c, a)| (e, QtRational::from_poly(QtPoly::monomial(BigInt::from(c), a, 0)))),
        )
        .unwrap()
    })
}

fn close(x: f64, y: f64) -> bool {
    (x - y).abs() <= 1e-9 * (1.0 + x.abs().max(y.abs()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normalization_is_idempotent(x in rational()) {
        let again = QtRational::new(x.numerator().clone(), x.denominator().clone()).unwrap();
        prop_assert_eq!(&again, &x);
    }

    #[test]
    fn normalization_cancels_common_factors(a in qtpoly(), b in nonzero_qtpoly(), k in nonzero_qtpoly()) {
        let scaled = QtRational::new(&a * &k, &b * &k).unwrap();
        prop_assert_eq!(scaled, QtRational::new(a, b).unwrap());
    }

    #[test]
    fn rational_ring_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!((a.clone() * &b) * &c, a.clone() * &(b.clone() * &c));
        prop_assert_eq!((a.clone() + &b) + &c, a.clone() + &(b.clone() + &c));
        prop_assert_eq!(a.clone() * &(b.clone() + &c), a.clone() * &b + &(a.clone() * &c));
        prop_assert_eq!(a.clone() + &b, b.clone() + &a);
        prop_assert!((a.clone() - &a).is_zero());
    }

    #[test]
    fn zpoly_ring_axioms(f in zpoly(), g in zpoly(), h in zpoly()) {
        let fg = f.try_mul(&g).unwrap();
        prop_assert_eq!(fg.try_mul(&h).unwrap(), f.try_mul(&g.try_mul(&h).unwrap()).unwrap());
        let lhs = f.try_mul(&g.try_add(&h).unwrap()).unwrap();
        let rhs = fg.try_add(&f.try_mul(&h).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(fg, g.try_mul(&f).unwrap());
    }

    #[test]
    fn gcd_divides_both(a in nonzero_qtpoly(), b in nonzero_qtpoly(), common in nonzero_qtpoly()) {
        let x = &a * &common;
        let y = &b * &common;
        let g = qt_gcd(&x, &y);
        prop_assert!(x.exact_div(&g).is_ok());
        prop_assert!(y.exact_div(&g).is_ok());
        // the gcd is primitive over Z, so only the primitive part of `common` must divide it
        let primitive = common.div_int_exact(&common.content());
        prop_assert!(g.exact_div(&primitive).is_ok());
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(
        f in zpoly(),
        g in zpoly(),
        q in 0.05f64..0.6,
        t in 0.05f64..0.6,
        z in prop::collection::vec(-1.5f64..1.5, 2),
    ) {
        let ef = eval_float(&f, q, t, &z).unwrap();
        let eg = eval_float(&g, q, t, &z).unwrap();
        prop_assert!(close(eval_float(&f.try_mul(&g).unwrap(), q, t, &z).unwrap(), ef * eg));
        prop_assert!(close(eval_float(&f.try_add(&g).unwrap(), q, t, &z).unwrap(), ef + eg));
    }

    #[test]
    fn rational_evaluation_matches_quotient(x in rational(), q in 0.05f64..0.6, t in 0.05f64..0.6) {
        let num = x.numerator().eval_f64(q, t);
        let den = x.denominator().eval_f64(q, t);
        prop_assume!(den.abs() > 1e-6);
        prop_assert!(close(x.eval_f64(q, t).unwrap(), num / den));
    }
}
