use proptest::prelude::*;

use super::*;
use crate::algebra::QtPoly;
use crate::weights::Composition;

type P = ZPoly<QtRational>;

fn z(n: usize, e: &[i32]) -> P {
    assert_eq!(e.len(), n);
    P::monomial(e.to_vec(), QtRational::from_i64(1))
}

fn c(p: QtPoly) -> QtRational {
    QtRational::from_poly(p)
}

fn one_minus_t() -> QtRational {
    c(QtPoly::one_minus(0, 1))
}

#[test]
fn reflections_and_divided_differences() {
    assert_eq!(reflect(&z(2, &[0, 1]), 1).unwrap(), z(2, &[1, 0]));
    assert_eq!(reflect(&z(2, &[1, 1]), 1).unwrap(), z(2, &[1, 1]));
    assert_eq!(reflect(&P::one(2), 1).unwrap(), P::one(2));
    assert!(matches!(reflect(&P::one(2), 2), Err(Error::IndexOutOfRange { .. })));

    assert_eq!(divided_difference(&z(2, &[1, 0]), 1).unwrap(), P::one(2));
    assert_eq!(divided_difference(&z(2, &[1, 1]), 1).unwrap(), P::zero(2));
    assert_eq!(divided_difference(&z(2, &[2, 0]), 1).unwrap(), z(2, &[1, 0]) + z(2, &[0, 1]));
    // Laurent input: (z_1^{-1} - z_2^{-1}) / (z_1 - z_2) = -z_1^{-1} z_2^{-1}.
    assert_eq!(divided_difference(&z(2, &[-1, 0]), 1).unwrap(), -z(2, &[-1, -1]));
}

#[test]
fn divided_difference_times_root_is_antisymmetrization() {
    let f = z(3, &[3, 0, 1]) + z(3, &[0, 2, -1]).scale(&QtRational::q()) + z(3, &[1, 1, 1]);
    for i in 1..3 {
        let nf = divided_difference(&f, i).unwrap();
        let root = z(3, &[i32::from(i == 1), i32::from(i == 2), i32::from(i == 3)])
            - z(3, &[0, i32::from(i == 1), i32::from(i == 2)]);
        assert_eq!(&root * &nf, &f - &reflect(&f, i).unwrap());
    }
}

#[test]
fn hecke_examples() {
    let hk = Hecke::generic(2);
    assert_eq!(hk.h(&P::one(2), 1).unwrap(), P::constant(2, QtRational::t()));
    assert_eq!(hk.h(&z(2, &[0, 1]), 1).unwrap(), z(2, &[1, 0]));
    assert_eq!(hk.hbar(&z(2, &[0, 1]), 1).unwrap(), z(2, &[1, 0]) + z(2, &[0, 1]).scale(&one_minus_t()));
    let f = z(2, &[2, 1]);
    assert_eq!(hk.h_inv(&hk.h(&f, 1).unwrap(), 1).unwrap(), f);
    assert_eq!(hk.hbar_inv(&hk.hbar(&f, 1).unwrap(), 1).unwrap(), f);
}

#[test]
fn delta_and_creation_examples() {
    let hk = Hecke::generic(2);
    assert_eq!(hk.delta(&P::one(2)).unwrap(), P::one(2));
    assert_eq!(hk.delta(&z(2, &[1, 0])).unwrap(), z(2, &[0, 1]).scale(&QtRational::qt_power(-1, 0)));
    let f = z(2, &[2, 1]);
    assert_eq!(hk.delta_inv(&hk.delta(&f).unwrap()).unwrap(), f);
    assert_eq!(hk.delta(&hk.delta_inv(&f).unwrap()).unwrap(), f);
    assert_eq!(hk.phi(&P::one(2)).unwrap(), z(2, &[0, 1]));
    assert_eq!(phi_one(&z(2, &[0, 1])).unwrap(), z(2, &[1, 1]));
    assert_eq!(Hecke::generic(3).phi(&P::one(3)).unwrap(), z(3, &[0, 0, 1]));
}

#[test]
fn cherednik_examples() {
    let hk = Hecke::generic(2);
    assert_eq!(hk.xi(&P::one(2), 1).unwrap(), P::one(2));
    assert_eq!(hk.xi(&P::one(2), 2).unwrap(), P::constant(2, QtRational::qt_power(0, -1)));
    let coeff = QtRational::new(QtPoly::one_minus(0, 1), QtPoly::one_minus(1, 1)).unwrap();
    let e10 = z(2, &[1, 0]) + z(2, &[0, 1]).scale(&coeff);
    assert_eq!(hk.xi(&e10, 1).unwrap(), e10.scale(&QtRational::q()));
    assert_eq!(hk.xi(&e10, 2).unwrap(), e10.scale(&QtRational::qt_power(0, -1)));
    assert_eq!(hk.xi_inv(&e10, 1).unwrap(), e10.scale(&QtRational::qt_power(-1, 0)));
}

#[test]
fn creation_examples() {
    let hk = Hecke::generic(2);
    let lam = |v: &[u32]| Composition::new(v.to_vec());
    assert_eq!(hk.x_lambda(&P::one(2), &lam(&[0, 1])).unwrap(), z(2, &[0, 1]).scale(&c(QtPoly::one_minus(1, 2))));
    assert_eq!(
        hk.x_lambda(&P::one(2), &lam(&[1, 0])).unwrap(),
        z(2, &[1, 0]).scale(&c(QtPoly::one_minus(1, 1))) + z(2, &[0, 1]).scale(&one_minus_t())
    );
    assert_eq!(
        Hecke::generic(1).x_lambda(&P::one(1), &lam(&[1])).unwrap(),
        z(1, &[1]).scale(&c(QtPoly::one_minus(1, 1)))
    );
    assert_eq!(hk.x_lambda(&P::one(2), &lam(&[0, 0])), Err(Error::ZeroComposition));
}

#[test]
fn words_and_a_family() {
    let hk = Hecke::generic(3);
    let f = z(3, &[2, 0, 1]);
    let w = OperatorWord::parse(3, "H1 H2 H1").unwrap();
    let v = OperatorWord::parse(3, "H2 H1 H2").unwrap();
    assert_eq!(hk.apply_word(&f, &w).unwrap(), hk.apply_word(&f, &v).unwrap());
    assert_eq!(hk.apply_word(&f, &OperatorWord::identity(3)).unwrap(), f);
    assert_eq!(w.to_string(), "H1 H2 H1");
    assert!(OperatorWord::<QtRational>::parse(3, "H3").is_err());
    assert!(OperatorWord::<QtRational>::parse(3, "Q1").is_err());

    let a = |n, m, v| a_family::<QtRational>(n, m, v).unwrap().to_string();
    assert_eq!(a(2, 2, AVariant::A), "Phi");
    assert_eq!(a(2, 1, AVariant::A), "H1 Phi");
    assert_eq!(a(3, 1, AVariant::Abar), "Hb1 Hb2 Phi");
    assert_eq!(a(3, 2, AVariant::AbarPrime), "Hb2 Phip");
    assert!(a_family::<QtRational>(3, 4, AVariant::A).is_err());

    let text = "s1 N2 H1 Hb2 Hi1 Hbi2 D Di Phi Phip Phi1 xi3 xii1 z2";
    assert_eq!(OperatorWord::<QtRational>::parse(3, text).unwrap().to_string(), text);
}

fn small_poly(n: usize) -> impl Strategy<Value = P> {
    prop::collection::vec((prop::collection::vec(0i32..=2, n), -3i64..=3), 1..5)
        .prop_map(move |terms| P::from_terms(n, terms.into_iter().map(|(e, k)| (e, QtRational::from_i64(k)))).unwrap())
}

fn with_index() -> impl Strategy<Value = (usize, P, usize)> {
    (2usize..=4).prop_flat_map(|n| (Just(n), small_poly(n), 1..n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn quadratic_and_inverse_relations((n, f, i) in with_index()) {
        let hk = Hecke::generic(n);
        let t = P::constant(n, QtRational::t());
        let hf = hk.h(&f, i).unwrap();
        // (H + 1)(H - t) f = 0
        let g = &hf - &(&t * &f);
        prop_assert!((&hk.h(&g, i).unwrap() + &g).is_zero());
        prop_assert_eq!(&hf - &hk.hbar(&f, i).unwrap(), f.scale(&(QtRational::t() - QtRational::from_i64(1))));
        prop_assert_eq!(hk.h(&hk.hbar(&f, i).unwrap(), i).unwrap(), &t * &f);
        prop_assert_eq!(hk.h_inv(&hf, i).unwrap(), f.clone());
    }

    #[test]
    fn cross_relations((n, f, i) in with_index()) {
        let hk = Hecke::generic(n);
        prop_assert_eq!(
            hk.h(&f, i).unwrap().mul_var(i + 1).unwrap(),
            hk.hbar(&f.mul_var(i).unwrap(), i).unwrap()
        );
        prop_assert_eq!(
            hk.h(&f.mul_var(i + 1).unwrap(), i).unwrap(),
            hk.hbar(&f, i).unwrap().mul_var(i).unwrap()
        );
    }

    #[test]
    fn phi_prime_forms_agree((n, f, _i) in with_index()) {
        let hk = Hecke::generic(n);
        let mut g = f.clone();
        for j in 1..n {
            g = hk.hbar_inv(&g, j).unwrap();
        }
        prop_assert_eq!(g.mul_var(n).unwrap(), hk.phi_prime(&f).unwrap());
    }

    #[test]
    fn cherednik_operators_commute((n, f, _i) in with_index()) {
        let hk = Hecke::generic(n);
        for a in 1..=n {
            prop_assert_eq!(hk.xi_inv(&hk.xi(&f, a).unwrap(), a).unwrap(), f.clone());
            for b in a + 1..=n {
                let ab = hk.xi(&hk.xi(&f, b).unwrap(), a).unwrap();
                let ba = hk.xi(&hk.xi(&f, a).unwrap(), b).unwrap();
                prop_assert_eq!(ab, ba);
            }
        }
    }
}

#[test]
fn symmetric_polynomials_are_hecke_invariant() {
    let hk = Hecke::generic(3);
    let e2 = z(3, &[1, 1, 0]) + z(3, &[1, 0, 1]) + z(3, &[0, 1, 1]);
    for i in 1..3 {
        assert_eq!(hk.h(&e2, i).unwrap(), e2.scale(&QtRational::t()));
        assert_eq!(hk.hbar(&e2, i).unwrap(), e2);
    }
    let f = z(3, &[1, 1, 0]);
    assert_ne!(hk.hbar(&f, 2).unwrap(), f);
}

#[test]
fn float_parameters_match_exact_ones() {
    let exact = Hecke::generic(3);
    let float = Hecke::specialized(3, 0.3f64, 0.7f64).unwrap();
    let f = z(3, &[2, 0, 1]) + z(3, &[0, 1, 0]).scale(&QtRational::q());
    let ff = f.map_coeffs(|x| x.eval_f64(0.3, 0.7).unwrap());
    let lhs = exact.xi(&f, 2).unwrap().map_coeffs(|x| x.eval_f64(0.3, 0.7).unwrap());
    let rhs = float.xi(&ff, 2).unwrap();
    for (e, x) in lhs.terms() {
        assert!((x - rhs.coeff(e)).abs() < 1e-12);
    }
    assert_eq!(lhs.len(), rhs.len());
}
