use num_traits::Zero;

use super::*;
use crate::algebra::{AlphaPoly, QtPoly, QtRational, ZPoly};
use crate::error::Error;
use crate::hecke::{Hecke, HeckeVariant};
use crate::weights::{compositions, norm_factor, Composition, NormKind};

fn c(v: &[u32]) -> Composition {
    Composition::new(v.to_vec())
}

fn z(e: &[i32]) -> QtLaurent {
    ZPoly::monomial(e.to_vec(), QtRational::from_i64(1))
}

fn poly(p: QtPoly) -> QtRational {
    QtRational::from_poly(p)
}

fn ratio(a: QtPoly, b: QtPoly) -> QtRational {
    QtRational::new(a, b).unwrap()
}

#[test]
fn nonsymmetric_small_cases() {
    assert_eq!(nonsym_e(&c(&[0, 0, 0])).unwrap(), ZPoly::one(3));
    assert_eq!(nonsym_e(&c(&[0, 1])).unwrap(), z(&[0, 1]));
    let e10 = z(&[1, 0]) + z(&[0, 1]).scale(&ratio(QtPoly::one_minus(0, 1), QtPoly::one_minus(1, 1)));
    assert_eq!(nonsym_e(&c(&[1, 0])).unwrap(), e10);
    assert_eq!(nonsym_cal_e(&c(&[0, 1])).unwrap(), z(&[0, 1]).scale(&poly(QtPoly::one_minus(1, 2))));
    assert_eq!(
        nonsym_cal_e(&c(&[1, 0])).unwrap(),
        z(&[1, 0]).scale(&poly(QtPoly::one_minus(1, 1))) + z(&[0, 1]).scale(&poly(QtPoly::one_minus(0, 1)))
    );
    for lambda in compositions(3, 2) {
        let norm = poly(norm_factor(&lambda, NormKind::Nonsymmetric).unwrap());
        assert_eq!(nonsym_cal_e(&lambda).unwrap(), nonsym_e(&lambda).unwrap().scale(&norm));
    }
}

#[test]
fn oracle_small_cases() {
    assert_eq!(eigen_oracle_e(&c(&[0, 0])).unwrap(), ZPoly::one(2));
    assert_eq!(eigen_oracle_e(&c(&[0, 1])).unwrap(), z(&[0, 1]));
    assert_eq!(eigen_oracle_e(&c(&[1, 0])).unwrap(), nonsym_e(&c(&[1, 0])).unwrap());
    for lambda in compositions(3, 3) {
        assert_eq!(eigen_oracle_e(&lambda).unwrap(), nonsym_e(&lambda).unwrap(), "{lambda}");
    }
}

#[test]
fn hecke_step_reproduces_the_recursion() {
    let e = haction_step(&z(&[0, 1]), &c(&[1, 0]), 1).unwrap();
    assert_eq!(e, nonsym_e(&c(&[1, 0])).unwrap());
    let e = haction_step(&nonsym_e(&c(&[0, 2])).unwrap(), &c(&[2, 0]), 1).unwrap();
    assert_eq!(e, nonsym_e(&c(&[2, 0])).unwrap());
    let e = haction_step(&nonsym_e(&c(&[0, 1, 0])).unwrap(), &c(&[1, 0, 0]), 1).unwrap();
    assert_eq!(e, nonsym_e(&c(&[1, 0, 0])).unwrap());
    assert!(matches!(haction_step(&z(&[1, 0]), &c(&[0, 1]), 1), Err(Error::PreconditionViolated(_))));
}

#[test]
fn t_monomial_examples() {
    assert_eq!(t_monomial(&c(&[0, 1, 1])).unwrap(), z(&[0, 1, 1]));
    assert_eq!(t_monomial(&c(&[1, 0])).unwrap(), z(&[1, 0]) + z(&[0, 1]).scale(&poly(QtPoly::one_minus(0, 1))));
    let m21 = t_monomial(&c(&[2, 1])).unwrap();
    assert_eq!(m21, Hecke::generic(2).hbar(&z(&[1, 2]), 1).unwrap());
    assert_eq!(m21.coeff(&[2, 1]), QtRational::from_i64(1));
    for lambda in compositions(4, 3) {
        assert_eq!(t_monomial(&lambda).unwrap(), t_monomial_by_word(&lambda).unwrap(), "{lambda}");
    }
}

#[test]
fn t_monomial_case_tables() {
    let t = QtRational::t();
    let h = t_monomial_hecke_action(&c(&[1, 0]), 1, HeckeVariant::H).unwrap();
    assert_eq!(h.terms, vec![(c(&[0, 1]), t.clone())]);
    let h = t_monomial_hecke_action(&c(&[0, 1]), 1, HeckeVariant::H).unwrap();
    assert_eq!(h.coeff(&c(&[1, 0])), QtRational::from_i64(1));
    assert_eq!(h.coeff(&c(&[0, 1])), t.clone() - QtRational::from_i64(1));
    let h = t_monomial_hecke_action(&c(&[0, 1]), 1, HeckeVariant::Hbar).unwrap();
    assert_eq!(h.terms, vec![(c(&[1, 0]), QtRational::from_i64(1))]);

    let hk = Hecke::generic(3);
    for lambda in compositions(3, 3) {
        for i in 1..3 {
            for variant in [HeckeVariant::H, HeckeVariant::Hbar] {
                let table = t_monomial_hecke_action(&lambda, i, variant).unwrap();
                let direct = hk.hecke(&t_monomial(&lambda).unwrap(), i, variant).unwrap();
                assert_eq!(expand_in_t_monomials(&direct).unwrap(), table, "{lambda} {i} {variant:?}");
            }
        }
    }
}

#[test]
fn partial_symmetrizations() {
    let p = t_monomial_partial(&c(&[1, 0]), 0, false).unwrap();
    assert_eq!(p, z(&[1, 0]) + z(&[0, 1]));
    let q = t_monomial_partial(&c(&[1, 0]), 0, true).unwrap();
    assert_eq!(q, p.scale(&poly(QtPoly::one_minus(0, 1))));
    assert_eq!(t_monomial_partial(&c(&[0, 2, 1]), 3, true).unwrap(), t_monomial(&c(&[0, 2, 1])).unwrap());
    assert_eq!(t_monomial_partial(&c(&[1, 0, 2]), 1, false), Err(Error::TailNotPartition(vec![1, 0, 2])));
    for lambda in [c(&[2, 1, 0]), c(&[1, 1, 0]), c(&[2, 2, 1])] {
        assert!(t_monomial_partial(&lambda, 0, false).unwrap().is_symmetric());
    }
}

#[test]
fn partial_expansion_examples() {
    let e = nonsym_cal_e(&c(&[1, 0])).unwrap();
    let x = expand_in_partial_t_monomials(&e, 1).unwrap();
    assert_eq!(x.terms, vec![(c(&[1, 0]), poly(QtPoly::one_minus(1, 1))), (c(&[0, 1]), QtRational::qt_power(1, 1))]);
    assert!(x.is_integral());

    let basis = t_monomial_partial(&c(&[1, 2, 0]), 1, true).unwrap();
    let x = expand_in_partial_t_monomials(&basis, 1).unwrap();
    assert_eq!(x.terms, vec![(c(&[1, 2, 0]), QtRational::from_i64(1))]);

    assert!(expand_in_partial_t_monomials(&ZPoly::zero(2), 1).unwrap().is_empty());
    assert!(matches!(expand_in_partial_t_monomials(&z(&[0, 1]), 0), Err(Error::NotInSpan { .. })));
}

#[test]
fn symmetric_small_cases() {
    let omt = poly(QtPoly::one_minus(0, 1));
    assert_eq!(sym_cal_j(&c(&[1, 0])).unwrap(), (z(&[1, 0]) + z(&[0, 1])).scale(&omt));
    let j11 = sym_cal_j(&c(&[1, 1])).unwrap();
    assert_eq!(j11, z(&[1, 1]).scale(&poly(QtPoly::one_minus(0, 1) * QtPoly::one_minus(0, 2))));
    for lambda in [c(&[2, 0, 0]), c(&[1, 1, 0]), c(&[2, 1, 0])] {
        let j = sym_cal_j(&lambda).unwrap();
        assert!(j.is_symmetric());
        let norm = poly(norm_factor(&lambda, NormKind::Symmetric).unwrap());
        assert_eq!(j.coeff(&lambda.exponent()), norm);
    }
    assert!(matches!(sym_cal_j(&c(&[0, 1])), Err(Error::NotAPartition(_))));
}

#[test]
fn hall_littlewood_and_schur() {
    let p1 = hall_littlewood(&c(&[1, 0]), HallLittlewoodKind::P).unwrap();
    assert_eq!(p1, z(&[1, 0]) + z(&[0, 1]));
    let q1 = hall_littlewood(&c(&[1, 0]), HallLittlewoodKind::Q).unwrap();
    assert_eq!(q1, p1.scale(&poly(QtPoly::one_minus(0, 1))));

    let s21 = schur_polynomial(&c(&[2, 1, 0])).unwrap();
    let m21 = monomial_symmetric(&c(&[2, 1, 0])).unwrap();
    let m111 = monomial_symmetric(&c(&[1, 1, 1])).unwrap();
    assert_eq!(s21, &m21 + &m111.scale(&QtRational::from_i64(2)));
    let p21 = hall_littlewood(&c(&[2, 1, 0]), HallLittlewoodKind::P).unwrap();
    assert_eq!(crate::algebra::specialize(&p21, None, Some(0)).unwrap(), s21);
}

#[test]
fn characters_and_t_schur() {
    assert_eq!(character(&[2, 1], &[1, 1, 1]), 2);
    assert_eq!(character(&[2, 1], &[3]), -1);
    assert_eq!(character(&[1, 1, 1], &[2, 1]), -1);
    assert_eq!(character(&[3, 1], &[2, 2]), -1);

    let s1 = t_schur(&c(&[1, 0, 0])).unwrap();
    assert_eq!(s1, hall_littlewood(&c(&[1, 0, 0]), HallLittlewoodKind::Q).unwrap());
    for mu in [c(&[2, 1, 0]), c(&[3, 0, 0]), c(&[1, 1, 1])] {
        let s = crate::algebra::specialize(&t_schur(&mu).unwrap(), None, Some(0)).unwrap();
        assert_eq!(s, schur_polynomial(&mu).unwrap(), "{mu}");
    }
    assert_eq!(t_schur(&c(&[2, 1])), Err(Error::TooFewVariables { n: 2, degree: 3 }));

    // S_{11} = Q_{11} - t Q_2 in two variables.
    let x = expand_symmetric(&t_schur(&c(&[1, 1])).unwrap(), Basis::HallLittlewoodQ).unwrap();
    assert_eq!(x.terms, vec![(c(&[2, 0]), -QtRational::t()), (c(&[1, 1]), QtRational::from_i64(1))]);
}

#[test]
fn kostka_small_degrees() {
    let k1 = kostka_matrix(1, 1).unwrap();
    assert_eq!(k1.entries, vec![vec![QtRational::from_i64(1)]]);

    let k2 = kostka_matrix(2, 2).unwrap();
    assert_eq!(k2.labels, vec![c(&[2, 0]), c(&[1, 1])]);
    let one = QtRational::from_i64(1);
    assert_eq!(k2.entries, vec![vec![one.clone(), QtRational::q()], vec![QtRational::t(), one]]);
    assert!(k2.is_integral());
    assert!(k2.has_unit_diagonal());

    let k3 = kostka_matrix(3, 3).unwrap();
    assert!(k3.is_integral());
    let at_zero = k3.specialize(Some(0), Some(0)).unwrap();
    for (i, row) in at_zero.entries.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            assert_eq!(x, &QtRational::from_i64(i64::from(i == j)));
        }
    }
}

#[test]
fn jack_small_cases() {
    let zj = |e: &[i32], p: AlphaPoly| ZPoly::monomial(e.to_vec(), p);
    assert_eq!(
        jack_nonsym(&c(&[1, 0])).unwrap(),
        zj(&[1, 0], AlphaPoly::linear(1, 1)) + zj(&[0, 1], AlphaPoly::from_ints(&[1]))
    );
    assert_eq!(jack_nonsym(&c(&[0, 1])).unwrap(), zj(&[0, 1], AlphaPoly::linear(1, 2)));
    assert_eq!(jack_nonsym(&c(&[0, 0])).unwrap(), ZPoly::one(2));

    let one = AlphaPoly::from_ints(&[1]);
    assert_eq!(jack_sym(&c(&[1, 0])).unwrap(), zj(&[1, 0], one.clone()) + zj(&[0, 1], one.clone()));
    assert_eq!(jack_sym(&c(&[1, 1])).unwrap(), zj(&[1, 1], AlphaPoly::from_ints(&[2])));
    assert_eq!(
        jack_sym(&c(&[1, 0, 0])).unwrap(),
        zj(&[1, 0, 0], one.clone()) + zj(&[0, 1, 0], one.clone()) + zj(&[0, 0, 1], one)
    );

    let x = expand_in_limit_monomials(&jack_sym(&c(&[1, 1])).unwrap(), 0).unwrap();
    assert_eq!(x.terms, vec![(c(&[1, 1]), AlphaPoly::from_ints(&[1]))]);
    assert!(x.is_natural());
}

/// For `(1,0)` and `(0,1)` the ratio `(1 - t^3)/(1 - t) = 1 + t + t^2` is
/// the only source of error, so the deviation is known in closed form.
#[test]
fn numeric_limit_examples() {
    let t0 = 0.999f64;
    let gap = 3.0 - (1.0 + t0 + t0 * t0);
    let err = numeric_limit_error_at(&c(&[1, 0]), 2, t0, &[1.0, 1.0]).unwrap();
    assert!((err - gap).abs() < 1e-9);
    assert!(err < 5e-3);
    assert_eq!(numeric_limit_check(&c(&[0, 0]), 1, t0).unwrap(), 0.0);
    let err = numeric_limit_error_at(&c(&[0, 1]), 1, t0, &[1.0, 2.0]).unwrap();
    assert!((err - 2.0 * gap).abs() < 1e-9);
}

#[test]
fn numeric_limit_error_is_first_order() {
    let lambda = c(&[2, 1, 0]);
    let coarse = numeric_limit_check(&lambda, 2, 0.999).unwrap();
    let fine = numeric_limit_check(&lambda, 2, 0.9999).unwrap();
    let ratio = coarse / fine;
    assert!((8.0..12.0).contains(&ratio), "{coarse} {fine}");
}

#[test]
fn expansion_rejects_negative_exponents() {
    let f = z(&[-1, 1]);
    assert!(matches!(expand_in_t_monomials(&f), Err(Error::NotInSpan { .. })));
    assert!(!QtRational::from_i64(1).is_zero());
}
