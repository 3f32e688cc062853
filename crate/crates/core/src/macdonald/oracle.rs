//! Independent construction of `E_lambda` as the joint eigenvector of the
//! Cherednik operators, by a triangular solve on `{z^mu : mu <= lambda}`.

use std::sync::{Arc, LazyLock};

use num_traits::Zero;

use super::cache::Memo;
use super::nonsym::QtLaurent;
use crate::algebra::{qt_gcd, QtPoly, QtRational, ZPoly};
use crate::error::{Error, Result};
use crate::hecke::Hecke;
use crate::weights::{compare, compositions, linear_key, spectral_vector, Composition, Relation};

static XI_IMAGES: LazyLock<Memo<(Composition, usize), QtLaurent>> = LazyLock::new(Memo::new);

/// `xi_i(z^nu)`.
pub fn xi_on_monomial(nu: &Composition, i: usize) -> Result<Arc<QtLaurent>> {
    XI_IMAGES.get_or_try_insert(&(nu.clone(), i), || {
        let z = ZPoly::monomial(nu.exponent(), QtRational::from_i64(1));
        Hecke::generic(nu.n()).xi(&z, i)
    })
}

/// Compositions `mu <= lambda` of the same size, largest first in a linear
/// extension of the order.
pub fn lower_set(lambda: &Composition) -> Result<Vec<Composition>> {
    let mut out = Vec::new();
    for mu in compositions(lambda.n(), lambda.size()) {
        if matches!(compare(&mu, lambda)?, Relation::Less | Relation::Equal) {
            out.push(mu);
        }
    }
    out.sort_by_cached_key(|mu| std::cmp::Reverse(linear_key(mu)));
    Ok(out)
}

/// Solves `xi_i E = lbar_i E` for all `i` with `E = z^lambda + lower terms`.
///
/// Row `mu` of the system for a fixed `i` reads
/// `(lbar_i - mubar_i) c_mu = sum_{nu > mu} c_nu [xi_i z^nu]_mu`,
/// so walking down a linear extension determines each `c_mu` from an `i`
/// where the spectral vectors differ.
///
/// The images `xi_i z^nu` have Laurent-monomial denominators only, so every
/// `c_mu` is kept as a Laurent numerator over one shared denominator `D`.
/// That costs one polynomial gcd per unknown, and the final eigen check
/// needs none since `D` cancels from both sides.
pub fn eigen_oracle_e(lambda: &Composition) -> Result<QtLaurent> {
    let n = lambda.n();
    let lower = lower_set(lambda)?;
    if lower.first() != Some(lambda) {
        return Err(Error::SingularSystem(format!("{lambda} is not the top of its lower set")));
    }
    let lbar = spectral_vector(lambda).values();
    let mut den = QtPoly::one();
    let mut nums: Vec<(&Composition, QtRational)> = vec![(lambda, QtRational::from_i64(1))];
    for mu in &lower[1..] {
        let mubar = spectral_vector(mu).values();
        let i = (0..n)
            .find(|&i| mubar[i] != lbar[i])
            .ok_or_else(|| Error::SingularSystem(format!("{mu} and {lambda} share a spectral vector")))?;
        let e = mu.exponent();
        let mut acc = QtRational::from_i64(0);
        for (nu, num) in &nums {
            let entry = xi_on_monomial(nu, i + 1)?.coeff(&e);
            if !entry.is_zero() {
                acc = acc + num.clone() * &entry;
            }
        }
        if acc.is_zero() {
            continue;
        }
        let c = acc.checked_div(&(QtRational::from_poly(den.clone()) * &(lbar[i].clone() - &mubar[i])))?;
        let missing = c.denominator().exact_div(&qt_gcd(&den, c.denominator()))?;
        if !missing.is_one() {
            let factor = QtRational::from_poly(missing.clone());
            for (_, num) in nums.iter_mut() {
                *num = num.clone() * &factor;
            }
            den = &den * &missing;
        }
        nums.push((mu, c * &QtRational::from_poly(den.clone())));
    }

    for i in 1..=n {
        let mut image = ZPoly::zero(n);
        let mut scaled = ZPoly::zero(n);
        for (mu, num) in &nums {
            image.add_scaled(&*xi_on_monomial(mu, i)?, num);
            scaled.add_term(mu.exponent(), num.clone() * &lbar[i - 1]);
        }
        if image != scaled {
            return Err(Error::SingularSystem(format!("{lambda}: eigen equation fails for xi_{i}")));
        }
    }
    let inv = QtRational::from_poly(den).recip()?;
    ZPoly::from_terms(n, nums.into_iter().map(|(mu, num)| (mu.exponent(), num * &inv)))
}
