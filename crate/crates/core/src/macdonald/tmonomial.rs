//! `t`-monomials `frak m_lambda = Hbar_{w~_lambda}(z^{lambda^-})`, their
//! partial symmetrizations, and expansion of polynomials in these bases.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock};

use num_traits::Zero;

use super::cache::Memo;
use super::expansion::{Basis, BasisExpansion};
use super::nonsym::QtLaurent;
use crate::algebra::{QtPoly, QtRational, ZPoly};
use crate::error::{Error, Result};
use crate::hecke::{Hecke, HeckeVariant};
use crate::weights::{b_factor, linear_key, orbit_data, Composition};

static T_MONOMIALS: LazyLock<Memo<Composition, QtLaurent>> = LazyLock::new(Memo::new);

fn t_monomial_shared(lambda: &Composition) -> Result<Arc<QtLaurent>> {
    T_MONOMIALS.get_or_try_insert(lambda, || {
        let parts = lambda.parts();
        match (0..parts.len().saturating_sub(1)).find(|&j| parts[j] > parts[j + 1]) {
            None => Ok(ZPoly::monomial(lambda.exponent(), QtRational::from_i64(1))),
            // A descent at i gives w~_lambda = s_i w~_{s_i lambda} with one more inversion.
            Some(j) => {
                let prev = t_monomial_shared(&lambda.swapped(j + 1))?;
                Hecke::generic(lambda.n()).hbar(&prev, j + 1)
            }
        }
    })
}

pub fn t_monomial(lambda: &Composition) -> Result<QtLaurent> {
    Ok((*t_monomial_shared(lambda)?).clone())
}

/// The same polynomial computed from the reduced word of `w~_lambda`
/// produced by [`crate::weights::Permutation::reduced_word`].
pub fn t_monomial_by_word(lambda: &Composition) -> Result<QtLaurent> {
    let data = orbit_data(lambda);
    let hk = Hecke::generic(lambda.n());
    let mut f = ZPoly::monomial(data.lambda_minus.exponent(), QtRational::from_i64(1));
    for &i in data.w_tilde.reduced_word().iter().rev() {
        f = hk.hbar(&f, i)?;
    }
    Ok(f)
}

/// `H_i` or `Hbar_i` applied to `frak m_lambda`, read off the case tables.
pub fn t_monomial_hecke_action(lambda: &Composition, i: usize, variant: HeckeVariant) -> Result<BasisExpansion> {
    let n = lambda.n();
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
    }
    let (a, b) = (lambda.parts()[i - 1], lambda.parts()[i]);
    let swapped = lambda.swapped(i);
    let t = QtRational::t();
    let one = QtRational::from_i64(1);
    let terms = match variant {
        HeckeVariant::H if a >= b => vec![(swapped, t)],
        HeckeVariant::H => vec![(swapped, one), (lambda.clone(), QtRational::t() - QtRational::from_i64(1))],
        HeckeVariant::Hbar if a > b => {
            vec![(swapped, t), (lambda.clone(), QtRational::from_poly(QtPoly::one_minus(0, 1)))]
        }
        HeckeVariant::Hbar => vec![(swapped, one)],
        _ => return Err(Error::PreconditionViolated("case tables cover H and Hbar only".into())),
    };
    Ok(BasisExpansion::new(Basis::TMonomial, terms))
}

/// Distinct rearrangements of `v`, in increasing lexicographic order.
pub(crate) fn distinct_permutations(v: &[u32]) -> Vec<Vec<u32>> {
    let mut cur = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (0..cur.len().saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).expect("pivot has a successor");
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
}

fn check_level(lambda: &Composition, m: usize) -> Result<()> {
    if m > lambda.n() {
        return Err(Error::IndexOutOfRange { index: m, max: lambda.n() });
    }
    if !lambda.parts()[m..].windows(2).all(|w| w[0] >= w[1]) {
        return Err(Error::TailNotPartition(lambda.parts().to_vec()));
    }
    Ok(())
}

/// `frak m^{(m)}_lambda = sum_mu t^{L(mu)} frak m_{lambda' mu}` over the
/// distinct rearrangements `mu` of `lambda''`; the augmented version is
/// multiplied by `b_{lambda''}(t)`.
pub fn t_monomial_partial(lambda: &Composition, m: usize, augmented: bool) -> Result<QtLaurent> {
    check_level(lambda, m)?;
    let (head, tail) = lambda.split_at(m);
    let mut out = ZPoly::zero(lambda.n());
    for mu in distinct_permutations(tail) {
        let l = Composition::new(mu.clone()).inversion_length();
        let mut parts = head.to_vec();
        parts.extend(mu);
        out.add_scaled(&*t_monomial_shared(&Composition::new(parts))?, &QtRational::qt_power(0, l as i32));
    }
    if augmented {
        out = out.scale(&QtRational::from_poly(b_factor(&Composition::new(tail.to_vec()))));
    }
    Ok(out)
}

/// Coordinates of `f` in the `t`-monomial basis, peeled from the top of a
/// linear extension of the order (`frak m_mu = z^mu + lower terms`).
pub fn expand_in_t_monomials(f: &QtLaurent) -> Result<BasisExpansion> {
    let mut rest = f.clone();
    let mut terms = Vec::new();
    while !rest.is_zero() {
        let mut top: Option<Composition> = None;
        for (e, _) in rest.terms() {
            let Some(mu) = Composition::from_exponent(e) else {
                return Err(Error::NotInSpan { residual_terms: rest.len() });
            };
            if top.as_ref().is_none_or(|t| linear_key(&mu) > linear_key(t)) {
                top = Some(mu);
            }
        }
        let mu = top.expect("nonzero polynomial has a term");
        let c = rest.coeff(&mu.exponent());
        rest.add_scaled(&*t_monomial_shared(&mu)?, &-c.clone());
        terms.push((mu, c));
    }
    Ok(BasisExpansion::new(Basis::TMonomial, terms))
}

fn expand_partial(f: &QtLaurent, m: usize, augmented: bool) -> Result<BasisExpansion> {
    if m > f.n() {
        return Err(Error::IndexOutOfRange { index: m, max: f.n() });
    }
    let coords = expand_in_t_monomials(f)?;
    let table: HashMap<&Composition, &QtRational> = coords.terms.iter().map(|(mu, c)| (mu, c)).collect();
    let sorted_tail = |mu: &Composition| {
        let mut parts = mu.parts().to_vec();
        parts[m..].sort_unstable_by(|a, b| b.cmp(a));
        Composition::new(parts)
    };
    // f lies in the span iff every coordinate at lambda' mu equals
    // t^{L(mu)} times the coordinate at the sorted representative.
    let mut residual = 0;
    for (mu, c) in &coords.terms {
        let rep = sorted_tail(mu);
        let l = Composition::new(mu.parts()[m..].to_vec()).inversion_length();
        let expected =
            table.get(&rep).map_or_else(QtRational::zero, |&a| a.clone() * QtRational::qt_power(0, l as i32));
        if &expected != c {
            residual += 1;
        }
    }
    if residual > 0 {
        return Err(Error::NotInSpan { residual_terms: residual });
    }
    let mut terms = Vec::new();
    for (mu, c) in &coords.terms {
        if &sorted_tail(mu) != mu {
            continue;
        }
        let coeff = if augmented {
            let b = QtRational::from_poly(b_factor(&Composition::new(mu.parts()[m..].to_vec())));
            c.checked_div(&b)?
        } else {
            c.clone()
        };
        terms.push((mu.clone(), coeff));
    }
    let basis = if augmented { Basis::TMonomialAugmented(m) } else { Basis::TMonomialPartial(m) };
    Ok(BasisExpansion::new(basis, terms))
}

/// Coefficients of `f` in the augmented basis `{b_{mu''} frak m^{(m)}_mu}`.
pub fn expand_in_partial_t_monomials(f: &QtLaurent, m: usize) -> Result<BasisExpansion> {
    expand_partial(f, m, true)
}

/// Coefficients of `f` in the plain basis `{frak m^{(m)}_mu}`.
pub fn expand_in_plain_partial_t_monomials(f: &QtLaurent, m: usize) -> Result<BasisExpansion> {
    expand_partial(f, m, false)
}
