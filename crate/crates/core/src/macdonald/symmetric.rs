//! Symmetric polynomials: `calJ_lambda` by Hecke symmetrization, the
//! Hall-Littlewood `P`/`Q`, monomial and Schur functions, the `t`-Schur
//! functions, and expansion of symmetric polynomials in these bases.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock};

use num_traits::Zero;

use super::cache::Memo;
use super::expansion::{Basis, BasisExpansion};
use super::nonsym::{nonsym_cal_e, QtLaurent};
use super::tmonomial::{distinct_permutations, t_monomial_partial};
use crate::algebra::{QtPoly, QtRational, ZPoly};
use crate::error::{Error, Result};
use crate::hecke::Hecke;
use crate::weights::{partitions, t_factorial, Composition, Permutation};

static CAL_J: LazyLock<Memo<Composition, QtLaurent>> = LazyLock::new(Memo::new);
static T_SCHUR: LazyLock<Memo<Composition, QtLaurent>> = LazyLock::new(Memo::new);

/// `sum_{w in S_n} H_w(f)`, walking the weak order: `H_{s_i w} = H_i H_w`
/// whenever `s_i w` is longer than `w`.
pub fn hecke_symmetrize(hk: &Hecke<QtRational>, f: &QtLaurent) -> Result<QtLaurent> {
    let n = hk.n();
    let mut total = f.clone();
    let mut level: HashMap<Permutation, QtLaurent> = HashMap::from([(Permutation::identity(n), f.clone())]);
    while !level.is_empty() {
        let mut next: HashMap<Permutation, QtLaurent> = HashMap::new();
        let mut keys: Vec<&Permutation> = level.keys().collect();
        keys.sort_by(|a, b| a.images().cmp(b.images()));
        for w in keys {
            for i in 1..n {
                let sw = Permutation::simple(n, i).compose(w);
                if sw.length() > w.length() && !next.contains_key(&sw) {
                    next.insert(sw, hk.h(&level[w], i)?);
                }
            }
        }
        for g in next.values() {
            total = &total + g;
        }
        level = next;
    }
    Ok(total)
}

/// `calJ_lambda = (1-t)^m / [m_0]! * sum_w H_w(calE)` with `m = l(lambda)`,
/// `lambda^0 = (lambda_m - 1, ..., lambda_1 - 1, 0, ..., 0)` and
/// `calE = q^{|lambda| - m} Phi^m(calE_{lambda^0})`.
///
/// Each `Phi` step sends `E_mu` to `q^{1 - mu_n} E_{mu'}` with `mu'` the
/// rotated weight, so the power of `q` restores the monic normalization of
/// `E_{lambda^-}` that the symmetrization relies on.
pub fn sym_cal_j(lambda: &Composition) -> Result<QtLaurent> {
    lambda.require_partition()?;
    let shared: Arc<QtLaurent> = CAL_J.get_or_try_insert(lambda, || {
        let n = lambda.n();
        let m = lambda.length();
        let mut base: Vec<u32> = lambda.parts()[..m].iter().rev().map(|x| x - 1).collect();
        base.resize(n, 0);
        let hk = Hecke::generic(n);
        let mut f = nonsym_cal_e(&Composition::new(base))?;
        for _ in 0..m {
            f = hk.phi(&f)?;
        }
        let sum = hecke_symmetrize(&hk, &f)?;
        let shift = (lambda.size() as usize - m) as u32;
        let factor = QtRational::new(
            QtPoly::one_minus(0, 1).pow(m as u32).shift(shift, 0),
            t_factorial(lambda.multiplicity(0)),
        )?;
        Ok(sum.scale(&factor))
    })?;
    Ok((*shared).clone())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HallLittlewoodKind {
    P,
    Q,
}

/// `P_lambda = frak m^{(0)}_lambda` and `Q_lambda = b_lambda P_lambda`.
pub fn hall_littlewood(lambda: &Composition, kind: HallLittlewoodKind) -> Result<QtLaurent> {
    lambda.require_partition()?;
    t_monomial_partial(lambda, 0, kind == HallLittlewoodKind::Q)
}

/// `m_lambda`, the sum of the distinct monomials in the orbit of `z^lambda`.
pub fn monomial_symmetric(lambda: &Composition) -> Result<QtLaurent> {
    lambda.require_partition()?;
    ZPoly::from_terms(
        lambda.n(),
        distinct_permutations(lambda.parts())
            .into_iter()
            .map(|v| (v.into_iter().map(|x| x as i32).collect(), QtRational::from_i64(1))),
    )
}

/// Exact quotient by `z_a - z_b` (0-based indices). Dividing
/// `z_a^k = (z_a - z_b)(z_a^{k-1} + ... + z_b^{k-1}) + z_b^k` term by term
/// leaves the remainder `f|_{z_a = z_b}`, which must vanish.
pub fn divide_by_difference(f: &QtLaurent, a: usize, b: usize) -> Result<QtLaurent> {
    let n = f.n();
    let mut quotient = ZPoly::zero(n);
    let mut remainder = ZPoly::zero(n);
    for (e, c) in f.terms() {
        let k = e[a];
        if k < 0 {
            return Err(Error::NotDivisible);
        }
        let mut r = e.clone();
        r[a] = 0;
        r[b] += k;
        remainder.add_term(r, c.clone());
        for j in 0..k {
            let mut x = e.clone();
            x[a] = k - 1 - j;
            x[b] += j;
            quotient.add_term(x, c.clone());
        }
    }
    if !remainder.is_zero() {
        return Err(Error::NotDivisible);
    }
    Ok(quotient)
}

/// Schur polynomial `a_{lambda + delta} / a_delta` by the ratio of
/// alternants; independent of the Hecke machinery.
pub fn schur_polynomial(lambda: &Composition) -> Result<QtLaurent> {
    lambda.require_partition()?;
    let n = lambda.n();
    let shifted: Vec<i32> = lambda.parts().iter().enumerate().map(|(i, &x)| x as i32 + (n - 1 - i) as i32).collect();
    let mut alt = ZPoly::zero(n);
    for w in Permutation::all(n) {
        let sign = if w.length() % 2 == 0 { 1 } else { -1 };
        let mut e = vec![0; n];
        for (j, &x) in shifted.iter().enumerate() {
            e[w.images()[j]] = x;
        }
        alt.add_term(e, QtRational::from_i64(sign));
    }
    for a in 0..n {
        for b in a + 1..n {
            alt = divide_by_difference(&alt, a, b)?;
        }
    }
    Ok(alt)
}

/// `chi^lambda(rho)` by Murnaghan-Nakayama on beta-sets.
pub fn character(lambda: &[u32], rho: &[u32]) -> i64 {
    let len = lambda.len();
    let beta: Vec<u32> = lambda.iter().enumerate().map(|(i, &x)| x + (len - 1 - i) as u32).collect();
    fn rec(beta: &mut Vec<u32>, rho: &[u32]) -> i64 {
        let Some((&r, rest)) = rho.split_first() else {
            return 1;
        };
        let mut total = 0;
        for k in 0..beta.len() {
            let x = beta[k];
            if x < r || beta.contains(&(x - r)) {
                continue;
            }
            let between = beta.iter().filter(|&&y| y > x - r && y < x).count();
            beta[k] = x - r;
            let sign = if between % 2 == 0 { 1 } else { -1 };
            total += sign * rec(beta, rest);
            beta[k] = x;
        }
        total
    }
    rec(&mut beta.clone(), rho)
}

fn power_sum(n: usize, r: u32) -> QtLaurent {
    let mut p = ZPoly::zero(n);
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = r as i32;
        p.add_term(e, QtRational::from_i64(1));
    }
    p
}

/// `S_mu(z;t)`: the Schur function with `p_r` replaced by `(1 - t^r) p_r`,
/// i.e. `sum_rho chi^mu(rho) / z_rho * prod_i (1 - t^{rho_i}) p_{rho_i}`.
/// Needs `n >= |mu|` so the power sums stay independent.
pub fn t_schur(mu: &Composition) -> Result<QtLaurent> {
    mu.require_partition()?;
    let (n, d) = (mu.n(), mu.size() as usize);
    if n < d {
        return Err(Error::TooFewVariables { n, degree: d });
    }
    let shared = T_SCHUR.get_or_try_insert(mu, || {
        let mut out = ZPoly::zero(n);
        for rho in partitions(d as u32, d.max(1)) {
            let rho: Vec<u32> = rho.parts().iter().copied().filter(|&x| x > 0).collect();
            let chi = character(mu.parts(), &rho);
            if chi == 0 {
                continue;
            }
            let mut z_rho: i64 = 1;
            let mut term = ZPoly::one(n);
            let mut weight = QtPoly::one();
            for (k, &r) in rho.iter().enumerate() {
                z_rho *= r as i64 * (rho[..k].iter().filter(|&&x| x == r).count() as i64 + 1);
                term = &term * &power_sum(n, r);
                weight = weight * QtPoly::one_minus(0, r);
            }
            let c = QtRational::new(weight.scale(&chi.into()), QtPoly::constant(z_rho))?;
            out.add_scaled(&term, &c);
        }
        Ok(out)
    })?;
    Ok((*shared).clone())
}

/// The basis element of a symmetric basis at partition `mu`.
pub fn symmetric_basis_element(basis: Basis, mu: &Composition) -> Result<QtLaurent> {
    match basis {
        Basis::MonomialSymmetric => monomial_symmetric(mu),
        Basis::HallLittlewoodP | Basis::TMonomialPartial(0) => hall_littlewood(mu, HallLittlewoodKind::P),
        Basis::HallLittlewoodQ | Basis::TMonomialAugmented(0) => hall_littlewood(mu, HallLittlewoodKind::Q),
        Basis::TSchur => t_schur(mu),
        Basis::MacdonaldJ => sym_cal_j(mu),
        other => Err(Error::PreconditionViolated(format!("{other} is not a symmetric basis"))),
    }
}

/// Coefficients of a symmetric `f` in a basis whose element at `mu` is a
/// nonzero multiple of `m_mu` plus terms lower in dominance. Peels the
/// lexicographically largest partition exponent each round.
pub fn expand_symmetric(f: &QtLaurent, basis: Basis) -> Result<BasisExpansion> {
    let mut rest = f.clone();
    let mut terms = Vec::new();
    while !rest.is_zero() {
        let top = rest
            .terms()
            .rev()
            .filter_map(|(e, _)| Composition::from_exponent(e))
            .find(|mu| mu.is_partition())
            .ok_or(Error::NotInSpan { residual_terms: rest.len() })?;
        let element = symmetric_basis_element(basis, &top)?;
        let lead = element.coeff(&top.exponent());
        if lead.is_zero() {
            return Err(Error::SingularSystem(format!("{basis} element {top} lacks its leading monomial")));
        }
        let c = rest.coeff(&top.exponent()).checked_div(&lead)?;
        rest.add_scaled(&element, &-c.clone());
        terms.push((top, c));
    }
    Ok(BasisExpansion::new(basis, terms))
}
