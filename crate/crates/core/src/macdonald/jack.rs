//! The Jack limit `q = t^alpha, t -> 1`: `calE_lambda(z; alpha)`,
//! `calJ_lambda(z; alpha)`, their expansions in the limit monomial bases,
//! and a floating-point check of the limit itself.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::cache::Memo;
use super::expansion::{Basis, BasisExpansion};
use super::nonsym::nonsym_cal_e;
use crate::algebra::{eval_float, AlphaPoly, ZPoly};
use crate::error::{Error, Result};
use crate::hecke::{phi_one, reflect};
use crate::weights::{u_factor, Composition, Permutation};

pub type JackPoly = ZPoly<AlphaPoly>;

static JACK_E: LazyLock<Memo<Composition, JackPoly>> = LazyLock::new(Memo::new);

/// `s_m ... s_{n-1}` with `s_skip` left out, applied right to left.
fn reflections_down(f: &JackPoly, m: usize, skip: Option<usize>) -> Result<JackPoly> {
    let mut g = f.clone();
    for j in (m..f.n()).rev() {
        if Some(j) != skip {
            g = reflect(&g, j)?;
        }
    }
    Ok(g)
}

/// `X^1_lambda = sum_{i=m}^{n-1} s_m ... ^s_i ... s_{n-1} Phi_1
///              + (alpha lambda_m - k + m) s_m ... s_{n-1} Phi_1`
/// with `m = l(lambda)` and `k = #{i < m : lambda_i >= lambda_m}`.
pub fn jack_creation(f: &JackPoly, lambda: &Composition) -> Result<JackPoly> {
    let n = lambda.n();
    let m = lambda.length();
    if m == 0 {
        return Err(Error::ZeroComposition);
    }
    let parts = lambda.parts();
    let k = parts[..m - 1].iter().filter(|&&x| x >= parts[m - 1]).count() as i64;
    let g = phi_one(f)?;
    let mut out = ZPoly::zero(n);
    for i in m..n {
        out = &out + &reflections_down(&g, m, Some(i))?;
    }
    let c = AlphaPoly::linear(parts[m - 1] as i64, m as i64 - k);
    out.add_scaled(&reflections_down(&g, m, None)?, &c);
    Ok(out)
}

fn jack_shared(lambda: &Composition) -> Result<Arc<JackPoly>> {
    JACK_E.get_or_try_insert(lambda, || {
        if lambda.size() == 0 {
            return Ok(ZPoly::one(lambda.n()));
        }
        jack_creation(&*jack_shared(&lambda.star()?)?, lambda)
    })
}

/// `calE_lambda(z; alpha)`.
pub fn jack_nonsym(lambda: &Composition) -> Result<JackPoly> {
    Ok((*jack_shared(lambda)?).clone())
}

/// `calJ_lambda(z; alpha) = (1/m_0!) sum_w w(Phi_1^m calE_{lambda^0}(z; alpha))`.
pub fn jack_sym(lambda: &Composition) -> Result<JackPoly> {
    lambda.require_partition()?;
    let n = lambda.n();
    let m = lambda.length();
    let mut base: Vec<u32> = lambda.parts()[..m].iter().rev().map(|x| x - 1).collect();
    base.resize(n, 0);
    let mut f = jack_nonsym(&Composition::new(base))?;
    for _ in 0..m {
        f = phi_one(&f)?;
    }
    let mut total = ZPoly::zero(n);
    for w in Permutation::all(n) {
        total = &total + &f.permute_variables(w.images());
    }
    let m0: BigInt = (1..=lambda.multiplicity(0) as u64).product::<u64>().into();
    Ok(total.scale(&AlphaPoly::new(vec![BigRational::new(BigInt::one(), m0)])))
}

/// Coefficients in `{u_{mu''} m^{(m)}_mu}`, where `m^{(m)}_mu` sums the
/// monomials `z^{mu' nu}` over distinct rearrangements `nu` of `mu''`.
pub fn expand_in_limit_monomials(f: &JackPoly, m: usize) -> Result<BasisExpansion<AlphaPoly>> {
    if m > f.n() {
        return Err(Error::IndexOutOfRange { index: m, max: f.n() });
    }
    let mut reps: HashMap<Composition, AlphaPoly> = HashMap::new();
    let mut residual = 0;
    for (e, c) in f.terms() {
        let Some(mu) = Composition::from_exponent(e) else {
            residual += 1;
            continue;
        };
        let mut parts = mu.parts().to_vec();
        parts[m..].sort_unstable_by(|a, b| b.cmp(a));
        let rep = Composition::new(parts);
        match reps.get(&rep) {
            Some(prev) if prev != c => residual += 1,
            Some(_) => {}
            None => {
                reps.insert(rep, c.clone());
            }
        }
    }
    let mut terms = Vec::new();
    for (rep, c) in reps {
        let tail = Composition::new(rep.parts()[m..].to_vec());
        // Every rearrangement of the tail must be present with the same coefficient.
        let orbit = super::tmonomial::distinct_permutations(tail.parts());
        for nu in &orbit {
            let mut e = rep.exponent();
            for (slot, &x) in e[m..].iter_mut().zip(nu) {
                *slot = x as i32;
            }
            if f.coeff(&e) != c {
                residual += 1;
            }
        }
        let u = BigRational::from_integer(u_factor(&tail));
        terms.push((rep, c.scale(&u.recip())));
    }
    if residual > 0 {
        return Err(Error::NotInSpan { residual_terms: residual });
    }
    Ok(BasisExpansion::new(Basis::LimitMonomialAugmented(m), terms))
}

/// `|calE_lambda(z; t0^alpha0, t0) / (1 - t0)^{|lambda|} - calE_lambda(z; alpha0)|`
/// at one point `z`.
pub fn numeric_limit_error_at(lambda: &Composition, alpha0: u32, t0: f64, z: &[f64]) -> Result<f64> {
    let exact = nonsym_cal_e(lambda)?;
    let jack = jack_nonsym(lambda)?.map_coeffs(|c| c.eval_f64(alpha0 as f64));
    let q0 = t0.powi(alpha0 as i32);
    let lhs = eval_float(&exact, q0, t0, z)? / (1.0 - t0).powi(lambda.size() as i32);
    let err = (lhs - jack.eval(z)?).abs();
    if err.is_nan() {
        return Err(Error::PoleAtSpecialization);
    }
    Ok(err)
}

/// The largest [`numeric_limit_error_at`] over `z in {1, 2}^n`.
pub fn numeric_limit_check(lambda: &Composition, alpha0: u32, t0: f64) -> Result<f64> {
    let n = lambda.n();
    let mut worst: f64 = 0.0;
    for mask in 0u32..(1 << n) {
        let z: Vec<f64> = (0..n).map(|i| if mask & (1 << i) == 0 { 1.0 } else { 2.0 }).collect();
        worst = worst.max(numeric_limit_error_at(lambda, alpha0, t0, &z)?);
    }
    Ok(worst)
}
