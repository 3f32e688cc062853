//! Nonsymmetric Macdonald polynomials `E_lambda` and their integral forms
//! `calE_lambda`, built one box at a time along the chain
//! `lambda -> lambda* -> ... -> 0`.

use std::sync::{Arc, LazyLock};

use super::cache::Memo;
use crate::algebra::{QtPoly, QtRational, ZPoly};
use crate::error::{Error, Result};
use crate::hecke::Hecke;
use crate::weights::{norm_factor, spectral_vector, Composition, NormKind};

pub type QtLaurent = ZPoly<QtRational>;

static CAL_E: LazyLock<Memo<Composition, QtLaurent>> = LazyLock::new(Memo::new);

fn cal_e_shared(lambda: &Composition) -> Result<Arc<QtLaurent>> {
    CAL_E.get_or_try_insert(lambda, || {
        let n = lambda.n();
        if lambda.size() == 0 {
            return Ok(ZPoly::one(n));
        }
        let prev = cal_e_shared(&lambda.star()?)?;
        Hecke::generic(n).x_lambda(&prev, lambda)
    })
}

/// `calE_lambda = prod_s (1 - q^{a(s)+1} t^{l(s)+1}) E_lambda`, with
/// coefficients in `Z[q,t]`.
pub fn nonsym_cal_e(lambda: &Composition) -> Result<QtLaurent> {
    if lambda.n() == 0 {
        return Err(Error::DimensionMismatch { expected: 1, found: 0 });
    }
    Ok((*cal_e_shared(lambda)?).clone())
}

/// `E_lambda`, monic in `z^lambda`.
pub fn nonsym_e(lambda: &Composition) -> Result<QtLaurent> {
    let norm = QtRational::from_poly(norm_factor(lambda, NormKind::Nonsymmetric)?);
    Ok(nonsym_cal_e(lambda)?.scale(&norm.recip()?))
}

/// `E_lambda` from `E_{s_i(lambda)}` when `lambda_i > lambda_{i+1}`, via
/// `x E_lambda = (x H_i + 1 - t) E_{s_i(lambda)}` with
/// `x = 1 - lbar_i / lbar_{i+1}`.
pub fn haction_step(e_swapped: &QtLaurent, lambda: &Composition, i: usize) -> Result<QtLaurent> {
    let n = lambda.n();
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
    }
    let parts = lambda.parts();
    if parts[i - 1] <= parts[i] {
        return Err(Error::PreconditionViolated(format!("{lambda}: need lambda_{i} > lambda_{}", i + 1)));
    }
    let s = spectral_vector(lambda);
    let x = QtRational::from_i64(1) - s.value(i) * s.value(i + 1).recip()?;
    let hk = Hecke::generic(n);
    let mut out = hk.h(e_swapped, i)?.scale(&x);
    out.add_scaled(e_swapped, &QtRational::from_poly(QtPoly::one_minus(0, 1)));
    Ok(out.scale(&x.recip()?))
}
