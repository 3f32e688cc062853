//! Exact arithmetic: `Z[q,t]`, the fraction field `Q(q,t)`, polynomials in
//! the Jack parameter, and sparse Laurent polynomials in `z`.

mod alpha;
mod gcd;
pub mod json;
mod qtpoly;
mod rational;
mod scalar;
mod zpoly;

pub use alpha::AlphaPoly;
pub use gcd::qt_gcd;
pub use qtpoly::{QtExponent, QtPoly};
pub use rational::QtRational;
pub use scalar::{FieldScalar, Scalar};
pub use zpoly::{Exponent, ScaledMonomial, ZPoly};

use crate::error::{Error, Result};

/// Floating evaluation of an exact polynomial at `(q, t, z)`.
pub fn eval_float(f: &ZPoly<QtRational>, q: f64, t: f64, z: &[f64]) -> Result<f64> {
    if z.len() != f.n() {
        return Err(Error::DimensionMismatch { expected: f.n(), found: z.len() });
    }
    let mut acc = 0.0;
    for (e, c) in f.terms() {
        let mono: f64 = z.iter().zip(e).map(|(x, &k)| x.powi(k)).product();
        acc += c.eval_f64(q, t)? * mono;
    }
    Ok(acc)
}

/// Specializes `q` and/or `t` to integers in every coefficient.
pub fn specialize(f: &ZPoly<QtRational>, q: Option<i64>, t: Option<i64>) -> Result<ZPoly<QtRational>> {
    f.try_map_coeffs(|c| c.specialize(q, t))
}

/// True when every coefficient lies in `Z[q,t]`.
pub fn is_integral(f: &ZPoly<QtRational>) -> bool {
    f.terms().all(|(_, c)| c.is_integral())
}

#[cfg(test)]
mod proptests;
