//! Exact computation of nonsymmetric and symmetric Macdonald polynomials
//! through Hecke-operator creation formulas, with checks of their
//! integrality in `t`-monomial bases, `(q,t)`-Kostka matrices, and the Jack
//! limit.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod hecke;
pub mod macdonald;
pub mod weights;

pub use algebra::{AlphaPoly, QtPoly, QtRational, ZPoly};
pub use error::{Error, Result};
pub use weights::Composition;

/// Laurent polynomials in `z` over `Q(q,t)`.
pub type QtLaurent = ZPoly<QtRational>;
/// Polynomials in `z` over `Q[alpha]`.
pub type JackPoly = ZPoly<AlphaPoly>;
/// Polynomials in `z` with `q,t` specialized to floats.
pub type FloatPoly = ZPoly<f64>;
pub type FloatPoly32 = ZPoly<f32>;
