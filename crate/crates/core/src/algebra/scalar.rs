//! Coefficient traits shared by every polynomial type in the crate.
//!
//! `ZPoly<C>` and the operator calculus are written against [`Scalar`]
//! (a commutative ring) and [`FieldScalar`] (a field, needed wherever an
//! inverse such as `q^{-1}` or `t^{-1}` appears).

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A commutative ring usable as a polynomial coefficient.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn from_int(value: i64) -> Self;

    /// Integer power; negative exponents are only meaningful for fields.
    fn pow_u32(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }
}

/// A coefficient field.
pub trait FieldScalar: Scalar + for<'a> Div<&'a Self, Output = Self> {
    fn inverse(&self) -> Option<Self>;

    fn pow_i32(&self, exp: i32) -> Option<Self> {
        if exp >= 0 {
            Some(self.pow_u32(exp as u32))
        } else {
            self.inverse().map(|inv| inv.pow_u32(exp.unsigned_abs()))
        }
    }
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn from_int(value: i64) -> Self {
                value as $t
            }
        }

        impl FieldScalar for $t {
            fn inverse(&self) -> Option<Self> {
                if *self == 0.0 {
                    None
                } else {
                    Some(1.0 / *self)
                }
            }
        }
    };
}

float_scalar!(f32);
float_scalar!(f64);

impl Scalar for BigRational {
    fn from_int(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }
}

impl FieldScalar for BigRational {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}
