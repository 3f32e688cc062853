//! The coefficient field `Q(q,t)` as reduced fractions of `Z[q,t]`.
//!
//! Canonical form: numerator and denominator coprime over `Q[q,t]`, joint
//! integer content one, the first denominator term (in the global order) with
//! positive coefficient, and
//! zero stored as `0/1`. Every constructor and every arithmetic operation
//! returns canonical values, so `==` is field equality.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::gcd::qt_gcd;
use super::qtpoly::QtPoly;
use super::scalar::{FieldScalar, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QtRational {
    num: QtPoly,
    den: QtPoly,
}

impl QtRational {
    pub fn new(num: QtPoly, den: QtPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn from_poly(p: QtPoly) -> Self {
        QtRational { num: p, den: QtPoly::one() }
    }

    pub fn from_i64(c: i64) -> Self {
        Self::from_poly(QtPoly::constant(c))
    }

    pub fn q() -> Self {
        Self::from_poly(QtPoly::q())
    }

    pub fn t() -> Self {
        Self::from_poly(QtPoly::t())
    }

    /// `q^a t^b` for arbitrary integer exponents.
    pub fn qt_power(a: i32, b: i32) -> Self {
        let num = QtPoly::monomial(BigInt::one(), a.max(0) as u32, b.max(0) as u32);
        let den = QtPoly::monomial(BigInt::one(), (-a).max(0) as u32, (-b).max(0) as u32);
        QtRational { num, den }
    }

    pub fn numerator(&self) -> &QtPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QtPoly {
        &self.den
    }

    /// True when the reduced denominator is a unit of `Z[q,t]`.
    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&QtPoly> {
        self.is_integral().then_some(&self.num)
    }

    pub fn recip(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (num, den) = Self::fix_units(self.den.clone(), self.num.clone());
        Ok(QtRational { num, den })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn eval_f64(&self, q: f64, t: f64) -> Result<f64> {
        let d = self.den.eval_f64(q, t);
        if d == 0.0 {
            return Err(Error::PoleAtSpecialization);
        }
        Ok(self.num.eval_f64(q, t) / d)
    }

    /// Substitutes integer values for `q` and/or `t`.
    pub fn specialize(&self, q: Option<i64>, t: Option<i64>) -> Result<Self> {
        let qb = q.map(BigInt::from);
        let tb = t.map(BigInt::from);
        let den = self.den.specialize(qb.as_ref(), tb.as_ref());
        if den.is_zero() {
            return Err(Error::PoleAtSpecialization);
        }
        Ok(Self::reduce(self.num.specialize(qb.as_ref(), tb.as_ref()), den))
    }

    fn fix_units(num: QtPoly, den: QtPoly) -> (QtPoly, QtPoly) {
        if num.is_zero() {
            return (QtPoly::zero(), QtPoly::one());
        }
        let mut g = num.content().gcd(&den.content());
        if den.terms()[0].1.is_negative() {
            g = -g;
        }
        if g.is_one() {
            (num, den)
        } else {
            (num.div_int_exact(&g), den.div_int_exact(&g))
        }
    }

    fn reduce(num: QtPoly, den: QtPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else if den.is_monomial() || num.is_monomial() {
            let (na, nb) = num.monomial_content();
            let (da, db) = den.monomial_content();
            let (a, b) = (na.min(da), nb.min(db));
            (num.unshift(a, b), den.unshift(a, b))
        } else {
            let g = qt_gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.exact_div(&g).expect("gcd divides numerator"), den.exact_div(&g).expect("gcd divides denominator"))
            }
        };
        let (num, den) = Self::fix_units(num, den);
        QtRational { num, den }
    }

    fn sum(&self, rhs: &Self, negate: bool) -> Self {
        let c = if negate { -&rhs.num } else { rhs.num.clone() };
        if self.den.is_one() && rhs.den.is_one() {
            return QtRational { num: &self.num + &c, den: QtPoly::one() };
        }
        if self.den == rhs.den {
            return Self::reduce(&self.num + &c, self.den.clone());
        }
        if self.den.is_one() {
            let (num, den) = Self::fix_units(&self.num * &rhs.den + c, rhs.den.clone());
            return QtRational { num, den };
        }
        if rhs.den.is_one() {
            let (num, den) = Self::fix_units(&self.num + &c * &self.den, self.den.clone());
            return QtRational { num, den };
        }
        let g = qt_gcd(&self.den, &rhs.den);
        if g.is_one() {
            let num = &self.num * &rhs.den + &c * &self.den;
            let (num, den) = Self::fix_units(num, &self.den * &rhs.den);
            return QtRational { num, den };
        }
        let b = self.den.exact_div(&g).expect("gcd divides");
        let d = rhs.den.exact_div(&g).expect("gcd divides");
        let num = &self.num * &d + &c * &b;
        if num.is_zero() {
            return Self::zero();
        }
        let den = &(&b * &d) * &g;
        let g2 = qt_gcd(&num, &g);
        let (num, den) = if g2.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g2).expect("gcd divides"), den.exact_div(&g2).expect("gcd divides"))
        };
        let (num, den) = Self::fix_units(num, den);
        QtRational { num, den }
    }

    fn product(&self, rhs: &Self) -> Self {
        if self.num.is_zero() || rhs.num.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QtRational { num: &self.num * &rhs.num, den: QtPoly::one() };
        }
        let cancel = |n: &QtPoly, d: &QtPoly| -> (QtPoly, QtPoly) {
            if d.is_constant() || n.is_constant() {
                return (n.clone(), d.clone());
            }
            let g = qt_gcd(n, d);
            if g.is_one() {
                (n.clone(), d.clone())
            } else {
                (n.exact_div(&g).expect("gcd divides"), d.exact_div(&g).expect("gcd divides"))
            }
        };
        let (a, d) = cancel(&self.num, &rhs.den);
        let (c, b) = cancel(&rhs.num, &self.den);
        let (num, den) = Self::fix_units(&a * &c, &b * &d);
        QtRational { num, den }
    }
}

impl fmt::Display for QtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            let wrap = |p: &QtPoly| {
                if p.len() > 1 {
                    format!("({p})")
                } else {
                    p.to_string()
                }
            };
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

impl fmt::Debug for QtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QtRational({self})")
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<'a> $trait<&'a QtRational> for &'a QtRational {
            type Output = QtRational;
            fn $method(self, rhs: &'a QtRational) -> QtRational {
                let f: fn(&QtRational, &QtRational) -> QtRational = $body;
                f(self, rhs)
            }
        }
        impl $trait<QtRational> for QtRational {
            type Output = QtRational;
            fn $method(self, rhs: QtRational) -> QtRational {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a QtRational> for QtRational {
            type Output = QtRational;
            fn $method(self, rhs: &'a QtRational) -> QtRational {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<QtRational> for &'a QtRational {
            type Output = QtRational;
            fn $method(self, rhs: QtRational) -> QtRational {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.sum(b, false));
forward_binop!(Sub, sub, |a, b| a.sum(b, true));
forward_binop!(Mul, mul, |a, b| a.product(b));
// Panics on division by zero, like the primitive numeric types.
forward_binop!(Div, div, |a, b| a.checked_div(b).expect("division by zero in Q(q,t)"));

impl Neg for QtRational {
    type Output = QtRational;
    fn neg(self) -> QtRational {
        QtRational { num: -self.num, den: self.den }
    }
}

impl Neg for &QtRational {
    type Output = QtRational;
    fn neg(self) -> QtRational {
        QtRational { num: -&self.num, den: self.den.clone() }
    }
}

impl Zero for QtRational {
    fn zero() -> Self {
        QtRational { num: QtPoly::zero(), den: QtPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for QtRational {
    fn one() -> Self {
        Self::from_poly(QtPoly::one())
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl From<QtPoly> for QtRational {
    fn from(p: QtPoly) -> Self {
        Self::from_poly(p)
    }
}

impl Scalar for QtRational {
    fn from_int(value: i64) -> Self {
        Self::from_i64(value)
    }
}

impl FieldScalar for QtRational {
    fn inverse(&self) -> Option<Self> {
        self.recip().ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frac(n: QtPoly, d: QtPoly) -> QtRational {
        QtRational::new(n, d).unwrap()
    }

    #[test]
    fn reciprocal_product_is_one() {
        let a = frac(QtPoly::one_minus(0, 1), QtPoly::one_minus(1, 1));
        let b = frac(QtPoly::one_minus(1, 1), QtPoly::one_minus(0, 1));
        assert!((&a * &b).is_one());
        assert_eq!(&QtRational::zero() + &a, a);
    }

    #[test]
    fn integer_denominator_normalization() {
        let x = QtRational::one() - QtRational::q() * QtRational::t();
        assert_eq!(x.numerator(), &QtPoly::one_minus(1, 1));
        assert!(x.is_integral());
        let y = frac(QtPoly::constant(-4), QtPoly::constant(6));
        assert_eq!(y.numerator(), &QtPoly::constant(-2));
        assert_eq!(y.denominator(), &QtPoly::constant(3));
        assert!(!y.is_integral());
    }

    #[test]
    fn cancellation_of_common_factors() {
        let n = QtPoly::one_minus(0, 2);
        let d = QtPoly::one_minus(0, 1) * QtPoly::one_minus(1, 1);
        let x = frac(n, d);
        assert_eq!(x.numerator(), &(QtPoly::one() + QtPoly::t()));
        assert_eq!(x.denominator(), &QtPoly::one_minus(1, 1));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(QtRational::new(QtPoly::one(), QtPoly::zero()), Err(Error::DivisionByZero));
        assert_eq!(QtRational::one().checked_div(&QtRational::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn laurent_monomials() {
        let x = QtRational::qt_power(-1, 2);
        assert_eq!(x.to_string(), "t^2/q");
        assert!((&x * &QtRational::qt_power(1, -2)).is_one());
    }

    #[test]
    fn evaluation_and_poles() {
        let x = frac(QtPoly::one_minus(0, 1), QtPoly::one_minus(1, 1));
        assert_eq!(x.eval_f64(0.0, 0.0).unwrap(), 1.0);
        assert_eq!(x.eval_f64(1.0, 1.0), Err(Error::PoleAtSpecialization));
        assert_eq!(x.specialize(Some(0), None).unwrap(), QtRational::from_poly(QtPoly::one_minus(0, 1)));
    }
}
