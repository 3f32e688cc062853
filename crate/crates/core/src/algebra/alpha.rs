//! Polynomials in the Jack parameter `alpha` with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::scalar::Scalar;

/// Dense coefficients, lowest power of `alpha` first, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AlphaPoly {
    coeffs: Vec<BigRational>,
}

impl AlphaPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        AlphaPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|c| BigRational::from_integer(BigInt::from(*c))).collect())
    }

    pub fn alpha() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// `a * alpha + b`.
    pub fn linear(a: i64, b: i64) -> Self {
        Self::from_ints(&[b, a])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, alpha: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * alpha + c;
        }
        acc
    }

    pub fn eval_f64(&self, alpha: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * alpha + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Non-negative coefficients and integer values at `alpha = 0, 1, 2`.
    pub fn is_natural(&self) -> bool {
        self.has_nonnegative_coefficients()
            && (0..=2).all(|a| self.eval(&BigRational::from_integer(BigInt::from(a))).is_integer())
    }
}

impl fmt::Display for AlphaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => "a".to_string(),
                _ => format!("a^{k}"),
            };
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AlphaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlphaPoly({self})")
    }
}

fn combine(a: &AlphaPoly, b: &AlphaPoly, sign: bool) -> AlphaPoly {
    let len = a.coeffs.len().max(b.coeffs.len());
    AlphaPoly::new(
        (0..len)
            .map(|i| {
                let x = a.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
                match b.coeffs.get(i) {
                    Some(y) if sign => x - y,
                    Some(y) => x + y,
                    None => x,
                }
            })
            .collect(),
    )
}

fn product(a: &AlphaPoly, b: &AlphaPoly) -> AlphaPoly {
    if a.coeffs.is_empty() || b.coeffs.is_empty() {
        return AlphaPoly::default();
    }
    let mut out = vec![BigRational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        for (j, y) in b.coeffs.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    AlphaPoly::new(out)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<'a> $trait<&'a AlphaPoly> for &'a AlphaPoly {
            type Output = AlphaPoly;
            fn $method(self, rhs: &'a AlphaPoly) -> AlphaPoly {
                let f: fn(&AlphaPoly, &AlphaPoly) -> AlphaPoly = $body;
                f(self, rhs)
            }
        }
        impl $trait<AlphaPoly> for AlphaPoly {
            type Output = AlphaPoly;
            fn $method(self, rhs: AlphaPoly) -> AlphaPoly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a AlphaPoly> for AlphaPoly {
            type Output = AlphaPoly;
            fn $method(self, rhs: &'a AlphaPoly) -> AlphaPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| combine(a, b, false));
forward_binop!(Sub, sub, |a, b| combine(a, b, true));
forward_binop!(Mul, mul, product);

impl Neg for AlphaPoly {
    type Output = AlphaPoly;
    fn neg(self) -> AlphaPoly {
        AlphaPoly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Zero for AlphaPoly {
    fn zero() -> Self {
        AlphaPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for AlphaPoly {
    fn one() -> Self {
        Self::from_ints(&[1])
    }
}

impl Scalar for AlphaPoly {
    fn from_int(value: i64) -> Self {
        Self::from_ints(&[value])
    }
}
