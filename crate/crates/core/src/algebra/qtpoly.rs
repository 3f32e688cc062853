//! Sparse bivariate integer polynomials in `q` and `t`.
//!
//! Terms are kept sorted by the exponent pair `(a, b)` of `q^a t^b` in
//! increasing lexicographic order, `q` before `t`. The leading term is the
//! last one. Zero coefficients are never stored, so structural equality is
//! polynomial equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exponent pair `(a, b)` of the monomial `q^a t^b`.
pub type QtExponent = (u32, u32);

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QtPoly {
    terms: Vec<(QtExponent, BigInt)>,
}

impl QtPoly {
    pub fn zero() -> Self {
        QtPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(BigInt::from(c), 0, 0)
    }

    pub fn from_int(c: BigInt) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn q() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    /// `c * q^a * t^b`.
    pub fn monomial(c: BigInt, a: u32, b: u32) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            QtPoly { terms: vec![((a, b), c)] }
        }
    }

    /// `1 - q^a t^b`, the factor shape that runs through every normalization.
    pub fn one_minus(a: u32, b: u32) -> Self {
        Self::one() - Self::monomial(BigInt::one(), a, b)
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (QtExponent, BigInt)>,
    {
        let mut acc: BTreeMap<QtExponent, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *acc.entry(e).or_insert_with(BigInt::zero) += c;
        }
        QtPoly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn terms(&self) -> &[(QtExponent, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    /// Nonzero integer constant.
    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading(&self) -> Option<&(QtExponent, BigInt)> {
        self.terms.last()
    }

    pub fn coeff(&self, a: u32, b: u32) -> BigInt {
        match self.terms.binary_search_by(|(e, _)| e.cmp(&(a, b))) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn degree_q(&self) -> u32 {
        self.terms.iter().map(|((a, _), _)| *a).max().unwrap_or(0)
    }

    pub fn degree_t(&self) -> u32 {
        self.terms.iter().map(|((_, b), _)| *b).max().unwrap_or(0)
    }

    /// Largest monomial `q^a t^b` dividing every term.
    pub fn monomial_content(&self) -> QtExponent {
        let a = self.terms.iter().map(|((a, _), _)| *a).min().unwrap_or(0);
        let b = self.terms.iter().map(|((_, b), _)| *b).min().unwrap_or(0);
        (a, b)
    }

    /// Non-negative gcd of the integer coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QtPoly { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    /// Divides every coefficient by `c`, which must divide all of them.
    pub fn div_int_exact(&self, c: &BigInt) -> Self {
        QtPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, x)| {
                    debug_assert!((x % c).is_zero());
                    (*e, x / c)
                })
                .collect(),
        }
    }

    /// Multiplies by `q^a t^b`.
    pub fn shift(&self, a: u32, b: u32) -> Self {
        QtPoly { terms: self.terms.iter().map(|((x, y), c)| ((x + a, y + b), c.clone())).collect() }
    }

    /// Divides by `q^a t^b`; every term must be divisible.
    pub fn unshift(&self, a: u32, b: u32) -> Self {
        QtPoly { terms: self.terms.iter().map(|((x, y), c)| ((x - a, y - b), c.clone())).collect() }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient in `Z[q,t]`, computed by leading-term division.
    pub fn exact_div(&self, divisor: &QtPoly) -> Result<QtPoly> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if divisor.is_monomial() {
            let ((da, db), dc) = &divisor.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for ((a, b), c) in &self.terms {
                if a < da || b < db {
                    return Err(Error::NotDivisible);
                }
                let (quo, rem) = c.div_rem(dc);
                if !rem.is_zero() {
                    return Err(Error::NotDivisible);
                }
                out.push(((a - da, b - db), quo));
            }
            return Ok(QtPoly { terms: out });
        }
        let ((da, db), dc) = divisor.terms.last().unwrap().clone();
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some(((a, b), c)) = rem.terms.last().cloned() {
            if a < da || b < db {
                return Err(Error::NotDivisible);
            }
            let (quo, r) = c.div_rem(&dc);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            let step = divisor.shift(a - da, b - db).scale(&quo);
            quotient.push(((a - da, b - db), quo));
            rem = &rem - &step;
        }
        quotient.reverse();
        Ok(QtPoly { terms: quotient })
    }

    pub fn eval_f64(&self, q: f64, t: f64) -> f64 {
        self.terms
            .iter()
            .map(|((a, b), c)| c.to_f64().unwrap_or(f64::NAN) * q.powi(*a as i32) * t.powi(*b as i32))
            .sum()
    }

    /// Substitutes integer values for `q` and/or `t`.
    pub fn specialize(&self, q: Option<&BigInt>, t: Option<&BigInt>) -> QtPoly {
        QtPoly::from_terms(self.terms.iter().map(|((a, b), c)| {
            let mut coeff = c.clone();
            let mut e = (*a, *b);
            if let Some(qv) = q {
                coeff *= num_traits::pow(qv.clone(), *a as usize);
                e.0 = 0;
            }
            if let Some(tv) = t {
                coeff *= num_traits::pow(tv.clone(), *b as usize);
                e.1 = 0;
            }
            (e, coeff)
        }))
    }

    /// Sign of the leading coefficient.
    pub fn leading_sign(&self) -> Ordering {
        match self.terms.last() {
            None => Ordering::Equal,
            Some((_, c)) if c.is_negative() => Ordering::Less,
            Some(_) => Ordering::Greater,
        }
    }

    pub fn all_coefficients_nonnegative(&self) -> bool {
        self.terms.iter().all(|(_, c)| !c.is_negative())
    }

    fn merge(&self, other: &QtPoly, negate_other: bool) -> QtPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (x, y) = (&self.terms, &other.terms);
        while i < x.len() && j < y.len() {
            match x[i].0.cmp(&y[j].0) {
                Ordering::Less => {
                    out.push(x[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate_other { -&y[j].1 } else { y[j].1.clone() };
                    out.push((y[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { &x[i].1 - &y[j].1 } else { &x[i].1 + &y[j].1 };
                    if !c.is_zero() {
                        out.push((x[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&x[i..]);
        for (e, c) in &y[j..] {
            out.push((*e, if negate_other { -c } else { c.clone() }));
        }
        QtPoly { terms: out }
    }

    fn product(&self, other: &QtPoly) -> QtPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_monomial() {
            let ((a, b), c) = &self.terms[0];
            return other.shift(*a, *b).scale(c);
        }
        if other.is_monomial() {
            let ((a, b), c) = &other.terms[0];
            return self.shift(*a, *b).scale(c);
        }
        let mut acc: BTreeMap<QtExponent, BigInt> = BTreeMap::new();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                *acc.entry((a1 + a2, b1 + b2)).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        QtPoly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

impl fmt::Debug for QtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QtPoly({self})")
    }
}

fn fmt_monomial(a: u32, b: u32) -> String {
    let mut parts = Vec::new();
    match a {
        0 => {}
        1 => parts.push("q".to_string()),
        _ => parts.push(format!("q^{a}")),
    }
    match b {
        0 => {}
        1 => parts.push("t".to_string()),
        _ => parts.push(format!("t^{b}")),
    }
    parts.join("*")
}

impl fmt::Display for QtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((a, b), c)) in self.terms.iter().enumerate() {
            let mono = fmt_monomial(*a, *b);
            let abs = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
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

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<'a> $trait<&'a QtPoly> for &'a QtPoly {
            type Output = QtPoly;
            fn $method(self, rhs: &'a QtPoly) -> QtPoly {
                let f: fn(&QtPoly, &QtPoly) -> QtPoly = $body;
                f(self, rhs)
            }
        }
        impl $trait<QtPoly> for QtPoly {
            type Output = QtPoly;
            fn $method(self, rhs: QtPoly) -> QtPoly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a QtPoly> for QtPoly {
            type Output = QtPoly;
            fn $method(self, rhs: &'a QtPoly) -> QtPoly {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<QtPoly> for &'a QtPoly {
            type Output = QtPoly;
            fn $method(self, rhs: QtPoly) -> QtPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.merge(b, false));
forward_binop!(Sub, sub, |a, b| a.merge(b, true));
forward_binop!(Mul, mul, |a, b| a.product(b));

impl Neg for QtPoly {
    type Output = QtPoly;
    fn neg(self) -> QtPoly {
        QtPoly { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl Neg for &QtPoly {
    type Output = QtPoly;
    fn neg(self) -> QtPoly {
        self.clone().neg()
    }
}

impl Zero for QtPoly {
    fn zero() -> Self {
        QtPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for QtPoly {
    fn one() -> Self {
        QtPoly::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[((u32, u32), i64)]) -> QtPoly {
        QtPoly::from_terms(terms.iter().map(|(e, c)| (*e, BigInt::from(*c))))
    }

    #[test]
    fn difference_of_squares() {
        let a = QtPoly::one_minus(0, 1);
        let b = QtPoly::one() + QtPoly::t();
        assert_eq!(&a * &b, QtPoly::one_minus(0, 2));
    }

    #[test]
    fn additive_identity() {
        let a = p(&[((0, 0), 3), ((2, 1), -5)]);
        assert_eq!(&a + &QtPoly::zero(), a);
    }

    #[test]
    fn product_matches_hand_expansion_and_evaluation() {
        let lhs = QtPoly::one_minus(1, 1) * QtPoly::one_minus(0, 1);
        let expected = p(&[((0, 0), 1), ((0, 1), -1), ((1, 1), -1), ((1, 2), 1)]);
        assert_eq!(lhs, expected);
        // (1-6)(1-3) = 10 at (q,t) = (2,3)
        assert_eq!(expected.eval_f64(2.0, 3.0), 10.0);
        assert_eq!(expected.to_string(), "1 - t - q*t + q*t^2");
    }

    #[test]
    fn exact_division_examples() {
        let one_minus_t = QtPoly::one_minus(0, 1);
        assert_eq!(QtPoly::one_minus(0, 2).exact_div(&one_minus_t).unwrap(), QtPoly::one() + QtPoly::t());
        assert!(QtPoly::zero().exact_div(&one_minus_t).unwrap().is_zero());
        let prod = p(&[((0, 0), 1), ((0, 1), -1), ((1, 1), -1), ((1, 2), 1)]);
        assert_eq!(prod.exact_div(&one_minus_t).unwrap(), QtPoly::one_minus(1, 1));
    }

    #[test]
    fn exact_division_rejects_remainders() {
        let one_minus_t = QtPoly::one_minus(0, 1);
        assert_eq!(QtPoly::t().exact_div(&one_minus_t), Err(Error::NotDivisible));
        assert_eq!(QtPoly::constant(3).exact_div(&QtPoly::constant(2)), Err(Error::NotDivisible));
        assert_eq!(QtPoly::one().exact_div(&QtPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn specialization() {
        let prod = QtPoly::one_minus(1, 1) * QtPoly::one_minus(0, 1);
        let at_q0 = prod.specialize(Some(&BigInt::zero()), None);
        assert_eq!(at_q0, QtPoly::one_minus(0, 1));
    }
}
