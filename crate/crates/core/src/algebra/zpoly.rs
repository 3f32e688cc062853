//! Sparse Laurent polynomials in `z_1, ..., z_n` over a generic coefficient
//! ring.
//!
//! Exponent vectors live in `Z^n` and are ordered lexicographically; zero
//! coefficients are dropped on construction, so equality is syntactic.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::{FieldScalar, Scalar};
use crate::error::{Error, Result};

/// Exponent vector of a Laurent monomial.
pub type Exponent = Vec<i32>;

/// Image of one variable under a monomial substitution: `coeff * z^exponent`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaledMonomial<C> {
    pub coeff: C,
    pub exponent: Exponent,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZPoly<C> {
    n: usize,
    terms: BTreeMap<Exponent, C>,
}

impl<C: Scalar> ZPoly<C> {
    pub fn zero(n: usize) -> Self {
        ZPoly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, C::one())
    }

    pub fn constant(n: usize, c: C) -> Self {
        Self::monomial(vec![0; n], c)
    }

    pub fn monomial(exponent: Exponent, c: C) -> Self {
        let n = exponent.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        ZPoly { n, terms }
    }

    /// The variable `z_i`, 1-based.
    pub fn var(n: usize, i: usize) -> Result<Self> {
        check_index(i, n)?;
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Ok(Self::monomial(e, C::one()))
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, C)>,
    {
        let mut out = Self::zero(n);
        for (e, c) in terms {
            if e.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: e.len() });
            }
            out.add_term(e, c);
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &C)> + '_ {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Exponent, C)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, exponent: &[i32]) -> C {
        self.terms.get(exponent).cloned().unwrap_or_else(C::zero)
    }

    pub fn contains(&self, exponent: &[i32]) -> bool {
        self.terms.contains_key(exponent)
    }

    /// Accumulates `c * z^e` in place.
    pub fn add_term(&mut self, e: Exponent, c: C) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(e.len(), self.n);
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &ZPoly<C>, c: &C) {
        assert_eq!(self.n, other.n, "variable count mismatch");
        if c.is_zero() {
            return;
        }
        for (e, x) in &other.terms {
            self.add_term(e.clone(), x.clone() * c);
        }
    }

    fn check_dims(&self, other: &ZPoly<C>) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &ZPoly<C>) -> Result<Self> {
        self.check_dims(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &ZPoly<C>) -> Result<Self> {
        self.check_dims(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &ZPoly<C>) -> Result<Self> {
        self.check_dims(other)?;
        let mut out = Self::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.clone() * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        ZPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter_map(|(e, x)| {
                    let y = x.clone() * c;
                    (!y.is_zero()).then(|| (e.clone(), y))
                })
                .collect(),
        }
    }

    /// Multiplies by the Laurent monomial `z^shift`.
    pub fn mul_monomial(&self, shift: &[i32]) -> Result<Self> {
        if shift.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: shift.len() });
        }
        Ok(ZPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        })
    }

    /// Multiplies by `z_i` (1-based).
    pub fn mul_var(&self, i: usize) -> Result<Self> {
        check_index(i, self.n)?;
        Ok(self.shift_var(i - 1, 1))
    }

    pub(crate) fn shift_var(&self, idx: usize, by: i32) -> Self {
        ZPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e[idx] += by;
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Renames variables: `z_k` becomes `z_{images[k]}` (0-based images).
    pub fn permute_variables(&self, images: &[usize]) -> Self {
        debug_assert_eq!(images.len(), self.n);
        ZPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut out = vec![0; self.n];
                    for (k, &x) in e.iter().enumerate() {
                        out[images[k]] = x;
                    }
                    (out, c.clone())
                })
                .collect(),
        }
    }

    /// Swaps `z_a` and `z_b` (0-based).
    pub(crate) fn swap_vars(&self, a: usize, b: usize) -> Self {
        ZPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.swap(a, b);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    pub fn map_coeffs<D: Scalar, F: FnMut(&C) -> D>(&self, mut f: F) -> ZPoly<D> {
        let mut out = ZPoly::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    pub fn try_map_coeffs<D: Scalar, F: FnMut(&C) -> Result<D>>(&self, mut f: F) -> Result<ZPoly<D>> {
        let mut out = ZPoly::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c)?);
        }
        Ok(out)
    }

    pub fn total_degree(&self) -> Option<i32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<i32>());
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|x| x == d),
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }

    /// Invariant under every transposition of adjacent variables.
    pub fn is_symmetric(&self) -> bool {
        (0..self.n.saturating_sub(1)).all(|i| &self.swap_vars(i, i + 1) == self)
    }

    /// Evaluation at a point of the coefficient ring.
    pub fn eval(&self, z: &[C]) -> Result<C>
    where
        C: FieldScalar,
    {
        if z.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: z.len() });
        }
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in z.iter().zip(e) {
                term = term * &x.pow_i32(k).ok_or(Error::DivisionByZero)?;
            }
            acc = acc + term;
        }
        Ok(acc)
    }
}

impl<C: FieldScalar> ZPoly<C> {
    /// Replaces every variable by a scaled monomial.
    pub fn substitute(&self, images: &[ScaledMonomial<C>]) -> Result<Self> {
        if images.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: images.len() });
        }
        for img in images {
            if img.exponent.len() != self.n {
                return Err(Error::DimensionMismatch { expected: self.n, found: img.exponent.len() });
            }
        }
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let mut coeff = c.clone();
            let mut exp = vec![0; self.n];
            for (k, &power) in e.iter().enumerate() {
                if power == 0 {
                    continue;
                }
                let img = &images[k];
                coeff = coeff * &img.coeff.pow_i32(power).ok_or(Error::DivisionByZero)?;
                for (slot, &x) in exp.iter_mut().zip(&img.exponent) {
                    *slot += x * power;
                }
            }
            out.add_term(exp, coeff);
        }
        Ok(out)
    }
}

pub(crate) fn check_index(i: usize, max: usize) -> Result<()> {
    if i == 0 || i > max {
        Err(Error::IndexOutOfRange { index: i, max })
    } else {
        Ok(())
    }
}

impl<C: Scalar + fmt::Display> fmt::Display for ZPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(i, &x)| if x == 1 { format!("z{}", i + 1) } else { format!("z{}^{}", i + 1, x) })
                .collect();
            let cs = c.to_string();
            let simple = !cs.contains([' ', '/']);
            match (mono.is_empty(), cs.as_str()) {
                (true, _) => write!(f, "{cs}")?,
                (false, "1") => write!(f, "{}", mono.join("*"))?,
                (false, _) if simple => write!(f, "{cs}*{}", mono.join("*"))?,
                (false, _) => write!(f, "({cs})*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

impl<C: Scalar + fmt::Display> fmt::Debug for ZPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZPoly[n={}]({self})", self.n)
    }
}

impl<'a, C: Scalar> Add<&'a ZPoly<C>> for &'a ZPoly<C> {
    type Output = ZPoly<C>;
    fn add(self, rhs: &'a ZPoly<C>) -> ZPoly<C> {
        self.try_add(rhs).expect("variable count mismatch")
    }
}

impl<'a, C: Scalar> Sub<&'a ZPoly<C>> for &'a ZPoly<C> {
    type Output = ZPoly<C>;
    fn sub(self, rhs: &'a ZPoly<C>) -> ZPoly<C> {
        self.try_sub(rhs).expect("variable count mismatch")
    }
}

impl<'a, C: Scalar> Mul<&'a ZPoly<C>> for &'a ZPoly<C> {
    type Output = ZPoly<C>;
    fn mul(self, rhs: &'a ZPoly<C>) -> ZPoly<C> {
        self.try_mul(rhs).expect("variable count mismatch")
    }
}

impl<C: Scalar> Add for ZPoly<C> {
    type Output = ZPoly<C>;
    fn add(self, rhs: ZPoly<C>) -> ZPoly<C> {
        &self + &rhs
    }
}

impl<C: Scalar> Sub for ZPoly<C> {
    type Output = ZPoly<C>;
    fn sub(self, rhs: ZPoly<C>) -> ZPoly<C> {
        &self - &rhs
    }
}

impl<C: Scalar> Mul for ZPoly<C> {
    type Output = ZPoly<C>;
    fn mul(self, rhs: ZPoly<C>) -> ZPoly<C> {
        &self * &rhs
    }
}

impl<C: Scalar> Neg for ZPoly<C> {
    type Output = ZPoly<C>;
    fn neg(self) -> ZPoly<C> {
        ZPoly { n: self.n, terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl<C: Scalar> Neg for &ZPoly<C> {
    type Output = ZPoly<C>;
    fn neg(self) -> ZPoly<C> {
        self.clone().neg()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::QtRational;
    use num_rational::BigRational;
    use num_traits::One;

    type P = ZPoly<BigRational>;

    fn z(n: usize, i: usize) -> P {
        P::var(n, i).unwrap()
    }

    #[test]
    fn basic_products() {
        let prod = &z(2, 1) * &z(2, 2);
        assert_eq!(prod, P::monomial(vec![1, 1], BigRational::from_int(1)));
        let s = &z(2, 1) + &z(2, 2);
        let sq = &s * &s;
        assert_eq!(sq.coeff(&[1, 1]), BigRational::from_int(2));
        assert_eq!(sq.coeff(&[2, 0]), BigRational::from_int(1));
        assert_eq!(sq.len(), 3);
    }

    #[test]
    fn monomial_shift_gives_last_variable() {
        let one = P::one(3);
        assert_eq!(one.mul_monomial(&[0, 0, 1]).unwrap(), z(3, 3));
        assert!(one.mul_monomial(&[0, 1]).is_err());
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        assert_eq!(z(2, 1).try_add(&z(3, 1)), Err(Error::DimensionMismatch { expected: 2, found: 3 }));
        assert!(P::var(2, 3).is_err());
        assert!(P::from_terms(2, vec![(vec![1], BigRational::from_int(1))]).is_err());
    }

    #[test]
    fn substitution_examples() {
        type Q = ZPoly<QtRational>;
        let z1 = Q::var(2, 1).unwrap();
        let rotate = vec![
            ScaledMonomial { coeff: QtRational::qt_power(-1, 0), exponent: vec![0, 1] },
            ScaledMonomial { coeff: QtRational::one(), exponent: vec![1, 0] },
        ];
        assert_eq!(z1.substitute(&rotate).unwrap(), Q::monomial(vec![0, 1], QtRational::qt_power(-1, 0)));
        let swap = vec![
            ScaledMonomial { coeff: QtRational::one(), exponent: vec![0, 1] },
            ScaledMonomial { coeff: QtRational::one(), exponent: vec![1, 0] },
        ];
        let z2 = Q::var(2, 2).unwrap();
        assert_eq!(z2.substitute(&swap).unwrap(), z1);
        let z1z2 = &z1 * &z2;
        assert_eq!(z1z2.substitute(&swap).unwrap(), z1z2);
    }

    #[test]
    fn symmetric_detection() {
        let s = &z(3, 1) + &(&z(3, 2) + &z(3, 3));
        assert!(s.is_symmetric());
        assert!(!z(3, 1).is_symmetric());
    }
}
