//! Coefficient vectors of a polynomial in one of the named bases.

use std::cmp::Reverse;
use std::fmt;

use crate::algebra::{AlphaPoly, QtRational, Scalar, ZPoly};
use crate::error::{Error, Result};
use crate::weights::{linear_key, Composition};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Basis {
    Monomial,
    TMonomial,
    /// `frak m^{(m)}`.
    TMonomialPartial(usize),
    /// `b_{mu''} frak m^{(m)}`.
    TMonomialAugmented(usize),
    MonomialSymmetric,
    HallLittlewoodP,
    HallLittlewoodQ,
    TSchur,
    MacdonaldJ,
    /// `u_{mu''} m^{(m)}`, the `t -> 1` shadow of the augmented basis.
    LimitMonomialAugmented(usize),
}

impl Basis {
    pub fn tag(&self) -> &'static str {
        match self {
            Basis::Monomial => "monomial",
            Basis::TMonomial => "t_monomial",
            Basis::TMonomialPartial(_) => "t_monomial_partial",
            Basis::TMonomialAugmented(_) => "t_monomial_augmented",
            Basis::MonomialSymmetric => "monomial_symmetric",
            Basis::HallLittlewoodP => "hall_littlewood_P",
            Basis::HallLittlewoodQ => "hall_littlewood_Q",
            Basis::TSchur => "t_schur",
            Basis::MacdonaldJ => "macdonald_J",
            Basis::LimitMonomialAugmented(_) => "limit_monomial_augmented",
        }
    }

    /// The partial-symmetry level, for the bases that have one.
    pub fn level(&self) -> Option<usize> {
        match self {
            Basis::TMonomialPartial(m) | Basis::TMonomialAugmented(m) | Basis::LimitMonomialAugmented(m) => Some(*m),
            _ => None,
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.level() {
            Some(m) => write!(f, "{}({m})", self.tag()),
            None => write!(f, "{}", self.tag()),
        }
    }
}

/// Nonzero coefficients keyed by basis label, largest label first.
#[derive(Clone, PartialEq, Debug)]
pub struct BasisExpansion<C = QtRational> {
    pub basis: Basis,
    pub terms: Vec<(Composition, C)>,
}

impl<C: Scalar> BasisExpansion<C> {
    /// Drops zero coefficients and sorts labels from largest to smallest.
    pub fn new(basis: Basis, terms: impl IntoIterator<Item = (Composition, C)>) -> Self {
        let mut terms: Vec<_> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by_cached_key(|(mu, _)| Reverse(linear_key(mu)));
        BasisExpansion { basis, terms }
    }

    pub fn coeff(&self, label: &Composition) -> C {
        self.terms.iter().find(|(mu, _)| mu == label).map_or_else(C::zero, |(_, c)| c.clone())
    }

    pub fn labels(&self) -> impl Iterator<Item = &Composition> {
        self.terms.iter().map(|(mu, _)| mu)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficients of `f` in the monomial basis; fails on negative exponents.
    pub fn from_monomials(f: &ZPoly<C>) -> Result<Self> {
        let mut terms = Vec::with_capacity(f.len());
        for (e, c) in f.terms() {
            let mu = Composition::from_exponent(e).ok_or(Error::NotInSpan { residual_terms: 1 })?;
            terms.push((mu, c.clone()));
        }
        Ok(Self::new(Basis::Monomial, terms))
    }

    /// Inverse of [`BasisExpansion::from_monomials`].
    pub fn to_monomials(&self, n: usize) -> Result<ZPoly<C>> {
        if self.basis != Basis::Monomial {
            return Err(Error::PreconditionViolated(format!("{} is not the monomial basis", self.basis)));
        }
        ZPoly::from_terms(n, self.terms.iter().map(|(mu, c)| (mu.exponent(), c.clone())))
    }
}

impl BasisExpansion<QtRational> {
    /// Per coefficient: is the reduced denominator a unit of `Z[q,t]`?
    pub fn integral_flags(&self) -> Vec<bool> {
        self.terms.iter().map(|(_, c)| c.is_integral()).collect()
    }

    pub fn is_integral(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_integral())
    }
}

impl BasisExpansion<AlphaPoly> {
    /// Per coefficient: does it lie in `N[alpha]`?
    pub fn natural_flags(&self) -> Vec<bool> {
        self.terms.iter().map(|(_, c)| c.is_natural()).collect()
    }

    pub fn is_natural(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_natural())
    }
}
