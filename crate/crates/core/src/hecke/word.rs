//! Operator symbols, words of them, and the `A`-family of creation words.

use std::fmt;
use std::str::FromStr;

use crate::algebra::Scalar;
use crate::error::{Error, Result};

/// A single operator. Indices are 1-based.
#[derive(Clone, PartialEq, Debug)]
pub enum OperatorSymbol<C> {
    Reflection(usize),
    DividedDifference(usize),
    H(usize),
    Hbar(usize),
    HInv(usize),
    HbarInv(usize),
    Delta,
    DeltaInv,
    Phi,
    PhiPrime,
    PhiOne,
    Xi(usize),
    XiInv(usize),
    MulZ(usize),
    Scalar(C),
}

impl<C> OperatorSymbol<C> {
    fn check(&self, n: usize) -> Result<()> {
        use OperatorSymbol as S;
        let (i, max) = match self {
            S::Reflection(i) | S::DividedDifference(i) | S::H(i) | S::Hbar(i) | S::HInv(i) | S::HbarInv(i) => {
                (*i, n.saturating_sub(1))
            }
            S::Xi(i) | S::XiInv(i) | S::MulZ(i) => (*i, n),
            _ => return Ok(()),
        };
        if i == 0 || i > max {
            return Err(Error::IndexOutOfRange { index: i, max });
        }
        Ok(())
    }
}

impl<C: fmt::Display> fmt::Display for OperatorSymbol<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use OperatorSymbol as S;
        match self {
            S::Reflection(i) => write!(f, "s{i}"),
            S::DividedDifference(i) => write!(f, "N{i}"),
            S::H(i) => write!(f, "H{i}"),
            S::Hbar(i) => write!(f, "Hb{i}"),
            S::HInv(i) => write!(f, "Hi{i}"),
            S::HbarInv(i) => write!(f, "Hbi{i}"),
            S::Delta => write!(f, "D"),
            S::DeltaInv => write!(f, "Di"),
            S::Phi => write!(f, "Phi"),
            S::PhiPrime => write!(f, "Phip"),
            S::PhiOne => write!(f, "Phi1"),
            S::Xi(i) => write!(f, "xi{i}"),
            S::XiInv(i) => write!(f, "xii{i}"),
            S::MulZ(i) => write!(f, "z{i}"),
            S::Scalar(c) => write!(f, "[{c}]"),
        }
    }
}

impl<C> FromStr for OperatorSymbol<C> {
    type Err = Error;

    /// Parses every symbol except scalars.
    fn from_str(s: &str) -> Result<Self> {
        use OperatorSymbol as S;
        match s {
            "D" => return Ok(S::Delta),
            "Di" => return Ok(S::DeltaInv),
            "Phi" => return Ok(S::Phi),
            "Phip" => return Ok(S::PhiPrime),
            "Phi1" => return Ok(S::PhiOne),
            _ => {}
        }
        let split = s.find(|c: char| c.is_ascii_digit()).ok_or_else(|| Error::Parse(s.to_string()))?;
        let (head, digits) = s.split_at(split);
        let i: usize = digits.parse().map_err(|_| Error::Parse(s.to_string()))?;
        Ok(match head {
            "s" => S::Reflection(i),
            "N" => S::DividedDifference(i),
            "H" => S::H(i),
            "Hb" => S::Hbar(i),
            "Hi" => S::HInv(i),
            "Hbi" => S::HbarInv(i),
            "xi" => S::Xi(i),
            "xii" => S::XiInv(i),
            "z" => S::MulZ(i),
            _ => return Err(Error::Parse(s.to_string())),
        })
    }
}

/// A product of operators, written left to right and applied right to left.
#[derive(Clone, PartialEq, Debug)]
pub struct OperatorWord<C> {
    n: usize,
    symbols: Vec<OperatorSymbol<C>>,
}

impl<C> OperatorWord<C> {
    pub fn new(n: usize, symbols: Vec<OperatorSymbol<C>>) -> Result<Self> {
        for s in &symbols {
            s.check(n)?;
        }
        Ok(OperatorWord { n, symbols })
    }

    pub fn identity(n: usize) -> Self {
        OperatorWord { n, symbols: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn symbols(&self) -> &[OperatorSymbol<C>] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// `self * other`: `other` acts first.
    pub fn then_after(mut self, other: OperatorWord<C>) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        self.symbols.extend(other.symbols);
        Ok(self)
    }

    /// `T_{i_1} ... T_{i_k}` for a word of indices and a family constructor.
    pub fn from_indices(n: usize, indices: &[usize], make: fn(usize) -> OperatorSymbol<C>) -> Result<Self> {
        Self::new(n, indices.iter().map(|&i| make(i)).collect())
    }

    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let symbols = text.split_whitespace().map(str::parse).collect::<Result<Vec<_>>>()?;
        Self::new(n, symbols)
    }
}

impl<C: fmt::Display> fmt::Display for OperatorWord<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.symbols.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AVariant {
    A,
    Abar,
    APrime,
    AbarPrime,
}

/// `A_m = H_m ... H_{n-1} Phi`, `Abar_m = Hbar_m ... Hbar_{n-1} Phi`, and the
/// primed versions with `Phi'` in place of `Phi`.
pub fn a_family<C: Scalar>(n: usize, m: usize, variant: AVariant) -> Result<OperatorWord<C>> {
    if m == 0 || m > n {
        return Err(Error::IndexOutOfRange { index: m, max: n });
    }
    let (make, last): (fn(usize) -> OperatorSymbol<C>, _) = match variant {
        AVariant::A => (OperatorSymbol::H, OperatorSymbol::Phi),
        AVariant::Abar => (OperatorSymbol::Hbar, OperatorSymbol::Phi),
        AVariant::APrime => (OperatorSymbol::H, OperatorSymbol::PhiPrime),
        AVariant::AbarPrime => (OperatorSymbol::Hbar, OperatorSymbol::PhiPrime),
    };
    let mut symbols: Vec<_> = (m..n).map(make).collect();
    symbols.push(last);
    OperatorWord::new(n, symbols)
}
