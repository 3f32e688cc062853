//! Spectral vectors: the joint eigenvalues `q^{lambda_i} t^{-k_i}`.

use crate::algebra::{FieldScalar, QtRational};
use crate::error::{Error, Result};

use super::Composition;

/// Pairs `(lambda_i, -k_i)` standing for `q^{lambda_i} t^{-k_i}`, where
/// `k_i = #{j < i : lambda_j >= lambda_i} + #{j > i : lambda_j > lambda_i}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SpectralVector {
    pub exponents: Vec<(u32, i32)>,
}

impl SpectralVector {
    pub fn value(&self, i: usize) -> QtRational {
        let (a, b) = self.exponents[i - 1];
        QtRational::qt_power(a as i32, b)
    }

    pub fn values(&self) -> Vec<QtRational> {
        (1..=self.exponents.len()).map(|i| self.value(i)).collect()
    }

    /// The `i`-th entry (1-based) realized in a coefficient field.
    pub fn realize<C: FieldScalar>(&self, i: usize, q: &C, t: &C) -> Result<C> {
        let (a, b) = self.exponents[i - 1];
        let tp = t.pow_i32(b).ok_or(Error::DivisionByZero)?;
        Ok(q.pow_u32(a) * &tp)
    }
}

pub fn spectral_vector(lambda: &Composition) -> SpectralVector {
    let v = lambda.parts();
    let exponents = v
        .iter()
        .enumerate()
        .map(|(i, &li)| {
            let k = v[..i].iter().filter(|&&lj| lj >= li).count() + v[i + 1..].iter().filter(|&&lj| lj > li).count();
            (li, -(k as i32))
        })
        .collect();
    SpectralVector { exponents }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::compositions;
    use std::collections::HashSet;

    fn c(v: &[u32]) -> Composition {
        Composition::new(v.to_vec())
    }

    #[test]
    fn examples() {
        let s = spectral_vector(&c(&[1, 0]));
        assert_eq!(s.values(), vec![QtRational::q(), QtRational::qt_power(0, -1)]);
        let s = spectral_vector(&c(&[0, 1]));
        assert_eq!(s.values(), vec![QtRational::qt_power(0, -1), QtRational::q()]);
        let s = spectral_vector(&c(&[0, 0, 0]));
        assert_eq!(s.exponents, vec![(0, 0), (0, -1), (0, -2)]);
        assert_eq!(s.realize(3, &2.0f64, &0.5f64).unwrap(), 4.0);
    }

    #[test]
    fn injective_on_small_weights() {
        for n in 1..=4 {
            let mut seen = HashSet::new();
            for d in 0..=5 {
                for lambda in compositions(n, d) {
                    assert!(seen.insert(spectral_vector(&lambda).values()), "{lambda}");
                }
            }
        }
    }
}
