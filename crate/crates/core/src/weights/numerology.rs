//! `t`-numbers attached to multiplicities of a weight.

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::QtPoly;

use super::Composition;

/// `phi_k(t) = (1 - t)(1 - t^2)...(1 - t^k)`.
pub fn phi(k: usize) -> QtPoly {
    (1..=k as u32).fold(QtPoly::one(), |acc, i| acc * QtPoly::one_minus(0, i))
}

/// `[k]! = phi_k(t) / (1 - t)^k = prod_{i <= k} (1 + t + ... + t^{i-1})`.
pub fn t_factorial(k: usize) -> QtPoly {
    (1..=k as u32).fold(QtPoly::one(), |acc, i| acc * QtPoly::from_terms((0..i).map(|b| ((0, b), BigInt::one()))))
}

/// `b_mu(t) = prod_{i >= 1} phi_{m_i(mu)}(t)`; zero parts do not contribute.
pub fn b_factor(mu: &Composition) -> QtPoly {
    mu.multiplicities().iter().skip(1).fold(QtPoly::one(), |acc, &m| acc * phi(m))
}

/// `prod_{i >= 1} m_i(mu)!`, the `t -> 1` shadow of `b_mu / (1 - t)^{l}`.
pub fn u_factor(mu: &Composition) -> BigInt {
    mu.multiplicities().iter().skip(1).fold(BigInt::one(), |acc, &m| acc * (1..=m as u64).product::<u64>())
}
