//! Operators on Laurent polynomials: reflections, divided differences, the
//! Hecke generators and their inverses, the cyclic shift `Delta`, the
//! creation operators `Phi`, `Phi'`, `Phi_1`, and the Cherednik operators.
//!
//! Everything acts term by term on sparse polynomials. The `q,t`-dependent
//! operators live on [`Hecke`], which carries `q`, `t` and their inverses in
//! whatever coefficient ring is in use.

mod word;

pub use word::{a_family, AVariant, OperatorSymbol, OperatorWord};

use crate::algebra::{FieldScalar, QtRational, Scalar, ZPoly};
use crate::error::{Error, Result};
use crate::weights::{spectral_vector, Composition};

use crate::algebra::Exponent;

fn check_n<C: Scalar>(f: &ZPoly<C>, n: usize) -> Result<()> {
    if f.n() != n {
        return Err(Error::DimensionMismatch { expected: n, found: f.n() });
    }
    Ok(())
}

fn check_reflection(i: usize, n: usize) -> Result<()> {
    if i == 0 || i + 1 > n {
        return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
    }
    Ok(())
}

/// `s_i`: swaps `z_i` and `z_{i+1}`.
pub fn reflect<C: Scalar>(f: &ZPoly<C>, i: usize) -> Result<ZPoly<C>> {
    check_reflection(i, f.n())?;
    Ok(f.swap_vars(i - 1, i))
}

/// Adds `sign * c * N_i(z^e)` to `acc`, with `i0` the 0-based index of `z_i`.
///
/// For `a = e_i > b = e_{i+1}`:
/// `N_i(z_i^a z_{i+1}^b) = (z_i z_{i+1})^b (z_i^{a-b} - z_{i+1}^{a-b}) / (z_i - z_{i+1})`,
/// a geometric sum; the case `a < b` is its negative with `a, b` swapped.
fn divided_difference_into<C: Scalar>(acc: &mut ZPoly<C>, e: &Exponent, c: &C, i0: usize) {
    let (a, b) = (e[i0], e[i0 + 1]);
    if a == b {
        return;
    }
    let (lo, d, coeff) = if a > b { (b, a - b, c.clone()) } else { (a, b - a, -c.clone()) };
    for k in 0..d {
        let mut x = e.clone();
        x[i0] = lo + k;
        x[i0 + 1] = lo + d - 1 - k;
        acc.add_term(x, coeff.clone());
    }
}

/// `N_i = (z_i - z_{i+1})^{-1} (1 - s_i)`. The quotient is computed in closed
/// form monomial by monomial, so it is exact for Laurent input as well.
pub fn divided_difference<C: Scalar>(f: &ZPoly<C>, i: usize) -> Result<ZPoly<C>> {
    check_reflection(i, f.n())?;
    let mut out = ZPoly::zero(f.n());
    for (e, c) in f.terms() {
        divided_difference_into(&mut out, e, c, i - 1);
    }
    Ok(out)
}

/// Multiplication by `z_i` (1-based).
pub fn mul_z<C: Scalar>(f: &ZPoly<C>, i: usize) -> Result<ZPoly<C>> {
    f.mul_var(i)
}

/// `Phi_1 = z_n s_{n-1} ... s_1`, the `q,t`-free creation operator.
pub fn phi_one<C: Scalar>(f: &ZPoly<C>) -> Result<ZPoly<C>> {
    let n = f.n();
    if n == 0 {
        return Err(Error::IndexOutOfRange { index: 0, max: 0 });
    }
    // s_{n-1} ... s_1 sends z_1 -> z_n and z_k -> z_{k-1}.
    let images: Vec<usize> = (0..n).map(|k| if k == 0 { n - 1 } else { k - 1 }).collect();
    Ok(f.permute_variables(&images).shift_var(n - 1, 1))
}

/// The four Hecke generators at index `i`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HeckeVariant {
    H,
    Hbar,
    HInv,
    HbarInv,
}

/// Parameters `q, t` (with inverses) in a coefficient ring, plus the number
/// of variables.
#[derive(Clone, Debug)]
pub struct Hecke<C> {
    n: usize,
    q: C,
    t: C,
    q_inv: C,
    t_inv: C,
    one_minus_t: C,
}

impl Hecke<QtRational> {
    /// Generic parameters in `Q(q,t)`.
    pub fn generic(n: usize) -> Self {
        Hecke::with_inverses(
            n,
            QtRational::q(),
            QtRational::t(),
            QtRational::qt_power(-1, 0),
            QtRational::qt_power(0, -1),
        )
    }
}

impl<C: FieldScalar> Hecke<C> {
    /// Parameters specialized to field elements; both must be invertible.
    pub fn specialized(n: usize, q: C, t: C) -> Result<Self> {
        let q_inv = q.inverse().ok_or(Error::DivisionByZero)?;
        let t_inv = t.inverse().ok_or(Error::DivisionByZero)?;
        Ok(Hecke::with_inverses(n, q, t, q_inv, t_inv))
    }
}

impl<C: Scalar> Hecke<C> {
    pub fn with_inverses(n: usize, q: C, t: C, q_inv: C, t_inv: C) -> Self {
        let one_minus_t = C::one() - t.clone();
        Hecke { n, q, t, q_inv, t_inv, one_minus_t }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> &C {
        &self.q
    }

    pub fn t(&self) -> &C {
        &self.t
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(&self, k: i32) -> C {
        if k >= 0 {
            self.q.pow_u32(k as u32)
        } else {
            self.q_inv.pow_u32(k.unsigned_abs())
        }
    }

    /// `t^k` for any integer `k`.
    pub fn t_pow(&self, k: i32) -> C {
        if k >= 0 {
            self.t.pow_u32(k as u32)
        } else {
            self.t_inv.pow_u32(k.unsigned_abs())
        }
    }

    fn check(&self, f: &ZPoly<C>) -> Result<()> {
        check_n(f, self.n)
    }

    pub fn reflect(&self, f: &ZPoly<C>, i: usize) -> Result<ZPoly<C>> {
        self.check(f)?;
        reflect(f, i)
    }

    pub fn divided_difference(&self, f: &ZPoly<C>, i: usize) -> Result<ZPoly<C>> {
        self.check(f)?;
        divided_difference(f, i)
    }

    /// `H_i = s_i - (1 - t) N_i z_i`.
    pub fn h(&self, f: &ZPoly<C>, i: usize) -> Result<ZPoly<C>> {
        self.check(f)?;
        check_reflection(i, self.n)?;
        let i0 = i - 1;
        let mut nd = ZPoly::zero(self.n);
        for (e, c) in f.terms() {
            let mut x = e.clone();
            x[i0] += 1;
            divided_difference_into(&mut nd, &x, c, i0);
        }
        let mut out = f.swap_vars(i0, i0 + 1);
        out.add_scaled(&nd, &-self.one_minus_t.clone());
        Ok(out)
    }

    /// `Hbar_i = s_i - (1 - t) z_{i+1} N_i`.
    pub fn hbar(&self, f: &ZPoly<C>, i: usize) -> Result<ZPoly<C>> {
        self.check(f)?;
        check_reflection(i, self.n)?;
        let i0 = i - 1;
        let mut nd = ZPoly::zero(self.n);
        for (e, c) in f.terms() {
            divided_difference_into(&mut nd, e, c, i0);
        }
        let mut out = f.swap_vars(i0, i0 + 1);
        out.add_scaled(&nd.shift_var(i0 + 1, 1), &-self.one_minus_t.clone());
        Ok(out)
    }

    /// `H_i^{-1} = t^{-1} Hbar_i`, from `H_i Hbar_i = t`.
    pub fn h_inv(&self, f: &ZPoly<C>, i: usize) -> Result<ZPoly<C>> {
        Ok(self.hbar(f, i)?.scale(&self.t_inv))
    }

    /// `Hbar_i^{-1} = t^{-1} H_i`.
    pub fn hbar_inv(&self, f: &ZPoly<C>, i: usize) -> Result<ZPoly<C>> {
        Ok(self.h(f, i)?.scale(&self.t_inv))
    }

    pub fn hecke(&self, f: &ZPoly<C>, i: usize, variant: HeckeVariant) -> Result<ZPoly<C>> {
        match variant {
            HeckeVariant::H => self.h(f, i),
            HeckeVariant::Hbar => self.hbar(f, i),
            HeckeVariant::HInv => self.h_inv(f, i),
            HeckeVariant::HbarInv => self.hbar_inv(f, i),
        }
    }

    /// `Delta f(z_1, ..., z_n) = f(q^{-1} z_n, z_1, ..., z_{n-1})`, i.e.
    /// `z^mu -> q^{-mu_1} z^{(mu_2, ..., mu_n, mu_1)}`.
    pub fn delta(&self, f: &ZPoly<C>) -> Result<ZPoly<C>> {
        self.check(f)?;
        let mut out = ZPoly::zero(self.n);
        for (e, c) in f.terms() {
            let mut x = e.clone();
            x.rotate_left(1);
            out.add_term(x, c.clone() * &self.q_pow(-e[0]));
        }
        Ok(out)
    }

    /// `Delta^{-1} f(z_1, ..., z_n) = f(z_2, ..., z_n, q z_1)`.
    pub fn delta_inv(&self, f: &ZPoly<C>) -> Result<ZPoly<C>> {
        self.check(f)?;
        let mut out = ZPoly::zero(self.n);
        for (e, c) in f.terms() {
            let mut x = e.clone();
            x.rotate_right(1);
            out.add_term(x, c.clone() * &self.q_pow(e[self.n - 1]));
        }
        Ok(out)
    }

    /// `Phi = z_n Delta`.
    pub fn phi(&self, f: &ZPoly<C>) -> Result<ZPoly<C>> {
        Ok(self.delta(f)?.shift_var(self.n - 1, 1))
    }

    /// `Phi' = t^{1-n} z_n H_{n-1} ... H_1`.
    pub fn phi_prime(&self, f: &ZPoly<C>) -> Result<ZPoly<C>> {
        let mut g = f.clone();
        for i in 1..self.n {
            g = self.h(&g, i)?;
        }
        self.check(&g)?;
        Ok(g.shift_var(self.n - 1, 1).scale(&self.t_pow(1 - self.n as i32)))
    }

    pub fn phi_one(&self, f: &ZPoly<C>) -> Result<ZPoly<C>> {
        self.check(f)?;
        phi_one(f)
    }

    /// `xi_i^{-1} = Hbar_i ... Hbar_{n-1} Delta H_1 ... H_{i-1}`.
    pub fn xi_inv(&self, f: &ZPoly<C>, i: usize) -> Result<ZPoly<C>> {
        self.check_xi(i)?;
        let mut g = f.clone();
        for j in (1..i).rev() {
            g = self.h(&g, j)?;
        }
        g = self.delta(&g)?;
        for j in (i..self.n).rev() {
            g = self.hbar(&g, j)?;
        }
        Ok(g)
    }

    /// `xi_i = H_{i-1}^{-1} ... H_1^{-1} Delta^{-1} Hbar_{n-1}^{-1} ... Hbar_i^{-1}`.
    pub fn xi(&self, f: &ZPoly<C>, i: usize) -> Result<ZPoly<C>> {
        self.check_xi(i)?;
        let mut g = f.clone();
        for j in i..self.n {
            g = self.hbar_inv(&g, j)?;
        }
        g = self.delta_inv(&g)?;
        for j in 1..i {
            g = self.h_inv(&g, j)?;
        }
        Ok(g)
    }

    fn check_xi(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n {
            return Err(Error::IndexOutOfRange { index: i, max: self.n });
        }
        Ok(())
    }

    pub fn apply_symbol(&self, f: &ZPoly<C>, symbol: &OperatorSymbol<C>) -> Result<ZPoly<C>> {
        use OperatorSymbol as S;
        match symbol {
            S::Reflection(i) => self.reflect(f, *i),
            S::DividedDifference(i) => self.divided_difference(f, *i),
            S::H(i) => self.h(f, *i),
            S::Hbar(i) => self.hbar(f, *i),
            S::HInv(i) => self.h_inv(f, *i),
            S::HbarInv(i) => self.hbar_inv(f, *i),
            S::Delta => self.delta(f),
            S::DeltaInv => self.delta_inv(f),
            S::Phi => self.phi(f),
            S::PhiPrime => self.phi_prime(f),
            S::PhiOne => self.phi_one(f),
            S::Xi(i) => self.xi(f, *i),
            S::XiInv(i) => self.xi_inv(f, *i),
            S::MulZ(i) => {
                self.check(f)?;
                mul_z(f, *i)
            }
            S::Scalar(c) => Ok(f.scale(c)),
        }
    }

    /// Applies the symbols right to left.
    pub fn apply_word(&self, f: &ZPoly<C>, word: &OperatorWord<C>) -> Result<ZPoly<C>> {
        word.symbols().iter().rev().try_fold(f.clone(), |g, s| self.apply_symbol(&g, s))
    }

    /// `X_lambda = q^{lambda_m - 1} (Abar_m - lbar_m t^m A_m)` with
    /// `m = l(lambda)` and `lbar` the spectral vector of `lambda`; it sends
    /// `calE_{lambda*}` to `calE_lambda`.
    pub fn x_lambda(&self, f: &ZPoly<C>, lambda: &Composition) -> Result<ZPoly<C>> {
        if lambda.n() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: lambda.n() });
        }
        let m = lambda.length();
        if m == 0 {
            return Err(Error::ZeroComposition);
        }
        let (a, b) = spectral_vector(lambda).exponents[m - 1];
        let lbar = self.q_pow(a as i32) * &self.t_pow(b + m as i32);
        let base = self.phi(f)?;
        let (mut plain, mut bar) = (base.clone(), base);
        for j in (m..self.n).rev() {
            plain = self.h(&plain, j)?;
            bar = self.hbar(&bar, j)?;
        }
        bar.add_scaled(&plain, &-lbar);
        Ok(bar.scale(&self.q_pow(lambda.parts()[m - 1] as i32 - 1)))
    }
}

#[cfg(test)]
mod tests;
