//! The `(q,t)`-Kostka matrix: `calJ_lambda = sum_mu K_{lambda mu} S_mu`.

use num_traits::Zero;
use rayon::prelude::*;

use super::expansion::{Basis, BasisExpansion};
use super::symmetric::{expand_symmetric, sym_cal_j, t_schur};
use crate::algebra::{QtRational, ZPoly};
use crate::error::{Error, Result};
use crate::weights::{dominance, partitions, Composition, Relation};

/// Rows are indexed by the `calJ_lambda`, columns by the `S_mu`; labels are
/// the partitions of `degree` in decreasing lexicographic order.
#[derive(Clone, PartialEq, Debug)]
pub struct KostkaMatrix {
    pub degree: u32,
    pub n: usize,
    pub labels: Vec<Composition>,
    pub entries: Vec<Vec<QtRational>>,
}

impl KostkaMatrix {
    pub fn entry(&self, lambda: &Composition, mu: &Composition) -> Option<&QtRational> {
        let i = self.labels.iter().position(|x| x == lambda)?;
        let j = self.labels.iter().position(|x| x == mu)?;
        Some(&self.entries[i][j])
    }

    pub fn integral_flags(&self) -> Vec<Vec<bool>> {
        self.entries.iter().map(|row| row.iter().map(QtRational::is_integral).collect()).collect()
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().flatten().all(QtRational::is_integral)
    }

    pub fn has_unit_diagonal(&self) -> bool {
        (0..self.labels.len()).all(|i| self.entries[i][i] == QtRational::from_i64(1))
    }

    /// Nonzero entries `K_{lambda mu}` where `mu <= lambda` fails in dominance.
    pub fn triangularity_violations(&self) -> Vec<(Composition, Composition)> {
        let mut out = Vec::new();
        for (i, lambda) in self.labels.iter().enumerate() {
            for (j, mu) in self.labels.iter().enumerate() {
                let below = matches!(dominance(mu.parts(), lambda.parts()), Relation::Less | Relation::Equal);
                if !below && !self.entries[i][j].is_zero() {
                    out.push((lambda.clone(), mu.clone()));
                }
            }
        }
        out
    }

    /// Every entry with non-negative integer coefficients. Reported, never
    /// required.
    pub fn is_positive(&self) -> bool {
        self.entries.iter().flatten().all(|c| c.as_poly().is_some_and(|p| p.all_coefficients_nonnegative()))
    }

    pub fn specialize(&self, q: Option<i64>, t: Option<i64>) -> Result<KostkaMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|row| row.iter().map(|c| c.specialize(q, t)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(KostkaMatrix { entries, ..self.clone() })
    }
}

fn row_of(expansion: &BasisExpansion, labels: &[Composition]) -> Vec<QtRational> {
    labels.iter().map(|mu| expansion.coeff(mu)).collect()
}

/// Expands every `calJ_lambda` and `S_mu` in the `Q` basis, where `S` is
/// unitriangular, and solves `c^J = K T` from the bottom of dominance up.
/// The result is cross-checked by resumming `sum_mu K_{lambda mu} S_mu`.
pub fn kostka_matrix(degree: u32, n: usize) -> Result<KostkaMatrix> {
    if n < degree as usize {
        return Err(Error::TooFewVariables { n, degree: degree as usize });
    }
    let labels = partitions(degree, n);
    let q_basis = Basis::HallLittlewoodQ;
    let schur_rows: Vec<Vec<QtRational>> = labels
        .par_iter()
        .map(|mu| Ok(row_of(&expand_symmetric(&t_schur(mu)?, q_basis)?, &labels)))
        .collect::<Result<_>>()?;
    let size = labels.len();
    let entries: Vec<Vec<QtRational>> = labels
        .par_iter()
        .map(|lambda| {
            let j = sym_cal_j(lambda)?;
            let c = row_of(&expand_symmetric(&j, q_basis)?, &labels);
            let mut k = vec![QtRational::zero(); size];
            for v in (0..size).rev() {
                let mut acc = c[v].clone();
                for u in v + 1..size {
                    if !k[u].is_zero() && !schur_rows[u][v].is_zero() {
                        acc = acc - k[u].clone() * &schur_rows[u][v];
                    }
                }
                k[v] = acc
                    .checked_div(&schur_rows[v][v])
                    .map_err(|_| Error::SingularSystem(format!("S_{} has no Q_{} component", labels[v], labels[v])))?;
            }
            let mut resum = ZPoly::zero(n);
            for (mu, coeff) in labels.iter().zip(&k) {
                if !coeff.is_zero() {
                    resum.add_scaled(&t_schur(mu)?, coeff);
                }
            }
            if resum != j {
                return Err(Error::SingularSystem(format!("Kostka row {lambda} does not resum to calJ")));
            }
            Ok(k)
        })
        .collect::<Result<_>>()?;
    Ok(KostkaMatrix { degree, n, labels, entries })
}
