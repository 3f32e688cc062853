//! Diagrams of compositions and their arm/leg statistics.

use crate::algebra::QtPoly;
use crate::error::Result;

use super::Composition;

/// Statistics of the box `(row, col)` (both 1-based, matrix convention).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BoxStats {
    pub row: usize,
    pub col: u32,
    pub arm: u32,
    /// Rows above with `col <= lambda_k + 1 <= lambda_row`.
    pub leg_upper: u32,
    /// Rows below with `col <= lambda_k <= lambda_row`.
    pub leg_lower: u32,
}

impl BoxStats {
    pub fn leg(&self) -> u32 {
        self.leg_upper + self.leg_lower
    }
}

/// One entry per box of the diagram of `lambda`, row-major.
pub fn box_stats(lambda: &Composition) -> Vec<BoxStats> {
    let v = lambda.parts();
    let mut out = Vec::with_capacity(lambda.size() as usize);
    for (i, &li) in v.iter().enumerate() {
        for j in 1..=li {
            let leg_upper = v[..i].iter().filter(|&&lk| j <= lk + 1 && lk < li).count();
            let leg_lower = v[i + 1..].iter().filter(|&&lk| j <= lk && lk <= li).count();
            out.push(BoxStats {
                row: i + 1,
                col: j,
                arm: li - j,
                leg_upper: leg_upper as u32,
                leg_lower: leg_lower as u32,
            });
        }
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NormKind {
    /// `prod (1 - q^{a+1} t^{l+1})`, turning `E_lambda` into `calE_lambda`.
    Nonsymmetric,
    /// `prod (1 - q^a t^{l+1})`, turning `J_lambda` into `calJ_lambda`;
    /// partitions only.
    Symmetric,
}

pub fn norm_factor(lambda: &Composition, kind: NormKind) -> Result<QtPoly> {
    if kind == NormKind::Symmetric {
        lambda.require_partition()?;
    }
    let shift = match kind {
        NormKind::Nonsymmetric => 1,
        NormKind::Symmetric => 0,
    };
    Ok(box_stats(lambda).iter().fold(QtPoly::one(), |acc, s| acc * QtPoly::one_minus(s.arm + shift, s.leg() + 1)))
}
