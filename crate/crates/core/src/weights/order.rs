//! The partial order on weights: dominance of the sorted weights, refined
//! within an orbit by the Bruhat order of the sorting permutations.

use std::cmp::Reverse;

use crate::error::{Error, Result};

use super::{orbit_data, Composition};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Relation {
    Less,
    Equal,
    Greater,
    Incomparable,
}

impl Relation {
    pub fn reverse(self) -> Relation {
        match self {
            Relation::Less => Relation::Greater,
            Relation::Greater => Relation::Less,
            r => r,
        }
    }
}

/// Dominance of two partitions of the same size (zero-padded as needed).
pub fn dominance(mu: &[u32], lambda: &[u32]) -> Relation {
    let len = mu.len().max(lambda.len());
    let (mut sm, mut sl) = (0u64, 0u64);
    let (mut le, mut ge) = (true, true);
    for i in 0..len {
        sm += *mu.get(i).unwrap_or(&0) as u64;
        sl += *lambda.get(i).unwrap_or(&0) as u64;
        le &= sm <= sl;
        ge &= sm >= sl;
    }
    if sm != sl {
        return Relation::Incomparable;
    }
    match (le, ge) {
        (true, true) => Relation::Equal,
        (true, false) => Relation::Less,
        (false, true) => Relation::Greater,
        (false, false) => Relation::Incomparable,
    }
}

/// The relation of `mu` to `lambda`: `lambda >= mu` iff `lambda^+ > mu^+`,
/// or `lambda^+ = mu^+` and `w_lambda <= w_mu` in the Bruhat order.
/// Weights of different sizes are incomparable.
pub fn compare(mu: &Composition, lambda: &Composition) -> Result<Relation> {
    if mu.n() != lambda.n() {
        return Err(Error::DimensionMismatch { expected: lambda.n(), found: mu.n() });
    }
    if mu.size() != lambda.size() {
        return Ok(Relation::Incomparable);
    }
    let (dm, dl) = (orbit_data(mu), orbit_data(lambda));
    match dominance(dm.lambda_plus.parts(), dl.lambda_plus.parts()) {
        Relation::Equal => {}
        r => return Ok(r),
    }
    Ok(if mu == lambda {
        Relation::Equal
    } else if dl.w_min.bruhat_leq(&dm.w_min) {
        Relation::Less
    } else if dm.w_min.bruhat_leq(&dl.w_min) {
        Relation::Greater
    } else {
        Relation::Incomparable
    })
}

/// A total order key refining [`compare`] on each graded slice: larger keys
/// are never smaller in the partial order.
pub type LinearKey = (u32, Vec<u32>, Reverse<usize>, Vec<u32>);

pub fn linear_key(lambda: &Composition) -> LinearKey {
    (lambda.size(), lambda.dominant().parts().to_vec(), Reverse(lambda.inversion_length()), lambda.parts().to_vec())
}
