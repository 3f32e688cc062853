//! Canonical JSON interchange for `Q(q,t)` scalars and z-polynomials.
//!
//! ```text
//! {"n": 2, "terms": [{"z": [0,1], "num": [[0,0,"1"],[0,1,"-1"]], "den": [[0,0,"1"]]}, ...]}
//! ```
//!
//! Terms and `(a, b)` exponent pairs appear in increasing lexicographic
//! order; integer coefficients are decimal strings.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{QtPoly, QtRational, ZPoly};
use crate::error::{Error, Result};

pub type QtPolyJson = Vec<(u32, u32, String)>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarJson {
    pub num: QtPolyJson,
    pub den: QtPolyJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub z: Vec<i32>,
    pub num: QtPolyJson,
    pub den: QtPolyJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZPolyJson {
    pub n: usize,
    pub terms: Vec<TermJson>,
}

pub fn qtpoly_to_json(p: &QtPoly) -> QtPolyJson {
    p.terms().iter().map(|((a, b), c)| (*a, *b, c.to_string())).collect()
}

pub fn qtpoly_from_json(j: &QtPolyJson) -> Result<QtPoly> {
    let terms = j
        .iter()
        .map(|(a, b, c)| {
            c.parse::<BigInt>().map(|v| ((*a, *b), v)).map_err(|e| Error::Parse(format!("bad integer {c:?}: {e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(QtPoly::from_terms(terms))
}

pub fn scalar_to_json(x: &QtRational) -> ScalarJson {
    ScalarJson { num: qtpoly_to_json(x.numerator()), den: qtpoly_to_json(x.denominator()) }
}

pub fn scalar_from_json(j: &ScalarJson) -> Result<QtRational> {
    QtRational::new(qtpoly_from_json(&j.num)?, qtpoly_from_json(&j.den)?)
}

pub fn zpoly_to_json(f: &ZPoly<QtRational>) -> ZPolyJson {
    ZPolyJson {
        n: f.n(),
        terms: f
            .terms()
            .map(|(e, c)| TermJson {
                z: e.clone(),
                num: qtpoly_to_json(c.numerator()),
                den: qtpoly_to_json(c.denominator()),
            })
            .collect(),
    }
}

pub fn zpoly_from_json(j: &ZPolyJson) -> Result<ZPoly<QtRational>> {
    let terms = j
        .terms
        .iter()
        .map(|t| {
            let c = QtRational::new(qtpoly_from_json(&t.num)?, qtpoly_from_json(&t.den)?)?;
            Ok((t.z.clone(), c))
        })
        .collect::<Result<Vec<_>>>()?;
    ZPoly::from_terms(j.n, terms)
}

pub fn zpoly_to_string(f: &ZPoly<QtRational>) -> String {
    serde_json::to_string(&zpoly_to_json(f)).expect("serializable")
}

pub fn zpoly_from_str(s: &str) -> Result<ZPoly<QtRational>> {
    let j: ZPolyJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    zpoly_from_json(&j)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_layout() {
        let c = QtRational::new(QtPoly::one_minus(0, 1), QtPoly::one_minus(1, 1)).unwrap();
        let f = ZPoly::monomial(vec![0, 1], c);
        let s = zpoly_to_string(&f);
        assert_eq!(s, r#"{"n":2,"terms":[{"z":[0,1],"num":[[0,0,"1"],[0,1,"-1"]],"den":[[0,0,"1"],[1,1,"-1"]]}]}"#);
        assert_eq!(zpoly_from_str(&s).unwrap(), f);
    }

    #[test]
    fn rejects_garbage() {
        assert!(zpoly_from_str(r#"{"n":1,"terms":[{"z":[1],"num":[[0,0,"x"]],"den":[[0,0,"1"]]}]}"#).is_err());
        assert!(zpoly_from_str(r#"{"n":1,"terms":[{"z":[1],"num":[[0,0,"1"]],"den":[]}]}"#).is_err());
    }
}
