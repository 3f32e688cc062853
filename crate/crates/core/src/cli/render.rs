//! Serialized forms of expansions and Kostka matrices: canonical JSON, CSV
//! and LaTeX.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::json::{scalar_from_json, scalar_to_json, ScalarJson};
use crate::algebra::{AlphaPoly, QtPoly, QtRational, ZPoly};
use crate::error::{Error, Result};
use crate::macdonald::{Basis, BasisExpansion, KostkaMatrix};
use crate::weights::Composition;

/// `Q[alpha]` coefficients, lowest degree first, as decimal fractions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaJson {
    pub alpha: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoeffJson {
    Qt(ScalarJson),
    Alpha(AlphaJson),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionJson {
    pub form: String,
    pub lambda: Vec<u32>,
    pub n: usize,
    pub basis: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<usize>,
    pub labels: Vec<Vec<u32>>,
    pub coeffs: Vec<CoeffJson>,
    /// Reduced denominators are units (`Z[q,t]`), or for `alpha`
    /// coefficients, membership in `N[alpha]`.
    pub integral: Vec<bool>,
}

pub fn alpha_to_json(c: &AlphaPoly) -> AlphaJson {
    AlphaJson { alpha: c.coeffs().iter().map(ToString::to_string).collect() }
}

pub fn alpha_from_json(j: &AlphaJson) -> Result<AlphaPoly> {
    let coeffs = j
        .alpha
        .iter()
        .map(|s| s.parse::<BigRational>().map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(AlphaPoly::new(coeffs))
}

pub fn expansion_json(form: &str, lambda: &Composition, x: &BasisExpansion) -> ExpansionJson {
    ExpansionJson {
        form: form.to_string(),
        lambda: lambda.parts().to_vec(),
        n: lambda.n(),
        basis: x.basis.tag().to_string(),
        m: x.basis.level(),
        labels: x.terms.iter().map(|(mu, _)| mu.parts().to_vec()).collect(),
        coeffs: x.terms.iter().map(|(_, c)| CoeffJson::Qt(scalar_to_json(c))).collect(),
        integral: x.integral_flags(),
    }
}

pub fn jack_expansion_json(form: &str, lambda: &Composition, x: &BasisExpansion<AlphaPoly>) -> ExpansionJson {
    ExpansionJson {
        form: form.to_string(),
        lambda: lambda.parts().to_vec(),
        n: lambda.n(),
        basis: x.basis.tag().to_string(),
        m: x.basis.level(),
        labels: x.terms.iter().map(|(mu, _)| mu.parts().to_vec()).collect(),
        coeffs: x.terms.iter().map(|(_, c)| CoeffJson::Alpha(alpha_to_json(c))).collect(),
        integral: x.natural_flags(),
    }
}

impl ExpansionJson {
    /// Rebuilds the polynomial of a `Q(q,t)` monomial-basis expansion.
    pub fn to_polynomial(&self) -> Result<ZPoly<QtRational>> {
        if self.basis != Basis::Monomial.tag() {
            return Err(Error::PreconditionViolated(format!("basis {} is not monomial", self.basis)));
        }
        let mut terms = Vec::with_capacity(self.labels.len());
        for (label, c) in self.labels.iter().zip(&self.coeffs) {
            let CoeffJson::Qt(c) = c else {
                return Err(Error::Parse("expected a q,t coefficient".into()));
            };
            let e = label.iter().map(|&x| x as i32).collect();
            terms.push((e, scalar_from_json(c)?));
        }
        ZPoly::from_terms(self.n, terms)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KostkaJson {
    pub degree: u32,
    pub n: usize,
    pub specialize: Specialization,
    pub labels: Vec<Vec<u32>>,
    pub entries: Vec<Vec<ScalarJson>>,
    pub integral: Vec<Vec<bool>>,
    pub unit_diagonal: bool,
    /// `(row, column)` labels of nonzero entries outside the dominance
    /// triangle.
    pub dominance_violations: Vec<(Vec<u32>, Vec<u32>)>,
    pub positive: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Specialization {
    pub q: Option<i64>,
    pub t: Option<i64>,
}

pub fn kostka_json(k: &KostkaMatrix, spec: Specialization) -> KostkaJson {
    KostkaJson {
        degree: k.degree,
        n: k.n,
        specialize: spec,
        labels: k.labels.iter().map(|l| l.parts().to_vec()).collect(),
        entries: k.entries.iter().map(|row| row.iter().map(scalar_to_json).collect()).collect(),
        integral: k.integral_flags(),
        unit_diagonal: k.has_unit_diagonal(),
        dominance_violations: k
            .triangularity_violations()
            .into_iter()
            .map(|(a, b)| (a.parts().to_vec(), b.parts().to_vec()))
            .collect(),
        positive: k.is_positive(),
    }
}

/// Label without padding zeros, e.g. `(2,1)`.
fn short_label(mu: &Composition) -> String {
    let parts: Vec<String> = mu.parts().iter().take(mu.length().max(1)).map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

pub fn kostka_csv(k: &KostkaMatrix) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["lambda\\mu".to_string()];
    header.extend(k.labels.iter().map(short_label));
    w.write_record(&header).map_err(csv_error)?;
    for (label, row) in k.labels.iter().zip(&k.entries) {
        let mut record = vec![short_label(label)];
        record.extend(row.iter().map(ToString::to_string));
        w.write_record(&record).map_err(csv_error)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
}

fn csv_error(e: csv::Error) -> Error {
    Error::Parse(e.to_string())
}

fn latex_monomial(vars: &[(&str, i64)]) -> String {
    let mut out = Vec::new();
    for &(v, e) in vars {
        match e {
            0 => {}
            1 => out.push(v.to_string()),
            _ => out.push(format!("{v}^{{{e}}}")),
        }
    }
    out.join(" ")
}

/// Signed terms `(is_negative, magnitude, monomial)` joined into LaTeX.
fn latex_sum(terms: Vec<(bool, String, String)>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (neg, mag, mono)) in terms.into_iter().enumerate() {
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        match (mag == "1", mono.is_empty()) {
            (_, true) => out.push_str(&mag),
            (true, false) => out.push_str(&mono),
            (false, false) => {
                out.push_str(&mag);
                out.push(' ');
                out.push_str(&mono);
            }
        }
    }
    out
}

pub fn latex_qtpoly(p: &QtPoly) -> String {
    let terms = p
        .terms()
        .iter()
        .map(|((a, b), c): &((u32, u32), BigInt)| {
            (c.is_negative(), c.abs().to_string(), latex_monomial(&[("q", *a as i64), ("t", *b as i64)]))
        })
        .collect();
    latex_sum(terms)
}

pub fn latex_scalar(c: &QtRational) -> String {
    if c.denominator().is_one() {
        latex_qtpoly(c.numerator())
    } else {
        format!("\\frac{{{}}}{{{}}}", latex_qtpoly(c.numerator()), latex_qtpoly(c.denominator()))
    }
}

fn latex_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.to_integer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

pub fn latex_alpha(c: &AlphaPoly) -> String {
    let terms = c
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(k, x)| (x.is_negative(), latex_rational(&x.abs()), latex_monomial(&[("\\alpha", k as i64)])))
        .collect();
    latex_sum(terms)
}

fn basis_symbol(basis: Basis, mu: &Composition) -> String {
    let label = mu.parts().iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
    match basis {
        Basis::Monomial => {
            let vars: Vec<(String, i64)> =
                mu.parts().iter().enumerate().map(|(i, &e)| (format!("z_{{{}}}", i + 1), e as i64)).collect();
            let refs: Vec<(&str, i64)> = vars.iter().map(|(v, e)| (v.as_str(), *e)).collect();
            latex_monomial(&refs)
        }
        Basis::TMonomial => format!("\\mathfrak{{m}}_{{({label})}}"),
        Basis::TMonomialPartial(m) => format!("\\mathfrak{{m}}^{{({m})}}_{{({label})}}"),
        Basis::TMonomialAugmented(m) => {
            format!("\\tilde{{\\mathfrak{{m}}}}^{{({m})}}_{{({label})}}")
        }
        Basis::MonomialSymmetric => format!("m_{{({label})}}"),
        Basis::HallLittlewoodP => format!("P_{{({label})}}"),
        Basis::HallLittlewoodQ => format!("Q_{{({label})}}"),
        Basis::TSchur => format!("S_{{({label})}}"),
        Basis::MacdonaldJ => format!("J_{{({label})}}"),
        Basis::LimitMonomialAugmented(m) => format!("\\tilde{{m}}^{{({m})}}_{{({label})}}"),
    }
}

/// `c_1 b_1 + c_2 b_2 + ...` with each coefficient parenthesized when it has
/// more than one term.
fn latex_combination(basis: Basis, terms: Vec<(&Composition, String)>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let parts: Vec<String> = terms
        .into_iter()
        .map(|(mu, c)| {
            let sym = basis_symbol(basis, mu);
            let c = if c.contains(['+', ' ']) && !c.starts_with("\\frac") { format!("({c})") } else { c };
            match (c.as_str(), sym.is_empty()) {
                (_, true) => c,
                ("1", false) => sym,
                _ => format!("{c} \\, {sym}"),
            }
        })
        .collect();
    parts.join(" + ")
}

pub fn expansion_latex(x: &BasisExpansion) -> String {
    latex_combination(x.basis, x.terms.iter().map(|(mu, c)| (mu, latex_scalar(c))).collect())
}

pub fn jack_expansion_latex(x: &BasisExpansion<AlphaPoly>) -> String {
    latex_combination(x.basis, x.terms.iter().map(|(mu, c)| (mu, latex_alpha(c))).collect())
}

pub fn kostka_latex(k: &KostkaMatrix) -> String {
    let cols = "c".repeat(k.labels.len());
    let mut out = format!("\\begin{{array}}{{c|{cols}}}\n");
    let header: Vec<String> = k.labels.iter().map(short_label).collect();
    out.push_str(&format!(" & {} \\\\\n\\hline\n", header.join(" & ")));
    for (label, row) in k.labels.iter().zip(&k.entries) {
        let cells: Vec<String> = row.iter().map(latex_scalar).collect();
        out.push_str(&format!("{} & {} \\\\\n", short_label(label), cells.join(" & ")));
    }
    out.push_str("\\end{array}\n");
    out
}
