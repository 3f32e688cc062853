//! Named verification suites: each runs a family of exact identities over a
//! parameter range and tallies passes and failures per property.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{specialize, QtRational};
use crate::error::{Error, Result};
use crate::hecke::Hecke;
use crate::macdonald::{
    eigen_oracle_e, expand_in_limit_monomials, expand_in_partial_t_monomials, expand_symmetric, hall_littlewood,
    jack_nonsym, jack_sym, kostka_matrix, monomial_symmetric, nonsym_cal_e, nonsym_e, numeric_limit_check,
    schur_polynomial, sym_cal_j, t_monomial, t_monomial_partial, t_schur, Basis, HallLittlewoodKind, QtLaurent,
};
use crate::weights::{
    compare, compositions, dominance, partitions, spectral_vector, Composition, Permutation, Relation,
};

/// Failures kept per property in a report.
const MAX_EXAMPLES: usize = 5;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    HeckeRelations,
    Oracle,
    Integrality,
    HallLittlewood,
    Kostka,
    Jack,
    JackLimit,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::HeckeRelations,
        Suite::Oracle,
        Suite::Integrality,
        Suite::HallLittlewood,
        Suite::Kostka,
        Suite::Jack,
        Suite::JackLimit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::HeckeRelations => "hecke-relations",
            Suite::Oracle => "oracle",
            Suite::Integrality => "integrality",
            Suite::HallLittlewood => "hall-littlewood",
            Suite::Kostka => "kostka",
            Suite::Jack => "jack",
            Suite::JackLimit => "jack-limit",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteParams {
    pub n: usize,
    pub maxdeg: u32,
    pub trials: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyReport {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub examples: Vec<String>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.failed == 0 && self.checked > 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub params: SuiteParams,
    pub properties: Vec<PropertyReport>,
    pub passed: bool,
}

impl SuiteReport {
    pub fn property(&self, name: &str) -> Option<&PropertyReport> {
        self.properties.iter().find(|p| p.name == name)
    }
}

/// One evaluated instance of a property.
struct Check {
    property: &'static str,
    ok: bool,
    context: String,
}

/// Collects checks for one job (a random trial or one weight).
#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, property: &'static str, outcome: Result<bool>, context: impl fmt::Display) {
        let (ok, context) = match outcome {
            Ok(ok) => (ok, context.to_string()),
            Err(e) => (false, format!("{context}: {e}")),
        };
        self.0.push(Check { property, ok, context });
    }
}

/// Merges job results in job order, properties in first-seen order.
fn tally(jobs: Vec<Checks>) -> Vec<PropertyReport> {
    let mut out: Vec<PropertyReport> = Vec::new();
    for check in jobs.into_iter().flat_map(|c| c.0) {
        let idx = match out.iter().position(|p| p.name == check.property) {
            Some(i) => i,
            None => {
                out.push(PropertyReport { name: check.property.to_string(), checked: 0, failed: 0, examples: vec![] });
                out.len() - 1
            }
        };
        let p = &mut out[idx];
        p.checked += 1;
        if !check.ok {
            p.failed += 1;
            if p.examples.len() < MAX_EXAMPLES {
                p.examples.push(check.context);
            }
        }
    }
    out
}

pub fn run_suite(suite: Suite, params: &SuiteParams) -> Result<SuiteReport> {
    if params.n == 0 {
        return Err(Error::PreconditionViolated("n must be positive".into()));
    }
    let properties = match suite {
        Suite::HeckeRelations => hecke_relations(params)?,
        Suite::Oracle => oracle(params),
        Suite::Integrality => integrality(params),
        Suite::HallLittlewood => hall_littlewood_suite(params),
        Suite::Kostka => kostka(params),
        Suite::Jack => jack(params),
        Suite::JackLimit => jack_limit(params),
    };
    let passed = properties.iter().all(PropertyReport::passed);
    Ok(SuiteReport { suite: suite.name().to_string(), params: params.clone(), properties, passed })
}

fn weights_up_to(n: usize, maxdeg: u32) -> Vec<Composition> {
    (0..=maxdeg).flat_map(|d| compositions(n, d)).collect()
}

fn partitions_up_to(n: usize, maxdeg: u32) -> Vec<Composition> {
    (0..=maxdeg).flat_map(|d| partitions(d, n)).collect()
}

type P = QtLaurent;

/// A polynomial with 1 to 6 terms of total degree at most `maxdeg` and
/// nonzero integer coefficients in `[-3, 3]`.
pub fn random_polynomial(rng: &mut impl Rng, n: usize, maxdeg: u32) -> P {
    let mut f = P::zero(n);
    for _ in 0..rng.gen_range(1..=6) {
        let d = rng.gen_range(0..=maxdeg);
        let mut e = vec![0i32; n];
        for _ in 0..d {
            e[rng.gen_range(0..n)] += 1;
        }
        let mut c = rng.gen_range(1..=3i64);
        if rng.gen_bool(0.5) {
            c = -c;
        }
        f.add_term(e, QtRational::from_i64(c));
    }
    f
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

fn z_times(f: &P, i: usize) -> Result<P> {
    f.mul_var(i)
}

fn hecke_relations(params: &SuiteParams) -> Result<Vec<PropertyReport>> {
    let n = params.n;
    let hk = Hecke::generic(n);
    let jobs: Vec<Checks> = (0..params.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(params.seed, trial);
            let f = random_polynomial(&mut rng, n, params.maxdeg);
            let mut out = Checks::default();
            let ctx = format!("trial {trial}: f = {f}");
            if n >= 2 {
                out.push("quadratic", quadratic(&hk, &f), &ctx);
                out.push("difference_and_product", difference_and_product(&hk, &f), &ctx);
                out.push("braid", braid(&hk, &f), &ctx);
                out.push("cross", cross(&hk, &f), &ctx);
                out.push("delta", delta_relations(&hk, &f), &ctx);
                out.push("phi", phi_relations(&hk, &f), &ctx);
                out.push("phi_xi", phi_xi(&hk, &f), &ctx);
                out.push("xi_commute", xi_commute(&hk, &f), &ctx);
                out.push("xi_hecke", xi_hecke(&hk, &f), &ctx);
                out.push("phi_prime_equality", phi_prime_equality(&hk, &f), &ctx);
                out.push("invariance", invariance(&hk, &f), &ctx);
            } else {
                out.push("delta", delta_relations(&hk, &f), &ctx);
                out.push("phi_xi", phi_xi(&hk, &f), &ctx);
            }
            out
        })
        .collect();
    let mut reports = tally(jobs);
    let triangular: Vec<Checks> = weights_up_to(n, params.maxdeg)
        .par_iter()
        .map(|lambda| {
            let mut out = Checks::default();
            out.push("xi_triangular", xi_triangular(&hk, lambda), lambda);
            out
        })
        .collect();
    reports.extend(tally(triangular));
    Ok(reports)
}

fn t(hk: &Hecke<QtRational>) -> QtRational {
    hk.t().clone()
}

fn quadratic(hk: &Hecke<QtRational>, f: &P) -> Result<bool> {
    for i in 1..hk.n() {
        // (H_i + 1)(H_i - t) = 0 and (Hbar_i - 1)(Hbar_i + t) = 0.
        let g = &hk.h(f, i)? - &f.scale(&t(hk));
        if !(&hk.h(&g, i)? + &g).is_zero() {
            return Ok(false);
        }
        let g = &hk.hbar(f, i)? + &f.scale(&t(hk));
        if !(&hk.hbar(&g, i)? - &g).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn difference_and_product(hk: &Hecke<QtRational>, f: &P) -> Result<bool> {
    let t_minus_one = t(hk) - QtRational::one();
    for i in 1..hk.n() {
        if &hk.h(f, i)? - &hk.hbar(f, i)? != f.scale(&t_minus_one) {
            return Ok(false);
        }
        if hk.h(&hk.hbar(f, i)?, i)? != f.scale(&t(hk)) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn braid(hk: &Hecke<QtRational>, f: &P) -> Result<bool> {
    let n = hk.n();
    for i in 1..n.saturating_sub(1) {
        let lhs = hk.h(&hk.h(&hk.h(f, i)?, i + 1)?, i)?;
        let rhs = hk.h(&hk.h(&hk.h(f, i + 1)?, i)?, i + 1)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    for i in 1..n {
        for j in i + 2..n {
            if hk.h(&hk.h(f, j)?, i)? != hk.h(&hk.h(f, i)?, j)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn cross(hk: &Hecke<QtRational>, f: &P) -> Result<bool> {
    for i in 1..hk.n() {
        // z_{i+1} H_i = Hbar_i z_i and H_i z_{i+1} = z_i Hbar_i.
        if z_times(&hk.h(f, i)?, i + 1)? != hk.hbar(&z_times(f, i)?, i)? {
            return Ok(false);
        }
        if hk.h(&z_times(f, i + 1)?, i)? != z_times(&hk.hbar(f, i)?, i)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn delta_relations(hk: &Hecke<QtRational>, f: &P) -> Result<bool> {
    let n = hk.n();
    let df = hk.delta(f)?;
    for i in 1..n {
        if hk.delta(&z_times(f, i + 1)?)? != z_times(&df, i)? {
            return Ok(false);
        }
    }
    let q_inv = QtRational::qt_power(-1, 0);
    if hk.delta(&z_times(f, 1)?)? != z_times(&df, n)?.scale(&q_inv) {
        return Ok(false);
    }
    if hk.delta_inv(&df)? != *f {
        return Ok(false);
    }
    for i in 1..n.saturating_sub(1) {
        if hk.delta(&hk.h(f, i + 1)?)? != hk.h(&df, i)? {
            return Ok(false);
        }
    }
    if n >= 2 && hk.delta(&hk.delta(&hk.h(f, 1)?)?)? != hk.h(&hk.delta(&df)?, n - 1)? {
        return Ok(false);
    }
    Ok(true)
}

fn phi_relations(hk: &Hecke<QtRational>, f: &P) -> Result<bool> {
    let n = hk.n();
    let pf = hk.phi(f)?;
    for i in 1..n {
        if hk.phi(&z_times(f, i + 1)?)? != z_times(&pf, i)? {
            return Ok(false);
        }
    }
    for i in 1..n.saturating_sub(1) {
        if hk.phi(&hk.h(f, i + 1)?)? != hk.h(&pf, i)? {
            return Ok(false);
        }
    }
    Ok(hk.phi(&hk.phi(&hk.h(f, 1)?)?)? == hk.h(&hk.phi(&pf)?, n - 1)?)
}

/// `Phi xi_{i+1} = xi_i Phi` and `Phi xi_1 = q^{-1} xi_n Phi`, the form forced
/// by `xi_i E_lambda = lbar_i E_lambda`. For the inverses `xi_i^{-1}` (the
/// displayed Hecke words) this reads `Phi xi_1^{-1} = q xi_n^{-1} Phi`.
fn phi_xi(hk: &Hecke<QtRational>, f: &P) -> Result<bool> {
    let n = hk.n();
    let pf = hk.phi(f)?;
    for i in 1..n {
        if hk.phi(&hk.xi(f, i + 1)?)? != hk.xi(&pf, i)? || hk.phi(&hk.xi_inv(f, i + 1)?)? != hk.xi_inv(&pf, i)? {
            return Ok(false);
        }
    }
    let q_inv = QtRational::qt_power(-1, 0);
    Ok(hk.phi(&hk.xi(f, 1)?)? == hk.xi(&pf, n)?.scale(&q_inv)
        && hk.phi(&hk.xi_inv(f, 1)?)? == hk.xi_inv(&pf, n)?.scale(&QtRational::q()))
}

/// `Phi xi_1 = q xi_n Phi` read with `xi` the forward Cherednik operator.
pub fn phi_xi_forward_with_q(hk: &Hecke<QtRational>, f: &P) -> Result<bool> {
    Ok(hk.phi(&hk.xi(f, 1)?)? == hk.xi(&hk.phi(f)?, hk.n())?.scale(&QtRational::q()))
}

fn xi_commute(hk: &Hecke<QtRational>, f: &P) -> Result<bool> {
    let n = hk.n();
    let xis: Vec<P> = (1..=n).map(|i| hk.xi(f, i)).collect::<Result<_>>()?;
    for i in 1..=n {
        for j in i + 1..=n {
            if hk.xi(&xis[j - 1], i)? != hk.xi(&xis[i - 1], j)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn xi_hecke(hk: &Hecke<QtRational>, f: &P) -> Result<bool> {
    let n = hk.n();
    for i in 1..n {
        // xi_{i+1} H_i = Hbar_i xi_i and H_i xi_{i+1} = xi_i Hbar_i.
        if hk.xi(&hk.h(f, i)?, i + 1)? != hk.hbar(&hk.xi(f, i)?, i)? {
            return Ok(false);
        }
        if hk.h(&hk.xi(f, i + 1)?, i)? != hk.xi(&hk.hbar(f, i)?, i)? {
            return Ok(false);
        }
    }
    for i in 1..=n {
        for j in 1..n {
            if i == j || i == j + 1 {
                continue;
            }
            if hk.xi(&hk.h(f, j)?, i)? != hk.h(&hk.xi(f, i)?, j)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn phi_prime_equality(hk: &Hecke<QtRational>, f: &P) -> Result<bool> {
    let n = hk.n();
    let mut g = f.clone();
    for i in 1..n {
        g = hk.hbar_inv(&g, i)?;
    }
    Ok(z_times(&g, n)? == hk.phi_prime(f)?)
}

fn symmetrize(f: &P) -> P {
    let mut out = P::zero(f.n());
    for w in Permutation::all(f.n()) {
        out = &out + &f.permute_variables(w.images());
    }
    out
}

/// `f` symmetric iff `H_i f = t f` for all `i` iff `Hbar_i f = f` for all `i`,
/// tested on `f` and on its symmetrization.
fn invariance(hk: &Hecke<QtRational>, f: &P) -> Result<bool> {
    for g in [f.clone(), symmetrize(f)] {
        let mut h_fixed = true;
        let mut hbar_fixed = true;
        for i in 1..hk.n() {
            h_fixed &= hk.h(&g, i)? == g.scale(&t(hk));
            hbar_fixed &= hk.hbar(&g, i)? == g;
        }
        let sym = g.is_symmetric();
        if sym != h_fixed || sym != hbar_fixed {
            return Ok(false);
        }
    }
    Ok(true)
}

fn xi_triangular(hk: &Hecke<QtRational>, lambda: &Composition) -> Result<bool> {
    let z = P::monomial(lambda.exponent(), QtRational::one());
    let spec = spectral_vector(lambda);
    for i in 1..=hk.n() {
        let rest = &hk.xi(&z, i)? - &z.scale(&spec.value(i));
        for (e, _) in rest.terms() {
            let Some(mu) = Composition::from_exponent(e) else {
                return Ok(false);
            };
            if compare(&mu, lambda)? != Relation::Less {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn per_weight<F>(weights: Vec<Composition>, check: F) -> Vec<PropertyReport>
where
    F: Fn(&Composition, &mut Checks) + Sync,
{
    let jobs: Vec<Checks> = weights
        .par_iter()
        .map(|lambda| {
            let mut out = Checks::default();
            check(lambda, &mut out);
            out
        })
        .collect();
    tally(jobs)
}

fn oracle(params: &SuiteParams) -> Vec<PropertyReport> {
    let hk = Hecke::generic(params.n);
    per_weight(weights_up_to(params.n, params.maxdeg), |lambda, out| {
        let e = match nonsym_e(lambda) {
            Ok(e) => e,
            Err(err) => {
                out.push("oracle_equivalence", Err(err), lambda);
                return;
            }
        };
        out.push("oracle_equivalence", eigen_oracle_e(lambda).map(|o| o == e), lambda);
        out.push("eigen_relations", eigen_relations(&hk, lambda, &e), lambda);
        out.push("monic_triangular_support", monic_triangular(lambda, &e), lambda);
        out.push("equal_parts_invariance", equal_parts(&hk, lambda, &e), lambda);
        if lambda.parts()[params.n - 1] != 0 {
            out.push("creation_by_phi", creation_by_phi(&hk, lambda, &e), lambda);
        }
        if params.n >= 2 {
            for (a, b) in interchange_pairs(lambda) {
                out.push("interchange_identity", interchange(&hk, lambda, &e, a, b), format!("{lambda} a={a} b={b}"));
            }
        }
    })
}

fn eigen_relations(hk: &Hecke<QtRational>, lambda: &Composition, e: &P) -> Result<bool> {
    let spec = spectral_vector(lambda);
    for i in 1..=hk.n() {
        if hk.xi(e, i)? != e.scale(&spec.value(i)) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn monic_triangular(lambda: &Composition, e: &P) -> Result<bool> {
    if !e.coeff(&lambda.exponent()).is_one() {
        return Ok(false);
    }
    for (x, _) in e.terms() {
        let Some(mu) = Composition::from_exponent(x) else {
            return Ok(false);
        };
        if mu != *lambda && compare(&mu, lambda)? != Relation::Less {
            return Ok(false);
        }
    }
    Ok(true)
}

fn equal_parts(hk: &Hecke<QtRational>, lambda: &Composition, e: &P) -> Result<bool> {
    let p = lambda.parts();
    for i in 1..hk.n() {
        if p[i - 1] == p[i] && (hk.h(e, i)? != e.scale(hk.t()) || hk.hbar(e, i)? != *e) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `E_lambda = q^{lambda_n - 1} Phi(E_{lambda*})` for monic `E`.
fn creation_by_phi(hk: &Hecke<QtRational>, lambda: &Composition, e: &P) -> Result<bool> {
    let last = lambda.parts()[hk.n() - 1] as i32;
    let prev = nonsym_e(&lambda.star()?)?;
    Ok(hk.phi(&prev)?.scale(&QtRational::qt_power(last - 1, 0)) == *e)
}

/// Pairs `a < b` (1-based) with `a = l(lambda)`, so that `lambda_a != 0` and
/// every later part is zero. With a nonzero part after `b` the identity
/// fails, e.g. `lambda = (1,0,1)`, `a = 1`, `b = 2`.
pub fn interchange_pairs(lambda: &Composition) -> Vec<(usize, usize)> {
    let a = lambda.length();
    if a == 0 {
        return Vec::new();
    }
    (a + 1..=lambda.n()).map(|b| (a, b)).collect()
}

/// `(1 - lbar_a t^a) E_lambda = [Hbar_a ... Hbar_{b-1} - lbar_a t^a H_a ... H_{b-1}] E_{lambda#}`
/// with `lambda#` the weight with parts `a` and `b` interchanged.
pub fn interchange(hk: &Hecke<QtRational>, lambda: &Composition, e: &P, a: usize, b: usize) -> Result<bool> {
    let mut parts = lambda.parts().to_vec();
    parts.swap(a - 1, b - 1);
    let sharp = nonsym_e(&Composition::new(parts))?;
    let c = spectral_vector(lambda).value(a) * &QtRational::qt_power(0, a as i32);
    let mut bar = sharp.clone();
    let mut plain = sharp;
    for j in (a..b).rev() {
        bar = hk.hbar(&bar, j)?;
        plain = hk.h(&plain, j)?;
    }
    let rhs = &bar - &plain.scale(&c);
    Ok(rhs == e.scale(&(QtRational::one() - c)))
}

fn integral_poly(f: &P) -> bool {
    f.terms().all(|(_, c)| c.is_integral())
}

fn only_t(c: &QtRational) -> bool {
    c.as_poly().is_some_and(|p| p.degree_q() == 0)
}

fn integrality(params: &SuiteParams) -> Vec<PropertyReport> {
    let n = params.n;
    let hk = Hecke::generic(n);
    let mut reports = per_weight(weights_up_to(n, params.maxdeg), |lambda, out| {
        let cal_e = match nonsym_cal_e(lambda) {
            Ok(e) => e,
            Err(err) => {
                out.push("monomial_integrality", Err(err), lambda);
                return;
            }
        };
        out.push("monomial_integrality", Ok(integral_poly(&cal_e)), lambda);
        for m in lambda.length()..=n {
            let ok = expand_in_partial_t_monomials(&cal_e, m).map(|x| x.is_integral());
            out.push("partial_t_monomial_integrality", ok, format!("{lambda} m={m}"));
        }
        let at_zero = specialize(&cal_e, Some(0), None).and_then(|s| Ok(s == t_monomial(lambda)?));
        out.push("q_zero_degeneration", at_zero, lambda);
        if lambda.parts()[n - 1] != 0 {
            out.push("phi_prime_on_t_monomials", phi_prime_t_monomial(&hk, lambda), lambda);
        }
        for m in 0..n {
            let tail = &lambda.parts()[m..];
            if tail.windows(2).all(|w| w[0] >= w[1]) {
                out.push("augmented_level_raise", level_raise(lambda, m), format!("{lambda} m={m}"));
            }
        }
    });
    reports.extend(per_weight(partitions_up_to(n, params.maxdeg), |lambda, out| {
        let j = match sym_cal_j(lambda) {
            Ok(j) => j,
            Err(err) => {
                out.push("symmetric_integrality", Err(err), lambda);
                return;
            }
        };
        let q_exp = expand_symmetric(&j, Basis::HallLittlewoodQ);
        out.push("symmetric_integrality", q_exp.as_ref().map(|x| x.is_integral()).map_err(Clone::clone), lambda);
        out.push("symmetric_triangularity", q_exp.and_then(|x| dominated(&x.terms, lambda)), lambda);
        let sym = t_monomial_partial(lambda, 0, false).map(|m| m.is_symmetric() && j.is_symmetric());
        out.push("symmetry", sym, lambda);
        let q0 = specialize(&j, Some(0), None).and_then(|s| Ok(s == t_monomial_partial(lambda, 0, true)?));
        out.push("symmetric_q_zero", q0, lambda);
    }));
    reports
}

/// `Phi'(frak m_{lambda*}) = t^{-a} frak m_lambda` with
/// `a = #{i < n : lambda_i >= lambda_n}`, i.e. parts exceeding `lambda_n - 1`.
pub fn phi_prime_t_monomial(hk: &Hecke<QtRational>, lambda: &Composition) -> Result<bool> {
    let p = lambda.parts();
    let last = p[p.len() - 1];
    let a = p[..p.len() - 1].iter().filter(|&&x| x >= last).count() as i32;
    let lhs = hk.phi_prime(&t_monomial(&lambda.star()?)?)?;
    Ok(lhs == t_monomial(lambda)?.scale(&QtRational::qt_power(0, -a)))
}

/// `tilde frak m^{(m)}_lambda` is a `Z[t]`-combination of the `tilde frak m^{(m+1)}`.
fn level_raise(lambda: &Composition, m: usize) -> Result<bool> {
    let f = t_monomial_partial(lambda, m, true)?;
    let x = expand_in_partial_t_monomials(&f, m + 1)?;
    Ok(x.terms.iter().all(|(_, c)| only_t(c)))
}

/// Every label is dominated by `lambda` (as partitions).
fn dominated<C>(terms: &[(Composition, C)], lambda: &Composition) -> Result<bool> {
    Ok(terms.iter().all(|(mu, _)| matches!(dominance(mu.parts(), lambda.parts()), Relation::Less | Relation::Equal)))
}

fn hall_littlewood_suite(params: &SuiteParams) -> Vec<PropertyReport> {
    per_weight(partitions_up_to(params.n, params.maxdeg), |lambda, out| {
        let p = match hall_littlewood(lambda, HallLittlewoodKind::P) {
            Ok(p) => p,
            Err(err) => {
                out.push("symmetric", Err(err), lambda);
                return;
            }
        };
        out.push("symmetric", Ok(p.is_symmetric()), lambda);
        let unitri = expand_symmetric(&p, Basis::MonomialSymmetric)
            .and_then(|x| Ok(x.coeff(lambda).is_one() && dominated(&x.terms, lambda)?));
        out.push("monomial_unitriangular", unitri, lambda);
        let at_zero = specialize(&p, None, Some(0)).and_then(|s| Ok(s == schur_polynomial(lambda)?));
        out.push("schur_at_t_zero", at_zero, lambda);
        out.push("monomial_symmetric_is_symmetric", monomial_symmetric(lambda).map(|m| m.is_symmetric()), lambda);
    })
}

fn kostka(params: &SuiteParams) -> Vec<PropertyReport> {
    let degrees: Vec<u32> = (1..=params.maxdeg).filter(|&d| d as usize <= params.n).collect();
    let mut jobs = Vec::new();
    for d in degrees {
        let mut out = Checks::default();
        let ctx = format!("degree {d}");
        match kostka_matrix(d, params.n) {
            Ok(k) => {
                out.push("kostka_integrality", Ok(k.is_integral()), &ctx);
                out.push("kostka_unit_diagonal", Ok(k.has_unit_diagonal()), &ctx);
                let violations = k.triangularity_violations();
                let listed: Vec<String> = violations.iter().map(|(a, b)| format!("{a}->{b}")).collect();
                out.push(
                    "kostka_dominance_triangular",
                    Ok(violations.is_empty()),
                    format!("{ctx}: {}", listed.join(" ")),
                );
                let identity = k.specialize(Some(0), Some(0)).map(|s| {
                    s.entries.iter().enumerate().all(|(i, row)| {
                        row.iter().enumerate().all(|(j, c)| if i == j { c.is_one() } else { c.is_zero() })
                    })
                });
                out.push("kostka_identity_at_zero", identity, &ctx);
            }
            Err(err) => out.push("kostka_integrality", Err(err), &ctx),
        }
        for mu in partitions(d, params.n) {
            out.push("t_schur_to_q_unitriangular", t_schur_unitriangular(&mu), format!("{ctx} mu={mu}"));
        }
        jobs.push(out);
    }
    tally(jobs)
}

/// `S_mu = Q_mu + sum_{nu > mu} c_nu Q_nu`.
fn t_schur_unitriangular(mu: &Composition) -> Result<bool> {
    let x = expand_symmetric(&t_schur(mu)?, Basis::HallLittlewoodQ)?;
    Ok(x.coeff(mu).is_one()
        && x.terms
            .iter()
            .all(|(nu, _)| matches!(dominance(nu.parts(), mu.parts()), Relation::Greater | Relation::Equal)))
}

fn jack(params: &SuiteParams) -> Vec<PropertyReport> {
    let n = params.n;
    let mut reports = per_weight(weights_up_to(n, params.maxdeg), |lambda, out| {
        let f = match jack_nonsym(lambda) {
            Ok(f) => f,
            Err(err) => {
                out.push("nonsymmetric_positivity", Err(err), lambda);
                return;
            }
        };
        for m in lambda.length()..=n {
            let ok = expand_in_limit_monomials(&f, m).map(|x| x.is_natural());
            out.push("nonsymmetric_positivity", ok, format!("{lambda} m={m}"));
        }
    });
    reports.extend(per_weight(partitions_up_to(n, params.maxdeg), |lambda, out| {
        let ok = jack_sym(lambda).and_then(|f| {
            let x = expand_in_limit_monomials(&f, 0)?;
            Ok(f.is_symmetric() && x.is_natural())
        });
        out.push("symmetric_positivity", ok, lambda);
    }));
    reports
}

pub const LIMIT_T0: f64 = 0.999;
pub const LIMIT_TOLERANCE: f64 = 5e-3;

fn jack_limit(params: &SuiteParams) -> Vec<PropertyReport> {
    per_weight(weights_up_to(params.n, params.maxdeg.min(3)), |lambda, out| {
        for alpha in [1u32, 2] {
            let err = numeric_limit_check(lambda, alpha, LIMIT_T0);
            let ctx = match &err {
                Ok(e) => format!("{lambda} alpha={alpha} error={e:.6}"),
                Err(_) => format!("{lambda} alpha={alpha}"),
            };
            out.push("numeric_limit", err.map(|e| e < LIMIT_TOLERANCE), ctx);
        }
    })
}
