//! Linear precision diagnostics: sampled checks of the tautological map,
//! the exact one-dimensional classifier, composed projections with base
//! point detection, and residuals of implicit equations.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::patch::{tautological, FacetSystem, PatchSpec, PointConfig, WeightVector};
use crate::rational::{self, Rational};
use crate::toric::{binomial_quadruples, monomial, monomial_exact};

pub const DEFAULT_PASS_TOL: f64 = 1e-8;
pub const DEFAULT_FAIL_TOL: f64 = 1e-4;
pub const DEFAULT_SEED: u64 = 0;

/// Minimum rejection-sampling acceptance rate.
pub const MIN_ACCEPTANCE: f64 = 1e-3;

/// Float base points: every coordinate below this times the largest monomial.
pub const BASE_POINT_REL_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PrecisionReport {
    #[serde(rename = "samples")]
    pub samples_used: usize,
    pub max_err: f64,
    pub verdict: Verdict,
    pub worst_point: Vec<f64>,
}

impl PrecisionReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

fn verdict(max_err: f64, pass_tol: f64, fail_tol: f64) -> Verdict {
    if max_err < pass_tol {
        Verdict::Pass
    } else if max_err > fail_tol {
        Verdict::Fail
    } else {
        Verdict::Inconclusive
    }
}

/// Uniform samples from the polytope by rejection from its bounding box.
pub fn sample_domain(facets: &FacetSystem, lo: &[f64], hi: &[f64], n: usize, seed: u64) -> Result<Vec<Vec<f64>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    let mut attempts: u64 = 0;
    while out.len() < n {
        let x: Vec<f64> = lo.iter().zip(hi).map(|(l, h)| if h > l { rng.gen_range(*l..=*h) } else { *l }).collect();
        attempts += 1;
        if facets.contains(&x) {
            out.push(x);
        }
        if attempts >= 1000 && (out.len() as f64) < MIN_ACCEPTANCE * attempts as f64 {
            return Err(Error::SamplingFailure);
        }
    }
    Ok(out)
}

/// Points of a regular `n^d` grid over the bounding box that lie in the polytope,
/// in row-major order (last coordinate fastest).
pub fn grid_samples(facets: &FacetSystem, lo: &[f64], hi: &[f64], n: usize) -> Vec<Vec<f64>> {
    let d = lo.len();
    let mut out = Vec::new();
    let mut idx = vec![0usize; d];
    if n < 2 {
        return out;
    }
    loop {
        let x: Vec<f64> = (0..d).map(|k| grid_coord(lo[k], hi[k], idx[k], n)).collect();
        if facets.contains(&x) {
            out.push(x);
        }
        let mut k = d;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < n {
                break;
            }
            idx[k] = 0;
        }
    }
}

pub fn grid_coord(lo: f64, hi: f64, i: usize, n: usize) -> f64 {
    if i + 1 == n {
        hi
    } else {
        lo + (hi - lo) * i as f64 / (n - 1) as f64
    }
}

/// Seeded sampling check that the tautological map is the identity.
pub fn check_linear_precision(
    spec: &PatchSpec,
    n_samples: usize,
    pass_tol: f64,
    fail_tol: f64,
    seed: u64,
) -> Result<PrecisionReport> {
    if n_samples == 0 {
        return Err(Error::TooFewSamples { needed: 1, got: 0 });
    }
    let (lo, hi) = spec.config().bounding_box();
    let samples = sample_domain(spec.facets(), &lo, &hi, n_samples, seed)?;
    check_linear_precision_at(spec, &samples, pass_tol, fail_tol)
}

/// Same check on caller-supplied points of the domain.
pub fn check_linear_precision_at(
    spec: &PatchSpec,
    samples: &[Vec<f64>],
    pass_tol: f64,
    fail_tol: f64,
) -> Result<PrecisionReport> {
    if !(pass_tol < fail_tol) {
        return Err(Error::Invalid("pass_tol must be below fail_tol".into()));
    }
    if samples.is_empty() {
        return Err(Error::TooFewSamples { needed: 1, got: 0 });
    }
    let mut max_err = -1.0;
    let mut worst = samples[0].clone();
    for x in samples {
        let t = tautological(spec, x)?;
        let err = t.iter().zip(x).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        if err > max_err {
            max_err = err;
            worst = x.clone();
        }
    }
    Ok(PrecisionReport {
        samples_used: samples.len(),
        max_err,
        verdict: verdict(max_err, pass_tol, fail_tol),
        worst_point: worst,
    })
}

/// Decides whether `w_0 + w_1 x + ... + w_n x^n` is a pure power `w_n (x + alpha)^n`,
/// returning `alpha` on success. Weights are indexed by `A = {0, ..., n}`.
pub fn rational_lp_1d(weights: &WeightVector) -> Result<(bool, Option<Rational>)> {
    let w = weights.values();
    if w.len() < 2 {
        return Err(Error::WrongDimension);
    }
    let n = w.len() - 1;
    let lead = &w[n];
    let alpha = &w[n - 1] / (rational::int(n as i64) * lead);
    let mut binom = Rational::from_integer(1.into());
    for k in 0..=n {
        // k counts down from the top coefficient: w_{n-k} = w_n C(n,k) alpha^k
        if w[n - k] != lead * &binom * rational::pow(&alpha, k as u32) {
            return Ok((false, None));
        }
        binom = binom * rational::int((n - k) as i64) / rational::int(k as i64 + 1);
    }
    Ok((true, Some(alpha)))
}

/// [`rational_lp_1d`] after checking that the configuration is `{0, ..., n}`.
pub fn rational_lp_1d_for(config: &PointConfig, weights: &WeightVector) -> Result<(bool, Option<Rational>)> {
    if config.dim() != 1 {
        return Err(Error::WrongDimension);
    }
    let expected: Vec<Vec<Rational>> = (0..config.len()).map(|i| vec![rational::int(i as i64)]).collect();
    if config.points() != expected.as_slice() {
        return Err(Error::WrongDimension);
    }
    if weights.len() != config.len() {
        return Err(Error::DimensionMismatch { expected: config.len(), got: weights.len() });
    }
    rational_lp_1d(weights)
}

fn check_projection_args(
    config: &PointConfig,
    weights: &WeightVector,
    targets: &PointConfig,
    xlen: usize,
) -> Result<Vec<Vec<i64>>> {
    if weights.len() != config.len() {
        return Err(Error::DimensionMismatch { expected: config.len(), got: weights.len() });
    }
    if targets.len() != config.len() {
        return Err(Error::DimensionMismatch { expected: config.len(), got: targets.len() });
    }
    if xlen != config.dim() {
        return Err(Error::DimensionMismatch { expected: config.dim(), got: xlen });
    }
    config.lattice_points().ok_or(Error::NonLatticePoints)
}

/// `sum_a w_a x^a (1, t_a)`, not normalized. Zero at base points.
pub fn composed_projection(
    config: &PointConfig,
    weights: &WeightVector,
    targets: &PointConfig,
    x: &[f64],
) -> Result<Vec<f64>> {
    let exps = check_projection_args(config, weights, targets, x.len())?;
    let mut out = vec![0.0; config.dim() + 1];
    for ((e, w), t) in exps.iter().zip(weights.values_f64()).zip(targets.points_f64()) {
        let m = w * monomial(x, e);
        out[0] += m;
        for (o, tk) in out[1..].iter_mut().zip(t) {
            *o += m * tk;
        }
    }
    Ok(out)
}

pub fn composed_projection_exact(
    config: &PointConfig,
    weights: &WeightVector,
    targets: &PointConfig,
    x: &[Rational],
) -> Result<Vec<Rational>> {
    let exps = check_projection_args(config, weights, targets, x.len())?;
    let mut out = vec![Rational::zero(); config.dim() + 1];
    for ((e, w), t) in exps.iter().zip(weights.values()).zip(targets.points()) {
        let m = w * monomial_exact(x, e).ok_or(Error::PoleAtArgument)?;
        for (o, tk) in out[1..].iter_mut().zip(t) {
            *o += &m * tk;
        }
        out[0] += m;
    }
    Ok(out)
}

/// Divides by the 0th coordinate; `None` when it vanishes.
pub fn dehomogenize(v: &[f64]) -> Option<Vec<f64>> {
    (v[0] != 0.0).then(|| v[1..].iter().map(|c| c / v[0]).collect())
}

pub fn dehomogenize_exact(v: &[Rational]) -> Option<Vec<Rational>> {
    (!v[0].is_zero()).then(|| v[1..].iter().map(|c| c / &v[0]).collect())
}

/// Float base-point test relative to the largest monomial magnitude.
pub fn is_base_point(config: &PointConfig, weights: &WeightVector, targets: &PointConfig, x: &[f64]) -> Result<bool> {
    let v = composed_projection(config, weights, targets, x)?;
    let exps = config.lattice_points().ok_or(Error::NonLatticePoints)?;
    let scale = exps.iter().zip(weights.values_f64()).map(|(e, w)| (w * monomial(x, e)).abs()).fold(0.0, f64::max);
    Ok(v.iter().all(|c| c.abs() <= BASE_POINT_REL_TOL * scale))
}

pub fn is_base_point_exact(
    config: &PointConfig,
    weights: &WeightVector,
    targets: &PointConfig,
    x: &[Rational],
) -> Result<bool> {
    Ok(composed_projection_exact(config, weights, targets, x)?.iter().all(Zero::is_zero))
}

/// Polynomial with rational coefficients; each term carries an exponent per variable.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    terms: Vec<(Rational, Vec<u32>)>,
}

impl Polynomial {
    pub fn new(terms: Vec<(Rational, Vec<u32>)>) -> Self {
        Self { terms }
    }

    pub fn terms(&self) -> &[(Rational, Vec<u32>)] {
        &self.terms
    }

    pub fn eval(&self, y: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(c, e)| rational::to_f64(c) * y.iter().zip(e).map(|(yi, &k)| yi.powi(k as i32)).product::<f64>())
            .sum()
    }

    pub fn eval_exact(&self, y: &[Rational]) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (c, e)| {
            acc + y.iter().zip(e).fold(c.clone(), |m, (yi, &k)| m * rational::pow(yi, k))
        })
    }
}

/// Polynomials in variables indexed by the points of a configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct ImplicitSystem {
    nvars: usize,
    polynomials: Vec<Polynomial>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FixtureFile {
    #[allow(dead_code)]
    format: String,
    version: u32,
    #[allow(dead_code)]
    description: Option<String>,
    variables: Vec<Vec<i64>>,
    groups: BTreeMap<String, Vec<Vec<FixtureTerm>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FixtureTerm {
    coeff: String,
    monomial: Vec<Vec<i64>>,
}

impl ImplicitSystem {
    pub fn new(nvars: usize, polynomials: Vec<Polynomial>) -> Result<Self> {
        for p in &polynomials {
            if let Some((_, e)) = p.terms.iter().find(|(_, e)| e.len() != nvars) {
                return Err(Error::DimensionMismatch { expected: nvars, got: e.len() });
            }
        }
        Ok(Self { nvars, polynomials })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn polynomials(&self) -> &[Polynomial] {
        &self.polynomials
    }

    /// Parses the versioned fixture format, keeping the named groups and
    /// ordering variables as in `order`.
    pub fn from_fixture_json(json: &str, groups: &[&str], order: &[[i64; 2]]) -> Result<Self> {
        let file: FixtureFile = serde_json::from_str(json).map_err(|e| Error::Invalid(e.to_string()))?;
        if file.version != 1 {
            return Err(Error::Invalid(format!("unsupported fixture version {}", file.version)));
        }
        let position = |v: &[i64]| order.iter().position(|o| o.as_slice() == v);
        if file.variables.len() != order.len() || file.variables.iter().any(|v| position(v).is_none()) {
            return Err(Error::Invalid("fixture variables do not match the requested order".into()));
        }
        let mut polys = Vec::new();
        for g in groups {
            let list = file.groups.get(*g).ok_or_else(|| Error::Invalid(format!("missing group {g}")))?;
            for poly in list {
                let mut terms = Vec::new();
                for t in poly {
                    let mut e = vec![0u32; order.len()];
                    for v in &t.monomial {
                        let i = position(v).ok_or_else(|| Error::Invalid(format!("unknown variable {v:?}")))?;
                        e[i] += 1;
                    }
                    terms.push((rational::parse(&t.coeff)?, e));
                }
                polys.push(Polynomial::new(terms));
            }
        }
        Self::new(order.len(), polys)
    }
}

/// Largest absolute value of the system's polynomials at `p`; zero for an empty system.
pub fn implicit_residual(system: &ImplicitSystem, p: &[f64]) -> Result<f64> {
    if p.len() != system.nvars {
        return Err(Error::DimensionMismatch { expected: system.nvars, got: p.len() });
    }
    Ok(system.polynomials.iter().map(|q| q.eval(p).abs()).fold(0.0, f64::max))
}

pub fn implicit_residual_exact(system: &ImplicitSystem, p: &[Rational]) -> Result<Rational> {
    if p.len() != system.nvars {
        return Err(Error::DimensionMismatch { expected: system.nvars, got: p.len() });
    }
    Ok(system.polynomials.iter().map(|q| q.eval_exact(p).abs()).max().unwrap_or_else(Rational::zero))
}

/// Largest scaled violation `|p_a p_b w_c w_d - p_c p_d w_a w_b| / max(w_a w_b, w_c w_d)`
/// over quadruples with `a + b = c + d`.
pub fn binomial_relation_residual(p: &[f64], config: &PointConfig, weights: &WeightVector) -> Result<f64> {
    if p.len() != config.len() || weights.len() != config.len() {
        return Err(Error::DimensionMismatch { expected: config.len(), got: p.len() });
    }
    let w = weights.values_f64();
    Ok(binomial_quadruples(config)
        .into_iter()
        .map(|(a, b, c, d)| {
            let (wab, wcd) = (w[a] * w[b], w[c] * w[d]);
            (p[a] * p[b] * wcd - p[c] * p[d] * wab).abs() / wab.max(wcd)
        })
        .fold(0.0, f64::max))
}

pub fn binomial_relation_residual_exact(
    p: &[Rational],
    config: &PointConfig,
    weights: &WeightVector,
) -> Result<Rational> {
    if p.len() != config.len() || weights.len() != config.len() {
        return Err(Error::DimensionMismatch { expected: config.len(), got: p.len() });
    }
    let w = weights.values();
    Ok(binomial_quadruples(config)
        .into_iter()
        .map(|(a, b, c, d)| {
            let (wab, wcd) = (&w[a] * &w[b], &w[c] * &w[d]);
            let num = (&p[a] * &p[b] * &wcd - &p[c] * &p[d] * &wab).abs();
            num / wab.max(wcd)
        })
        .max()
        .unwrap_or_else(Rational::zero))
}
