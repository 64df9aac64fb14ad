//! Patch machinery: point configurations, blending functions as products of
//! affine forms, normalization, control-point maps and the tautological map.

use std::collections::HashSet;

use nalgebra::DMatrix;
use num_traits::{One, Signed, Zero};

use crate::error::{invalid, Error, Result};
use crate::rational::{self, Rational};

/// Facet forms may be slightly negative on legitimate boundary arguments.
pub const DOMAIN_TOL: f64 = 1e-12;

/// Below this every float blending value counts as zero.
pub const ZERO_FLOOR: f64 = 1e-300;

/// Finite set of distinct points in `R^d` with exact rational coordinates,
/// affinely spanning `R^d`.
#[derive(Debug, Clone, PartialEq)]
pub struct PointConfig {
    dim: usize,
    points: Vec<Vec<Rational>>,
    labels: Option<Vec<String>>,
    float: Vec<Vec<f64>>,
}

impl PointConfig {
    pub fn new(points: Vec<Vec<Rational>>) -> Result<Self> {
        let Some(first) = points.first() else {
            return invalid("point configuration is empty");
        };
        let dim = first.len();
        if dim == 0 {
            return invalid("points must have positive dimension");
        }
        if let Some(p) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, got: p.len() });
        }
        let mut seen = HashSet::new();
        for p in &points {
            if !seen.insert(p.clone()) {
                return invalid(format!("duplicate point {}", fmt_point(p)));
            }
        }
        let diffs: Vec<Vec<Rational>> =
            points[1..].iter().map(|p| p.iter().zip(first).map(|(a, b)| a - b).collect()).collect();
        if rational::rank(&diffs) != dim {
            return Err(Error::DegenerateHull);
        }
        let float = points.iter().map(|p| p.iter().map(rational::to_f64).collect()).collect();
        Ok(Self { dim, points, labels: None, float })
    }

    pub fn from_ints(points: &[&[i64]]) -> Result<Self> {
        Self::new(points.iter().map(|p| p.iter().map(|&c| rational::int(c)).collect()).collect())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.points.len() {
            return Err(Error::DimensionMismatch { expected: self.points.len(), got: labels.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    pub fn points_f64(&self) -> &[Vec<f64>] {
        &self.float
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Integer coordinates, if every point is a lattice point.
    pub fn lattice_points(&self) -> Option<Vec<Vec<i64>>> {
        self.points.iter().map(|p| p.iter().map(rational::as_i64).collect()).collect()
    }

    pub fn translated(&self, by: &[Rational]) -> Result<Self> {
        if by.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: by.len() });
        }
        let pts = self.points.iter().map(|p| p.iter().zip(by).map(|(a, b)| a + b).collect()).collect();
        let mut out = Self::new(pts)?;
        out.labels = self.labels.clone();
        Ok(out)
    }

    /// Reorders points so that entry `i` of the result is entry `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let pts = permute(&self.points, perm)?;
        let mut out = Self::new(pts)?;
        out.labels = self.labels.as_ref().map(|l| permute(l, perm)).transpose()?;
        Ok(out)
    }

    /// Axis-aligned bounding box `(lo, hi)` in floating point.
    pub fn bounding_box(&self) -> (Vec<f64>, Vec<f64>) {
        let mut lo = vec![f64::INFINITY; self.dim];
        let mut hi = vec![f64::NEG_INFINITY; self.dim];
        for p in &self.float {
            for k in 0..self.dim {
                lo[k] = lo[k].min(p[k]);
                hi[k] = hi[k].max(p[k]);
            }
        }
        (lo, hi)
    }
}

pub(crate) fn permute<T: Clone>(items: &[T], perm: &[usize]) -> Result<Vec<T>> {
    if perm.len() != items.len() {
        return Err(Error::DimensionMismatch { expected: items.len(), got: perm.len() });
    }
    let mut used = vec![false; items.len()];
    perm.iter()
        .map(|&i| match used.get_mut(i) {
            Some(u) if !*u => {
                *u = true;
                Ok(items[i].clone())
            }
            _ => invalid("not a permutation"),
        })
        .collect()
}

fn fmt_point(p: &[Rational]) -> String {
    let parts: Vec<String> = p.iter().map(rational::format).collect();
    format!("({})", parts.join(", "))
}

/// Strictly positive rational weights, one per point.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    values: Vec<Rational>,
    float: Vec<f64>,
}

impl WeightVector {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if values.is_empty() {
            return invalid("weight vector is empty");
        }
        if values.iter().any(|w| !w.is_positive()) {
            return invalid("weights must be strictly positive");
        }
        let float = values.iter().map(rational::to_f64).collect();
        Ok(Self { values, float })
    }

    pub fn from_ints(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&w| rational::int(w)).collect())
    }

    pub fn ones(n: usize) -> Self {
        Self::new(vec![Rational::one(); n]).expect("unit weights are valid")
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn values_f64(&self) -> &[f64] {
        &self.float
    }

    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        Self::new(permute(&self.values, perm)?)
    }
}

/// Affine form `x -> <coeffs, x> + constant` with rational data.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineForm {
    coeffs: Vec<Rational>,
    constant: Rational,
}

impl AffineForm {
    pub fn new(coeffs: Vec<Rational>, constant: Rational) -> Self {
        Self { coeffs, constant }
    }

    pub fn from_ints(coeffs: &[i64], constant: i64) -> Self {
        Self::new(coeffs.iter().map(|&c| rational::int(c)).collect(), rational::int(constant))
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        self.coeffs.iter().zip(x).fold(rational::to_f64(&self.constant), |acc, (c, xi)| acc + rational::to_f64(c) * xi)
    }

    pub fn eval_exact(&self, x: &[Rational]) -> Rational {
        self.coeffs.iter().zip(x).fold(self.constant.clone(), |acc, (c, xi)| acc + c * xi)
    }
}

/// Bounding inequalities `h_i(x) >= 0` of the domain polytope. Normals are
/// primitive integer vectors and the region they cut out is bounded.
#[derive(Debug, Clone, PartialEq)]
pub struct FacetSystem {
    forms: Vec<AffineForm>,
    float: Vec<(Vec<f64>, f64)>,
}

impl FacetSystem {
    pub fn new(forms: Vec<AffineForm>) -> Result<Self> {
        let Some(first) = forms.first() else {
            return invalid("facet system is empty");
        };
        let dim = first.dim();
        for f in &forms {
            if f.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: f.dim() });
            }
            if f.coeffs.iter().any(|c| !c.is_integer()) {
                return invalid("facet normals must be integer vectors");
            }
            let prim = rational::primitive_integer(&f.coeffs);
            let scaled: Vec<Rational> = prim.into_iter().map(Rational::from_integer).collect();
            if scaled != f.coeffs || f.coeffs.iter().all(Zero::is_zero) {
                return invalid("facet normals must be primitive and nonzero");
            }
        }
        if !recession_cone_is_trivial(&forms, dim) {
            return invalid("facet inequalities describe an unbounded region");
        }
        let float = forms
            .iter()
            .map(|f| (f.coeffs.iter().map(rational::to_f64).collect(), rational::to_f64(&f.constant)))
            .collect();
        Ok(Self { forms, float })
    }

    pub fn forms(&self) -> &[AffineForm] {
        &self.forms
    }

    pub fn dim(&self) -> usize {
        self.forms[0].dim()
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn values(&self, x: &[f64]) -> Vec<f64> {
        self.float.iter().map(|(v, c)| v.iter().zip(x).fold(*c, |acc, (vi, xi)| acc + vi * xi)).collect()
    }

    /// Smallest facet value at `x`; nonnegative exactly on the polytope.
    pub fn min_value(&self, x: &[f64]) -> f64 {
        self.values(x).into_iter().fold(f64::INFINITY, f64::min)
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dim() && self.min_value(x) >= -DOMAIN_TOL
    }

    pub fn contains_exact(&self, x: &[Rational]) -> bool {
        x.len() == self.dim() && self.forms.iter().all(|f| !f.eval_exact(x).is_negative())
    }

    /// Checks `h_i(a) >= 0` for every point of the configuration.
    pub fn check_contains(&self, config: &PointConfig) -> Result<()> {
        if config.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: config.dim(), got: self.dim() });
        }
        if config.points().iter().all(|a| self.contains_exact(a)) {
            Ok(())
        } else {
            invalid("a configuration point violates a facet inequality")
        }
    }
}

// Bounded iff {u : <v_i, u> >= 0 for all i} = {0}. A nontrivial pointed cone
// has an extreme ray where d-1 independent constraints are tight.
fn recession_cone_is_trivial(forms: &[AffineForm], dim: usize) -> bool {
    let normals: Vec<Vec<Rational>> = forms.iter().map(|f| f.coeffs.clone()).collect();
    if rational::rank(&normals) < dim {
        return false;
    }
    let in_cone = |u: &[Rational]| {
        normals.iter().all(|v| !v.iter().zip(u).fold(Rational::zero(), |acc, (a, b)| acc + a * b).is_negative())
    };
    if dim == 1 {
        return !in_cone(&[Rational::one()]) && !in_cone(&[-Rational::one()]);
    }
    let mut found_ray = false;
    for_each_subset(normals.len(), dim - 1, &mut |idx| {
        if found_ray {
            return;
        }
        let rows: Vec<Vec<Rational>> = idx.iter().map(|&i| normals[i].clone()).collect();
        if let Some(u) = rational::kernel_line(&rows, dim) {
            let neg: Vec<Rational> = u.iter().map(|c| -c).collect();
            if in_cone(&u) || in_cone(&neg) {
                found_ray = true;
            }
        }
    });
    !found_ray
}

pub(crate) fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::with_capacity(k), f);
}

/// A blending function stored as `coefficient * prod_j form_j(x)^exp_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct FormProduct {
    coefficient: Rational,
    factors: Vec<(AffineForm, u32)>,
}

impl FormProduct {
    pub fn new(coefficient: Rational, factors: Vec<(AffineForm, u32)>) -> Result<Self> {
        if !coefficient.is_positive() {
            return invalid("form product coefficient must be positive");
        }
        Ok(Self { coefficient, factors })
    }

    pub fn coefficient(&self) -> &Rational {
        &self.coefficient
    }

    pub fn factors(&self) -> &[(AffineForm, u32)] {
        &self.factors
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        self.factors
            .iter()
            .fold(rational::to_f64(&self.coefficient), |acc, (form, e)| acc * form.eval(x).powi(*e as i32))
    }

    pub fn eval_exact(&self, x: &[Rational]) -> Rational {
        self.factors
            .iter()
            .fold(self.coefficient.clone(), |acc, (form, e)| acc * rational::pow(&form.eval_exact(x), *e))
    }
}

/// Point of a probability simplex.
#[derive(Debug, Clone, PartialEq)]
pub struct SimplexPoint {
    coords: Vec<f64>,
}

impl SimplexPoint {
    pub const SUM_TOL: f64 = 1e-12;

    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return invalid("simplex point is empty");
        }
        if coords.iter().any(|c| !(c.is_finite() && *c >= 0.0)) {
            return invalid("simplex coordinates must be finite and nonnegative");
        }
        let s: f64 = coords.iter().sum();
        if (s - 1.0).abs() > Self::SUM_TOL {
            return invalid(format!("simplex coordinates sum to {s}, not 1"));
        }
        Ok(Self { coords })
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.coords
    }
}

/// Scales a nonnegative vector to sum to one. Input that already sums to one
/// up to rounding is returned unchanged, which makes the operation idempotent.
pub fn normalize(values: &[f64]) -> Result<SimplexPoint> {
    if values.iter().any(|v| !(v.is_finite() && *v >= 0.0)) {
        return invalid("values to normalize must be finite and nonnegative");
    }
    if values.iter().all(|&v| v < ZERO_FLOOR) {
        return Err(Error::AllZero);
    }
    let s: f64 = values.iter().sum();
    if (s - 1.0).abs() <= values.len() as f64 * f64::EPSILON {
        return Ok(SimplexPoint { coords: values.to_vec() });
    }
    Ok(SimplexPoint { coords: values.iter().map(|v| v / s).collect() })
}

pub fn normalize_exact(values: &[Rational]) -> Result<Vec<Rational>> {
    if values.iter().any(Signed::is_negative) {
        return invalid("values to normalize must be nonnegative");
    }
    let s = values.iter().fold(Rational::zero(), |acc, v| acc + v);
    if s.is_zero() {
        return Err(Error::AllZero);
    }
    Ok(values.iter().map(|v| v / &s).collect())
}

/// Blending functions over a point configuration, optionally with control
/// points and a tuned set of tautological points.
#[derive(Debug, Clone, PartialEq)]
pub struct PatchSpec {
    config: PointConfig,
    weights: WeightVector,
    basis: Vec<FormProduct>,
    taut_points: Option<PointConfig>,
    control_points: Option<Vec<Vec<f64>>>,
    facets: FacetSystem,
}

impl PatchSpec {
    pub fn new(
        config: PointConfig,
        weights: WeightVector,
        basis: Vec<FormProduct>,
        facets: FacetSystem,
    ) -> Result<Self> {
        if weights.len() != config.len() {
            return Err(Error::DimensionMismatch { expected: config.len(), got: weights.len() });
        }
        if basis.len() != config.len() {
            return Err(Error::DimensionMismatch { expected: config.len(), got: basis.len() });
        }
        for fp in &basis {
            if let Some((f, _)) = fp.factors.iter().find(|(f, _)| f.dim() != config.dim()) {
                return Err(Error::DimensionMismatch { expected: config.dim(), got: f.dim() });
            }
        }
        facets.check_contains(&config)?;
        Ok(Self { config, weights, basis, taut_points: None, control_points: None, facets })
    }

    pub fn with_taut_points(mut self, taut: PointConfig) -> Result<Self> {
        if taut.len() != self.config.len() {
            return Err(Error::DimensionMismatch { expected: self.config.len(), got: taut.len() });
        }
        if taut.dim() != self.config.dim() {
            return Err(Error::DimensionMismatch { expected: self.config.dim(), got: taut.dim() });
        }
        self.taut_points = Some(taut);
        Ok(self)
    }

    pub fn with_control_points(mut self, controls: Vec<Vec<f64>>) -> Result<Self> {
        if controls.len() != self.config.len() {
            return Err(Error::DimensionMismatch { expected: self.config.len(), got: controls.len() });
        }
        let Some(first) = controls.first() else {
            return invalid("control points are empty");
        };
        let ell = first.len();
        if ell == 0 {
            return invalid("control points must have positive dimension");
        }
        if let Some(c) = controls.iter().find(|c| c.len() != ell) {
            return Err(Error::DimensionMismatch { expected: ell, got: c.len() });
        }
        if controls.iter().flatten().any(|c| !c.is_finite()) {
            return invalid("control points must be finite");
        }
        self.control_points = Some(controls);
        Ok(self)
    }

    pub fn config(&self) -> &PointConfig {
        &self.config
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn basis(&self) -> &[FormProduct] {
        &self.basis
    }

    pub fn taut_points(&self) -> Option<&PointConfig> {
        self.taut_points.as_ref()
    }

    /// Tuned points when present, otherwise the configuration itself.
    pub fn effective_taut_points(&self) -> &PointConfig {
        self.taut_points.as_ref().unwrap_or(&self.config)
    }

    pub fn control_points(&self) -> Option<&[Vec<f64>]> {
        self.control_points.as_deref()
    }

    pub fn facets(&self) -> &FacetSystem {
        &self.facets
    }

    pub fn dim(&self) -> usize {
        self.config.dim()
    }

    /// Same patch with its index order permuted.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let mut out = Self::new(
            self.config.permuted(perm)?,
            self.weights.permuted(perm)?,
            permute(&self.basis, perm)?,
            self.facets.clone(),
        )?;
        if let Some(t) = &self.taut_points {
            out = out.with_taut_points(t.permuted(perm)?)?;
        }
        if let Some(c) = &self.control_points {
            out = out.with_control_points(permute(c, perm)?)?;
        }
        Ok(out)
    }

    fn check_domain(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: x.len() });
        }
        if x.iter().any(|c| !c.is_finite()) || !self.facets.contains(x) {
            return Err(Error::OutsideDomain);
        }
        Ok(())
    }

    fn check_domain_exact(&self, x: &[Rational]) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: x.len() });
        }
        if !self.facets.contains_exact(x) {
            return Err(Error::OutsideDomain);
        }
        Ok(())
    }

    /// Raw blending values `beta_a(x)`; no domain check.
    pub fn basis_values(&self, x: &[f64]) -> Vec<f64> {
        self.basis.iter().map(|b| b.eval(x)).collect()
    }

    pub fn basis_values_exact(&self, x: &[Rational]) -> Vec<Rational> {
        self.basis.iter().map(|b| b.eval_exact(x)).collect()
    }

    /// Normalized blending values at a point of the domain.
    pub fn normalized_basis(&self, x: &[f64]) -> Result<SimplexPoint> {
        self.check_domain(x)?;
        // round off can push a vanishing factor slightly negative on the boundary
        let vals: Vec<f64> = self.basis_values(x).into_iter().map(|v| v.max(0.0)).collect();
        normalize(&vals)
    }

    pub fn normalized_basis_exact(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        self.check_domain_exact(x)?;
        normalize_exact(&self.basis_values_exact(x))
    }
}

fn combine(weights: &[f64], points: &[Vec<f64>]) -> Vec<f64> {
    let mut out = vec![0.0; points[0].len()];
    for (w, p) in weights.iter().zip(points) {
        for (o, c) in out.iter_mut().zip(p) {
            *o += w * c;
        }
    }
    out
}

/// `F(x) = sum beta_a(x) b_a / sum beta_a(x)`.
pub fn eval_patch(spec: &PatchSpec, x: &[f64]) -> Result<Vec<f64>> {
    let controls = spec.control_points().ok_or(Error::MissingControlPoints)?;
    let beta = spec.normalized_basis(x)?;
    Ok(combine(beta.coords(), controls))
}

/// The control-point map with the index points (or tuned points) as controls.
pub fn tautological(spec: &PatchSpec, x: &[f64]) -> Result<Vec<f64>> {
    let beta = spec.normalized_basis(x)?;
    Ok(combine(beta.coords(), spec.effective_taut_points().points_f64()))
}

pub fn tautological_exact(spec: &PatchSpec, x: &[Rational]) -> Result<Vec<Rational>> {
    let beta = spec.normalized_basis_exact(x)?;
    let taut = spec.effective_taut_points().points();
    let mut out = vec![Rational::zero(); spec.dim()];
    for (b, t) in beta.iter().zip(taut) {
        for (o, c) in out.iter_mut().zip(t) {
            *o += b * c;
        }
    }
    Ok(out)
}

/// Relative singular-value cutoff for the numerical rank.
pub const RANK_TOL: f64 = 1e-10;

/// Numerical rank of the samples-by-basis evaluation matrix.
pub fn nondegeneracy_rank(spec: &PatchSpec, samples: &[Vec<f64>]) -> Result<usize> {
    let n = spec.basis().len();
    if samples.len() < n {
        return Err(Error::TooFewSamples { needed: n, got: samples.len() });
    }
    let mut m = DMatrix::<f64>::zeros(samples.len(), n);
    for (i, x) in samples.iter().enumerate() {
        if x.len() != spec.dim() {
            return Err(Error::DimensionMismatch { expected: spec.dim(), got: x.len() });
        }
        for (j, v) in spec.basis_values(x).into_iter().enumerate() {
            m[(i, j)] = v;
        }
    }
    let sv = m.singular_values();
    let largest = sv.iter().cloned().fold(0.0, f64::max);
    if largest == 0.0 {
        return Ok(0);
    }
    Ok(sv.iter().filter(|&&s| s > RANK_TOL * largest).count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::{int, ratio};

    fn bernstein2_beta1() -> FormProduct {
        FormProduct::new(int(2), vec![(AffineForm::from_ints(&[1], 0), 1), (AffineForm::from_ints(&[-1], 1), 1)])
            .unwrap()
    }

    #[test]
    fn eval_form_product_examples() {
        assert_eq!(bernstein2_beta1().eval(&[0.5]), 0.5);
        let hex = fixtures::hexagon_wachspress_spec();
        // index 3 is the vertex (1,1)
        assert_eq!(hex.config().points()[3], vec![int(1), int(1)]);
        assert_eq!(hex.basis()[3].eval_exact(&[int(0), int(0)]), int(1));
        let pent = fixtures::pentagon_tuned_spec();
        assert_eq!(pent.basis()[0].eval_exact(&[int(0), int(0)]), int(1296));
    }

    #[test]
    fn normalize_examples() {
        let p = normalize(&[1.0, 1.0, 1.0]).unwrap();
        for c in p.coords() {
            assert!((c - 1.0 / 3.0).abs() < 1e-16);
        }
        let hex = fixtures::hexagon_wachspress_spec();
        let vals = hex.basis_values_exact(&[int(0), int(0)]);
        assert!(vals.iter().all(|v| *v == int(1)));
        let p = normalize_exact(&vals).unwrap();
        assert!(p.iter().all(|v| *v == ratio(1, 6)));
        assert_eq!(normalize(&[0.0, 0.0, 0.0]), Err(Error::AllZero));
        assert_eq!(normalize_exact(&[int(0), int(0)]), Err(Error::AllZero));
    }

    #[test]
    fn eval_patch_examples() {
        let b1 = fixtures::bernstein_spec(1).with_control_points(vec![vec![1.0, 2.0], vec![5.0, -2.0]]).unwrap();
        let y = eval_patch(&b1, &[0.3]).unwrap();
        assert!((y[0] - (0.7 * 1.0 + 0.3 * 5.0)).abs() < 1e-15);
        assert!((y[1] - (0.7 * 2.0 - 0.3 * 2.0)).abs() < 1e-15);

        let same = fixtures::pentagon_toric_spec().with_control_points(vec![vec![3.0, -1.0, 2.0]; 8]).unwrap();
        let y = eval_patch(&same, &[0.4, 1.3]).unwrap();
        assert!(y.iter().zip([3.0, -1.0, 2.0]).all(|(a, b)| (a - b).abs() < 1e-14));

        let hex = fixtures::hexagon_wachspress_spec();
        let controls = hex.config().points_f64().to_vec();
        let hex = hex.with_control_points(controls).unwrap();
        let y = eval_patch(&hex, &[0.5, 0.25]).unwrap();
        assert!((y[0] - 0.5).abs() < 1e-15 && (y[1] - 0.25).abs() < 1e-15);
    }

    #[test]
    fn eval_patch_errors() {
        let b = fixtures::bernstein_spec(2);
        assert_eq!(eval_patch(&b, &[0.5]), Err(Error::MissingControlPoints));
        let b = b.with_control_points(vec![vec![0.0]; 3]).unwrap();
        assert_eq!(eval_patch(&b, &[1.5]), Err(Error::OutsideDomain));
        assert!(eval_patch(&b, &[1.0 + 1e-13]).is_ok());
    }

    #[test]
    fn tautological_examples() {
        let b = fixtures::bernstein_spec(3);
        for x in [0.0, 0.2, 0.5, 0.9, 1.0] {
            assert!((tautological(&b, &[x]).unwrap()[0] - x).abs() < 1e-15);
        }
        let hex = fixtures::hexagon_wachspress_spec();
        assert_eq!(tautological_exact(&hex, &[ratio(1, 2), ratio(1, 4)]).unwrap(), vec![ratio(1, 2), ratio(1, 4)]);
        // untuned pentagon at (1,1): weights/28 in exact arithmetic, see tests/operations.rs
        let pent = fixtures::pentagon_toric_spec();
        let v = tautological(&pent, &[1.0, 1.0]).unwrap();
        assert!((v[0] - 1.0).abs() > 1e-3);
    }

    #[test]
    fn nondegeneracy_examples() {
        let b = fixtures::bernstein_spec(2);
        let samples: Vec<Vec<f64>> = (0..10).map(|i| vec![i as f64 / 9.0]).collect();
        assert_eq!(nondegeneracy_rank(&b, &samples).unwrap(), 3);
        assert_eq!(nondegeneracy_rank(&b, &samples[..2]), Err(Error::TooFewSamples { needed: 3, got: 2 }));

        let mut basis = b.basis().to_vec();
        basis[2] = basis[1].clone();
        let dup = PatchSpec::new(b.config().clone(), b.weights().clone(), basis, b.facets().clone()).unwrap();
        assert!(nondegeneracy_rank(&dup, &samples).unwrap() < 3);
    }

    #[test]
    fn rejects_invalid_construction() {
        assert!(PointConfig::from_ints(&[&[0, 0], &[1, 1], &[2, 2]]).is_err());
        assert!(PointConfig::from_ints(&[&[0], &[0]]).is_err());
        assert!(WeightVector::from_ints(&[1, 0]).is_err());
        // a half-plane is unbounded
        assert!(FacetSystem::new(vec![AffineForm::from_ints(&[1, 0], 0)]).is_err());
        // strip 0 <= x <= 1 is unbounded in y
        assert!(FacetSystem::new(vec![AffineForm::from_ints(&[1, 0], 0), AffineForm::from_ints(&[-1, 0], 1)]).is_err());
        // non-primitive normal
        assert!(FacetSystem::new(vec![AffineForm::from_ints(&[2], 0), AffineForm::from_ints(&[-1], 1)]).is_err());
        assert!(FacetSystem::new(vec![AffineForm::from_ints(&[1], 0), AffineForm::from_ints(&[-1], 1)]).is_ok());
        let tri = FacetSystem::new(vec![
            AffineForm::from_ints(&[1, 0], 0),
            AffineForm::from_ints(&[0, 1], 0),
            AffineForm::from_ints(&[-1, -1], 1),
        ]);
        assert!(tri.is_ok());
    }

    #[test]
    fn subsets_enumerated() {
        let mut n = 0;
        for_each_subset(5, 2, &mut |_| n += 1);
        assert_eq!(n, 10);
    }
}
