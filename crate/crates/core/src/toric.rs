//! Toric constructions: monomial parametrization, toric Bézier bases,
//! the weighted Laurent polynomial and its toric differential, Bézier
//! simploids and the lift of a configuration into the probability simplex.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::hull;
use crate::patch::{
    normalize, normalize_exact, AffineForm, FacetSystem, FormProduct, PointConfig, SimplexPoint, WeightVector,
    ZERO_FLOOR,
};
use crate::rational::{self, Rational};

/// `sum_a w_a x^a` with integer exponent vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentPolynomial {
    terms: Vec<(Vec<i64>, Rational)>,
}

impl LaurentPolynomial {
    pub fn new(terms: Vec<(Vec<i64>, Rational)>) -> Result<Self> {
        let Some((first, _)) = terms.first() else {
            return Err(Error::Invalid("polynomial has no terms".into()));
        };
        let d = first.len();
        let mut seen = std::collections::HashSet::new();
        for (e, c) in &terms {
            if e.len() != d {
                return Err(Error::DimensionMismatch { expected: d, got: e.len() });
            }
            if !seen.insert(e.clone()) {
                return Err(Error::Invalid("repeated exponent vector".into()));
            }
            if !c.is_positive() {
                return Err(Error::Invalid("coefficients must be positive".into()));
            }
        }
        Ok(Self { terms })
    }

    pub fn terms(&self) -> &[(Vec<i64>, Rational)] {
        &self.terms
    }

    pub fn dim(&self) -> usize {
        self.terms[0].0.len()
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        self.terms.iter().map(|(e, c)| rational::to_f64(c) * monomial(x, e)).sum()
    }

    pub fn eval_exact(&self, x: &[Rational]) -> Option<Rational> {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            acc += c * monomial_exact(x, e)?;
        }
        Some(acc)
    }

    /// `(x_i df/dx_i)(x) / f(x)` for each coordinate.
    pub fn toric_differential(&self, x: &[f64]) -> Result<Vec<f64>> {
        let d = self.dim();
        if x.len() != d {
            return Err(Error::DimensionMismatch { expected: d, got: x.len() });
        }
        let mut f = 0.0;
        let mut num = vec![0.0; d];
        for (e, c) in &self.terms {
            let m = rational::to_f64(c) * monomial(x, e);
            f += m;
            for (n, &ei) in num.iter_mut().zip(e) {
                *n += ei as f64 * m;
            }
        }
        if !(f.abs() >= ZERO_FLOOR) {
            return Err(Error::PoleAtArgument);
        }
        Ok(num.into_iter().map(|n| n / f).collect())
    }

    pub fn toric_differential_exact(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        let d = self.dim();
        if x.len() != d {
            return Err(Error::DimensionMismatch { expected: d, got: x.len() });
        }
        let mut f = Rational::zero();
        let mut num = vec![Rational::zero(); d];
        for (e, c) in &self.terms {
            let m = c * monomial_exact(x, e).ok_or(Error::PoleAtArgument)?;
            for (n, &ei) in num.iter_mut().zip(e) {
                *n += rational::int(ei) * &m;
            }
            f += m;
        }
        if f.is_zero() {
            return Err(Error::PoleAtArgument);
        }
        Ok(num.into_iter().map(|n| n / &f).collect())
    }
}

pub(crate) fn monomial(x: &[f64], e: &[i64]) -> f64 {
    x.iter().zip(e).map(|(xi, &ei)| xi.powi(ei as i32)).product()
}

pub(crate) fn monomial_exact(x: &[Rational], e: &[i64]) -> Option<Rational> {
    let mut acc = Rational::one();
    for (xi, &ei) in x.iter().zip(e) {
        acc *= rational::powi(xi, ei)?;
    }
    Some(acc)
}

/// `f_{A,w} = sum_a w_a x^a`.
pub fn laurent_f(config: &PointConfig, weights: &WeightVector) -> Result<LaurentPolynomial> {
    check_weights(config, weights)?;
    let pts = config.lattice_points().ok_or(Error::NonLatticePoints)?;
    LaurentPolynomial::new(pts.into_iter().zip(weights.values().iter().cloned()).collect())
}

pub fn toric_differential(f: &LaurentPolynomial, x: &[f64]) -> Result<Vec<f64>> {
    f.toric_differential(x)
}

fn check_weights(config: &PointConfig, weights: &WeightVector) -> Result<()> {
    if weights.len() != config.len() {
        return Err(Error::DimensionMismatch { expected: config.len(), got: weights.len() });
    }
    Ok(())
}

/// Toric Bézier basis `w_a prod_i h_i(x)^{h_i(a)}`.
pub fn toric_bezier(config: &PointConfig, weights: &WeightVector, facets: &FacetSystem) -> Result<Vec<FormProduct>> {
    check_weights(config, weights)?;
    facets.check_contains(config)?;
    config
        .points()
        .iter()
        .zip(weights.values())
        .map(|(a, w)| {
            let factors = facets
                .forms()
                .iter()
                .map(|h| {
                    let e = h.eval_exact(a);
                    let e =
                        rational::as_i64(&e).and_then(|e| u32::try_from(e).ok()).ok_or(Error::NonIntegerExponent)?;
                    Ok((h.clone(), e))
                })
                .filter(|f: &Result<(AffineForm, u32)>| !matches!(f, Ok((_, 0))))
                .collect::<Result<Vec<_>>>()?;
            FormProduct::new(w.clone(), factors)
        })
        .collect()
}

/// Facets of `conv(A)` followed by the toric Bézier basis over them.
pub fn toric_bezier_auto(config: &PointConfig, weights: &WeightVector) -> Result<(FacetSystem, Vec<FormProduct>)> {
    let facets = hull::facet_system(config)?;
    let basis = toric_bezier(config, weights, &facets)?;
    Ok((facets, basis))
}

/// `x -> [w_a x^a]` normalized onto the simplex. Exponents may be rational.
pub fn monomial_param(config: &PointConfig, weights: &WeightVector, x: &[f64]) -> Result<SimplexPoint> {
    check_weights(config, weights)?;
    if x.len() != config.dim() {
        return Err(Error::DimensionMismatch { expected: config.dim(), got: x.len() });
    }
    if x.iter().any(|&xi| !(xi > 0.0 && xi.is_finite())) {
        return Err(Error::NonPositiveArgument);
    }
    // work in logs and shift by the max so large exponents do not overflow
    let logs: Vec<f64> = config
        .points_f64()
        .iter()
        .zip(weights.values_f64())
        .map(|(a, w)| w.ln() + a.iter().zip(x).map(|(ai, xi)| ai * xi.ln()).sum::<f64>())
        .collect();
    let top = logs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let vals: Vec<f64> = logs.iter().map(|l| (l - top).exp()).collect();
    normalize(&vals)
}

pub fn monomial_param_exact(config: &PointConfig, weights: &WeightVector, x: &[Rational]) -> Result<Vec<Rational>> {
    check_weights(config, weights)?;
    if x.iter().any(|xi| !xi.is_positive()) {
        return Err(Error::NonPositiveArgument);
    }
    let pts = config.lattice_points().ok_or(Error::NonLatticePoints)?;
    let vals = pts
        .iter()
        .zip(weights.values())
        .map(|(a, w)| monomial_exact(x, a).map(|m| m * w).ok_or(Error::PoleAtArgument))
        .collect::<Result<Vec<_>>>()?;
    normalize_exact(&vals)
}

fn factorial(n: u64) -> Rational {
    (1..=n).fold(Rational::one(), |acc, k| acc * rational::int(k as i64))
}

fn multinomial(n: u64, parts: &[u64]) -> Rational {
    let rest = n - parts.iter().sum::<u64>();
    parts.iter().fold(factorial(n) / factorial(rest), |acc, &p| acc / factorial(p))
}

// integer points of n*Delta_d in graded order: by total degree, then
// reverse-lexicographic within a degree ((1,0) before (0,1))
fn scaled_simplex_points(d: usize, n: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for deg in 0..=n {
        let mut level = Vec::new();
        compositions(d, deg, &mut Vec::new(), &mut level);
        level.sort_by(|a, b| b.cmp(a));
        out.extend(level);
    }
    out
}

fn compositions(d: usize, total: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if cur.len() + 1 == d {
        cur.push(total);
        out.push(cur.clone());
        cur.pop();
        return;
    }
    for k in 0..=total {
        cur.push(k);
        compositions(d, total - k, cur, out);
        cur.pop();
    }
}

/// Integer points of `n_1 Delta_{d_1} x ... x n_m Delta_{d_m}` with products of
/// multinomial weights. The first block varies slowest.
pub fn simploid_config(blocks: &[(usize, u64)]) -> Result<(PointConfig, WeightVector)> {
    if blocks.is_empty() || blocks.iter().any(|&(d, n)| d == 0 || n == 0) {
        return Err(Error::Invalid("simploid blocks need d_i >= 1 and n_i >= 1".into()));
    }
    let mut points: Vec<Vec<Rational>> = vec![Vec::new()];
    let mut weights: Vec<Rational> = vec![Rational::one()];
    for &(d, n) in blocks {
        let block = scaled_simplex_points(d, n);
        let mut np = Vec::with_capacity(points.len() * block.len());
        let mut nw = Vec::with_capacity(points.len() * block.len());
        for (p, w) in points.iter().zip(&weights) {
            for b in &block {
                let mut q = p.clone();
                q.extend(b.iter().map(|&c| rational::int(c as i64)));
                np.push(q);
                nw.push(w * multinomial(n, b));
            }
        }
        points = np;
        weights = nw;
    }
    Ok((PointConfig::new(points)?, WeightVector::new(weights)?))
}

/// A configuration translated into the nonnegative orthant, scaled into the
/// standard simplex and lifted by `u -> (1 - |u|, u)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HomogenizedConfig {
    lifted: Vec<Vec<Rational>>,
    lifted_f64: Vec<Vec<f64>>,
    shift: Vec<Rational>,
    scale: Rational,
    facets: Option<FacetSystem>,
}

impl HomogenizedConfig {
    pub fn lifted_points(&self) -> &[Vec<Rational>] {
        &self.lifted
    }

    pub fn lifted_points_f64(&self) -> &[Vec<f64>] {
        &self.lifted_f64
    }

    pub fn len(&self) -> usize {
        self.lifted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lifted.is_empty()
    }

    /// Dimension `d` of the original configuration.
    pub fn dim(&self) -> usize {
        self.shift.len()
    }

    /// Subtracted before scaling.
    pub fn shift(&self) -> &[Rational] {
        &self.shift
    }

    /// The divisor `M`.
    pub fn scale(&self) -> &Rational {
        &self.scale
    }

    /// Facets of the original hull, when `d <= 3`.
    pub fn facets(&self) -> Option<&FacetSystem> {
        self.facets.as_ref()
    }

    /// `a -> (1 - |u|, u)` with `u = (a - shift) / M`.
    pub fn forward(&self, a: &[Rational]) -> Vec<Rational> {
        let u: Vec<Rational> = a.iter().zip(&self.shift).map(|(x, s)| (x - s) / &self.scale).collect();
        let sum = u.iter().fold(Rational::zero(), |acc, c| acc + c);
        std::iter::once(Rational::one() - sum).chain(u).collect()
    }

    pub fn forward_f64(&self, x: &[f64]) -> Vec<f64> {
        let m = rational::to_f64(&self.scale);
        let u: Vec<f64> = x.iter().zip(&self.shift).map(|(xi, s)| (xi - rational::to_f64(s)) / m).collect();
        std::iter::once(1.0 - u.iter().sum::<f64>()).chain(u).collect()
    }

    /// Inverse of [`forward`](Self::forward) on the lifted hyperplane; coordinate 0 is ignored.
    pub fn back(&self, y: &[Rational]) -> Vec<Rational> {
        y[1..].iter().zip(&self.shift).map(|(u, s)| u * &self.scale + s).collect()
    }

    pub fn back_f64(&self, y: &[f64]) -> Vec<f64> {
        let m = rational::to_f64(&self.scale);
        y[1..].iter().zip(&self.shift).map(|(u, s)| u * m + rational::to_f64(s)).collect()
    }
}

pub fn homogenize(config: &PointConfig) -> HomogenizedConfig {
    let d = config.dim();
    let pts = config.points();
    let shift: Vec<Rational> =
        (0..d).map(|k| pts.iter().map(|p| p[k].clone()).min().expect("nonempty configuration")).collect();
    let max_l1 = pts
        .iter()
        .map(|p| p.iter().zip(&shift).fold(Rational::zero(), |acc, (x, s)| acc + (x - s)))
        .max()
        .expect("nonempty configuration");
    let scale = if max_l1 > Rational::one() { max_l1 } else { Rational::one() };
    let facets = hull::facet_system(config).ok();
    let mut h = HomogenizedConfig { lifted: Vec::new(), lifted_f64: Vec::new(), shift, scale, facets };
    h.lifted = pts.iter().map(|a| h.forward(a)).collect();
    h.lifted_f64 = h.lifted.iter().map(|p| p.iter().map(rational::to_f64).collect()).collect();
    h
}

/// Index quadruples `(a, b, c, d)` with `a + b = c + d` and `{a,b} != {c,d}`,
/// one per unordered pair of pairs. Pairs may repeat an index (`a = b`).
pub fn binomial_quadruples(config: &PointConfig) -> Vec<(usize, usize, usize, usize)> {
    let pts = config.points();
    let mut by_sum: BTreeMap<Vec<Rational>, Vec<(usize, usize)>> = BTreeMap::new();
    for i in 0..pts.len() {
        for j in i..pts.len() {
            let s: Vec<Rational> = pts[i].iter().zip(&pts[j]).map(|(a, b)| a + b).collect();
            by_sum.entry(s).or_default().push((i, j));
        }
    }
    let mut out = Vec::new();
    for pairs in by_sum.values() {
        for (k, &(a, b)) in pairs.iter().enumerate() {
            for &(c, d) in &pairs[k + 1..] {
                out.push((a, b, c, d));
            }
        }
    }
    out
}

/// Weighted barycenter `sum w_a a / sum w_a`, exact.
pub fn weight_barycenter(config: &PointConfig, weights: &WeightVector) -> Vec<Rational> {
    let total = weights.values().iter().fold(Rational::zero(), |acc, w| acc + w);
    (0..config.dim())
        .map(|k| {
            config.points().iter().zip(weights.values()).fold(Rational::zero(), |acc, (p, w)| acc + w * &p[k]) / &total
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::{int, ratio};

    fn binom(n: i64, k: i64) -> i64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn toric_bezier_square_is_bilinear() {
        let sq = PointConfig::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let (_, basis) = toric_bezier_auto(&sq, &WeightVector::ones(4)).unwrap();
        for &(x, y) in &[(0.2, 0.7), (0.5, 0.5), (0.9, 0.1)] {
            let expect = [(1.0 - x) * (1.0 - y), x * (1.0 - y), (1.0 - x) * y, x * y];
            for (b, e) in basis.iter().zip(expect) {
                assert!((b.eval(&[x, y]) - e).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn toric_bezier_segment_matches_scaled_bernstein() {
        for n in 1..=6i64 {
            let pts: Vec<Vec<i64>> = (0..=n).map(|i| vec![i]).collect();
            let refs: Vec<&[i64]> = pts.iter().map(Vec::as_slice).collect();
            let cfg = PointConfig::from_ints(&refs).unwrap();
            let w = WeightVector::from_ints(&(0..=n).map(|i| binom(n, i)).collect::<Vec<_>>()).unwrap();
            let (_, basis) = toric_bezier_auto(&cfg, &w).unwrap();
            let y = ratio(2, 7);
            let x = int(n) * &y;
            let nn = rational::pow(&int(n), n as u32);
            for (i, b) in basis.iter().enumerate() {
                let bern = int(binom(n, i as i64))
                    * rational::pow(&y, i as u32)
                    * rational::pow(&(int(1) - &y), (n - i as i64) as u32);
                assert_eq!(b.eval_exact(std::slice::from_ref(&x)), bern * &nn);
            }
        }
    }

    #[test]
    fn toric_bezier_simplex_recovers_bernstein() {
        let (cfg, w) = simploid_config(&[(2, 3)]).unwrap();
        let (_, basis) = toric_bezier_auto(&cfg, &w).unwrap();
        let (y1, y2) = (ratio(1, 5), ratio(1, 3));
        let x = [int(3) * &y1, int(3) * &y2];
        let n3 = int(27);
        for ((a, wa), b) in cfg.lattice_points().unwrap().iter().zip(w.values()).zip(&basis) {
            let rest = (3 - a[0] - a[1]) as u32;
            let bern = wa
                * rational::pow(&y1, a[0] as u32)
                * rational::pow(&y2, a[1] as u32)
                * rational::pow(&(int(1) - &y1 - &y2), rest);
            assert_eq!(b.eval_exact(&x), bern * &n3);
        }
    }

    #[test]
    fn toric_bezier_rejects_non_lattice() {
        let cfg = PointConfig::new(vec![vec![int(0)], vec![ratio(1, 2)], vec![int(1)]]).unwrap();
        let fs = hull::facet_system(&cfg).unwrap();
        assert_eq!(toric_bezier(&cfg, &WeightVector::ones(3), &fs), Err(Error::NonIntegerExponent));
    }

    #[test]
    fn monomial_param_examples() {
        let cfg = fixtures::pentagon_config();
        let w = fixtures::pentagon_weights();
        let p = monomial_param(&cfg, &w, &[1.0, 1.0]).unwrap();
        let expected = [3.0, 5.0, 2.0, 5.0, 7.0, 2.0, 2.0, 2.0];
        for (a, b) in p.coords().iter().zip(expected) {
            assert!((a - b / 28.0).abs() < 1e-16);
        }
        let exact = monomial_param_exact(&cfg, &w, &[int(1), int(1)]).unwrap();
        assert_eq!(exact, expected.iter().map(|&e| ratio(e as i64, 28)).collect::<Vec<_>>());

        let seg = PointConfig::from_ints(&[&[0], &[1], &[2]]).unwrap();
        let p = monomial_param_exact(&seg, &WeightVector::from_ints(&[1, 2, 1]).unwrap(), &[int(1)]).unwrap();
        assert_eq!(p, vec![ratio(1, 4), ratio(1, 2), ratio(1, 4)]);
        assert_eq!(monomial_param(&seg, &WeightVector::ones(3), &[0.0]), Err(Error::NonPositiveArgument));
        assert_eq!(monomial_param(&seg, &WeightVector::ones(3), &[-1.0]), Err(Error::NonPositiveArgument));
    }

    #[test]
    fn laurent_f_examples() {
        let seg = PointConfig::from_ints(&[&[0], &[1], &[2]]).unwrap();
        let f = laurent_f(&seg, &WeightVector::from_ints(&[1, 2, 1]).unwrap()).unwrap();
        assert_eq!(f.terms(), &[(vec![0], int(1)), (vec![1], int(2)), (vec![2], int(1))]);
        // (1+x)^2 at x = 3
        assert_eq!(f.eval_exact(&[int(3)]).unwrap(), int(16));
        let sq = PointConfig::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let f = laurent_f(&sq, &WeightVector::ones(4)).unwrap();
        assert_eq!(f.eval_exact(&[int(2), int(3)]).unwrap(), int(12));
    }

    #[test]
    fn toric_differential_examples() {
        let seg = PointConfig::from_ints(&[&[0], &[1], &[2]]).unwrap();
        let f = laurent_f(&seg, &WeightVector::from_ints(&[1, 2, 1]).unwrap()).unwrap();
        assert_eq!(f.toric_differential_exact(&[int(1)]).unwrap(), vec![int(1)]);
        // psi(x) = 2x/(1+x)
        assert!((f.toric_differential(&[3.0]).unwrap()[0] - 1.5).abs() < 1e-15);
        assert_eq!(f.toric_differential(&[-1.0]), Err(Error::PoleAtArgument));
        let f = laurent_f(&seg, &WeightVector::ones(3)).unwrap();
        assert_eq!(f.toric_differential_exact(&[int(1)]).unwrap(), vec![int(1)]);
        let sq = PointConfig::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let f = laurent_f(&sq, &WeightVector::ones(4)).unwrap();
        assert_eq!(f.toric_differential_exact(&[int(1), int(1)]).unwrap(), vec![ratio(1, 2), ratio(1, 2)]);
    }

    #[test]
    fn simploid_examples() {
        let (cfg, w) = simploid_config(&[(1, 2)]).unwrap();
        assert_eq!(cfg.lattice_points().unwrap(), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(w.values(), &[int(1), int(2), int(1)]);
        let (cfg, w) = simploid_config(&[(2, 2)]).unwrap();
        assert_eq!(cfg.len(), 6);
        assert_eq!(w.values(), &[1, 2, 2, 1, 2, 1].map(int));
        // cross-check weights against 2!/(a1! a2! (2-|a|)!)
        let fact = |n: i64| (1..=n).product::<i64>();
        for (a, wa) in cfg.lattice_points().unwrap().iter().zip(w.values()) {
            assert_eq!(*wa, int(2 / (fact(a[0]) * fact(a[1]) * fact(2 - a[0] - a[1]))));
        }
        let (cfg, w) = simploid_config(&[(1, 1), (1, 1)]).unwrap();
        assert_eq!(cfg.lattice_points().unwrap(), vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert!(w.values().iter().all(|x| *x == int(1)));
        assert!(simploid_config(&[(0, 1)]).is_err());
    }

    #[test]
    fn homogenize_examples() {
        let seg = PointConfig::from_ints(&[&[0], &[1]]).unwrap();
        let h = homogenize(&seg);
        assert_eq!(h.scale(), &int(1));
        assert_eq!(h.lifted_points(), &[vec![int(1), int(0)], vec![int(0), int(1)]]);

        let sq = PointConfig::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let h = homogenize(&sq);
        assert_eq!(h.scale(), &int(2));
        assert!(h.lifted_points().contains(&vec![int(1), int(0), int(0)]));
        assert!(h.lifted_points().contains(&vec![int(0), ratio(1, 2), ratio(1, 2)]));

        let h = homogenize(&fixtures::pentagon_config());
        assert_eq!(h.scale(), &int(3));
        assert_eq!(h.forward(&[int(2), int(1)]), vec![int(0), ratio(2, 3), ratio(1, 3)]);

        let shifted = PointConfig::from_ints(&[&[-3, 5], &[-2, 5], &[-3, 6]]).unwrap();
        let h = homogenize(&shifted);
        assert_eq!(h.shift(), &[int(-3), int(5)]);
        for (a, l) in shifted.points().iter().zip(h.lifted_points()) {
            assert_eq!(&h.back(l), a);
        }
    }

    #[test]
    fn quadruples_of_unit_square() {
        let sq = PointConfig::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        assert_eq!(binomial_quadruples(&sq), vec![(0, 3, 1, 2)]);
        let seg = PointConfig::from_ints(&[&[0], &[1], &[2]]).unwrap();
        assert_eq!(binomial_quadruples(&seg), vec![(0, 2, 1, 1)]);
    }
}
