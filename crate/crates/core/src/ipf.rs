//! Iterative proportional fitting (generalized iterative scaling).
//!
//! Given a homogenized configuration `A+` in the probability simplex, weights
//! `w` and a target `y` inside `conv(A+)`, the iteration
//!
//! ```text
//! p(0) = w,    p_a <- p_a * prod_i (y_i / m_i)^(a+_i),    m = sum_a p_a a+ / sum_a p_a
//! ```
//!
//! converges to the unique point of the toric model whose moment is `y`.
//! Evaluated at a point `x` of the domain this gives the blending values of
//! the unique linear-precision parametrization.

use crate::error::{Error, Result};
use crate::patch::{normalize, PointConfig, SimplexPoint, WeightVector};
use crate::toric::{homogenize, HomogenizedConfig};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IpfSettings {
    /// Stop once the moment mismatch `max_i |m_i - y_i|` is at most this.
    pub tol: f64,
    pub max_iter: usize,
    /// Minimum facet value required of the target.
    pub interior_margin: f64,
}

impl Default for IpfSettings {
    fn default() -> Self {
        Self { tol: 1e-12, max_iter: 100_000, interior_margin: 1e-9 }
    }
}

impl IpfSettings {
    pub fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0) || self.max_iter == 0 || !(self.interior_margin > 0.0) {
            return Err(Error::Invalid("IPF settings need tol > 0, max_iter >= 1, interior_margin > 0".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IpfResult {
    pub p: SimplexPoint,
    pub iterations: usize,
    pub residual: f64,
}

/// Moment `sum_a p_a a+` of a normalized `p`, summed in index order.
pub fn moment(lifted: &[Vec<f64>], p: &[f64]) -> Vec<f64> {
    let mut m = vec![0.0; lifted[0].len()];
    for (pa, a) in p.iter().zip(lifted) {
        for (mi, ai) in m.iter_mut().zip(a) {
            *mi += pa * ai;
        }
    }
    m
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

pub fn ipf_solve(
    lifted: &HomogenizedConfig,
    weights: &WeightVector,
    y: &SimplexPoint,
    settings: &IpfSettings,
) -> Result<IpfResult> {
    ipf_solve_observed(lifted, weights, y, settings, |_, _| {})
}

/// [`ipf_solve`] calling `observe(n, p(n))` for every iterate, starting with `p(0)`.
pub fn ipf_solve_observed(
    lifted: &HomogenizedConfig,
    weights: &WeightVector,
    y: &SimplexPoint,
    settings: &IpfSettings,
    mut observe: impl FnMut(usize, &[f64]),
) -> Result<IpfResult> {
    settings.validate()?;
    if weights.len() != lifted.len() {
        return Err(Error::DimensionMismatch { expected: lifted.len(), got: weights.len() });
    }
    let dim = lifted.dim() + 1;
    let y = y.coords();
    if y.len() != dim {
        return Err(Error::DimensionMismatch { expected: dim, got: y.len() });
    }
    check_target(lifted, y, settings.interior_margin)?;

    let pts = lifted.lifted_points_f64();
    let mut p = normalize(weights.values_f64())?.into_vec();
    let mut log_ratio = vec![0.0; dim];
    let mut iterations = 0;
    loop {
        observe(iterations, &p);
        let m = moment(pts, &p);
        let residual = max_abs_diff(&m, y);
        if residual <= settings.tol {
            return Ok(IpfResult { p: SimplexPoint::new(p)?, iterations, residual });
        }
        if iterations == settings.max_iter {
            return Err(Error::NotConverged { iterations, residual });
        }
        for i in 0..dim {
            log_ratio[i] = if y[i] == 0.0 {
                0.0
            } else if m[i] > 0.0 {
                (y[i] / m[i]).ln()
            } else {
                return Err(Error::NumericalUnderflow);
            };
        }
        for (pa, a) in p.iter_mut().zip(pts) {
            let s: f64 = a.iter().zip(&log_ratio).map(|(ai, l)| ai * l).sum();
            *pa *= s.exp();
        }
        let total: f64 = p.iter().sum();
        if !(total.is_finite() && total > 0.0) || p.iter().any(|v| !v.is_finite()) {
            return Err(Error::NumericalUnderflow);
        }
        for v in &mut p {
            *v /= total;
        }
        iterations += 1;
    }
}

fn check_target(lifted: &HomogenizedConfig, y: &[f64], margin: f64) -> Result<()> {
    if y.iter().any(|v| !v.is_finite()) {
        return Err(Error::NotInHull);
    }
    // coordinates carried by some lifted point must be positive
    let pts = lifted.lifted_points_f64();
    for (i, &yi) in y.iter().enumerate() {
        let used = pts.iter().any(|a| a[i] != 0.0);
        if (used && yi <= 0.0) || (!used && yi != 0.0) {
            return Err(Error::NotInHull);
        }
    }
    if let Some(facets) = lifted.facets() {
        let x = lifted.back_f64(y);
        if facets.min_value(&x) < margin {
            return Err(Error::NotInHull);
        }
    }
    Ok(())
}

/// Blending values of the unique linear-precision parametrization at `x`.
pub fn lp_blending(
    config: &PointConfig,
    weights: &WeightVector,
    x: &[f64],
    settings: &IpfSettings,
) -> Result<SimplexPoint> {
    lp_blending_detailed(config, weights, x, settings).map(|r| r.p)
}

pub fn lp_blending_detailed(
    config: &PointConfig,
    weights: &WeightVector,
    x: &[f64],
    settings: &IpfSettings,
) -> Result<IpfResult> {
    let lifted = homogenize(config);
    lp_blending_with(&lifted, weights, x, settings)
}

/// [`lp_blending_detailed`] reusing a precomputed lift, for repeated evaluation.
pub fn lp_blending_with(
    lifted: &HomogenizedConfig,
    weights: &WeightVector,
    x: &[f64],
    settings: &IpfSettings,
) -> Result<IpfResult> {
    if x.len() != lifted.dim() {
        return Err(Error::DimensionMismatch { expected: lifted.dim(), got: x.len() });
    }
    if x.iter().any(|c| !c.is_finite()) {
        return Err(Error::OutsideDomain);
    }
    if let Some(facets) = lifted.facets() {
        if facets.min_value(x) < settings.interior_margin {
            return Err(Error::OutsideDomain);
        }
    }
    let y = lifted.forward_f64(x);
    let y = SimplexPoint::new(y).map_err(|_| Error::OutsideDomain)?;
    ipf_solve(lifted, weights, &y, settings)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn two_point_segment_converges_in_one_step() {
        let cfg = PointConfig::from_ints(&[&[0], &[1]]).unwrap();
        let h = homogenize(&cfg);
        let y = SimplexPoint::new(vec![0.7, 0.3]).unwrap();
        let r = ipf_solve(&h, &WeightVector::ones(2), &y, &IpfSettings::default()).unwrap();
        assert_eq!(r.iterations, 1);
        assert!((r.p.coords()[0] - 0.7).abs() < 1e-15);
        assert!((r.p.coords()[1] - 0.3).abs() < 1e-15);
    }

    #[test]
    fn barycenter_is_a_fixed_point() {
        let cfg = fixtures::pentagon_config();
        let w = fixtures::pentagon_weights();
        let h = homogenize(&cfg);
        let bary = crate::toric::weight_barycenter(&cfg, &w);
        let y: Vec<f64> = h.forward(&bary).iter().map(crate::rational::to_f64).collect();
        let r = ipf_solve(&h, &w, &SimplexPoint::new(y).unwrap(), &IpfSettings::default()).unwrap();
        assert!(r.iterations <= 1);
        for (p, wa) in r.p.coords().iter().zip(w.values_f64()) {
            assert!((p - wa / 28.0).abs() < 1e-14);
        }
    }

    #[test]
    fn square_center_is_uniform() {
        let sq = PointConfig::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let h = homogenize(&sq);
        let y = SimplexPoint::new(vec![0.5, 0.25, 0.25]).unwrap();
        let r = ipf_solve(&h, &WeightVector::ones(4), &y, &IpfSettings::default()).unwrap();
        assert!(r.p.coords().iter().all(|p| (p - 0.25).abs() < 1e-15));
    }

    #[test]
    fn lp_blending_examples() {
        let seg = PointConfig::from_ints(&[&[0], &[1], &[2]]).unwrap();
        let p =
            lp_blending(&seg, &WeightVector::from_ints(&[1, 2, 1]).unwrap(), &[1.0], &IpfSettings::default()).unwrap();
        for (a, b) in p.coords().iter().zip([0.25, 0.5, 0.25]) {
            assert!((a - b).abs() < 1e-14);
        }
        let p = lp_blending(
            &fixtures::pentagon_config(),
            &fixtures::pentagon_weights(),
            &[11.0 / 14.0, 11.0 / 14.0],
            &IpfSettings::default(),
        )
        .unwrap();
        for (a, b) in p.coords().iter().zip([3.0, 5.0, 2.0, 5.0, 7.0, 2.0, 2.0, 2.0]) {
            assert!((a - b / 28.0).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_boundary_and_outside_targets() {
        let seg = PointConfig::from_ints(&[&[0], &[1], &[2]]).unwrap();
        let w = WeightVector::ones(3);
        let s = IpfSettings::default();
        assert_eq!(lp_blending(&seg, &w, &[0.0], &s), Err(Error::OutsideDomain));
        assert_eq!(lp_blending(&seg, &w, &[2.5], &s), Err(Error::OutsideDomain));
        let h = homogenize(&seg);
        let y = SimplexPoint::new(vec![1.0, 0.0]).unwrap();
        assert_eq!(ipf_solve(&h, &w, &y, &s), Err(Error::NotInHull));
    }

    #[test]
    fn reports_non_convergence() {
        let sq = PointConfig::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let s = IpfSettings { tol: 1e-15, max_iter: 2, interior_margin: 1e-9 };
        match lp_blending(&sq, &WeightVector::from_ints(&[1, 5, 2, 9]).unwrap(), &[0.1, 0.8], &s) {
            Err(Error::NotConverged { iterations: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        let bad = IpfSettings { tol: 0.0, ..IpfSettings::default() };
        assert!(lp_blending(&sq, &WeightVector::ones(4), &[0.5, 0.5], &bad).is_err());
    }
}
