//! Reference patches: Bernstein curves, the Wachspress hexagon, the
//! pentagonal toric patch and its tuned variant.

use crate::hull::facet_system;
use crate::patch::{AffineForm, FacetSystem, FormProduct, PatchSpec, PointConfig, WeightVector};
use crate::precision::ImplicitSystem;
use crate::rational::{self, int, ratio, Rational};
use crate::toric::toric_bezier;

fn binomial(n: u32, k: u32) -> Rational {
    (0..k).fold(Rational::from_integer(1.into()), |acc, i| acc * int((n - i) as i64) / int((i + 1) as i64))
}

/// Degree-`n` Bernstein basis on `A = {i/n}` over `[0, 1]`.
pub fn bernstein_spec(n: u32) -> PatchSpec {
    assert!(n >= 1, "Bernstein degree must be positive");
    let config = PointConfig::new((0..=n).map(|i| vec![ratio(i as i64, n as i64)]).collect()).expect("distinct points");
    let x = AffineForm::from_ints(&[1], 0);
    let one_minus_x = AffineForm::from_ints(&[-1], 1);
    let weights: Vec<Rational> = (0..=n).map(|i| binomial(n, i)).collect();
    let basis = (0..=n)
        .map(|i| {
            let factors = [(x.clone(), i), (one_minus_x.clone(), n - i)].into_iter().filter(|(_, e)| *e > 0).collect();
            FormProduct::new(binomial(n, i), factors).expect("positive coefficient")
        })
        .collect();
    let facets = FacetSystem::new(vec![x, one_minus_x]).expect("unit interval");
    PatchSpec::new(config, WeightVector::new(weights).expect("positive"), basis, facets).expect("valid Bernstein spec")
}

/// Vertices of the Wachspress hexagon in the order used by [`hexagon_wachspress_spec`].
pub const HEXAGON_VERTICES: [[i64; 2]; 6] = [[-1, -1], [-1, 0], [0, 1], [1, 1], [1, 0], [0, -1]];

/// Hexagon with blending function at each vertex the product of the edge
/// forms not through it; the normalized functions are Wachspress coordinates.
pub fn hexagon_wachspress_spec() -> PatchSpec {
    let refs: Vec<&[i64]> = HEXAGON_VERTICES.iter().map(|v| v.as_slice()).collect();
    let config = PointConfig::from_ints(&refs).expect("hexagon vertices");
    let facets = facet_system(&config).expect("hexagon hull");
    let basis = config
        .points()
        .iter()
        .map(|a| {
            let factors = facets.forms().iter().filter(|h| h.eval_exact(a) != int(0)).map(|h| (h.clone(), 1)).collect();
            FormProduct::new(int(1), factors).expect("unit coefficient")
        })
        .collect();
    PatchSpec::new(config, WeightVector::ones(6), basis, facets).expect("valid hexagon spec")
}

/// Lattice points of the pentagon `s, t >= 0`, `s, t <= 2`, `s + t <= 3`.
pub fn pentagon_config() -> PointConfig {
    PointConfig::from_ints(&[&[0, 0], &[1, 0], &[2, 0], &[0, 1], &[1, 1], &[2, 1], &[0, 2], &[1, 2]])
        .expect("pentagon points")
}

pub fn pentagon_weights() -> WeightVector {
    WeightVector::from_ints(&[3, 5, 2, 5, 7, 2, 2, 2]).expect("positive weights")
}

/// Tuned index points: vertices kept, interior and edge points moved.
pub fn pentagon_tuned_points() -> PointConfig {
    PointConfig::new(vec![
        vec![int(0), int(0)],
        vec![ratio(6, 5), int(0)],
        vec![int(2), int(0)],
        vec![int(0), ratio(6, 5)],
        vec![ratio(8, 7), ratio(8, 7)],
        vec![int(2), int(1)],
        vec![int(0), int(2)],
        vec![int(1), int(2)],
    ])
    .expect("tuned points")
}

/// Untuned toric Bézier patch on the pentagon.
pub fn pentagon_toric_spec() -> PatchSpec {
    let config = pentagon_config();
    let weights = pentagon_weights();
    let facets = facet_system(&config).expect("pentagon hull");
    let basis = toric_bezier(&config, &weights, &facets).expect("lattice pentagon");
    PatchSpec::new(config, weights, basis, facets).expect("valid pentagon spec")
}

/// Toric Bézier functions of the pentagon with the form `s` replaced by
/// `s (3 - s - t/2)` and `t` by `(3 - s/2 - t) t`, paired with the tuned points.
pub fn pentagon_tuned_spec() -> PatchSpec {
    let config = pentagon_config();
    let weights = pentagon_weights();
    let facets = facet_system(&config).expect("pentagon hull");
    let s_mod = AffineForm::new(vec![int(-1), ratio(-1, 2)], int(3));
    let t_mod = AffineForm::new(vec![ratio(-1, 2), int(-1)], int(3));
    let basis = config
        .points()
        .iter()
        .zip(weights.values())
        .map(|(a, w)| {
            let mut factors: Vec<(AffineForm, u32)> = facets
                .forms()
                .iter()
                .map(|h| (h.clone(), rational::as_i64(&h.eval_exact(a)).expect("integer") as u32))
                .filter(|(_, e)| *e > 0)
                .collect();
            let (a1, a2) =
                (rational::as_i64(&a[0]).expect("integer") as u32, rational::as_i64(&a[1]).expect("integer") as u32);
            if a1 > 0 {
                factors.push((s_mod.clone(), a1));
            }
            if a2 > 0 {
                factors.push((t_mod.clone(), a2));
            }
            FormProduct::new(w.clone(), factors).expect("positive weight")
        })
        .collect();
    PatchSpec::new(config, weights, basis, facets)
        .and_then(|s| s.with_taut_points(pentagon_tuned_points()))
        .expect("valid tuned pentagon spec")
}

/// Bilinear patch on the unit square.
pub fn square_spec() -> PatchSpec {
    let config = PointConfig::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).expect("square");
    let weights = WeightVector::ones(4);
    let facets = facet_system(&config).expect("square hull");
    let basis = toric_bezier(&config, &weights, &facets).expect("lattice square");
    PatchSpec::new(config, weights, basis, facets).expect("valid square spec")
}

/// Toric Bézier patch on `{0, ..., n}` with the given weights.
pub fn segment_toric_spec(weights: WeightVector) -> crate::Result<PatchSpec> {
    let n = weights.len() as i64 - 1;
    let config = PointConfig::new((0..=n).map(|i| vec![int(i)]).collect())?;
    let facets = facet_system(&config)?;
    let basis = toric_bezier(&config, &weights, &facets)?;
    PatchSpec::new(config, weights, basis, facets)
}

const HEXAGON_RELATIONS: &str = include_str!("../data/hexagon_wachspress_relations.json");

/// The two quadrics and the cubic vanishing on the image of the hexagon's
/// Wachspress blending functions, in the variable order of [`HEXAGON_VERTICES`].
pub fn hexagon_surface_equations() -> ImplicitSystem {
    ImplicitSystem::from_fixture_json(HEXAGON_RELATIONS, &["quadrics", "cubic"], &HEXAGON_VERTICES)
        .expect("bundled fixture parses")
}

/// The three linear forms of the hexagon's tautological projection.
pub fn hexagon_center_forms() -> ImplicitSystem {
    ImplicitSystem::from_fixture_json(HEXAGON_RELATIONS, &["linear"], &HEXAGON_VERTICES)
        .expect("bundled fixture parses")
}

pub fn hexagon_full_system() -> ImplicitSystem {
    ImplicitSystem::from_fixture_json(HEXAGON_RELATIONS, &["quadrics", "cubic", "linear"], &HEXAGON_VERTICES)
        .expect("bundled fixture parses")
}
