//! Browser bindings for the patchkit demo page.
//!
//! Three operations are exported: the linear-precision error field of a
//! reference patch, IPF blending values next to toric Bézier values at a
//! point of the pentagon, and the exact curve classifier.

use patchkit::precision::{grid_coord, rational_lp_1d};
use patchkit::{fixtures, rational, tautological, IpfSettings, PatchSpec, WeightVector};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Names accepted by [`precision_field`] and [`domain_bounds`].
pub const PATCHES: [&str; 4] = ["pentagon", "pentagon-tuned", "hexagon", "square"];

fn patch(name: &str) -> Option<PatchSpec> {
    match name {
        "pentagon" => Some(fixtures::pentagon_toric_spec()),
        "pentagon-tuned" => Some(fixtures::pentagon_tuned_spec()),
        "hexagon" => Some(fixtures::hexagon_wachspress_spec()),
        "square" => Some(fixtures::square_spec()),
        _ => None,
    }
}

/// `[xmin, xmax, ymin, ymax]` of the patch domain, empty for unknown names.
#[wasm_bindgen]
pub fn domain_bounds(name: &str) -> Vec<f64> {
    patch(name).map_or_else(Vec::new, |spec| {
        let (lo, hi) = spec.config().bounding_box();
        vec![lo[0], hi[0], lo[1], hi[1]]
    })
}

/// `|tau(x) - x|` on an `n x n` grid over the bounding box, row-major with
/// `x` varying fastest starting from the bottom row; NaN outside the domain.
#[wasm_bindgen]
pub fn precision_field(name: &str, n: usize) -> Vec<f64> {
    let Some(spec) = patch(name) else { return Vec::new() };
    if n < 2 {
        return Vec::new();
    }
    let (lo, hi) = spec.config().bounding_box();
    let mut out = Vec::with_capacity(n * n);
    for j in 0..n {
        for i in 0..n {
            let x = [grid_coord(lo[0], hi[0], i, n), grid_coord(lo[1], hi[1], j, n)];
            let err = match tautological(&spec, &x) {
                Ok(t) => (t[0] - x[0]).hypot(t[1] - x[1]),
                Err(_) => f64::NAN,
            };
            out.push(err);
        }
    }
    out
}

#[derive(Serialize)]
struct Comparison {
    points: Vec<[f64; 2]>,
    ipf: Vec<f64>,
    toric: Vec<f64>,
    ipf_tau: Vec<f64>,
    toric_tau: Vec<f64>,
    iterations: usize,
}

#[derive(Serialize)]
struct Failure {
    error: String,
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

fn weighted_mean(p: &[f64], pts: &[Vec<f64>]) -> Vec<f64> {
    (0..2).map(|k| p.iter().zip(pts).map(|(b, a)| b * a[k]).sum()).collect()
}

/// Blending values of the pentagon at `(s, t)`: the linear-precision ones
/// computed by IPF and the toric Bézier ones, with both tautological maps.
/// Returns JSON; `{"error": ...}` when the point is not inside the domain.
#[wasm_bindgen]
pub fn compare_pentagon(s: f64, t: f64) -> String {
    let spec = fixtures::pentagon_toric_spec();
    let x = [s, t];
    let pts = spec.config().points_f64();
    let run = || -> patchkit::Result<Comparison> {
        let toric = spec.normalized_basis(&x)?.into_vec();
        let ipf = patchkit::ipf::lp_blending_detailed(spec.config(), spec.weights(), &x, &IpfSettings::default())?;
        Ok(Comparison {
            points: pts.iter().map(|a| [a[0], a[1]]).collect(),
            ipf_tau: weighted_mean(ipf.p.coords(), pts),
            toric_tau: weighted_mean(&toric, pts),
            ipf: ipf.p.into_vec(),
            toric,
            iterations: ipf.iterations,
        })
    };
    match run() {
        Ok(c) => json(&c),
        Err(e) => json(&Failure { error: e.to_string() }),
    }
}

#[derive(Serialize)]
struct Classification {
    linear_precision: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<String>,
}

/// Exact rational linear-precision test for the curve with weights
/// `w_0, ..., w_n` given as a comma separated list of rationals.
#[wasm_bindgen]
pub fn classify_weights(weights: &str) -> String {
    let parsed = weights
        .split(',')
        .map(rational::parse)
        .collect::<patchkit::Result<Vec<_>>>()
        .and_then(WeightVector::new)
        .and_then(|w| rational_lp_1d(&w));
    match parsed {
        Ok((ok, alpha)) => json(&Classification { linear_precision: ok, alpha: alpha.as_ref().map(rational::format) }),
        Err(e) => json(&Failure { error: e.to_string() }),
    }
}
