//! JSON patch description.
//!
//! ```json
//! {
//!   "dimension": 1,
//!   "points": [[0], [1], [2]],
//!   "weights": ["1", "2", "1"],
//!   "basis": "toric-bezier",
//!   "control_points": [[0, 0], [1, 2], [2, 0]]
//! }
//! ```
//!
//! Rationals are written as strings (`"6/5"`); integers are also accepted on
//! input. An explicit basis is a list of products
//! `{"coefficient": "2", "factors": [{"coeffs": ["1"], "constant": "0", "exponent": 2}]}`.
//! Facets, when present, are `{"coeffs": [...], "constant": "..."}` objects
//! meaning `coeffs . x + constant >= 0`.

use std::fmt;

use patchkit::rational::{self, Rational};
use patchkit::{
    facet_system, toric_bezier, AffineForm, FacetSystem, FormProduct, PatchSpec, PointConfig, WeightVector,
};
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rat(pub Rational);

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rational::format(&self.0))
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct RatVisitor;

        impl Visitor<'_> for RatVisitor {
            type Value = Rat;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a rational string such as \"6/5\"")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Rat, E> {
                Ok(Rat(rational::int(v)))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Rat, E> {
                i64::try_from(v).map(|v| Rat(rational::int(v))).map_err(E::custom)
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Rat, E> {
                rational::parse(v).map(Rat).map_err(E::custom)
            }
        }

        d.deserialize_any(RatVisitor)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormJson {
    pub coeffs: Vec<Rat>,
    pub constant: Rat,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorJson {
    pub coeffs: Vec<Rat>,
    pub constant: Rat,
    pub exponent: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductJson {
    pub coefficient: Rat,
    pub factors: Vec<FactorJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BasisJson {
    Named(String),
    Explicit(Vec<ProductJson>),
}

pub const TORIC_BEZIER: &str = "toric-bezier";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PatchFile {
    pub dimension: usize,
    pub points: Vec<Vec<Rat>>,
    pub weights: Vec<Rat>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub taut_points: Option<Vec<Vec<Rat>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub control_points: Option<Vec<Vec<f64>>>,
    pub basis: BasisJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub facets: Option<Vec<FormJson>>,
}

fn rats(v: &[Rat]) -> Vec<Rational> {
    v.iter().map(|r| r.0.clone()).collect()
}

fn to_rats(v: &[Rational]) -> Vec<Rat> {
    v.iter().cloned().map(Rat).collect()
}

fn form_json(h: &AffineForm) -> FormJson {
    FormJson { coeffs: to_rats(h.coeffs()), constant: Rat(h.constant().clone()) }
}

fn config(points: &[Vec<Rat>], dimension: usize, what: &str) -> Result<PointConfig, CliError> {
    if let Some(p) = points.iter().find(|p| p.len() != dimension) {
        return Err(CliError::Input(format!("{what}: point of length {} in a dimension-{dimension} file", p.len())));
    }
    Ok(PointConfig::new(points.iter().map(|p| rats(p)).collect())?)
}

impl PatchFile {
    pub fn parse(json: &str) -> Result<Self, CliError> {
        serde_json::from_str(json).map_err(|e| CliError::Input(format!("patch file: {e}")))
    }

    pub fn read(path: &std::path::Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("patch file serializes")
    }

    /// Point configuration and weights only; enough for IPF runs.
    pub fn config_and_weights(&self) -> Result<(PointConfig, WeightVector), CliError> {
        if self.dimension == 0 {
            return Err(CliError::Input("dimension must be positive".into()));
        }
        let cfg = config(&self.points, self.dimension, "points")?;
        let w = WeightVector::new(rats(&self.weights))?;
        if w.len() != cfg.len() {
            return Err(CliError::Input(format!("{} weights for {} points", w.len(), cfg.len())));
        }
        Ok((cfg, w))
    }

    pub fn to_spec(&self) -> Result<PatchSpec, CliError> {
        let (cfg, w) = self.config_and_weights()?;
        let facets = match &self.facets {
            Some(forms) => {
                let forms = forms.iter().map(|f| AffineForm::new(rats(&f.coeffs), f.constant.0.clone())).collect();
                let facets = FacetSystem::new(forms)?;
                if facets.dim() != self.dimension {
                    return Err(CliError::Input("facet dimension does not match the points".into()));
                }
                facets
            }
            None => facet_system(&cfg)?,
        };
        let basis = match &self.basis {
            BasisJson::Named(name) if name == TORIC_BEZIER => toric_bezier(&cfg, &w, &facets)?,
            BasisJson::Named(name) => {
                return Err(CliError::Input(format!(
                    "unknown basis {name:?}, expected {TORIC_BEZIER:?} or a product list"
                )))
            }
            BasisJson::Explicit(products) => products
                .iter()
                .map(|p| {
                    let factors = p
                        .factors
                        .iter()
                        .map(|f| (AffineForm::new(rats(&f.coeffs), f.constant.0.clone()), f.exponent))
                        .collect();
                    FormProduct::new(p.coefficient.0.clone(), factors)
                })
                .collect::<patchkit::Result<Vec<_>>>()?,
        };
        let mut spec = PatchSpec::new(cfg, w, basis, facets)?;
        if let Some(taut) = &self.taut_points {
            spec = spec.with_taut_points(config(taut, self.dimension, "taut_points")?)?;
        }
        if let Some(controls) = &self.control_points {
            spec = spec.with_control_points(controls.clone())?;
        }
        Ok(spec)
    }

    /// Describes `spec` with an explicit basis and explicit facets.
    pub fn from_spec(spec: &PatchSpec) -> Self {
        let basis = spec
            .basis()
            .iter()
            .map(|p| ProductJson {
                coefficient: Rat(p.coefficient().clone()),
                factors: p
                    .factors()
                    .iter()
                    .map(|(h, e)| FactorJson {
                        coeffs: to_rats(h.coeffs()),
                        constant: Rat(h.constant().clone()),
                        exponent: *e,
                    })
                    .collect(),
            })
            .collect();
        PatchFile {
            dimension: spec.dim(),
            points: spec.config().points().iter().map(|p| to_rats(p)).collect(),
            weights: to_rats(spec.weights().values()),
            taut_points: spec.taut_points().map(|t| t.points().iter().map(|p| to_rats(p)).collect()),
            control_points: spec.control_points().map(<[Vec<f64>]>::to_vec),
            basis: BasisJson::Explicit(basis),
            facets: Some(spec.facets().forms().iter().map(form_json).collect()),
        }
    }
}
