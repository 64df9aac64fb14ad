//! Subcommand bodies. Each returns the text to print on success.

use std::path::Path;

use patchkit::precision::{
    check_linear_precision, rational_lp_1d, rational_lp_1d_for, DEFAULT_FAIL_TOL, DEFAULT_PASS_TOL,
};
use patchkit::rational::{self, Rational};
use patchkit::{eval_patch, IpfSettings, WeightVector};
use serde::Serialize;

use crate::mesh::{tessellate, MeshOutput};
use crate::patchfile::PatchFile;
use crate::{format_vector, parse_point, CliError};

pub fn eval(input: &Path, at: &str) -> Result<String, CliError> {
    let spec = PatchFile::read(input)?.to_spec()?;
    let x = parse_point(at)?;
    Ok(format_vector(&eval_patch(&spec, &x)?))
}

pub fn tessellate_file(input: &Path, grid: usize) -> Result<MeshOutput, CliError> {
    let spec = PatchFile::read(input)?.to_spec()?;
    tessellate(&spec, grid)
}

pub fn tessellate_to(input: &Path, grid: usize, out: &Path) -> Result<String, CliError> {
    let mesh = tessellate_file(input, grid)?;
    std::fs::write(out, mesh.to_obj()).map_err(|e| CliError::Input(format!("{}: {e}", out.display())))?;
    Ok(format!("wrote {} vertices, {} faces to {}", mesh.vertices.len(), mesh.faces.len(), out.display()))
}

pub fn ipf(input: &Path, at: &str, tol: f64, max_iter: usize) -> Result<String, CliError> {
    let (cfg, w) = PatchFile::read(input)?.config_and_weights()?;
    let x = parse_point(at)?;
    let settings = IpfSettings { tol, max_iter, ..IpfSettings::default() };
    settings.validate()?;
    let r = patchkit::ipf::lp_blending_detailed(&cfg, &w, &x, &settings)?;
    Ok(format!("{}\niterations {}", format_vector(r.p.coords()), r.iterations))
}

pub fn check(input: &Path, samples: usize, seed: u64) -> Result<String, CliError> {
    let spec = PatchFile::read(input)?.to_spec()?;
    Ok(check_linear_precision(&spec, samples, DEFAULT_PASS_TOL, DEFAULT_FAIL_TOL, seed)?.to_json())
}

#[derive(Debug, Serialize)]
struct Lp1dReport {
    linear_precision: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<String>,
}

/// Exact test of rational linear precision for a curve, from a weight
/// list or from a one-dimensional patch file.
pub fn lp1d(weights: Option<&str>, input: Option<&Path>) -> Result<String, CliError> {
    let (ok, alpha) = match (weights, input) {
        (Some(w), None) => {
            let w = w.split(',').map(rational::parse).collect::<patchkit::Result<Vec<Rational>>>()?;
            rational_lp_1d(&WeightVector::new(w)?)?
        }
        (None, Some(path)) => {
            let (cfg, w) = PatchFile::read(path)?.config_and_weights()?;
            rational_lp_1d_for(&cfg, &w)?
        }
        _ => return Err(CliError::Input("lp1d needs exactly one of --weights and --input".into())),
    };
    let report = Lp1dReport { linear_precision: ok, alpha: alpha.as_ref().map(rational::format) };
    Ok(serde_json::to_string(&report).expect("report serializes"))
}
