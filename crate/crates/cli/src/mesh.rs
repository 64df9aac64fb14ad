//! Grid tessellation of two-parameter patches and Wavefront OBJ output.

use std::fmt::Write as _;

use patchkit::precision::grid_coord;
use patchkit::{eval_patch, PatchSpec};

use crate::{format_number, CliError};

/// Triangles with area at or below this are dropped.
pub const MIN_AREA: f64 = 1e-14;

#[derive(Debug, Clone, PartialEq)]
pub struct MeshOutput {
    pub vertices: Vec<[f64; 3]>,
    /// Zero-based vertex indices.
    pub faces: Vec<[usize; 3]>,
}

fn area(a: [f64; 3], b: [f64; 3], c: [f64; 3]) -> f64 {
    let u = [b[0] - a[0], b[1] - a[1], b[2] - a[2]];
    let v = [c[0] - a[0], c[1] - a[1], c[2] - a[2]];
    let n = [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]];
    0.5 * (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt()
}

/// Evaluates the patch on an `n x n` grid over the bounding box of the
/// domain, keeps grid points passing the facet test and triangulates every
/// cell with three or four admissible corners.
pub fn tessellate(spec: &PatchSpec, n: usize) -> Result<MeshOutput, CliError> {
    if n < 2 {
        return Err(CliError::Input("grid size must be at least 2".into()));
    }
    if spec.dim() != 2 {
        return Err(CliError::Input(format!("tessellation needs a two-parameter patch, got dimension {}", spec.dim())));
    }
    let controls = spec.control_points().ok_or_else(|| CliError::Input("patch file has no control_points".into()))?;
    if controls[0].len() > 3 {
        return Err(CliError::Input("control points must have at most 3 coordinates".into()));
    }
    let (lo, hi) = spec.config().bounding_box();
    let mut index = vec![None; n * n];
    let mut vertices = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let x = [grid_coord(lo[0], hi[0], i, n), grid_coord(lo[1], hi[1], j, n)];
            if !spec.facets().contains(&x) {
                continue;
            }
            let f = eval_patch(spec, &x)?;
            let mut v = [0.0; 3];
            v[..f.len()].copy_from_slice(&f);
            index[i * n + j] = Some(vertices.len());
            vertices.push(v);
        }
    }
    if vertices.is_empty() {
        return Err(CliError::Domain("no grid point lies in the domain".into()));
    }
    let mut faces = Vec::new();
    let push = |tri: [usize; 3], faces: &mut Vec<[usize; 3]>| {
        if area(vertices[tri[0]], vertices[tri[1]], vertices[tri[2]]) > MIN_AREA {
            faces.push(tri);
        }
    };
    for i in 0..n - 1 {
        for j in 0..n - 1 {
            // counter-clockwise in the parameter plane
            let corners = [index[i * n + j], index[(i + 1) * n + j], index[(i + 1) * n + j + 1], index[i * n + j + 1]];
            match corners {
                [Some(a), Some(b), Some(c), Some(d)] => {
                    push([a, b, c], &mut faces);
                    push([a, c, d], &mut faces);
                }
                _ => {
                    let present: Vec<usize> = corners.iter().flatten().copied().collect();
                    if present.len() == 3 {
                        push([present[0], present[1], present[2]], &mut faces);
                    }
                }
            }
        }
    }
    Ok(MeshOutput { vertices, faces })
}

impl MeshOutput {
    pub fn to_obj(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            writeln!(out, "v {} {} {}", format_number(v[0]), format_number(v[1]), format_number(v[2])).unwrap();
        }
        for f in &self.faces {
            writeln!(out, "f {} {} {}", f[0] + 1, f[1] + 1, f[2] + 1).unwrap();
        }
        out
    }
}
