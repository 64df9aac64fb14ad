//! Facet enumeration of `conv(A)` with exact rational predicates.
//!
//! Every facet of a full-dimensional polytope in `R^d` is spanned by `d` of
//! its points, so we enumerate `d`-subsets of the configuration, take the
//! hyperplane through them and keep it when all points lie weakly on one side.
//! That is `O(n^(d+1))`, fine for `d <= 3` and the point counts patches use.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::patch::{for_each_subset, AffineForm, FacetSystem, PointConfig};
use crate::rational::{self, Rational};

pub const MAX_HULL_DIM: usize = 3;

/// Facet inequalities of `conv(A)` with primitive integer inward normals.
///
/// Forms are sorted by `(normal, constant)` so the output is independent of
/// the order of the points.
pub fn facet_system(config: &PointConfig) -> Result<FacetSystem> {
    let d = config.dim();
    if d > MAX_HULL_DIM {
        return Err(Error::UnsupportedDimension(d));
    }
    let pts = config.points();
    let mut seen: HashSet<(Vec<BigInt>, Rational)> = HashSet::new();
    let mut forms: Vec<(Vec<BigInt>, Rational)> = Vec::new();
    for_each_subset(pts.len(), d, &mut |idx| {
        let Some(normal) = hyperplane_normal(pts, idx, d) else {
            return;
        };
        let normal = rational::primitive_integer(&normal);
        let nq: Vec<Rational> = normal.iter().cloned().map(Rational::from_integer).collect();
        let base = dot(&nq, &pts[idx[0]]);
        let (mut pos, mut neg) = (false, false);
        for p in pts {
            let s = dot(&nq, p) - &base;
            pos |= s.is_positive();
            neg |= s.is_negative();
            if pos && neg {
                return;
            }
        }
        // orient inward: h(x) = <v, x> + c >= 0 on the whole set
        let (v, c) = if neg { (normal.iter().map(|x| -x).collect::<Vec<_>>(), base) } else { (normal, -base) };
        if seen.insert((v.clone(), c.clone())) {
            forms.push((v, c));
        }
    });
    if forms.len() < d + 1 {
        return Err(Error::DegenerateHull);
    }
    forms.sort();
    FacetSystem::new(
        forms
            .into_iter()
            .map(|(v, c)| AffineForm::new(v.into_iter().map(Rational::from_integer).collect(), c))
            .collect(),
    )
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

// Normal of the hyperplane through the chosen points, None if they are affinely dependent.
fn hyperplane_normal(pts: &[Vec<Rational>], idx: &[usize], d: usize) -> Option<Vec<Rational>> {
    let p0 = &pts[idx[0]];
    let rows: Vec<Vec<Rational>> =
        idx[1..].iter().map(|&i| pts[i].iter().zip(p0).map(|(a, b)| a - b).collect()).collect();
    if d == 1 {
        return Some(vec![rational::int(1)]);
    }
    rational::kernel_line(&rows, d)
}
