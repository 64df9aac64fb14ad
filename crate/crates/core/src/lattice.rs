//! Lattice index of the difference set `{a - a0}` via integer row reduction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::patch::PointConfig;

/// Reduces integer rows to echelon (Hermite-style) form using only unimodular
/// row operations and returns the nonzero rows.
pub fn echelon_form(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        // gcd elimination on column c below row r
        loop {
            let pivot = (r..rows.len())
                .filter(|&i| !rows[i][c].is_zero())
                .min_by(|&i, &j| rows[i][c].abs().cmp(&rows[j][c].abs()));
            let Some(p) = pivot else { break };
            rows.swap(r, p);
            let mut done = true;
            for i in r + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[r][c]);
                for k in c..ncols {
                    let t = &q * &rows[r][k];
                    rows[i][k] -= t;
                }
                if !rows[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if r < rows.len() && !rows[r][c].is_zero() {
            if rows[r][c].is_negative() {
                for k in c..ncols {
                    rows[r][k] = -&rows[r][k];
                }
            }
            r += 1;
        }
    }
    rows.truncate(r);
    rows.retain(|row| row.iter().any(|x| !x.is_zero()));
    rows
}

/// Index of the lattice spanned by the differences in `Z^d`, or `None` when
/// they do not span a full-rank sublattice.
pub fn lattice_index(config: &PointConfig) -> Result<Option<BigInt>> {
    let pts = config.lattice_points().ok_or(Error::NonLatticePoints)?;
    let d = config.dim();
    let a0 = &pts[0];
    let diffs: Vec<Vec<BigInt>> =
        pts[1..].iter().map(|p| p.iter().zip(a0).map(|(a, b)| BigInt::from(a - b)).collect()).collect();
    let ech = echelon_form(diffs);
    if ech.len() < d {
        return Ok(None);
    }
    // echelon rows are upper triangular with d pivots; index = product of pivots
    let mut idx = BigInt::one();
    for row in &ech {
        let lead = row.iter().find(|x| !x.is_zero()).expect("nonzero row");
        idx *= lead.abs();
    }
    Ok(Some(idx))
}

/// True iff the differences `a - a0` generate all of `Z^d`.
pub fn is_primitive(config: &PointConfig) -> Result<bool> {
    Ok(lattice_index(config)?.is_some_and(|i| i.is_one()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        assert!(is_primitive(&PointConfig::from_ints(&[&[0], &[1]]).unwrap()).unwrap());
        assert!(!is_primitive(&PointConfig::from_ints(&[&[0], &[2]]).unwrap()).unwrap());
        let c = PointConfig::from_ints(&[&[0, 0], &[1, 1], &[1, -1]]).unwrap();
        assert!(!is_primitive(&c).unwrap());
        assert_eq!(lattice_index(&c).unwrap(), Some(BigInt::from(2)));
        assert!(is_primitive(&fixtures::pentagon_config()).unwrap());
        assert!(is_primitive(fixtures::hexagon_wachspress_spec().config()).unwrap());
    }

    #[test]
    fn rejects_rational_points() {
        let c = PointConfig::new(vec![vec![rational::ratio(1, 2)], vec![rational::int(1)]]).unwrap();
        assert_eq!(is_primitive(&c), Err(Error::NonLatticePoints));
    }

    // brute-force determinant for three points in the plane
    fn det2(p: &[[i64; 2]; 3]) -> i64 {
        let (a, b) = ([p[1][0] - p[0][0], p[1][1] - p[0][1]], [p[2][0] - p[0][0], p[2][1] - p[0][1]]);
        (a[0] * b[1] - a[1] * b[0]).abs()
    }

    proptest! {
        #[test]
        fn triangle_index_is_abs_determinant(pts in prop::array::uniform3(prop::array::uniform2(-6i64..7))) {
            let det = det2(&pts);
            prop_assume!(det != 0);
            let refs: Vec<&[i64]> = pts.iter().map(|p| p.as_slice()).collect();
            let cfg = PointConfig::from_ints(&refs).unwrap();
            prop_assert_eq!(lattice_index(&cfg).unwrap(), Some(BigInt::from(det)));
        }
    }
}
