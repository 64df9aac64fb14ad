//! Independent oracles: closed forms written straight from their formulas,
//! never routed through the library's FormProduct or IPF code paths.

#![allow(dead_code)]

use patchkit::rational::{int, ratio, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Wachspress hexagon blending functions, vertex order (-1,-1), (-1,0), (0,1), (1,1), (1,0), (0,-1).
pub fn hexagon_blending(x: f64, y: f64) -> [f64; 6] {
    [
        (1.0 + x - y) * (1.0 - y) * (1.0 - x) * (1.0 + y - x),
        (1.0 - y) * (1.0 - x) * (1.0 + y - x) * (1.0 + y),
        (1.0 - x) * (1.0 + y - x) * (1.0 + y) * (1.0 + x),
        (1.0 + y - x) * (1.0 + y) * (1.0 + x) * (1.0 + x - y),
        (1.0 + y) * (1.0 + x) * (1.0 + x - y) * (1.0 - y),
        (1.0 + x) * (1.0 + x - y) * (1.0 - y) * (1.0 - x),
    ]
}

/// Denominator of the normalized Wachspress functions.
pub fn hexagon_phi(x: f64, y: f64) -> f64 {
    2.0 * (3.0 + x * y - x * x - y * y)
}

pub fn in_hexagon(x: f64, y: f64) -> bool {
    [1.0 - y, 1.0 - x, 1.0 + x - y, 1.0 + y - x, 1.0 + x, 1.0 + y].iter().all(|h| *h >= 0.0)
}

/// Closed form of the tuned pentagon map.
pub fn tuned_g(s: f64, t: f64) -> (f64, f64) {
    let den = 2.0 * s + 2.0 * t + 3.0;
    (2.0 * s * (2.0 * s + t + 3.0) / ((s + 1.0) * den), 2.0 * t * (s + 2.0 * t + 3.0) / ((t + 1.0) * den))
}

pub fn tuned_g_exact(s: &Rational, t: &Rational) -> (Rational, Rational) {
    let (one, two, three) = (int(1), int(2), int(3));
    let den = &two * s + &two * t + &three;
    (&two * s * (&two * s + t + &three) / ((s + &one) * &den), &two * t * (s + &two * t + &three) / ((t + &one) * &den))
}

/// Untuned pentagon toric Bézier values, written out from the facet forms
/// s, t, 2-s, 2-t, 3-s-t. Point order (0,0),(1,0),(2,0),(0,1),(1,1),(2,1),(0,2),(1,2).
pub fn pentagon_toric_blending(s: f64, t: f64) -> [f64; 8] {
    const A: [(i32, i32); 8] = [(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1), (0, 2), (1, 2)];
    const W: [f64; 8] = [3.0, 5.0, 2.0, 5.0, 7.0, 2.0, 2.0, 2.0];
    let mut out = [0.0; 8];
    for (k, &(a1, a2)) in A.iter().enumerate() {
        out[k] = W[k]
            * s.powi(a1)
            * t.powi(a2)
            * (2.0 - s).powi(2 - a1)
            * (2.0 - t).powi(2 - a2)
            * (3.0 - s - t).powi(3 - a1 - a2);
    }
    out
}

pub fn in_pentagon(s: f64, t: f64) -> bool {
    s >= 0.0 && t >= 0.0 && s <= 2.0 && t <= 2.0 && s + t <= 3.0
}

pub fn binom(n: u64, k: u64) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Classical Bernstein polynomial on [0, 1].
pub fn bernstein(n: u64, i: u64, u: f64) -> f64 {
    binom(n, i) * u.powi(i as i32) * (1.0 - u).powi((n - i) as i32)
}

fn factorial(n: u64) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Bernstein-simploid value at `x` for integer point `a`, blocks `(d_i, n_i)`:
/// product over blocks of multinomial(n; a_i) u^a_i (1 - |u|)^(n - |a_i|), u = x_i / n.
pub fn simploid_bernstein(blocks: &[(usize, u64)], a: &[i64], x: &[f64]) -> f64 {
    let mut off = 0;
    let mut val = 1.0;
    for &(d, n) in blocks {
        let ai = &a[off..off + d];
        let xi = &x[off..off + d];
        let total: i64 = ai.iter().sum();
        let u_sum: f64 = xi.iter().map(|v| v / n as f64).sum();
        let mut coeff = factorial(n) / factorial(n - total as u64);
        for &k in ai {
            coeff /= factorial(k as u64);
        }
        let mut term = coeff * (1.0 - u_sum).powi((n as i64 - total) as i32);
        for (k, v) in ai.iter().zip(xi) {
            term *= (v / n as f64).powi(*k as i32);
        }
        val *= term;
        off += d;
    }
    val
}

/// Random rational in [lo, hi] with the given denominator.
pub fn random_rational(rng: &mut ChaCha8Rng, lo: i64, hi: i64, den: i64) -> Rational {
    ratio(rng.gen_range(lo * den..=hi * den), den)
}

/// Convex hull vertices of planar points by Jarvis march, counter-clockwise.
pub fn jarvis_hull(pts: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let start = *pts.iter().min().unwrap();
    let mut hull = vec![start];
    let mut cur = start;
    loop {
        let mut cand = pts.iter().copied().find(|&p| p != cur).unwrap();
        for &p in pts {
            if p == cur {
                continue;
            }
            let cross = (cand.0 - cur.0) * (p.1 - cur.1) - (cand.1 - cur.1) * (p.0 - cur.0);
            let farther =
                (p.0 - cur.0).pow(2) + (p.1 - cur.1).pow(2) > (cand.0 - cur.0).pow(2) + (cand.1 - cur.1).pow(2);
            if cross < 0 || (cross == 0 && farther) {
                cand = p;
            }
        }
        if cand == start {
            return hull;
        }
        hull.push(cand);
        cur = cand;
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Inward primitive edge forms `(v, c)` of a counter-clockwise polygon.
pub fn polygon_edge_forms(hull: &[(i64, i64)]) -> Vec<([i64; 2], i64)> {
    let n = hull.len();
    (0..n)
        .map(|i| {
            let (p, q) = (hull[i], hull[(i + 1) % n]);
            let (dx, dy) = (q.0 - p.0, q.1 - p.1);
            let g = gcd(dx, dy);
            // left normal points inward for a counter-clockwise polygon
            let v = [-dy / g, dx / g];
            (v, -(v[0] * p.0 + v[1] * p.1))
        })
        .collect()
}
