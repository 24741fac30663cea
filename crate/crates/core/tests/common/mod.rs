//! Brute-force oracles shared by the integration tests.
//!
//! Everything here is written directly from the definitions of the constants
//! and uses only `NormSpec::norm`, so it shares no search code with the
//! estimators.

#![allow(dead_code)]

use std::f64::consts::PI;

use banach_core::{NormSpec, Vector2};
use rayon::prelude::*;

/// Unit vectors `d(2πi/n)/‖d‖` for `i < n`.
pub fn sphere(spec: &NormSpec, n: usize) -> Vec<Vector2> {
    (0..n)
        .map(|i| {
            let a = 2.0 * PI * i as f64 / n as f64;
            let d = Vector2::new(a.cos(), a.sin());
            (1.0 / spec.norm(d)) * d
        })
        .collect()
}

pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|k| (lo.ln() + (hi / lo).ln() * k as f64 / (n - 1) as f64).exp()).collect()
}

/// Birkhoff test through one-sided difference quotients: `x ⊥_B y` iff
/// both directional derivatives of the norm at `x` along `±y` are ≥ 0.
/// The convex quotient at `h` bounds the derivative from above, so true
/// mates always pass.
pub fn birkhoff_by_quotients(spec: &NormSpec, x: Vector2, y: Vector2) -> bool {
    const H: f64 = 1e-6;
    let nx = spec.norm(x);
    (spec.norm(x + H * y) - nx) / H >= -1e-6 && (spec.norm(x - H * y) - nx) / H >= -1e-6
}

/// All Birkhoff pairs `(x, y)` of the `n × n` sphere grid.
pub fn birkhoff_pairs(spec: &NormSpec, n: usize) -> Vec<(Vector2, Vector2)> {
    let pts = sphere(spec, n);
    pts.par_iter()
        .flat_map_iter(|&x| {
            pts.iter().filter(move |&&y| birkhoff_by_quotients(spec, x, y)).map(move |&y| (x, y)).collect::<Vec<_>>()
        })
        .collect()
}

/// Max of `f` over `pairs`.
pub fn sup_pairs<F>(pairs: &[(Vector2, Vector2)], f: F) -> f64
where
    F: Fn(Vector2, Vector2) -> f64 + Sync,
{
    pairs.par_iter().map(|&(x, y)| f(x, y)).reduce(|| f64::NEG_INFINITY, f64::max)
}

/// Max of `f` over the full `n × n` sphere grid.
pub fn sup_torus<F>(spec: &NormSpec, n: usize, f: F) -> f64
where
    F: Fn(Vector2, Vector2) -> f64 + Sync,
{
    let pts = sphere(spec, n);
    pts.par_iter()
        .map(|&x| pts.iter().map(|&y| f(x, y)).fold(f64::NEG_INFINITY, f64::max))
        .reduce(|| f64::NEG_INFINITY, f64::max)
}

/// `min_λ ‖x + λy‖` on a two-level dense grid of 10⁵ points.
pub fn line_min_dense(spec: &NormSpec, x: Vector2, y: Vector2) -> f64 {
    let r = 2.0 * spec.norm(x) / spec.norm(y) + 1.0;
    let coarse = 50_000;
    let (mut best, mut arg) = (f64::INFINITY, 0.0);
    for k in 0..=coarse {
        let l = -r + 2.0 * r * k as f64 / coarse as f64;
        let v = spec.norm(x + l * y);
        if v < best {
            best = v;
            arg = l;
        }
    }
    let h = 2.0 * r / coarse as f64;
    let fine = 50_000;
    for k in 0..=fine {
        let l = arg - h + 2.0 * h * k as f64 / fine as f64;
        best = best.min(spec.norm(x + l * y));
    }
    best
}

/// `D(X)` on the `n × n` grid: isosceles pairs from linear interpolation of
/// sign changes of `‖x+y‖ − ‖x−y‖` along `y`, then a dense line minimum.
pub fn d_inf_oracle(spec: &NormSpec, n: usize) -> f64 {
    let pts = sphere(spec, n);
    let angles: Vec<f64> = (0..n).map(|i| 2.0 * PI * i as f64 / n as f64).collect();
    (0..n / 2)
        .into_par_iter()
        .map(|i| {
            let x = pts[i];
            let h: Vec<f64> = pts.iter().map(|&y| spec.norm(x + y) - spec.norm(x - y)).collect();
            let mut best = f64::INFINITY;
            for j in 0..n {
                let k = (j + 1) % n;
                if h[j] == 0.0 || h[j] * h[k] < 0.0 {
                    let s = if h[j] == 0.0 { 0.0 } else { h[j] / (h[j] - h[k]) };
                    let a = angles[j] + s * 2.0 * PI / n as f64;
                    let d = Vector2::new(a.cos(), a.sin());
                    let y = (1.0 / spec.norm(d)) * d;
                    best = best.min(line_min_dense_fast(spec, x, y));
                }
            }
            best
        })
        .reduce(|| f64::INFINITY, f64::min)
}

/// Cheaper two-level line minimum used inside the `D(X)` oracle.
fn line_min_dense_fast(spec: &NormSpec, x: Vector2, y: Vector2) -> f64 {
    let r = 2.0 * spec.norm(x) / spec.norm(y) + 1.0;
    let mut lo = -r;
    let mut hi = r;
    let mut best = f64::INFINITY;
    for _ in 0..4 {
        let m = 64;
        let (mut arg, mut val) = (lo, f64::INFINITY);
        for k in 0..=m {
            let l = lo + (hi - lo) * k as f64 / m as f64;
            let v = spec.norm(x + l * y);
            if v < val {
                val = v;
                arg = l;
            }
        }
        best = best.min(val);
        let w = (hi - lo) / m as f64;
        lo = arg - w;
        hi = arg + w;
    }
    best
}

/// `F(X)` on the `n × n` sphere grid and the 96-point log grid of
/// `[1e-3, 1e3]`. Only `t ≥ 1` is scanned: with `g(x, y, t)` the objective,
/// `g(x, y, t) = t·g(y, x, 1/t)`, so for `t < 1` a positive value is
/// dominated by the swapped pair at `1/t`, which lies on the same grid.
pub fn f_oracle(spec: &NormSpec, n: usize) -> f64 {
    let ts: Vec<f64> = log_grid(1e-3, 1e3, 96).into_iter().filter(|&t| t >= 1.0 - 1e-12).collect();
    sup_torus(spec, n, |x, y| {
        ts.iter().map(|&t| 0.5 * (spec.norm(x + t * y) - spec.norm(t * x + y))).fold(f64::NEG_INFINITY, f64::max)
    })
}

pub fn l1() -> NormSpec {
    NormSpec::lp(1.0).unwrap()
}

pub fn linf() -> NormSpec {
    NormSpec::lp(f64::INFINITY).unwrap()
}
