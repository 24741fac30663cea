//! Infimum-type constants: `D(X)` and the modulus of convexity.

use std::f64::consts::PI;

use rayon::prelude::*;

use super::{modulus_objective, ConstantEstimate, ConstantKind, SearchOpts, Witness};
use crate::error::{Error, Result};
use crate::norm::{NormSpec, UnitVector};
use crate::orthogonality::min_over_line;
use crate::search::{bisect, golden_min};
use crate::vector::Vector2;

const BISECTIONS: usize = 60;
const TOP_CELLS: usize = 4;
/// Sub-samples used to relocate a root near a previous one.
const TRACK_SAMPLES: usize = 8;

#[derive(Clone, Copy, Debug)]
struct Point {
    theta: f64,
    phi: f64,
    value: f64,
}

/// Indices of circular local minima of `values`, best first, ties by index.
fn top_local_minima(values: &[f64], k: usize) -> Vec<usize> {
    let neg: Vec<f64> = values.iter().map(|v| -v).collect();
    super::mates::top_local_maxima(&neg, k)
}

fn best_of(points: impl IntoIterator<Item = Point>) -> Option<Point> {
    points.into_iter().fold(None, |acc: Option<Point>, p| match acc {
        Some(a) if a.value <= p.value => Some(a),
        _ => Some(p),
    })
}

fn theta_list(spec: &NormSpec, n: usize) -> Vec<f64> {
    super::mates::theta_grid(spec, n)
}

fn refine_min<G>(thetas: &[f64], profile: &[Option<Point>], iters: usize, eval: G) -> Option<Point>
where
    G: Fn(f64, &Point) -> Option<Point> + Sync,
{
    let values: Vec<f64> = profile.iter().map(|p| p.map_or(f64::INFINITY, |p| p.value)).collect();
    let m = thetas.len();
    let grid_best = best_of(profile.iter().flatten().copied())?;
    let refined: Vec<Point> = top_local_minima(&values, TOP_CELLS)
        .into_par_iter()
        .filter_map(|i| {
            let start = profile[i]?;
            let lo = if i == 0 { thetas[m - 1] - PI } else { thetas[i - 1] };
            let hi = if i + 1 == m { thetas[0] + PI } else { thetas[i + 1] };
            let r = golden_min(|th| eval(th, &start).map_or(f64::INFINITY, |p| p.value), lo, hi, 0.0, iters);
            eval(r.arg, &start).filter(|p| p.value < start.value)
        })
        .collect();
    best_of(std::iter::once(grid_best).chain(refined))
}

/// `x(θ)` and the isosceles residual `‖x+y‖ − ‖x−y‖` along `y = y(φ)`.
fn iso_residual(spec: &NormSpec, x: Vector2, phi: f64) -> f64 {
    let y = spec.unit_point(phi).point;
    spec.norm(x + y) - spec.norm(x - y)
}

/// Roots in `φ` of the isosceles residual on `[lo, hi]`, sampled at `k + 1`
/// points and refined by bisection.
fn iso_roots(spec: &NormSpec, x: Vector2, lo: f64, hi: f64, k: usize) -> Vec<f64> {
    let phis: Vec<f64> = (0..=k).map(|j| lo + (hi - lo) * j as f64 / k as f64).collect();
    let h: Vec<f64> = phis.iter().map(|&p| iso_residual(spec, x, p)).collect();
    let mut roots = Vec::new();
    let mut j = 0;
    while j <= k {
        if h[j] == 0.0 {
            // a run of exact zeros contributes its two ends
            let start = j;
            while j < k && h[j + 1] == 0.0 {
                j += 1;
            }
            roots.push(phis[start]);
            if j > start {
                roots.push(phis[j]);
            }
        } else if j < k && h[j] * h[j + 1] < 0.0 {
            let (a, b) = bisect(|p| iso_residual(spec, x, p), phis[j], phis[j + 1], BISECTIONS);
            roots.push(0.5 * (a + b));
        }
        j += 1;
    }
    roots
}

fn d_point(spec: &NormSpec, theta: f64, phi: f64) -> Point {
    let x = spec.unit_point(theta).point;
    let y = spec.unit_point(phi).point;
    let value = min_over_line(spec, x, y).map_or(f64::INFINITY, |m| m.value);
    Point { theta, phi, value }
}

/// `D(X)`: infimum of `inf_λ ‖x + λy‖` over unit pairs with `‖x+y‖ = ‖x−y‖`.
///
/// For each `x(θ)` the residual `‖x+y‖ − ‖x−y‖` is scanned over
/// `φ ∈ [0, π]` (it changes sign under `y → −y`) and every sign change is
/// bisected.
pub fn estimate_d_inf(spec: &NormSpec, opts: &SearchOpts) -> Result<ConstantEstimate> {
    opts.validate()?;
    let n = opts.grid_n;
    let thetas = theta_list(spec, n);
    let profile: Vec<Option<Point>> = thetas
        .par_iter()
        .map(|&theta| {
            let x = spec.unit_point(theta).point;
            best_of(iso_roots(spec, x, 0.0, PI, n).into_iter().map(|phi| d_point(spec, theta, phi)))
        })
        .collect();
    let w = 4.0 * PI / n as f64;
    let best = refine_min(&thetas, &profile, opts.refine_iters, |theta, start| {
        let x = spec.unit_point(theta).point;
        let roots = iso_roots(spec, x, start.phi - w, start.phi + w, TRACK_SAMPLES);
        let phi = roots.into_iter().min_by(|a, b| (a - start.phi).abs().total_cmp(&(b - start.phi).abs()))?;
        Some(d_point(spec, theta, phi))
    })
    .ok_or_else(|| Error::SearchFailed(format!("no isosceles pair found on {spec}")))?;

    let x = spec.unit_point(best.theta);
    let y = spec.unit_point(best.phi);
    let line = min_over_line(spec, x.point, y.point)?;
    let residual = (spec.norm(x.point + y.point) - spec.norm(x.point - y.point)).abs();
    Ok(ConstantEstimate::new(
        ConstantKind::DInf,
        line.value,
        Witness { x, y },
        opts,
        &[("lambda_star", line.lambda_star), ("isosceles_defect", residual)],
    ))
}

/// Points `y` at distance `eps` from `x(θ)` on the branch turning by
/// `sign · φ`, `φ ∈ [0, π]`.
///
/// `φ ↦ ‖x − y(θ + sign·φ)‖` is non-decreasing from 0 to 2, so the solution
/// set is an arc `[φ_lo, φ_hi]`; both ends and three interior points are
/// returned.
fn modulus_candidates(spec: &NormSpec, theta: f64, eps: f64, sign: f64) -> Vec<f64> {
    let x = spec.unit_point(theta).point;
    let dist = |phi: f64| spec.norm(x - spec.unit_point(theta + sign * phi).point);
    if eps <= 0.0 {
        return vec![theta];
    }
    // first φ with dist ≥ eps, last φ with dist ≤ eps
    let (_, lo) = bisect(|p| if dist(p) >= eps { 1.0 } else { -1.0 }, 0.0, PI, BISECTIONS);
    let (hi, _) = bisect(|p| if dist(p) > eps { 1.0 } else { -1.0 }, 0.0, PI, BISECTIONS);
    let hi = if dist(PI) <= eps { PI } else { hi.max(lo) };
    let mut out = vec![lo];
    if hi - lo > 1e-12 {
        out.extend((1..=3).map(|j| lo + (hi - lo) * j as f64 / 4.0));
        out.push(hi);
    }
    out.into_iter().map(|p| theta + sign * p).collect()
}

fn modulus_point(spec: &NormSpec, theta: f64, phi: f64) -> Point {
    let x = spec.unit_point(theta).point;
    let y = spec.unit_point(phi).point;
    Point { theta, phi, value: modulus_objective(spec, x, y) }
}

/// Modulus of convexity `δ(ε)`, searched over unit pairs with `‖x − y‖ = ε`.
pub fn modulus_of_convexity(spec: &NormSpec, eps: f64, opts: &SearchOpts) -> Result<ConstantEstimate> {
    let kind = ConstantKind::Modulus { eps };
    kind.validate()?;
    opts.validate()?;
    let at = |theta: f64| {
        best_of(
            [1.0, -1.0]
                .into_iter()
                .flat_map(|s| modulus_candidates(spec, theta, eps, s))
                .map(|phi| modulus_point(spec, theta, phi)),
        )
    };
    let thetas = theta_list(spec, opts.grid_n);
    let profile: Vec<Option<Point>> = thetas.par_iter().map(|&th| at(th)).collect();
    let best = refine_min(&thetas, &profile, opts.refine_iters, |th, _| at(th))
        .ok_or_else(|| Error::SearchFailed(format!("no pair at distance {eps} on {spec}")))?;
    let x = spec.unit_point(best.theta);
    let y: UnitVector = spec.unit_point(best.phi);
    let distance = spec.norm(x.point - y.point);
    Ok(ConstantEstimate::new(
        kind,
        modulus_objective(spec, x.point, y.point),
        Witness { x, y },
        opts,
        &[("distance", distance)],
    ))
}
