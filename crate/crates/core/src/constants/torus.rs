//! Suprema over all pairs of unit vectors.
//!
//! The torus `θ ∈ [0, π) × φ ∈ [0, 2π)` is scanned on a product grid (both
//! axes merged with the ball's vertex directions), the best row maxima are
//! refined by coordinate-wise golden-section search.

use std::f64::consts::PI;

use rayon::prelude::*;

use super::mates::{theta_grid, top_local_maxima};
use super::{
    f_objective, grid_levels, pair_objective, skew_quotient, ConstantEstimate, ConstantKind, SearchOpts, Witness,
    SKEWNESS_LAMBDA, SKEWNESS_LAMBDA_CHECK,
};
use crate::error::Result;
use crate::norm::NormSpec;
use crate::search::golden_max;
use crate::vector::Vector2;

const TOP_ROWS: usize = 4;
const ROUNDS: usize = 3;

fn phi_grid(spec: &NormSpec, n: usize) -> Vec<f64> {
    let mut g: Vec<f64> = (0..2 * n).map(|j| PI * j as f64 / n as f64).collect();
    g.extend(spec.vertex_angles());
    g.sort_by(f64::total_cmp);
    g.dedup_by(|b, a| (*b - *a).abs() < 1e-14);
    g
}

#[derive(Clone, Copy, Debug)]
struct Point {
    theta: f64,
    phi: f64,
    aux: f64,
    value: f64,
}

struct Torus<'a, F> {
    spec: &'a NormSpec,
    obj: F,
    aux: Vec<f64>,
    refine_iters: usize,
}

impl<F> Torus<'_, F>
where
    F: Fn(Vector2, Vector2, f64) -> f64 + Sync,
{
    fn eval(&self, theta: f64, phi: f64, aux: f64) -> f64 {
        let x = self.spec.unit_point(theta).point;
        let y = self.spec.unit_point(phi).point;
        (self.obj)(x, y, aux)
    }

    fn refine(&self, start: Point, h: f64) -> Point {
        let mut p = start;
        let aux_step = if self.aux.len() > 1 { (self.aux[1] / self.aux[0]).ln() } else { 0.0 };
        let (ln_min, ln_max) = (self.aux[0].ln(), self.aux[self.aux.len() - 1].ln());
        let mut scale = 1.0;
        let iters = self.refine_iters;
        for _ in 0..ROUNDS {
            let w = h * scale;
            let r = golden_max(|th| self.eval(th, p.phi, p.aux), p.theta - w, p.theta + w, 0.0, iters);
            if r.value > p.value {
                p = Point { theta: r.arg, value: r.value, ..p };
            }
            let r = golden_max(|ph| self.eval(p.theta, ph, p.aux), p.phi - w, p.phi + w, 0.0, iters);
            if r.value > p.value {
                p = Point { phi: r.arg, value: r.value, ..p };
            }
            if aux_step > 0.0 {
                let c = p.aux.ln();
                let r = golden_max(
                    |la| self.eval(p.theta, p.phi, la.exp()),
                    (c - aux_step * scale).max(ln_min),
                    (c + aux_step * scale).min(ln_max),
                    0.0,
                    iters,
                );
                if r.value > p.value {
                    p = Point { aux: r.arg.exp(), value: r.value, ..p };
                }
            }
            scale /= 4.0;
        }
        p
    }

    fn search(&self, n: usize) -> Point {
        let mut levels = grid_levels(n).map(|m| self.search_level(m));
        let first = levels.next().expect("at least one level");
        levels.fold(first, |best, p| if p.value > best.value { p } else { best })
    }

    fn search_level(&self, n: usize) -> Point {
        let thetas = theta_grid(self.spec, n);
        let phis = phi_grid(self.spec, n);
        let ys: Vec<Vector2> = phis.iter().map(|&p| self.spec.unit_point(p).point).collect();
        let rows: Vec<Point> = thetas
            .par_iter()
            .map(|&theta| {
                let x = self.spec.unit_point(theta).point;
                let mut best = (f64::NEG_INFINITY, 0, self.aux[0]);
                for (j, &y) in ys.iter().enumerate() {
                    for &a in &self.aux {
                        let v = (self.obj)(x, y, a);
                        if v > best.0 {
                            best = (v, j, a);
                        }
                    }
                }
                Point { theta, phi: phis[best.1], aux: best.2, value: best.0 }
            })
            .collect();
        let values: Vec<f64> = rows.iter().map(|p| p.value).collect();
        let mut best = rows[top_local_maxima(&values, 1)[0]];
        let h = PI / n as f64;
        let refined: Vec<Point> =
            top_local_maxima(&values, TOP_ROWS).into_par_iter().map(|i| self.refine(rows[i], h)).collect();
        for p in refined {
            if p.value > best.value {
                best = p;
            }
        }
        best
    }
}

fn witness(spec: &NormSpec, p: &Point) -> Witness {
    Witness { x: spec.unit_point(p.theta), y: spec.unit_point(p.phi) }
}

/// `j`, `a2` and `aprime`.
pub(crate) fn estimate_pair_kind(spec: &NormSpec, kind: ConstantKind, opts: &SearchOpts) -> Result<ConstantEstimate> {
    opts.validate()?;
    let torus = Torus {
        spec,
        obj: |x, y, _| pair_objective(kind, spec, x, y),
        aux: vec![1.0],
        refine_iters: opts.refine_iters,
    };
    let best = torus.search(opts.grid_n);
    let w = witness(spec, &best);
    let value = pair_objective(kind, spec, w.x.point, w.y.point);
    Ok(ConstantEstimate::new(kind, value, w, opts, &[]))
}

/// Skewness `s(X)`, with the one-sided limit replaced by the quotient at
/// `λ = 1e-7`. The parameter `stability_gap` is the change of the quotient
/// at the witness when `λ` grows to `1e-6`.
pub fn estimate_skewness(spec: &NormSpec, opts: &SearchOpts) -> Result<ConstantEstimate> {
    opts.validate()?;
    let torus = Torus {
        spec,
        obj: |x, y, _| skew_quotient(spec, x, y, SKEWNESS_LAMBDA),
        aux: vec![1.0],
        refine_iters: opts.refine_iters,
    };
    let best = torus.search(opts.grid_n);
    let w = witness(spec, &best);
    let value = skew_quotient(spec, w.x.point, w.y.point, SKEWNESS_LAMBDA);
    let coarse = skew_quotient(spec, w.x.point, w.y.point, SKEWNESS_LAMBDA_CHECK);
    Ok(ConstantEstimate::new(
        ConstantKind::Skewness,
        value,
        w,
        opts,
        &[("lambda", SKEWNESS_LAMBDA), ("stability_gap", (coarse - value).abs())],
    ))
}

/// `F(X)`: supremum over `t` and all unit pairs of `(‖x+ty‖ − ‖tx+y‖)/2`.
///
/// The pair grid is a quarter of `grid_n` per axis because every pair is
/// evaluated at each point of the `t` grid.
pub fn estimate_f(spec: &NormSpec, opts: &SearchOpts) -> Result<ConstantEstimate> {
    opts.validate()?;
    let torus = Torus {
        spec,
        obj: |x, y, t| f_objective(spec, x, y, t),
        aux: opts.t_grid.values(),
        refine_iters: opts.refine_iters,
    };
    let best = torus.search(f_grid(opts.grid_n));
    let w = witness(spec, &best);
    let value = f_objective(spec, w.x.point, w.y.point, best.aux);
    Ok(ConstantEstimate::new(ConstantKind::F, value, w, opts, &[("t", best.aux)]))
}

pub(crate) fn f_grid(grid_n: usize) -> usize {
    (grid_n / 4).max(32)
}
