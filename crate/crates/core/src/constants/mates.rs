//! Suprema over Birkhoff-orthogonal unit pairs.
//!
//! The sphere is scanned by `x(θ)`, `θ ∈ [0, π)`, plus the vertex directions
//! of polygonal balls. Mates of `x` come from its subdifferential: one
//! direction at smooth points, a sampled cone at vertices. Both `y` and `−y`
//! are tried. The best few local maxima of the resulting profile are then
//! refined by golden-section search in `θ`, in the cone parameter and in the
//! auxiliary scale (`t` for `br`, `r` for `cnjb`).

use std::f64::consts::PI;

use rayon::prelude::*;

use super::{
    br_objective, check_t, cnjb_objective, grid_levels, pair_objective, ConstantEstimate, ConstantKind, SearchOpts,
    Witness, CNJB_R_POINTS, CNJB_R_RANGE,
};
use crate::error::{Error, Result};
use crate::norm::{NormSpec, UnitVector};
use crate::orthogonality::{is_birkhoff, mate_at, symmetric_pair};
use crate::search::{golden_max, log_grid};
use crate::vector::{normalize_angle, Vector2};

/// Cone samples at a vertex are `s = j / CONE_STEPS`, `j = 0..=CONE_STEPS`.
const CONE_STEPS: usize = 8;
/// Number of local maxima of the grid profile that get refined.
const TOP_CELLS: usize = 4;
const ROUNDS: usize = 2;

/// `θ` grid on `[0, π)` merged with the vertex directions of the ball.
pub(crate) fn theta_grid(spec: &NormSpec, n: usize) -> Vec<f64> {
    let mut g: Vec<f64> = (0..n).map(|i| PI * i as f64 / n as f64).collect();
    for a in spec.vertex_angles() {
        let a = a.rem_euclid(PI);
        g.push(if a >= PI { 0.0 } else { a });
    }
    g.sort_by(f64::total_cmp);
    g.dedup_by(|b, a| (*b - *a).abs() < 1e-14);
    g
}

/// Indices of circular local maxima of `values`, best first, ties by index.
pub(crate) fn top_local_maxima(values: &[f64], k: usize) -> Vec<usize> {
    let m = values.len();
    let mut idx: Vec<usize> = (0..m)
        .filter(|&i| {
            let v = values[i];
            v >= values[(i + m - 1) % m] && v >= values[(i + 1) % m]
        })
        .collect();
    idx.sort_by(|&a, &b| values[b].total_cmp(&values[a]).then(a.cmp(&b)));
    idx.truncate(k);
    idx
}

#[derive(Clone, Copy, Debug)]
struct Point {
    theta: f64,
    s: f64,
    sign: f64,
    aux: f64,
    value: f64,
    x: UnitVector,
    y: UnitVector,
}

fn signed(m: UnitVector, sign: f64) -> UnitVector {
    if sign > 0.0 {
        m
    } else {
        UnitVector { theta: normalize_angle(m.theta + PI), point: -m.point }
    }
}

struct Engine<'a, F> {
    spec: &'a NormSpec,
    obj: F,
    aux: Vec<f64>,
    refine_iters: usize,
}

impl<F> Engine<'_, F>
where
    F: Fn(Vector2, Vector2, f64) -> f64 + Sync,
{
    fn point(&self, theta: f64, s: f64, sign: f64, aux: f64) -> Point {
        let x = self.spec.unit_point(theta);
        let sd = self.spec.subdifferential(x.point);
        let y = signed(mate_at(self.spec, &sd, s), sign);
        Point { theta, s, sign, aux, value: (self.obj)(x.point, y.point, aux), x, y }
    }

    fn best_at(&self, theta: f64) -> Point {
        let x = self.spec.unit_point(theta);
        let sd = self.spec.subdifferential(x.point);
        let steps = if sd.is_smooth() { 0 } else { CONE_STEPS };
        let mut best = (f64::NEG_INFINITY, 0.0, 1.0, self.aux[0]);
        for j in 0..=steps {
            let s = if steps == 0 { 0.0 } else { j as f64 / steps as f64 };
            let y = mate_at(self.spec, &sd, s).point;
            for sign in [1.0, -1.0] {
                for &a in &self.aux {
                    let v = (self.obj)(x.point, sign * y, a);
                    if v > best.0 {
                        best = (v, s, sign, a);
                    }
                }
            }
        }
        self.point(theta, best.1, best.2, best.3)
    }

    fn refine(&self, start: Point, h_theta: f64) -> Point {
        let mut p = start;
        let aux_step = if self.aux.len() > 1 { (self.aux[1] / self.aux[0]).ln() } else { 0.0 };
        let (ln_min, ln_max) = (self.aux[0].ln(), self.aux[self.aux.len() - 1].ln());
        let mut scale = 1.0;
        for _ in 0..ROUNDS {
            let h = h_theta * scale;
            let r = golden_max(
                |th| self.point(th, p.s, p.sign, p.aux).value,
                p.theta - h,
                p.theta + h,
                0.0,
                self.refine_iters,
            );
            let q = self.point(r.arg, p.s, p.sign, p.aux);
            if q.value > p.value {
                p = q;
            }
            if !self.spec.subdifferential(p.x.point).is_smooth() {
                let w = scale / CONE_STEPS as f64;
                let r = golden_max(
                    |s| self.point(p.theta, s, p.sign, p.aux).value,
                    (p.s - w).max(0.0),
                    (p.s + w).min(1.0),
                    0.0,
                    self.refine_iters,
                );
                let q = self.point(p.theta, r.arg, p.sign, p.aux);
                if q.value > p.value {
                    p = q;
                }
            }
            if aux_step > 0.0 {
                let c = p.aux.ln();
                let r = golden_max(
                    |la| self.point(p.theta, p.s, p.sign, la.exp()).value,
                    (c - aux_step * scale).max(ln_min),
                    (c + aux_step * scale).min(ln_max),
                    0.0,
                    self.refine_iters,
                );
                let q = self.point(p.theta, p.s, p.sign, r.arg.exp());
                if q.value > p.value {
                    p = q;
                }
            }
            scale /= 8.0;
        }
        p
    }

    fn search(&self, grid_n: usize) -> Point {
        let mut levels = grid_levels(grid_n).map(|n| self.search_level(n));
        let first = levels.next().expect("at least one level");
        levels.fold(first, |best, p| if p.value > best.value { p } else { best })
    }

    fn search_level(&self, grid_n: usize) -> Point {
        let thetas = theta_grid(self.spec, grid_n);
        let profile: Vec<Point> = thetas.par_iter().map(|&th| self.best_at(th)).collect();
        let values: Vec<f64> = profile.iter().map(|p| p.value).collect();
        let mut best = profile[top_local_maxima(&values, 1)[0]];
        let m = thetas.len();
        let refined: Vec<Point> = top_local_maxima(&values, TOP_CELLS)
            .into_par_iter()
            .map(|i| {
                let lo = if i == 0 { thetas[m - 1] - PI } else { thetas[i - 1] };
                let hi = if i + 1 == m { thetas[0] + PI } else { thetas[i + 1] };
                let h = (thetas[i] - lo).max(hi - thetas[i]);
                self.refine(profile[i], h)
            })
            .collect();
        for p in refined {
            if p.value > best.value {
                best = p;
            }
        }
        best
    }
}

fn finish(
    spec: &NormSpec,
    kind: ConstantKind,
    best: Point,
    opts: &SearchOpts,
    aux_name: Option<&str>,
) -> Result<ConstantEstimate> {
    let (_, defect) = is_birkhoff(spec, best.x.point, best.y.point, opts.tol)?;
    if defect > opts.tol {
        return Err(Error::SearchFailed(format!(
            "witness of {kind} on {spec} has Birkhoff defect {defect:e} > {:e}",
            opts.tol
        )));
    }
    let mut extra = vec![("birkhoff_defect", defect)];
    if let Some(name) = aux_name {
        extra.push((name, best.aux));
    }
    Ok(ConstantEstimate::new(kind, best.value, Witness { x: best.x, y: best.y }, opts, &extra))
}

/// Estimator shared by `atb`, `dtb`, `a2b`, `jb` and `dprime`.
pub(crate) fn estimate_pair_kind(spec: &NormSpec, kind: ConstantKind, opts: &SearchOpts) -> Result<ConstantEstimate> {
    opts.validate()?;
    let engine = Engine {
        spec,
        obj: |x, y, _| pair_objective(kind, spec, x, y),
        aux: vec![1.0],
        refine_iters: opts.refine_iters,
    };
    let mut best = engine.search(opts.grid_n);
    if let ConstantKind::Dtb { .. } | ConstantKind::Dprime = kind {
        // (x, y) and (−y, x) of a symmetric pair give opposite values
        for pair in grid_levels(opts.grid_n).filter(|&n| n >= 64).filter_map(|n| symmetric_pair(spec, n, opts.tol).ok())
        {
            let neg_y = signed(pair.y, -1.0);
            for (x, y) in [(pair.x, pair.y), (neg_y, pair.x)] {
                let value = pair_objective(kind, spec, x.point, y.point);
                if value > best.value {
                    best = Point { theta: x.theta, s: 0.0, sign: 1.0, aux: 1.0, value, x, y };
                }
            }
        }
    }
    finish(spec, kind, best, opts, None)
}

/// `A_t^B`: supremum of `(‖x+ty‖ + ‖tx−y‖)/2` over unit `x ⊥_B y`.
pub fn estimate_atb(spec: &NormSpec, t: f64, opts: &SearchOpts) -> Result<ConstantEstimate> {
    check_t(t)?;
    estimate_pair_kind(spec, ConstantKind::Atb { t }, opts)
}

/// `D_t^B`: supremum of `(‖x+ty‖ − ‖tx−y‖)/t` over unit `x ⊥_B y`.
pub fn estimate_dtb(spec: &NormSpec, t: f64, opts: &SearchOpts) -> Result<ConstantEstimate> {
    check_t(t)?;
    estimate_pair_kind(spec, ConstantKind::Dtb { t }, opts)
}

/// `BR`: supremum over `t` of `(‖x+ty‖ − ‖x−ty‖)/t` over unit `x ⊥_B y`.
pub fn estimate_br(spec: &NormSpec, opts: &SearchOpts) -> Result<ConstantEstimate> {
    opts.validate()?;
    let engine = Engine {
        spec,
        obj: |x, y, t| br_objective(spec, x, y, t),
        aux: opts.t_grid.values(),
        refine_iters: opts.refine_iters,
    };
    let best = engine.search(opts.grid_n);
    finish(spec, ConstantKind::Br, best, opts, Some("t"))
}

/// Birkhoff variant of the von Neumann–Jordan constant, with `y` scaled by
/// `r` over a log grid.
pub(crate) fn estimate_cnjb(spec: &NormSpec, opts: &SearchOpts) -> Result<ConstantEstimate> {
    opts.validate()?;
    let engine = Engine {
        spec,
        obj: |x, y, r| cnjb_objective(spec, x, y, r),
        aux: log_grid(CNJB_R_RANGE.0, CNJB_R_RANGE.1, CNJB_R_POINTS),
        refine_iters: opts.refine_iters,
    };
    let best = engine.search(opts.grid_n);
    finish(spec, ConstantKind::Cnjb, best, opts, Some("r"))
}
