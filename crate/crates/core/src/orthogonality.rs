//! Birkhoff, isosceles, skew-isosceles and Roberts orthogonality.
//!
//! `x ⊥_B y` holds when `‖x + λy‖ ≥ ‖x‖` for every real `λ`. The
//! defect-based tests here minimise `λ ↦ ‖x + λy‖` by golden-section search,
//! which is exact up to the search tolerance because the map is convex.
//! Searches over the unit sphere enumerate mates through the
//! subdifferential instead: `y` is a Birkhoff mate of `x` exactly when some
//! supporting functional at `x` vanishes on `y`.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::norm::{NormSpec, Subdifferential, UnitVector};
use crate::search::{bisect, golden_min};
use crate::vector::Vector2;

/// Default tolerance for orthogonality tests.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Tolerance for accepting mates inside supremum searches.
pub const CONE_TOL: f64 = 1e-7;
/// Bisection depth for cone endpoints.
pub const ENDPOINT_BISECTIONS: usize = 60;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Relation {
    Birkhoff,
    Isosceles,
    SkewIsosceles { t: f64 },
    Roberts,
}

/// A pair of unit vectors and the relation they were checked against.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OrthoPair {
    pub x: UnitVector,
    pub y: UnitVector,
    pub relation: Relation,
    pub defect: f64,
}

/// Maximal interval of directions `φ` (taken modulo π) whose unit vectors
/// are Birkhoff mates of `x` within the scan tolerance.
///
/// `phi_lo` lies in `[0, π)`; `phi_hi ≥ phi_lo` and may exceed π when the
/// interval wraps.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MateCone {
    pub x: UnitVector,
    pub phi_lo: f64,
    pub phi_hi: f64,
}

impl MateCone {
    pub fn width(&self) -> f64 {
        self.phi_hi - self.phi_lo
    }

    /// Whether direction `phi` (any sign) lies in the cone, with slack `eps`.
    pub fn contains(&self, phi: f64, eps: f64) -> bool {
        let phi = phi.rem_euclid(PI);
        let lo = self.phi_lo - eps;
        let hi = self.phi_hi + eps;
        (lo..=hi).contains(&phi) || (lo..=hi).contains(&(phi + PI)) || (lo..=hi).contains(&(phi - PI))
    }
}

/// Minimum of `λ ↦ ‖x + λy‖` over the real line.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LineMin {
    /// A minimiser. When the minimum is attained on an interval (polygonal
    /// norms) this is an arbitrary point of that interval.
    pub lambda_star: f64,
    pub value: f64,
}

/// Minimises `‖x + λy‖` over `λ`.
///
/// The search bracket is `[−R, R]` with `R = 2‖x‖/‖y‖ + 1`; outside it
/// `‖x + λy‖ ≥ |λ|‖y‖ − ‖x‖ > ‖x‖`.
pub fn min_over_line(spec: &NormSpec, x: Vector2, y: Vector2) -> Result<LineMin> {
    if y.is_zero() {
        return Err(Error::ZeroVector("y"));
    }
    Ok(line_min(spec, x, y))
}

fn line_min(spec: &NormSpec, x: Vector2, y: Vector2) -> LineMin {
    let nx = spec.norm(x);
    let ny = spec.norm(y);
    let r = 2.0 * nx / ny + 1.0;
    let m = golden_min(|l| spec.norm(x + l * y), -r, r, 1e-13 * r, 400);
    // λ = 0 is always a candidate; keeps exact mates at defect zero
    if nx <= m.value {
        LineMin { lambda_star: 0.0, value: nx }
    } else {
        LineMin { lambda_star: m.arg, value: m.value }
    }
}

fn birkhoff_defect(spec: &NormSpec, x: Vector2, y: Vector2) -> f64 {
    (spec.norm(x) - line_min(spec, x, y).value).max(0.0)
}

/// Birkhoff test: `defect = ‖x‖ − min_λ ‖x + λy‖`, accepted when `defect ≤ tol`.
pub fn is_birkhoff(spec: &NormSpec, x: Vector2, y: Vector2, tol: f64) -> Result<(bool, f64)> {
    if x.is_zero() {
        return Err(Error::ZeroVector("x"));
    }
    if y.is_zero() {
        return Err(Error::ZeroVector("y"));
    }
    let d = birkhoff_defect(spec, x, y);
    Ok((d <= tol, d))
}

/// Isosceles test: `defect = |‖x + y‖ − ‖x − y‖|`.
pub fn is_isosceles(spec: &NormSpec, x: Vector2, y: Vector2, tol: f64) -> Result<(bool, f64)> {
    if !x.is_finite() || !y.is_finite() {
        return Err(Error::NonFinite(format!("({x}), ({y})")));
    }
    let d = (spec.norm(x + y) - spec.norm(x - y)).abs();
    Ok((d <= tol, d))
}

/// Skew isosceles test: `defect = |‖x + ty‖ − ‖tx − y‖|` for `t > 0`.
pub fn is_skew_isosceles(spec: &NormSpec, x: Vector2, y: Vector2, t: f64, tol: f64) -> Result<(bool, f64)> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::OutOfRange { name: "t", value: t, expected: "t > 0" });
    }
    if !x.is_finite() || !y.is_finite() {
        return Err(Error::NonFinite(format!("({x}), ({y})")));
    }
    let d = (spec.norm(x + t * y) - spec.norm(t * x - y)).abs();
    Ok((d <= tol, d))
}

/// Sampled Roberts test: max over the grid of `|‖x + λy‖ − ‖x − λy‖|`.
///
/// This is a necessary condition only. A finite grid cannot certify the
/// identity for every real `λ`.
pub fn is_roberts(spec: &NormSpec, x: Vector2, y: Vector2, lambda_grid: &[f64], tol: f64) -> Result<(bool, f64)> {
    if lambda_grid.is_empty() {
        return Err(Error::InvalidOptions("Roberts lambda grid is empty".into()));
    }
    let d = lambda_grid.iter().map(|&l| (spec.norm(x + l * y) - spec.norm(x - l * y)).abs()).fold(0.0, f64::max);
    Ok((d <= tol, d))
}

/// Default `λ` grid of [`is_roberts`]: 121 log-spaced magnitudes in `[1e-3, 1e3]`.
pub fn roberts_grid() -> Vec<f64> {
    (0..=120).map(|k| 10f64.powf(-3.0 + k as f64 / 20.0)).collect()
}

/// Tests `relation` between `x` and `y`; Roberts uses [`roberts_grid`].
pub fn check_relation(spec: &NormSpec, relation: Relation, x: Vector2, y: Vector2, tol: f64) -> Result<(bool, f64)> {
    match relation {
        Relation::Birkhoff => is_birkhoff(spec, x, y, tol),
        Relation::Isosceles => is_isosceles(spec, x, y, tol),
        Relation::SkewIsosceles { t } => is_skew_isosceles(spec, x, y, t, tol),
        Relation::Roberts => is_roberts(spec, x, y, &roberts_grid(), tol),
    }
}

/// The unit mate `y` of a sphere point for the functional at `s ∈ [0, 1]`
/// along its subdifferential.
pub fn mate_at(spec: &NormSpec, sd: &Subdifferential, s: f64) -> UnitVector {
    spec.normalize(sd.at(s).perp())
}

/// Unit mates of `x` sampled across its subdifferential: one at smooth
/// points, the two cone endpoints plus `interior` evenly spaced functionals
/// otherwise. Only one sign is returned; `−y` is a mate whenever `y` is.
pub fn sample_mates(spec: &NormSpec, x: Vector2, interior: usize) -> Vec<(f64, UnitVector)> {
    let sd = spec.subdifferential(x);
    if sd.is_smooth() {
        return vec![(0.0, mate_at(spec, &sd, 0.0))];
    }
    let k = interior + 1;
    (0..=k)
        .map(|j| {
            let s = j as f64 / k as f64;
            (s, mate_at(spec, &sd, s))
        })
        .collect()
}

/// Scans directions `φ ∈ [0, π)` for Birkhoff mates of `x(θ)`.
///
/// Accepted grid directions are grouped into maximal intervals whose
/// endpoints are refined by bisection on `defect − tol`. At smooth points
/// the accepted set can be narrower than the grid spacing; if no grid
/// direction is accepted the best cell is refined by golden-section search
/// on the defect.
pub fn birkhoff_mates(spec: &NormSpec, theta: f64, grid_n: usize, tol: f64) -> Result<Vec<MateCone>> {
    if grid_n < 8 {
        return Err(Error::InvalidOptions(format!("grid_n = {grid_n} < 8")));
    }
    let x = spec.unit_point(theta);
    let step = PI / grid_n as f64;
    let phi = |j: i64| j as f64 * step;
    let defect = |p: f64| birkhoff_defect(spec, x.point, Vector2::direction(p));
    let defects: Vec<f64> = (0..grid_n).into_par_iter().map(|j| defect(phi(j as i64))).collect();
    let accepted: Vec<bool> = defects.iter().map(|&d| d <= tol).collect();

    if !accepted.iter().any(|&a| a) {
        let (jbest, _) =
            defects.iter().enumerate().fold((0, f64::INFINITY), |acc, (j, &d)| if d < acc.1 { (j, d) } else { acc });
        let jb = jbest as i64;
        let m = golden_min(&defect, phi(jb - 1), phi(jb + 1), 1e-15, 200);
        if m.value > tol {
            return Err(Error::SearchFailed(format!(
                "no Birkhoff mate of x(θ={theta}) within tolerance {tol:e}; best defect {:e}",
                m.value
            )));
        }
        let p = m.arg.rem_euclid(PI);
        return Ok(vec![MateCone { x, phi_lo: p, phi_hi: p }]);
    }
    if accepted.iter().all(|&a| a) {
        return Err(Error::SearchFailed(format!(
            "every direction accepted as a mate of x(θ={theta}); tolerance {tol:e} too loose"
        )));
    }

    let n = grid_n as i64;
    let at = |j: i64| accepted[j.rem_euclid(n) as usize];
    // start from a rejected index so runs do not straddle the scan origin
    let start = (0..n).find(|&j| !at(j)).expect("some direction rejected");
    let excess = |p: f64| defect(p) - tol;
    let mut cones = Vec::new();
    let mut j = start + 1;
    while j <= start + n {
        if at(j) && !at(j - 1) {
            let first = j;
            let mut last = j;
            while at(last + 1) {
                last += 1;
            }
            // excess > 0 outside, <= 0 inside
            let (_, lo_in) = bisect(excess, phi(first - 1), phi(first), ENDPOINT_BISECTIONS);
            let (hi_in, _) = bisect(excess, phi(last), phi(last + 1), ENDPOINT_BISECTIONS);
            let lo = lo_in.rem_euclid(PI);
            cones.push(MateCone { x, phi_lo: lo, phi_hi: lo + (hi_in - lo_in) });
            j = last + 1;
        } else {
            j += 1;
        }
    }
    cones.sort_by(|a, b| a.phi_lo.total_cmp(&b.phi_lo));
    Ok(cones)
}

/// Signed measure of how far `x` is from being a Birkhoff mate of `y`:
/// zero when some supporting functional at `y` vanishes on `x`.
fn reverse_gap(spec: &NormSpec, x: Vector2, y: Vector2) -> f64 {
    let sd = spec.subdifferential(y);
    let a = sd.lo.dot(x);
    let b = sd.hi.dot(x);
    if a * b <= 0.0 {
        0.0
    } else if a > 0.0 {
        a.min(b)
    } else {
        a.max(b)
    }
}

/// Finds unit vectors with `x ⊥_B y` and `−y ⊥_B x`.
///
/// Walks the closed curve of mate pairs `(x(θ), y)` for `θ ∈ [0, π)`,
/// looking for a zero of the reverse gap, and bisects the first sign change.
pub fn symmetric_pair(spec: &NormSpec, grid_n: usize, tol: f64) -> Result<OrthoPair> {
    if grid_n < 64 {
        return Err(Error::InvalidOptions(format!("grid_n = {grid_n} < 64")));
    }
    let step = PI / grid_n as f64;
    // (θ, s, gap) along the mate curve
    let samples: Vec<Vec<(f64, f64, f64)>> = (0..grid_n)
        .into_par_iter()
        .map(|i| {
            let theta = i as f64 * step;
            let x = spec.unit_point(theta).point;
            sample_mates(spec, x, 7).into_iter().map(|(s, y)| (theta, s, reverse_gap(spec, x, y.point))).collect()
        })
        .collect();
    let path: Vec<(f64, f64, f64)> = samples.into_iter().flatten().collect();

    let pair_at = |theta: f64, s: f64| -> (UnitVector, UnitVector) {
        let x = spec.unit_point(theta);
        let sd = spec.subdifferential(x.point);
        (x, mate_at(spec, &sd, s))
    };
    let finish = |x: UnitVector, y: UnitVector| -> Option<OrthoPair> {
        let d1 = birkhoff_defect(spec, x.point, y.point);
        let d2 = birkhoff_defect(spec, -y.point, x.point);
        (d1 <= tol && d2 <= tol).then_some(OrthoPair { x, y, relation: Relation::Birkhoff, defect: d1.max(d2) })
    };

    if let Some(&(theta, s, _)) = path.iter().find(|p| p.2 == 0.0) {
        let (x, y) = pair_at(theta, s);
        if let Some(pair) = finish(x, y) {
            return Ok(pair);
        }
    }

    let m = path.len();
    for k in 0..m {
        let (t0, s0, g0) = path[k];
        let (mut t1, s1, g1) = path[(k + 1) % m];
        if g0 * g1 >= 0.0 {
            continue;
        }
        if k + 1 == m {
            // the curve closes up at θ = π with (−x, −y), which has the same gap
            t1 += PI;
        }
        let candidate = if t0 == t1 {
            let gap_s = |s: f64| {
                let (x, y) = pair_at(t0, s);
                reverse_gap(spec, x.point, y.point)
            };
            let (a, b) = bisect(gap_s, s0, s1, 80);
            let (x, y) = pair_at(t0, 0.5 * (a + b));
            finish(x, y)
        } else {
            let gap_theta = |theta: f64| {
                let x = spec.unit_point(theta).point;
                let sd = spec.subdifferential(x);
                reverse_gap(spec, x, mate_at(spec, &sd, 0.5).point)
            };
            let (a, b) = bisect(gap_theta, t0, t1, 80);
            // the sign change may sit on a vertex, where the mates form a cone
            let mut found = None;
            for theta in [a, b] {
                let x = spec.unit_point(theta);
                let mates = sample_mates(spec, x.point, 15);
                for w in mates.windows(2) {
                    let ga = reverse_gap(spec, x.point, w[0].1.point);
                    let gb = reverse_gap(spec, x.point, w[1].1.point);
                    let s = if ga == 0.0 {
                        w[0].0
                    } else if gb == 0.0 {
                        w[1].0
                    } else if ga * gb < 0.0 {
                        let gap_s = |s: f64| {
                            let (x, y) = pair_at(theta, s);
                            reverse_gap(spec, x.point, y.point)
                        };
                        let (p, q) = bisect(gap_s, w[0].0, w[1].0, 80);
                        0.5 * (p + q)
                    } else {
                        continue;
                    };
                    let (x, y) = pair_at(theta, s);
                    if let Some(pair) = finish(x, y) {
                        found = Some(pair);
                        break;
                    }
                }
                if found.is_some() {
                    break;
                }
                let sd = spec.subdifferential(x.point);
                if let Some(pair) = finish(x, mate_at(spec, &sd, 0.0)) {
                    found = Some(pair);
                    break;
                }
            }
            found
        };
        if let Some(pair) = candidate {
            return Ok(pair);
        }
    }
    Err(Error::SearchFailed(format!("no symmetric Birkhoff pair found at grid_n = {grid_n}, tol = {tol:e}")))
}

/// Largest reverse Birkhoff defect over sampled mate pairs.
///
/// For each grid point `x(θ)` the mates `y` across its subdifferential are
/// checked against `y ⊥_B x`. A Radon plane gives zero up to search accuracy.
/// Sampled pairs whose forward defect exceeds `tol` are skipped.
pub fn radon_defect(spec: &NormSpec, grid_n: usize, tol: f64) -> Result<f64> {
    if grid_n < 64 {
        return Err(Error::InvalidOptions(format!("grid_n = {grid_n} < 64")));
    }
    let step = PI / grid_n as f64;
    let per_theta: Vec<f64> = (0..grid_n)
        .into_par_iter()
        .map(|i| {
            let x = spec.unit_point(i as f64 * step).point;
            sample_mates(spec, x, 3)
                .into_iter()
                .filter(|(_, y)| birkhoff_defect(spec, x, y.point) <= tol)
                .map(|(_, y)| birkhoff_defect(spec, y.point, x))
                .fold(0.0, f64::max)
        })
        .collect();
    Ok(per_theta.into_iter().fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norm::hexagon_from_linfl1;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, SQRT_2};

    fn v(a: f64, b: f64) -> Vector2 {
        Vector2::new(a, b)
    }

    fn linf() -> NormSpec {
        NormSpec::lp(f64::INFINITY).unwrap()
    }

    #[test]
    fn min_over_line_examples() {
        let l2 = NormSpec::euclidean();
        let m = min_over_line(&l2, v(1.0, 0.0), v(0.0, 1.0)).unwrap();
        assert!(m.lambda_star.abs() < 1e-9 && (m.value - 1.0).abs() < 1e-12);

        let h = SQRT_2 / 2.0;
        let m = min_over_line(&l2, v(1.0, 0.0), v(h, h)).unwrap();
        assert!((m.lambda_star + h).abs() < 1e-6);
        assert!((m.value - h).abs() < 1e-10);

        let m = min_over_line(&NormSpec::LinfL1, v(1.0, 0.0), v(1.0, 1.0)).unwrap();
        assert!((m.value - 1.0).abs() < 1e-12);
        assert!((-1.0 - 1e-9..=1e-9).contains(&m.lambda_star));

        assert_eq!(min_over_line(&l2, v(1.0, 0.0), v(0.0, 0.0)), Err(Error::ZeroVector("y")));
    }

    #[test]
    fn birkhoff_examples() {
        let (ok, d) = is_birkhoff(&NormSpec::euclidean(), v(1.0, 0.0), v(0.0, 1.0), 1e-9).unwrap();
        assert!(ok && d == 0.0);
        let (ok, d) = is_birkhoff(&NormSpec::LinfL1, v(1.0, 0.0), v(1.0, 1.0), 1e-9).unwrap();
        assert!(ok && d == 0.0);
        let p = 3.0;
        let a = 2f64.powf(-1.0 / p);
        let (ok, d) = is_birkhoff(&NormSpec::lp(p).unwrap(), v(a, a), v(-a, a), 1e-9).unwrap();
        assert!(ok, "defect {d}");
        assert!(is_birkhoff(&NormSpec::LinfL1, v(0.0, 0.0), v(1.0, 0.0), 1e-9).is_err());
        // not orthogonal
        let (ok, d) = is_birkhoff(&NormSpec::euclidean(), v(1.0, 0.0), v(1.0, 1.0), 1e-9).unwrap();
        assert!(!ok && (d - (1.0 - SQRT_2 / 2.0)).abs() < 1e-10);
    }

    #[test]
    fn birkhoff_is_sign_invariant() {
        let spec = NormSpec::lp(3.0).unwrap();
        let (x, y) = (v(0.3, 0.9), v(-1.0, 0.25));
        let (b0, d0) = is_birkhoff(&spec, x, y, 1e-9).unwrap();
        for (sx, sy) in [(1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)] {
            let (b, d) = is_birkhoff(&spec, sx * x, sy * y, 1e-9).unwrap();
            assert_eq!(b, b0);
            assert!((d - d0).abs() < 1e-12);
        }
    }

    #[test]
    fn isosceles_examples() {
        assert!(is_isosceles(&NormSpec::euclidean(), v(1.0, 0.0), v(0.0, 1.0), 1e-9).unwrap().0);
        assert!(is_isosceles(&NormSpec::lp(1.0).unwrap(), v(1.0, 0.0), v(0.0, 1.0), 1e-9).unwrap().0);
        let (ok, d) = is_isosceles(&NormSpec::euclidean(), v(1.0, 0.0), v(1.0, 0.0), 1e-9).unwrap();
        assert!(!ok && d == 2.0);
    }

    #[test]
    fn skew_isosceles_examples() {
        assert!(is_skew_isosceles(&linf(), v(0.0, 1.0), v(1.0, 0.0), 2.0, 1e-9).unwrap().0);
        assert!(is_skew_isosceles(&NormSpec::euclidean(), v(1.0, 0.0), v(0.0, 1.0), 5.0, 1e-9).unwrap().0);
        assert!(is_skew_isosceles(&NormSpec::lp(1.0).unwrap(), v(1.0, 0.0), v(0.0, 1.0), 1.0, 1e-9).unwrap().0);
        assert!(is_skew_isosceles(&linf(), v(0.0, 1.0), v(1.0, 0.0), 0.0, 1e-9).is_err());
        assert!(is_skew_isosceles(&linf(), v(0.0, 1.0), v(1.0, 0.0), -1.0, 1e-9).is_err());
    }

    #[test]
    fn roberts_examples() {
        let l2 = NormSpec::euclidean();
        assert!(is_roberts(&l2, v(1.0, 0.0), v(0.0, 1.0), &[0.1, 1.0, 10.0], 1e-9).unwrap().0);
        let (ok, d) = is_roberts(&linf(), v(1.0, 1.0), v(1.0, 0.0), &[1.0], 1e-9).unwrap();
        assert!(!ok && d == 1.0);
        // ‖(1, λ)‖ = max(1, λ) against ‖(1, −λ)‖ = 1 + λ: largest gap 1 at λ = 0.5 and λ = 1
        let (ok, d) = is_roberts(&NormSpec::LinfL1, v(1.0, 0.0), v(0.0, 1.0), &[0.5, 1.0, 2.0], 1e-9).unwrap();
        assert!(!ok && d == 1.0);
        assert!(is_roberts(&l2, v(1.0, 0.0), v(0.0, 1.0), &[], 1e-9).is_err());
    }

    #[test]
    fn mates_euclidean_single_narrow_cone() {
        let cones = birkhoff_mates(&NormSpec::euclidean(), 0.0, 1024, 1e-9).unwrap();
        assert_eq!(cones.len(), 1);
        assert!(cones[0].contains(FRAC_PI_2, 0.0));
        assert!(cones[0].width() < 2e-4, "width {}", cones[0].width());
    }

    #[test]
    fn mates_off_grid_smooth_point_found_by_refinement() {
        let spec = NormSpec::lp(3.0).unwrap();
        let cones = birkhoff_mates(&spec, 0.123, 64, 1e-9).unwrap();
        assert_eq!(cones.len(), 1);
        let x = spec.unit_point(0.123).point;
        let y = sample_mates(&spec, x, 0)[0].1;
        assert!(cones[0].contains(y.point.angle(), 1e-4));
    }

    #[test]
    fn mates_linf_vertex_cone() {
        let cones = birkhoff_mates(&linf(), FRAC_PI_4, 1024, 1e-9).unwrap();
        assert_eq!(cones.len(), 1);
        let c = cones[0];
        // directions from (0,1) to (-1,0), i.e. φ ∈ [π/2, π]
        assert!((c.phi_lo - FRAC_PI_2).abs() < 1e-9, "{c:?}");
        assert!((c.phi_hi - PI).abs() < 1e-9, "{c:?}");
    }

    #[test]
    fn mates_linfl1_contains_diagonal() {
        let cones = birkhoff_mates(&NormSpec::LinfL1, 0.0, 1024, 1e-9).unwrap();
        assert!(cones.iter().any(|c| c.contains(FRAC_PI_4, 1e-12)));
        assert!(cones.iter().any(|c| c.contains(FRAC_PI_2, 1e-12)));
    }

    #[test]
    fn mates_reject_small_grid() {
        assert!(birkhoff_mates(&linf(), 0.0, 4, 1e-9).is_err());
    }

    #[test]
    fn subdifferential_mates_lie_in_scanned_cones() {
        for spec in [NormSpec::LinfL1, NormSpec::Truncated, NormSpec::lp(1.5).unwrap(), linf()] {
            for &theta in &[0.0, 0.3, FRAC_PI_4, 1.0, 2.5] {
                let x = spec.unit_point(theta).point;
                let cones = birkhoff_mates(&spec, theta, 512, 1e-9).unwrap();
                for (_, y) in sample_mates(&spec, x, 5) {
                    assert!(cones.iter().any(|c| c.contains(y.point.angle(), 1e-6)), "{spec} θ={theta} y={}", y.point);
                }
            }
        }
    }

    #[test]
    fn symmetric_pairs() {
        for spec in [
            NormSpec::euclidean(),
            linf(),
            NormSpec::LinfL1,
            NormSpec::lp(3.0).unwrap(),
            NormSpec::lp(1.3).unwrap(),
            NormSpec::Truncated,
            NormSpec::polygon(vec![v(1.0, 0.1), v(0.4, 0.8), v(-0.5, 0.7)]).unwrap(),
        ] {
            let pair = symmetric_pair(&spec, 256, 1e-9).unwrap();
            let (a, _) = is_birkhoff(&spec, pair.x.point, pair.y.point, 1e-9).unwrap();
            let (b, _) = is_birkhoff(&spec, -pair.y.point, pair.x.point, 1e-9).unwrap();
            assert!(a && b, "{spec}: {pair:?}");
        }
        assert!(symmetric_pair(&NormSpec::euclidean(), 16, 1e-9).is_err());
    }

    #[test]
    fn radon_defect_examples() {
        assert!(radon_defect(&NormSpec::LinfL1, 512, 1e-6).unwrap() <= 1e-6);
        assert!(radon_defect(&hexagon_from_linfl1(), 512, 1e-6).unwrap() <= 1e-6);
        assert!(radon_defect(&NormSpec::euclidean(), 512, 1e-6).unwrap() <= 1e-6);
        assert!(radon_defect(&NormSpec::lp(3.0).unwrap(), 512, 1e-6).unwrap() > 1e-3);
    }
}
