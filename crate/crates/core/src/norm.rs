//! Norms on the real plane.
//!
//! Every norm used by the estimators is one of a handful of families. The
//! polyhedral ones (`lp:1`, `lp:inf`, `linf-l1`, `truncated`, hexagons and
//! custom polygons) also expose their unit-ball vertices and facet
//! functionals, which gives exact subdifferentials at every point of the
//! unit sphere. `lp` with `1 < p < ∞` is smooth and its subdifferential is
//! the gradient.

use std::f64::consts::FRAC_1_SQRT_2;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vector::{normalize_angle, Vector2};

/// Relative tolerance for deciding that a facet functional is active at a point.
const ACTIVE_TOL: f64 = 1e-12;

/// Determinant threshold below which hexagon generators are rejected.
pub const HEXAGON_DET_MIN: f64 = 1e-9;

/// A norm on ℝ², described by its family and parameters.
///
/// Construct the parameterised variants through [`NormSpec::lp`],
/// [`NormSpec::hexagon`] and [`NormSpec::polygon`]; their payloads validate
/// their invariants on construction.
#[derive(Clone, Debug, PartialEq)]
pub enum NormSpec {
    Lp(Lp),
    /// ℓ₁ on the quadrants where `x₁x₂ ≤ 0`, ℓ_∞ where `x₁x₂ ≥ 0`.
    LinfL1,
    /// `max{|x₁|, |x₂|, (|x₁| + |x₂|)/√2}`.
    Truncated,
    Hexagon(Hexagon),
    Polygon(Polygon),
}

/// Exponent of an ℓ_p norm; `p = ∞` is stored as `f64::INFINITY`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Lp {
    p: f64,
}

impl Lp {
    pub fn new(p: f64) -> Result<Self> {
        if p.is_nan() || p < 1.0 {
            return Err(Error::InvalidExponent(p));
        }
        Ok(Self { p })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn is_infinite(&self) -> bool {
        self.p.is_infinite()
    }

    #[inline]
    fn eval(&self, v: Vector2) -> f64 {
        let a = v.x1.abs();
        let b = v.x2.abs();
        if self.p == 1.0 {
            a + b
        } else if self.p == 2.0 {
            a.hypot(b)
        } else if self.p.is_infinite() {
            a.max(b)
        } else {
            let m = a.max(b);
            if m == 0.0 {
                return 0.0;
            }
            let (a, b) = (a / m, b / m);
            m * (a.powf(self.p) + b.powf(self.p)).powf(1.0 / self.p)
        }
    }

    /// Gradient at a nonzero point, for `1 < p < ∞`.
    fn gradient(&self, v: Vector2) -> Vector2 {
        let m = v.x1.abs().max(v.x2.abs());
        let (a, b) = (v.x1 / m, v.x2 / m);
        let q = self.p - 1.0;
        let ga = a.signum() * a.abs().powf(q);
        let gb = b.signum() * b.abs().powf(q);
        // Euler: g·v = ‖v‖, so scale by the norm of the rescaled point.
        let n = Lp { p: self.p }.eval(Vector2::new(a, b));
        let s = n.powf(q);
        Vector2::new(ga / s, gb / s)
    }
}

/// Affine-regular hexagon with vertices `±p, ±(p+q), ±q`.
#[derive(Clone, Debug, PartialEq)]
pub struct Hexagon {
    p: Vector2,
    q: Vector2,
    /// Rows of the inverse of the matrix with columns `p`, `q`.
    inv: [Vector2; 2],
    poly: Polygon,
}

impl Hexagon {
    pub fn new(p: Vector2, q: Vector2) -> Result<Self> {
        if !p.is_finite() || !q.is_finite() {
            return Err(Error::NonFinite(format!("hexagon {p};{q}")));
        }
        let det = p.cross(q);
        if det.abs() < HEXAGON_DET_MIN {
            return Err(Error::DegenerateHexagon(det));
        }
        let inv = [Vector2::new(q.x2 / det, -q.x1 / det), Vector2::new(-p.x2 / det, p.x1 / det)];
        let mut ring = vec![p, p + q, q, -p, -(p + q), -q];
        if det < 0.0 {
            ring.reverse();
        }
        let poly = Polygon::from_ring(ring)?;
        Ok(Self { p, q, inv, poly })
    }

    pub fn p(&self) -> Vector2 {
        self.p
    }

    pub fn q(&self) -> Vector2 {
        self.q
    }

    #[inline]
    fn eval(&self, v: Vector2) -> f64 {
        linf_l1(Vector2::new(self.inv[0].dot(v), self.inv[1].dot(v)))
    }
}

/// Centrally symmetric convex polygon used as a unit ball.
#[derive(Clone, Debug, PartialEq)]
pub struct Polygon {
    /// Counterclockwise, symmetric: `vertices[i + n/2] = -vertices[i]`.
    vertices: Vec<Vector2>,
    /// `facets[i]` is the functional equal to 1 on the edge `vertices[i]..vertices[i+1]`.
    facets: Vec<Vector2>,
}

impl Polygon {
    /// Builds a polygon norm from counterclockwise vertices.
    ///
    /// The list may be the full symmetric ring, or a half ring spanning less
    /// than π, which is completed by mirroring through the origin.
    pub fn new(vertices: Vec<Vector2>) -> Result<Self> {
        if vertices.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("polygon vertex".into()));
        }
        if vertices.iter().any(|v| v.is_zero()) {
            return Err(Error::InvalidPolygon("vertex at the origin".into()));
        }
        if vertices.len() < 2 {
            return Err(Error::InvalidPolygon("need at least two vertices".into()));
        }
        let ring = if is_symmetric_ring(&vertices) {
            vertices
        } else if is_half_ring(&vertices) {
            let mut ring = vertices.clone();
            // adding 0.0 turns -0.0 into 0.0 so the text form stays tidy
            ring.extend(vertices.iter().map(|&v| Vector2::new(-v.x1 + 0.0, -v.x2 + 0.0)));
            ring
        } else {
            return Err(Error::InvalidPolygon(
                "vertex list is neither centrally symmetric nor a counterclockwise half ring".into(),
            ));
        };
        Self::from_ring(ring)
    }

    fn from_ring(ring: Vec<Vector2>) -> Result<Self> {
        let scale = ring.iter().map(|v| v.euclidean()).fold(0.0, f64::max);
        let mut ring = ring;
        // drop consecutive duplicates and the middle points of flat edges
        loop {
            let n = ring.len();
            if n < 4 {
                return Err(Error::InvalidPolygon("fewer than four distinct vertices".into()));
            }
            let mut removed = None;
            for i in 0..n {
                let a = ring[i];
                let b = ring[(i + 1) % n];
                let c = ring[(i + 2) % n];
                if (b - a).euclidean() <= 1e-12 * scale {
                    removed = Some((i + 1) % n);
                    break;
                }
                let turn = (b - a).cross(c - b);
                if turn.abs() <= 1e-12 * scale * scale {
                    if (b - a).dot(c - b) <= 0.0 {
                        return Err(Error::InvalidPolygon("edge folds back on itself".into()));
                    }
                    removed = Some((i + 1) % n);
                    break;
                }
                if turn < 0.0 {
                    return Err(Error::InvalidPolygon(format!("not convex and counterclockwise at vertex {b}")));
                }
            }
            match removed {
                Some(k) => {
                    ring.remove(k);
                }
                None => break,
            }
        }
        // a convex counterclockwise ring must wind exactly once around the origin
        let n = ring.len();
        let mut winding = 0.0;
        for i in 0..n {
            let a = ring[i];
            let b = ring[(i + 1) % n];
            winding += a.cross(b).atan2(a.dot(b));
        }
        if (winding - std::f64::consts::TAU).abs() > 1e-6 {
            return Err(Error::InvalidPolygon("vertices must wind once counterclockwise around the origin".into()));
        }
        if n % 2 != 0 || !is_symmetric_ring(&ring) {
            return Err(Error::InvalidPolygon("vertex ring is not centrally symmetric".into()));
        }
        let mut facets = Vec::with_capacity(n);
        for i in 0..n {
            let a = ring[i];
            let b = ring[(i + 1) % n];
            let e = b - a;
            let normal = Vector2::new(e.x2, -e.x1);
            let offset = normal.dot(a);
            if offset <= 1e-12 * scale * scale {
                return Err(Error::InvalidPolygon("origin is not strictly inside".into()));
            }
            facets.push(normal * (1.0 / offset));
        }
        Ok(Self { vertices: ring, facets })
    }

    pub fn vertices(&self) -> &[Vector2] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Vector2] {
        &self.facets
    }

    #[inline]
    fn eval(&self, v: Vector2) -> f64 {
        // the Minkowski functional is the largest facet functional
        self.facets.iter().map(|f| f.dot(v)).fold(0.0, f64::max)
    }
}

fn is_symmetric_ring(vs: &[Vector2]) -> bool {
    let n = vs.len();
    if n < 4 || n % 2 != 0 {
        return false;
    }
    let scale = vs.iter().map(|v| v.euclidean()).fold(0.0, f64::max);
    (0..n / 2).all(|i| (vs[i] + vs[i + n / 2]).euclidean() <= 1e-9 * scale)
}

fn is_half_ring(vs: &[Vector2]) -> bool {
    let mut span = 0.0;
    for w in vs.windows(2) {
        let step = w[0].cross(w[1]).atan2(w[0].dot(w[1]));
        if step <= 0.0 {
            return false;
        }
        span += step;
    }
    span < std::f64::consts::PI
}

#[inline]
fn linf_l1(v: Vector2) -> f64 {
    if v.x1 * v.x2 >= 0.0 {
        v.x1.abs().max(v.x2.abs())
    } else {
        v.x1.abs() + v.x2.abs()
    }
}

#[inline]
fn truncated(v: Vector2) -> f64 {
    let a = v.x1.abs();
    let b = v.x2.abs();
    a.max(b).max((a + b) * FRAC_1_SQRT_2)
}

fn fixed_polygon(cell: &'static OnceLock<Polygon>, ring: impl FnOnce() -> Vec<Vector2>) -> &'static Polygon {
    cell.get_or_init(|| Polygon::from_ring(ring()).expect("built-in ring is valid"))
}

fn l1_polygon() -> &'static Polygon {
    static CELL: OnceLock<Polygon> = OnceLock::new();
    fixed_polygon(&CELL, || {
        vec![Vector2::new(1.0, 0.0), Vector2::new(0.0, 1.0), Vector2::new(-1.0, 0.0), Vector2::new(0.0, -1.0)]
    })
}

fn linf_polygon() -> &'static Polygon {
    static CELL: OnceLock<Polygon> = OnceLock::new();
    fixed_polygon(&CELL, || {
        vec![Vector2::new(1.0, 1.0), Vector2::new(-1.0, 1.0), Vector2::new(-1.0, -1.0), Vector2::new(1.0, -1.0)]
    })
}

fn linf_l1_polygon() -> &'static Polygon {
    static CELL: OnceLock<Polygon> = OnceLock::new();
    fixed_polygon(&CELL, || {
        vec![
            Vector2::new(1.0, 0.0),
            Vector2::new(1.0, 1.0),
            Vector2::new(0.0, 1.0),
            Vector2::new(-1.0, 0.0),
            Vector2::new(-1.0, -1.0),
            Vector2::new(0.0, -1.0),
        ]
    })
}

fn truncated_polygon() -> &'static Polygon {
    static CELL: OnceLock<Polygon> = OnceLock::new();
    fixed_polygon(&CELL, || {
        let c = std::f64::consts::SQRT_2 - 1.0;
        vec![
            Vector2::new(1.0, c),
            Vector2::new(c, 1.0),
            Vector2::new(-c, 1.0),
            Vector2::new(-1.0, c),
            Vector2::new(-1.0, -c),
            Vector2::new(-c, -1.0),
            Vector2::new(c, -1.0),
            Vector2::new(1.0, -c),
        ]
    })
}

/// A point of the unit sphere together with its Euclidean parameter angle.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnitVector {
    pub theta: f64,
    pub point: Vector2,
}

/// The two extreme supporting functionals at a point of the sphere.
///
/// Every functional in the segment `[lo, hi]` has dual norm one and attains
/// the norm at the point. The pair coincides at smooth points; `hi` is
/// counterclockwise of `lo` otherwise.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Subdifferential {
    pub lo: Vector2,
    pub hi: Vector2,
}

impl Subdifferential {
    pub fn is_smooth(&self) -> bool {
        self.lo == self.hi
    }

    /// Functional at parameter `s ∈ [0, 1]` along the segment.
    pub fn at(&self, s: f64) -> Vector2 {
        self.lo.lerp(self.hi, s)
    }
}

impl NormSpec {
    pub fn lp(p: f64) -> Result<Self> {
        Ok(NormSpec::Lp(Lp::new(p)?))
    }

    pub fn hexagon(p: Vector2, q: Vector2) -> Result<Self> {
        Ok(NormSpec::Hexagon(Hexagon::new(p, q)?))
    }

    pub fn polygon(vertices: Vec<Vector2>) -> Result<Self> {
        Ok(NormSpec::Polygon(Polygon::new(vertices)?))
    }

    pub fn euclidean() -> Self {
        NormSpec::Lp(Lp { p: 2.0 })
    }

    /// The norm of `v`.
    #[inline]
    pub fn norm(&self, v: Vector2) -> f64 {
        match self {
            NormSpec::Lp(lp) => lp.eval(v),
            NormSpec::LinfL1 => linf_l1(v),
            NormSpec::Truncated => truncated(v),
            NormSpec::Hexagon(h) => h.eval(v),
            NormSpec::Polygon(poly) => poly.eval(v),
        }
    }

    /// The unit ball as a polygon, for the polyhedral families.
    pub fn polygon_ball(&self) -> Option<&Polygon> {
        match self {
            NormSpec::Lp(lp) if lp.p == 1.0 => Some(l1_polygon()),
            NormSpec::Lp(lp) if lp.p.is_infinite() => Some(linf_polygon()),
            NormSpec::Lp(_) => None,
            NormSpec::LinfL1 => Some(linf_l1_polygon()),
            NormSpec::Truncated => Some(truncated_polygon()),
            NormSpec::Hexagon(h) => Some(&h.poly),
            NormSpec::Polygon(poly) => Some(poly),
        }
    }

    pub fn is_polyhedral(&self) -> bool {
        self.polygon_ball().is_some()
    }

    /// Parameter angles of the unit-ball vertices (empty for smooth norms).
    pub fn vertex_angles(&self) -> Vec<f64> {
        self.polygon_ball().map(|poly| poly.vertices.iter().map(|v| v.angle()).collect()).unwrap_or_default()
    }

    /// Point of the unit sphere in Euclidean direction `theta`.
    pub fn unit_point(&self, theta: f64) -> UnitVector {
        let d = Vector2::direction(theta);
        let n = self.norm(d);
        UnitVector { theta: normalize_angle(theta), point: d * (1.0 / n) }
    }

    /// Normalises a nonzero vector onto the unit sphere.
    pub fn normalize(&self, v: Vector2) -> UnitVector {
        let n = self.norm(v);
        UnitVector { theta: v.angle(), point: v * (1.0 / n) }
    }

    /// Extreme supporting functionals at a nonzero `v`.
    pub fn subdifferential(&self, v: Vector2) -> Subdifferential {
        match self {
            NormSpec::Lp(lp) if lp.p > 1.0 && lp.p.is_finite() => {
                let g = lp.gradient(v);
                Subdifferential { lo: g, hi: g }
            }
            _ => {
                let poly = self.polygon_ball().expect("non-smooth norms are polyhedral");
                polyhedral_subdifferential(&poly.facets, v)
            }
        }
    }
}

fn polyhedral_subdifferential(facets: &[Vector2], v: Vector2) -> Subdifferential {
    let n = facets.len();
    let values: Vec<f64> = facets.iter().map(|f| f.dot(v)).collect();
    let norm = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let cut = norm - ACTIVE_TOL * norm.abs().max(f64::MIN_POSITIVE);
    let active: Vec<bool> = values.iter().map(|&x| x >= cut).collect();
    // active facets form one cyclic run; find its first and last member
    let start = (0..n)
        .find(|&i| active[i] && !active[(i + n - 1) % n])
        .unwrap_or_else(|| (0..n).find(|&i| active[i]).expect("some facet is active"));
    let mut end = start;
    while active[(end + 1) % n] && (end + 1) % n != start {
        end = (end + 1) % n;
    }
    Subdifferential { lo: facets[start], hi: facets[end] }
}

/// Outcome of [`validate_norm`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NormReport {
    pub passed: bool,
    pub samples: usize,
    pub max_homogeneity_violation: f64,
    pub max_triangle_violation: f64,
    /// Name of the violated axiom and the offending input, if any.
    pub failure: Option<String>,
}

/// Samples random vectors and checks absolute homogeneity and the triangle
/// inequality at tolerance `1e-10`.
pub fn validate_norm(spec: &NormSpec, sample_count: usize, seed: u64) -> Result<NormReport> {
    if sample_count == 0 {
        return Err(Error::OutOfRange { name: "sample_count", value: 0.0, expected: ">= 1" });
    }
    const TOL: f64 = 1e-10;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = NormReport {
        passed: true,
        samples: sample_count,
        max_homogeneity_violation: 0.0,
        max_triangle_violation: 0.0,
        failure: None,
    };
    for _ in 0..sample_count {
        let u = Vector2::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let v = Vector2::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let alpha: f64 = rng.gen_range(-4.0..4.0);
        let hom = (spec.norm(alpha * v) - alpha.abs() * spec.norm(v)).abs();
        let tri = spec.norm(u + v) - spec.norm(u) - spec.norm(v);
        report.max_homogeneity_violation = report.max_homogeneity_violation.max(hom);
        report.max_triangle_violation = report.max_triangle_violation.max(tri);
        if report.failure.is_none() {
            if hom > TOL {
                report.failure = Some(format!("homogeneity: alpha={alpha}, v=({v})"));
            } else if tri > TOL {
                report.failure = Some(format!("triangle inequality: u=({u}), v=({v})"));
            } else if spec.norm(v) <= 0.0 {
                report.failure = Some(format!("positivity: v=({v})"));
            }
        }
    }
    report.passed = report.failure.is_none();
    Ok(report)
}

/// The hexagon norm `p = (0,1)`, `q = (1,0)`, equal to `linf-l1` everywhere.
pub fn hexagon_from_linfl1() -> NormSpec {
    NormSpec::Hexagon(Hexagon::new(Vector2::new(0.0, 1.0), Vector2::new(1.0, 0.0)).expect("independent generators"))
}
