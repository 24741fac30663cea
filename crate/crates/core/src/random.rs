//! Seeded random norms and vectors.

use std::f64::consts::PI;

use rand::Rng;

use crate::norm::NormSpec;
use crate::vector::Vector2;

/// Smallest angle between consecutive edge directions of a random polygon.
const MIN_EDGE_GAP: f64 = 0.05;

/// Random centrally symmetric convex polygon with `2k` vertices,
/// `k ∈ [min_vertices/2, max_vertices/2]`.
///
/// The first half of the boundary is a chain of `k` edges with increasing
/// directions in `[0, π)`; the second half is its reflection through the
/// origin, so the ring is convex and symmetric by construction.
pub fn random_polygon<R: Rng + ?Sized>(rng: &mut R, min_vertices: usize, max_vertices: usize) -> NormSpec {
    assert!(min_vertices >= 4 && min_vertices <= max_vertices && max_vertices % 2 == 0);
    let k = rng.gen_range(min_vertices.div_ceil(2)..=max_vertices / 2);
    let angles = loop {
        let mut a: Vec<f64> = (0..k).map(|_| rng.gen_range(0.0..PI)).collect();
        a.sort_by(f64::total_cmp);
        let gaps_ok = a.windows(2).all(|w| w[1] - w[0] >= MIN_EDGE_GAP) && a[0] + PI - a[k - 1] >= MIN_EDGE_GAP;
        if gaps_ok {
            break a;
        }
    };
    let edges: Vec<Vector2> = angles.iter().map(|&a| rng.gen_range(0.3..1.5) * Vector2::direction(a)).collect();
    let half_sum = edges.iter().fold(Vector2::new(0.0, 0.0), |s, &e| s + e);
    let mut v = -0.5 * half_sum;
    let mut ring = Vec::with_capacity(2 * k);
    for &e in &edges {
        ring.push(v);
        v = v + e;
    }
    let first_half = ring.clone();
    ring.extend(first_half.into_iter().map(|p| -p));
    NormSpec::polygon(ring).expect("edge chain with increasing directions is a valid ring")
}

/// Random `ℓ_p` norm with `p` uniform on `[1, max_p]`.
pub fn random_lp<R: Rng + ?Sized>(rng: &mut R, max_p: f64) -> NormSpec {
    NormSpec::lp(rng.gen_range(1.0..=max_p)).expect("p >= 1")
}

/// Random vector with coordinates uniform on `[-scale, scale]` and
/// Euclidean length at least `scale / 100`.
pub fn random_vector<R: Rng + ?Sized>(rng: &mut R, scale: f64) -> Vector2 {
    loop {
        let v = Vector2::new(rng.gen_range(-scale..=scale), rng.gen_range(-scale..=scale));
        if v.euclidean() >= scale / 100.0 {
            return v;
        }
    }
}
