//! Estimates against values computed by the brute-force oracles in
//! `common`, and against closed forms derived by hand.

mod common;

use std::f64::consts::{PI, SQRT_2};

use banach_core::norm::hexagon_from_linfl1;
use banach_core::{estimate, radon_defect, ConstantKind, NormSpec, SearchOpts, Vector2};

use common::*;

/// `D(ℓ₁) = 2(√2 − 1)`, confirmed by the 4096² oracle.
const D_INF_L1: f64 = 0.828_427_124_746;
/// `D` of the ℓ∞-ℓ₁ plane, `8/9`, confirmed by the 4096² oracle.
const D_INF_LINF_L1: f64 = 0.888_888_888_889;
/// `F` of the ℓ∞-ℓ₁ plane from the 4096² × 96 oracle.
const F_LINF_L1_ORACLE: f64 = 0.499_234_183_753;
/// Largest `t` of the default grid.
const T_MAX: f64 = 1e3;

fn value(spec: &NormSpec, kind: ConstantKind, grid: usize) -> f64 {
    estimate(spec, kind, &SearchOpts::with_grid(grid)).unwrap().value
}

#[test]
fn d_inf_pinned_values_match_oracle() {
    for (spec, pinned) in [(l1(), D_INF_L1), (NormSpec::LinfL1, D_INF_LINF_L1)] {
        // the infimum sits at a kink in x, so the oracle is good to about half a grid step
        let oracle = d_inf_oracle(&spec, 4096);
        assert!((oracle - pinned).abs() < 5e-4, "{spec}: oracle {oracle}");
        let v = value(&spec, ConstantKind::DInf, 2048);
        assert!((v - pinned).abs() < 1e-6, "{spec}: {v}");
    }
    assert!((D_INF_L1 - 2.0 * (SQRT_2 - 1.0)).abs() < 1e-12);
    assert!((D_INF_LINF_L1 - 8.0 / 9.0).abs() < 1e-12);
}

#[test]
fn d_inf_euclidean() {
    let v = value(&NormSpec::euclidean(), ConstantKind::DInf, 512);
    assert!((v - 1.0).abs() < 1e-5, "{v}");
}

/// For `x = (−a, 1−a)` and `y = (1, 0)` the objective is `a(t−1)/2` when
/// `ta < 1` and `(1−a)/2` otherwise, so the supremum at fixed `t` is
/// `(1 − 1/t)/2` at `a = 1/t`. On the default grid that caps `F` at
/// `(1 − 1/T_MAX)/2`.
#[test]
fn f_of_linf_l1_matches_oracle_and_closed_form() {
    let cap = 0.5 * (1.0 - 1.0 / T_MAX);
    let a = 1.0 / T_MAX;
    let (x, y) = (Vector2::new(-a, 1.0 - a), Vector2::new(1.0, 0.0));
    let n = |v: Vector2| NormSpec::LinfL1.norm(v);
    assert!((n(x) - 1.0).abs() < 1e-15);
    assert!((0.5 * (n(x + T_MAX * y) - n(T_MAX * x + y)) - cap).abs() < 1e-12);

    let oracle = f_oracle(&NormSpec::LinfL1, 4096);
    assert!((oracle - F_LINF_L1_ORACLE).abs() < 1e-9, "oracle {oracle}");
    assert!(oracle <= cap + 1e-12);
    for spec in [NormSpec::LinfL1, hexagon_from_linfl1()] {
        let v = value(&spec, ConstantKind::F, 2048);
        assert!(v <= cap + 1e-12 && (v - F_LINF_L1_ORACLE).abs() < 1e-3, "{spec}: {v}");
    }
    let v = value(&NormSpec::euclidean(), ConstantKind::F, 512);
    assert!(v.abs() < 1e-6, "{v}");
}

#[test]
fn james_type_constants_of_euclidean_plane() {
    let l2 = NormSpec::euclidean();
    let pairs = birkhoff_pairs(&l2, 1024);
    let oracle = sup_pairs(&pairs, |x, y| l2.norm(x + y).min(l2.norm(x - y)));
    assert!((oracle - SQRT_2).abs() < 1e-4, "oracle {oracle}");
    let v = value(&l2, ConstantKind::Jb, 2048);
    assert!((v - SQRT_2).abs() < 1e-4, "{v}");
    let v = value(&l2, ConstantKind::Atb { t: 2.0 }, 2048);
    assert!((v - 5f64.sqrt()).abs() < 1e-4, "{v}");
}

#[test]
fn br_of_square_norms() {
    for spec in [linf(), l1()] {
        let v = value(&spec, ConstantKind::Br, 1024);
        assert!((v - 1.0).abs() < 1e-3, "{spec}: {v}");
    }
    let x = Vector2::new(1.0, 1.0);
    let y = Vector2::new(1.0, 0.0);
    let t = 1e-4;
    let q = (linf().norm(x + t * y) - linf().norm(x - t * y)) / t;
    assert!((q - 1.0).abs() < 1e-9);
}

/// For `x = (1, 0)` and `y = (−a, 1−a)` in ℓ₁ the quotient tends to
/// `2 − 2a`, so `s(ℓ₁) = 2` is approached but not attained and an `n`-point
/// oracle falls short by `O(1/n)`.
#[test]
fn skewness_of_square_norms_matches_oracle() {
    let lambda = 1e-7;
    for spec in [l1(), linf()] {
        let q = |x: Vector2, y: Vector2| {
            ((spec.norm(x + lambda * y) - spec.norm(x)) - (spec.norm(y + lambda * x) - spec.norm(y))) / lambda
        };
        let coarse = sup_torus(&spec, 256, q);
        let fine = sup_torus(&spec, 1024, q);
        assert!(coarse < fine && fine <= 2.0 + 1e-6, "{spec}: {coarse} {fine}");
        assert!(2.0 - fine < 8.0 * PI / 1024.0, "{spec}: oracle {fine}");
        let v = value(&spec, ConstantKind::Skewness, 1024);
        assert!((v - 2.0).abs() < 1e-3, "{spec}: {v}");
    }
    let a = 1e-3;
    let (x, y) = (Vector2::new(1.0, 0.0), Vector2::new(-a, 1.0 - a));
    let q = ((l1().norm(x + lambda * y) - 1.0) - (l1().norm(y + lambda * x) - 1.0)) / lambda;
    assert!((q - (2.0 - 2.0 * a)).abs() < 1e-6, "{q}");
}

#[test]
fn l3_is_not_radon() {
    let spec = NormSpec::lp(3.0).unwrap();
    let d = radon_defect(&spec, 512, 1e-6).unwrap();
    assert!(d > 1e-3, "{d}");
    // mates from the ℓ₃ gradient: y ⊥ (|x₁|² sgn x₁, |x₂|² sgn x₂)
    let worst = (1..32)
        .map(|k| {
            let x = spec.unit_point(PI * k as f64 / 64.0).point;
            let g = Vector2::new(x.x1 * x.x1.abs(), x.x2 * x.x2.abs());
            let y = (1.0 / spec.norm(g.perp())) * g.perp();
            assert!(spec.norm(x) - line_min_dense(&spec, x, y) < 1e-9);
            spec.norm(y) - line_min_dense(&spec, y, x)
        })
        .fold(0.0, f64::max);
    assert!(worst > 1e-3, "{worst}");
    let d = radon_defect(&NormSpec::LinfL1, 512, 1e-6).unwrap();
    assert!(d < 1e-6, "{d}");
}

#[test]
fn modulus_of_l1_vanishes() {
    let v = value(&l1(), ConstantKind::Modulus { eps: 1.0 }, 512);
    assert!(v.abs() < 1e-6, "{v}");
}

#[test]
fn dtb_of_linf_saturates() {
    let v = value(&linf(), ConstantKind::Dtb { t: 1.0 }, 512);
    assert!((v - 1.0).abs() < 1e-6, "{v}");
    let x = Vector2::new(1.0, 1.0);
    let y = Vector2::new(1.0, 0.0);
    assert!(birkhoff_by_quotients(&linf(), x, y));
    assert_eq!(linf().norm(x + y) - linf().norm(x - y), 1.0);
}

#[test]
fn hexagon_from_linfl1_agrees_on_dense_sample() {
    let hex = hexagon_from_linfl1();
    for v in sphere(&NormSpec::euclidean(), 4096) {
        assert!((hex.norm(v) - NormSpec::LinfL1.norm(v)).abs() < 1e-12, "{v}");
    }
    assert_eq!(hex.norm(Vector2::new(1.0, -1.0)), 2.0);
}
