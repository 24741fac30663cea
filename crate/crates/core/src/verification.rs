//! Checks of known inequalities between the constants.
//!
//! Every check produces a [`BoundReport`] stating `lhs ≤ rhs` with
//! `slack = rhs − lhs`. Checks whose estimates can only make the inequality
//! look safer are strict at [`STRICT_TOL`]. Checks where an estimate sits on
//! the large side of the inequality (a sup estimated from below on the right,
//! or an inf estimated from above on the left) may fail only because the
//! search undershot; violations within [`ESTIMATE_TOL`] are reported as
//! [`Status::Info`].

use std::collections::{BTreeMap, HashMap};
use std::f64::consts::SQRT_2;
use std::sync::Mutex;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::constants::{estimate, pair_objective, ConstantEstimate, ConstantKind, SearchOpts, Witness};
use crate::error::Result;
use crate::norm::NormSpec;
use crate::orthogonality::radon_defect;
use crate::random::{random_lp, random_polygon, random_vector};
use crate::vector::Vector2;

pub const STRICT_TOL: f64 = 1e-7;
pub const ESTIMATE_TOL: f64 = 1e-3;
/// Deficit below which a constant counts as saturated (`A_t^B = 1+t`, `J = 2`).
pub const SATURATION_TOL: f64 = 1e-4;
/// Disagreeing saturation flags fail only when the unsaturated deficit exceeds this.
pub const SATURATION_FAIL: f64 = 1e-2;
/// A spec counts as a Radon plane when the reverse Birkhoff defect is below this.
pub const RADON_TOL: f64 = 1e-6;
/// Closeness of `D_t^B` to `1/t` that triggers the attainment checks.
pub const ATTAINMENT_TOL: f64 = 1e-6;
pub const ATTAINMENT_SEGMENT_TOL: f64 = 1e-8;
/// Closeness of `A_t^B` to the Radon bound that counts as equality.
pub const RADON_EQUALITY_TOL: f64 = 1e-4;
pub const LEMMA_TOL: f64 = 1e-8;
pub const SKEWNESS_LAMBDAS: [f64; 5] = [0.1, 0.25, 0.5, 0.75, 1.0];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Info,
    Fail,
    Note,
    NotApplicable,
}

/// Vectors at which a report was evaluated.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PairWitness {
    pub x: Vector2,
    pub y: Vector2,
}

impl Serialize for PairWitness {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("PairWitness", 2)?;
        st.serialize_field("x", &self.x.as_array())?;
        st.serialize_field("y", &self.y.as_array())?;
        st.end()
    }
}

impl From<Witness> for PairWitness {
    fn from(w: Witness) -> Self {
        PairWitness { x: w.x.point, y: w.y.point }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub claim_id: String,
    pub spec: NormSpec,
    pub params: BTreeMap<String, f64>,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub tolerance: f64,
    pub status: Status,
    /// `slack ≥ −tolerance`; false exactly for [`Status::Fail`].
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<PairWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum Mode {
    Strict(f64),
    Estimate,
}

impl BoundReport {
    fn check(claim: &str, spec: &NormSpec, params: &[(&str, f64)], lhs: f64, rhs: f64, mode: Mode) -> Self {
        let slack = rhs - lhs;
        let (tolerance, status) = match mode {
            Mode::Strict(tol) if slack >= -tol => (tol, Status::Pass),
            Mode::Strict(tol) => (tol, Status::Fail),
            Mode::Estimate if slack >= 0.0 => (ESTIMATE_TOL, Status::Pass),
            Mode::Estimate if slack >= -ESTIMATE_TOL => (ESTIMATE_TOL, Status::Info),
            Mode::Estimate => (ESTIMATE_TOL, Status::Fail),
        };
        BoundReport {
            claim_id: claim.to_string(),
            spec: spec.clone(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            lhs,
            rhs,
            slack,
            tolerance,
            status,
            passed: status != Status::Fail,
            witness: None,
            note: None,
        }
    }

    /// A report that records a value without checking an inequality.
    fn remark(claim: &str, spec: &NormSpec, params: &[(&str, f64)], value: f64, status: Status, note: String) -> Self {
        BoundReport {
            claim_id: claim.to_string(),
            spec: spec.clone(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            lhs: value,
            rhs: value,
            slack: 0.0,
            tolerance: 0.0,
            status,
            passed: true,
            witness: None,
            note: Some(note),
        }
    }

    fn with_witness(mut self, w: impl Into<PairWitness>) -> Self {
        self.witness = Some(w.into());
        self
    }

    /// Attaches the witness of `e` and records its value under `key`.
    fn with_estimate(mut self, key: &str, e: &ConstantEstimate) -> Self {
        self.params.insert(key.to_string(), e.value);
        self.with_witness(e.witness)
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Re-evaluates the report at its witness.
    ///
    /// Lemma reports return the recomputed violation (`lhs`). Reports that
    /// carry an `atb` or `dtb` parameter return the objective of that
    /// constant at the witness pair. `None` when the report has no witness.
    pub fn recheck(&self) -> Option<f64> {
        let w = self.witness?;
        let p = |k: &str| self.params.get(k).copied();
        if let Some(rest) = self.claim_id.strip_prefix("lemma-") {
            let family = rest.split('/').next()?;
            return lemma_violation(family, &self.spec, w.x, w.y, p("t1"), p("t2")).ok();
        }
        let t = p("t")?;
        let kind = if p("atb").is_some() {
            ConstantKind::Atb { t }
        } else if p("dtb").is_some() {
            ConstantKind::Dtb { t }
        } else {
            return None;
        };
        Some(pair_objective(kind, &self.spec, w.x, w.y))
    }

    /// Value the witness should reproduce under [`BoundReport::recheck`].
    pub fn recorded_value(&self) -> Option<f64> {
        if self.claim_id.starts_with("lemma-") {
            return Some(self.lhs);
        }
        self.params.get("atb").or_else(|| self.params.get("dtb")).copied()
    }
}

/// Saturation biconditional: both deficits small or both large.
fn saturation_report(
    claim: &str,
    spec: &NormSpec,
    params: &[(&str, f64)],
    deficit_a: f64,
    deficit_b: f64,
) -> BoundReport {
    let sat_a = deficit_a <= SATURATION_TOL;
    let sat_b = deficit_b <= SATURATION_TOL;
    let slack = if sat_a == sat_b { 0.0 } else { -deficit_a.max(deficit_b) };
    let status = if sat_a == sat_b {
        Status::Pass
    } else if slack >= -SATURATION_FAIL {
        Status::Info
    } else {
        Status::Fail
    };
    let mut params: BTreeMap<String, f64> = params.iter().map(|&(k, v)| (k.to_string(), v)).collect();
    params.insert("saturation_tol".into(), SATURATION_TOL);
    BoundReport {
        claim_id: claim.to_string(),
        spec: spec.clone(),
        params,
        lhs: deficit_a,
        rhs: deficit_b,
        slack,
        tolerance: SATURATION_FAIL,
        status,
        passed: status != Status::Fail,
        witness: None,
        note: Some(
            match (sat_a, sat_b) {
                (true, true) => "both saturated: not uniformly non-square",
                (false, false) => "neither saturated: uniformly non-square",
                _ => "saturation flags disagree",
            }
            .to_string(),
        ),
    }
}

/// Runs checks and caches the estimates they share.
pub struct Verifier {
    opts: SearchOpts,
    cache: Mutex<HashMap<(String, String), ConstantEstimate>>,
}

impl Verifier {
    pub fn new(opts: SearchOpts) -> Self {
        Verifier { opts, cache: Mutex::new(HashMap::new()) }
    }

    pub fn opts(&self) -> &SearchOpts {
        &self.opts
    }

    /// Estimate of `kind` on `spec`, computed once per verifier.
    pub fn estimate(&self, spec: &NormSpec, kind: ConstantKind) -> Result<ConstantEstimate> {
        let key = (spec.to_string(), kind.to_string());
        if let Some(e) = self.cache.lock().expect("cache lock").get(&key) {
            return Ok(e.clone());
        }
        let e = estimate(spec, kind, &self.opts)?;
        self.cache.lock().expect("cache lock").insert(key, e.clone());
        Ok(e)
    }

    fn value(&self, spec: &NormSpec, kind: ConstantKind) -> Result<f64> {
        Ok(self.estimate(spec, kind)?.value)
    }

    pub fn check_atb(&self, spec: &NormSpec, t: f64) -> Result<Vec<BoundReport>> {
        crate::constants::check_t(t)?;
        let atb = self.estimate(spec, ConstantKind::Atb { t })?;
        let a = atb.value;
        let jb = self.value(spec, ConstantKind::Jb)?;
        let a2b = self.value(spec, ConstantKind::A2b)?;
        let s = self.value(spec, ConstantKind::Skewness)?;
        let j = self.value(spec, ConstantKind::J)?;
        let (lo, hi, d) = (t.min(1.0), t.max(1.0), (1.0 - t).abs());
        let pt = [("t", t)];
        let mut out = vec![
            BoundReport::check("atb-range-lower", spec, &pt, SQRT_2 * lo, a, Mode::Estimate).with_estimate("atb", &atb),
            BoundReport::check("atb-range-upper", spec, &pt, a, 1.0 + t, Mode::Strict(STRICT_TOL))
                .with_estimate("atb", &atb),
            BoundReport::check("atb-jb-lower", spec, &[("t", t), ("jb", jb)], hi * jb - d, a, Mode::Estimate)
                .with_estimate("atb", &atb),
            BoundReport::check("atb-jb-upper", spec, &[("t", t), ("jb", jb)], a, 0.5 * jb + 1.0 + d, Mode::Estimate)
                .with_estimate("atb", &atb),
            BoundReport::check("atb-a2b-lower", spec, &[("t", t), ("a2b", a2b)], lo * a2b, a, Mode::Estimate)
                .with_estimate("atb", &atb),
            BoundReport::check(
                "atb-a2b-upper",
                spec,
                &[("t", t), ("a2b", a2b)],
                a,
                1.0 + t - (2.0 - a2b) * lo,
                Mode::Estimate,
            )
            .with_estimate("atb", &atb),
        ];
        for lambda in SKEWNESS_LAMBDAS {
            let bound = 2.0 * (a + lambda - 1.0 - lambda * lambda - t) / (lambda * (1.0 + lambda));
            out.push(
                BoundReport::check("atb-skewness", spec, &[("t", t), ("lambda", lambda)], bound, s, Mode::Estimate)
                    .with_estimate("atb", &atb),
            );
        }
        out.push(
            saturation_report("atb-nonsquare", spec, &[("t", t), ("atb", a), ("j", j)], 1.0 + t - a, 2.0 - j)
                .with_estimate("atb", &atb),
        );
        Ok(out)
    }

    pub fn check_dtb(&self, spec: &NormSpec, t: f64) -> Result<Vec<BoundReport>> {
        crate::constants::check_t(t)?;
        let dtb = self.estimate(spec, ConstantKind::Dtb { t })?;
        let dv = dtb.value;
        let w = dtb.witness;
        let pt = [("t", t)];
        let mut out = vec![
            BoundReport::check("dtb-range-lower", spec, &pt, 0.0, dv, Mode::Estimate).with_estimate("dtb", &dtb),
            BoundReport::check("dtb-range-upper", spec, &pt, dv, 1.0 / t, Mode::Strict(STRICT_TOL))
                .with_estimate("dtb", &dtb),
        ];
        if t >= 1.0 {
            let jb = self.value(spec, ConstantKind::Jb)?;
            out.push(
                BoundReport::check("dtb-jb-upper", spec, &[("t", t), ("jb", jb)], dv, jb - 1.0, Mode::Estimate)
                    .with_estimate("dtb", &dtb),
            );
        }
        let delta = self.value(spec, ConstantKind::Modulus { eps: 1.0 })?;
        if t <= 1.0 && delta > ATTAINMENT_TOL {
            out.push(
                BoundReport::check(
                    "dtb-modulus-upper",
                    spec,
                    &[("t", t), ("delta1", delta)],
                    dv,
                    (1.0 - 2.0 * t * delta) / t,
                    Mode::Estimate,
                )
                .with_estimate("dtb", &dtb),
            );
        } else {
            let why = if t > 1.0 { "bound stated for t in (0, 1] only" } else { "modulus of convexity at 1 is zero" };
            out.push(BoundReport::remark(
                "dtb-modulus-upper",
                spec,
                &[("t", t), ("delta1", delta)],
                dv,
                Status::NotApplicable,
                why.into(),
            ));
        }

        if dv >= 1.0 / t - ATTAINMENT_TOL {
            let (x, y) = (w.x.point, w.y.point);
            let seg = ATTAINMENT_SEGMENT_TOL;
            let mid_xy = spec.norm(0.5 * (x + y));
            let mid_x2y = spec.norm(x - (1.0 / t) * y);
            out.push(
                BoundReport::remark(
                    "dtb-attainment",
                    spec,
                    &pt,
                    dv,
                    Status::Note,
                    format!("upper bound 1/t = {} attained at the witness", 1.0 / t),
                )
                .with_estimate("dtb", &dtb),
            );
            out.push(
                BoundReport::check(
                    "dtb-attainment-segment-xy",
                    spec,
                    &pt,
                    (mid_xy - 1.0).abs(),
                    0.0,
                    Mode::Strict(seg),
                )
                .with_estimate("dtb", &dtb)
                .with_note("midpoint of [x, y] on the unit sphere"),
            );
            out.push(
                BoundReport::check(
                    "dtb-attainment-segment-x2y",
                    spec,
                    &pt,
                    (mid_x2y - 1.0).abs(),
                    0.0,
                    Mode::Strict(seg),
                )
                .with_estimate("dtb", &dtb)
                .with_note("midpoint of [x, x - (2/t) y] on the unit sphere"),
            );
            out.push(
                BoundReport::check("dtb-attainment-distance", spec, &pt, 1.0, spec.norm(x - y), Mode::Strict(seg))
                    .with_estimate("dtb", &dtb),
            );
            out.push(BoundReport::check(
                "dtb-attainment-modulus",
                spec,
                &[("t", t), ("delta1", delta)],
                delta,
                ATTAINMENT_TOL,
                Mode::Strict(0.0),
            ));
        } else {
            out.push(BoundReport::remark(
                "dtb-attainment",
                spec,
                &pt,
                dv,
                Status::NotApplicable,
                "upper bound 1/t not attained by the estimate".into(),
            ));
        }

        if t == 1.0 {
            let j = self.value(spec, ConstantKind::J)?;
            out.push(
                saturation_report("dtb-nonsquare", spec, &[("t", t), ("j", j)], 1.0 - dv, 2.0 - j)
                    .with_estimate("dtb", &dtb),
            );
        } else if t > 1.0 {
            out.push(BoundReport::remark(
                "dtb-nonsquare",
                spec,
                &pt,
                dv,
                Status::Note,
                "equivalence with D = 1 checked at t = 1 only; for t > 1 the range bound gives D <= 1/t < 1".into(),
            ));
        }
        Ok(out)
    }

    pub fn check_radon(&self, spec: &NormSpec, t: f64) -> Result<Vec<BoundReport>> {
        crate::constants::check_t(t)?;
        let defect = radon_defect(spec, self.opts.grid_n, self.opts.tol)?;
        if defect > RADON_TOL {
            return Ok(vec![BoundReport::remark(
                "radon-upper",
                spec,
                &[("t", t), ("radon_defect", defect)],
                defect,
                Status::NotApplicable,
                "Birkhoff orthogonality is not symmetric: not a Radon plane".into(),
            )]);
        }
        let atb = self.estimate(spec, ConstantKind::Atb { t })?;
        let bound = 1.0 + t - 0.5 * t.min(1.0);
        let params = [("t", t), ("radon_defect", defect)];
        let mut out =
            vec![BoundReport::check("radon-upper", spec, &params, atb.value, bound, Mode::Strict(STRICT_TOL))
                .with_estimate("atb", &atb)];
        let equal = (bound - atb.value).abs() <= RADON_EQUALITY_TOL;
        match spec.polygon_ball().map(|p| hexagon_deviation(p.vertices())) {
            Some(dev) => {
                let hexagon = dev <= 1e-9;
                let report = match (equal, hexagon) {
                    (true, true) | (false, false) => BoundReport::check(
                        "radon-hexagon",
                        spec,
                        &[("t", t), ("hexagon_deviation", dev)],
                        0.0,
                        0.0,
                        Mode::Strict(0.0),
                    ),
                    // the estimate may undershoot the equality on a true hexagon
                    (false, true) => BoundReport::check(
                        "radon-hexagon",
                        spec,
                        &[("t", t), ("hexagon_deviation", dev)],
                        bound,
                        atb.value,
                        Mode::Estimate,
                    ),
                    (true, false) => BoundReport::check(
                        "radon-hexagon",
                        spec,
                        &[("t", t), ("hexagon_deviation", dev)],
                        dev,
                        0.0,
                        Mode::Strict(1e-9),
                    ),
                };
                let note = if hexagon {
                    "unit sphere is an affine-regular hexagon"
                } else {
                    "unit sphere is not an affine-regular hexagon"
                };
                out.push(report.with_note(note));
            }
            None if equal => out.push(
                BoundReport::remark(
                    "radon-hexagon",
                    spec,
                    &[("t", t)],
                    atb.value,
                    Status::Note,
                    "equality attained on a non-polygonal norm; inspect the witness".into(),
                )
                .with_estimate("atb", &atb),
            ),
            None => out.push(BoundReport::remark(
                "radon-hexagon",
                spec,
                &[("t", t)],
                atb.value,
                Status::NotApplicable,
                "bound not attained".into(),
            )),
        }
        Ok(out)
    }
}

/// `max_k ‖v_k + v_{k+2} − v_{k+1}‖₂` relative to the ring size for a
/// six-vertex ring, `∞` for any other vertex count. Zero exactly for
/// affine-regular hexagons.
pub fn hexagon_deviation(ring: &[Vector2]) -> f64 {
    if ring.len() != 6 {
        return f64::INFINITY;
    }
    let scale = ring.iter().map(|v| v.euclidean()).fold(0.0, f64::max);
    (0..6).map(|k| (ring[k] + ring[(k + 2) % 6] - ring[(k + 1) % 6]).euclidean() / scale).fold(0.0, f64::max)
}

pub fn check_atb_propositions(spec: &NormSpec, t: f64, opts: &SearchOpts) -> Result<Vec<BoundReport>> {
    Verifier::new(*opts).check_atb(spec, t)
}

pub fn check_dtb_propositions(spec: &NormSpec, t: f64, opts: &SearchOpts) -> Result<Vec<BoundReport>> {
    Verifier::new(*opts).check_dtb(spec, t)
}

pub fn check_radon_results(spec: &NormSpec, t: f64, opts: &SearchOpts) -> Result<Vec<BoundReport>> {
    Verifier::new(*opts).check_radon(spec, t)
}

/// Violation of one lemma at a sample; positive means violated.
///
/// * `convexity`: midpoint convexity in `t` of `‖x+ty‖ + ‖tx−y‖` and
///   `‖tx+y‖ + ‖x−ty‖` between `t1` and `t2`.
/// * `monotone-quotient`: `q(t1) − q(t2)` for `q(λ) = (‖x+λy‖ − ‖x‖)/λ`
///   and `t1 < t2`.
/// * `triangle-refinement`: `‖x+y‖ − (‖x‖ + ‖y‖ − (2 − ‖x/‖x‖ + y/‖y‖‖) min(‖x‖, ‖y‖))`.
/// * `equal-norm-swap`: `|‖t1·u+v‖ − ‖u+t1·v‖|` for `u = x/‖x‖`, `v = y/‖y‖`.
pub fn lemma_violation(
    family: &str,
    spec: &NormSpec,
    x: Vector2,
    y: Vector2,
    t1: Option<f64>,
    t2: Option<f64>,
) -> Result<f64> {
    let n = |v| spec.norm(v);
    let need =
        |v: Option<f64>| v.ok_or_else(|| crate::error::Error::InvalidOptions(format!("lemma {family} needs t1/t2")));
    match family {
        "convexity" => {
            let (a, b) = (need(t1)?, need(t2)?);
            let m = 0.5 * (a + b);
            let f = |t: f64| n(x + t * y) + n(t * x - y);
            let g = |t: f64| n(t * x + y) + n(x - t * y);
            Ok((f(m) - 0.5 * (f(a) + f(b))).max(g(m) - 0.5 * (g(a) + g(b))))
        }
        "monotone-quotient" => {
            let (a, b) = (need(t1)?, need(t2)?);
            let q = |l: f64| (n(x + l * y) - n(x)) / l;
            Ok(q(a) - q(b))
        }
        "triangle-refinement" => {
            let (nx, ny) = (n(x), n(y));
            let u = (1.0 / nx) * x + (1.0 / ny) * y;
            Ok(n(x + y) - (nx + ny - (2.0 - n(u)) * nx.min(ny)))
        }
        "equal-norm-swap" => {
            let t = need(t1)?;
            let (u, v) = ((1.0 / n(x)) * x, (1.0 / n(y)) * y);
            Ok((n(t * u + v) - n(u + t * v)).abs())
        }
        other => Err(crate::error::Error::InvalidOptions(format!("unknown lemma family {other}"))),
    }
}

/// Random-sample checks of the norm lemmas the constants rest on.
///
/// Convexity, the monotone difference quotient and the refined triangle
/// inequality are sampled on random `ℓ_p` norms (`p ∈ [1, 8]`) and random
/// symmetric polygons (6–16 vertices). The equal-norm swap identity is
/// sampled on the Euclidean norm. Each family yields one report holding the
/// worst sample.
pub fn run_lemma_suite(seed: u64, n_samples: usize) -> Result<Vec<BoundReport>> {
    if n_samples == 0 {
        return Err(crate::error::Error::InvalidOptions("n_samples must be at least 1".into()));
    }
    let mut out = Vec::new();
    let families: [(&str, &str); 7] = [
        ("convexity", "lp"),
        ("convexity", "polygon"),
        ("monotone-quotient", "lp"),
        ("monotone-quotient", "polygon"),
        ("triangle-refinement", "lp"),
        ("triangle-refinement", "polygon"),
        ("equal-norm-swap", "euclidean"),
    ];
    for (k, (family, norms)) in families.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k as u64));
        let mut worst: Option<(f64, NormSpec, Vector2, Vector2, Option<f64>, Option<f64>)> = None;
        for _ in 0..n_samples {
            let spec = match *norms {
                "lp" => random_lp(&mut rng, 8.0),
                "polygon" => random_polygon(&mut rng, 6, 16),
                _ => NormSpec::euclidean(),
            };
            let x = random_vector(&mut rng, 2.0);
            let y = random_vector(&mut rng, 2.0);
            let (t1, t2) = match *family {
                "convexity" => {
                    let a: f64 = rand::Rng::gen_range(&mut rng, -10.0..10.0);
                    let b: f64 = rand::Rng::gen_range(&mut rng, -10.0..10.0);
                    (Some(a.min(b)), Some(a.max(b)))
                }
                "monotone-quotient" => {
                    let a = signed_magnitude(&mut rng);
                    let b = signed_magnitude(&mut rng);
                    (Some(a.min(b)), Some(a.max(b)))
                }
                "equal-norm-swap" => (Some(rand::Rng::gen_range(&mut rng, -10.0..10.0)), None),
                _ => (None, None),
            };
            let v = lemma_violation(family, &spec, x, y, t1, t2)?;
            if worst.as_ref().map_or(true, |w| v > w.0) {
                worst = Some((v, spec, x, y, t1, t2));
            }
        }
        let (v, spec, x, y, t1, t2) = worst.expect("n_samples >= 1");
        let mut params = vec![("samples", n_samples as f64), ("seed", seed as f64)];
        params.extend(t1.map(|t| ("t1", t)));
        params.extend(t2.map(|t| ("t2", t)));
        let tol = if *family == "equal-norm-swap" { 1e-10 } else { LEMMA_TOL };
        out.push(
            BoundReport::check(&format!("lemma-{family}/{norms}"), &spec, &params, v, 0.0, Mode::Strict(tol))
                .with_witness(PairWitness { x, y }),
        );
    }
    Ok(out)
}

/// `±10^u` with `u` uniform on `[-3, 1]`.
fn signed_magnitude(rng: &mut ChaCha8Rng) -> f64 {
    let m = 10f64.powf(rand::Rng::gen_range(rng, -3.0..1.0));
    if rand::Rng::gen_bool(rng, 0.5) {
        m
    } else {
        -m
    }
}

/// Named norms used by the default verification battery.
pub fn builtin_specs() -> Vec<NormSpec> {
    ["lp:2", "lp:1", "lp:inf", "lp:3", "lp:1.5", "linf-l1", "truncated", "hexagon:0,1;1,0"]
        .iter()
        .map(|s| s.parse().expect("built-in spec parses"))
        .collect()
}

/// `count` seeded random symmetric polygons with 6–16 vertices.
pub fn random_polygons(seed: u64, count: usize) -> Vec<NormSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_polygon(&mut rng, 6, 16)).collect()
}

/// Which proposition families a battery runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Suites {
    pub atb: bool,
    pub dtb: bool,
    pub radon: bool,
}

impl Suites {
    pub const ALL: Suites = Suites { atb: true, dtb: true, radon: true };
}

/// Runs the selected checks on every `(spec, t)` pair, in input order.
pub fn run_battery(specs: &[NormSpec], ts: &[f64], suites: Suites, opts: &SearchOpts) -> Result<Vec<BoundReport>> {
    use rayon::prelude::*;
    let per_spec: Vec<Result<Vec<BoundReport>>> = specs
        .par_iter()
        .map(|spec| {
            let v = Verifier::new(*opts);
            let mut out = Vec::new();
            for &t in ts {
                if suites.atb {
                    out.extend(v.check_atb(spec, t)?);
                }
                if suites.dtb {
                    out.extend(v.check_dtb(spec, t)?);
                }
                if suites.radon {
                    out.extend(v.check_radon(spec, t)?);
                }
            }
            Ok(out)
        })
        .collect();
    let mut all = Vec::new();
    for r in per_spec {
        all.extend(r?);
    }
    Ok(all)
}
