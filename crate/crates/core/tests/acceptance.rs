//! Acceptance criteria, one pass/fail line each.
//!
//! Runs without the libtest harness so the lines are always shown. The
//! process fails if any criterion fails, except for failures listed in
//! [`KNOWN_FAILURES`] whose failure mode matches the recorded one exactly.

mod common;

use std::f64::consts::SQRT_2;
use std::process::ExitCode;
use std::time::Instant;

use banach_core::orthogonality::sample_mates;
use banach_core::verification::random_polygons;
use banach_core::{
    check_dtb_propositions, estimate, is_birkhoff, modulus_of_convexity, run_battery, run_lemma_suite, BoundReport,
    ConstantKind, NormSpec, SearchOpts, Status, Suites, Vector2,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

/// Claims that are false as stated; their FAIL reports make criterion 7
/// unattainable.
const REFUTED_CLAIMS: [&str; 2] = ["dtb-jb-upper", "dtb-nonsquare"];

/// Criteria that cannot pass, with the reason.
const KNOWN_FAILURES: [(usize, &str); 1] = [(
    7,
    "the comparison D_t^B <= J^B - 1 and the t = 1 non-squareness corollary are false as stated; \
     they fail on random polygons at t = 1",
)];

enum Outcome {
    Pass(String),
    Fail(String),
    /// Failure whose mode matches a [`KNOWN_FAILURES`] entry.
    KnownFail(String),
}

fn value(spec: &NormSpec, kind: ConstantKind, opts: &SearchOpts) -> f64 {
    estimate(spec, kind, opts).unwrap_or_else(|e| panic!("{kind} on {spec}: {e}")).value
}

/// Collects `(ok, message)` checks into an outcome.
struct Checks(Vec<String>, Vec<String>);

impl Checks {
    fn new() -> Self {
        Checks(Vec::new(), Vec::new())
    }

    fn check(&mut self, ok: bool, msg: String) {
        if ok {
            self.0.push(msg);
        } else {
            self.1.push(msg);
        }
    }

    fn outcome(self) -> Outcome {
        if self.1.is_empty() {
            Outcome::Pass(format!("{} checks", self.0.len()))
        } else {
            Outcome::Fail(self.1.join("; "))
        }
    }
}

fn find<'a>(r: &'a [BoundReport], claim: &str) -> Option<&'a BoundReport> {
    r.iter().find(|r| r.claim_id == claim)
}

fn criterion_1() -> Outcome {
    let opts = SearchOpts::default();
    let mut c = Checks::new();
    for t in [1.0, 2.0, 5.0] {
        let start = Instant::now();
        let v = value(&NormSpec::LinfL1, ConstantKind::Dtb { t }, &opts);
        let secs = start.elapsed().as_secs_f64();
        c.check((v - 1.0 / t).abs() <= 1e-6, format!("t={t}: D={v:.12}"));
        c.check(secs <= 10.0, format!("t={t}: {secs:.2}s"));
        let r = check_dtb_propositions(&NormSpec::LinfL1, t, &opts).unwrap();
        for claim in [
            "dtb-attainment-segment-xy",
            "dtb-attainment-segment-x2y",
            "dtb-attainment-distance",
            "dtb-attainment-modulus",
        ] {
            let ok = find(&r, claim).is_some_and(|r| r.status == Status::Pass);
            c.check(ok, format!("t={t}: {claim}"));
        }
    }
    c.outcome()
}

fn criterion_2() -> Outcome {
    let opts = SearchOpts::default();
    let hex = NormSpec::hexagon(Vector2::new(0.0, 1.0), Vector2::new(1.0, 0.0)).unwrap();
    let mut c = Checks::new();
    for t in [0.25, 0.5, 1.0, 2.0, 4.0] {
        let v = value(&hex, ConstantKind::Atb { t }, &opts);
        let want = 1.0 + t - 0.5 * t.min(1.0);
        c.check((v - want).abs() <= 1e-4, format!("t={t}: A={v:.8} want {want}"));
    }
    c.outcome()
}

fn criterion_3() -> Outcome {
    let opts = SearchOpts::default();
    let l2 = NormSpec::euclidean();
    let mut c = Checks::new();
    for t in [0.5, 1.0, 2.0] {
        let v = value(&l2, ConstantKind::Atb { t }, &opts);
        c.check((v - (1.0 + t * t).sqrt()).abs() <= 1e-4, format!("atb t={t}: {v:.8}"));
        let d = value(&l2, ConstantKind::Dtb { t }, &opts);
        c.check(d <= 1e-6, format!("dtb t={t}: {d:.3e}"));
    }
    let a2b = value(&l2, ConstantKind::A2b, &opts);
    c.check((a2b - SQRT_2).abs() <= 1e-4, format!("a2b: {a2b:.8}"));
    let br = value(&l2, ConstantKind::Br, &opts);
    c.check(br <= 1e-6, format!("br: {br:.3e}"));
    let s = value(&l2, ConstantKind::Skewness, &opts);
    c.check(s <= 1e-5, format!("skewness: {s:.3e}"));
    let cnjb = value(&l2, ConstantKind::Cnjb, &opts);
    c.check((cnjb - 1.0).abs() <= 1e-6, format!("cnjb: {cnjb:.10}"));
    let delta = modulus_of_convexity(&l2, 1.0, &opts).unwrap().value;
    let want = 1.0 - 3f64.sqrt() / 2.0;
    c.check((delta - want).abs() <= 1e-5, format!("delta(1): {delta:.8}"));
    c.outcome()
}

fn criterion_4() -> Outcome {
    let v = value(&NormSpec::Truncated, ConstantKind::A2b, &SearchOpts::default());
    let mut c = Checks::new();
    c.check((v - SQRT_2).abs() <= 1e-3, format!("a2b(truncated) = {v:.8}"));
    c.outcome()
}

fn criterion_5() -> Outcome {
    let opts = SearchOpts::default();
    let mut c = Checks::new();
    for t in [0.5, 1.0, 2.0] {
        let v = value(&l1(), ConstantKind::Atb { t }, &opts);
        c.check((v - (1.0 + t)).abs() <= 1e-4, format!("atb(l1) t={t}: {v:.8}"));
    }
    let d = value(&linf(), ConstantKind::Dtb { t: 1.0 }, &opts);
    c.check((d - 1.0).abs() <= 1e-6, format!("dtb(linf) t=1: {d:.12}"));
    c.outcome()
}

fn criterion_6() -> Outcome {
    let opts = SearchOpts::default();
    let mut c = Checks::new();
    for p in [2.0, 4.0, 8.0] {
        let spec = NormSpec::lp(p).unwrap();
        for t in [0.5, 1.0, 2.0] {
            let v = value(&spec, ConstantKind::Atb { t }, &opts);
            let bound = 2f64.powf(-1.0 / p) * ((1.0 - t).abs().powf(p) + (1.0 + t).powf(p)).powf(1.0 / p);
            c.check(v >= bound - 1e-6, format!("p={p} t={t}: {v:.8} vs {bound:.8}"));
        }
    }
    c.outcome()
}

fn criterion_7() -> Outcome {
    let opts = SearchOpts::default();
    let specs = random_polygons(7, 100);
    for spec in &specs {
        let n = spec.polygon_ball().map_or(0, |p| p.vertices().len());
        assert!((6..=16).contains(&n), "{n} vertices");
    }
    let reports = run_battery(&specs, &[0.25, 0.5, 1.0, 2.0, 4.0], Suites::ALL, &opts).unwrap();
    let total = reports.len();
    let fails: Vec<BoundReport> = reports.into_iter().filter(|r| r.status == Status::Fail).collect();
    if fails.is_empty() {
        return Outcome::Pass(format!("{total} reports, no FAIL"));
    }
    let unexpected: Vec<&BoundReport> = fails
        .iter()
        .filter(|r| !REFUTED_CLAIMS.contains(&r.claim_id.as_str()) || r.params.get("t") != Some(&1.0))
        .collect();
    let reproduces = fails.iter().all(|r| r.recheck().zip(r.recorded_value()).is_some_and(|(a, b)| a == b));
    let worst = fails.iter().map(|r| r.slack).fold(0.0, f64::min);
    let detail = format!(
        "{} FAIL of {total} reports ({} dtb-jb-upper, {} dtb-nonsquare, worst slack {worst:.3}), witnesses reproduce: {reproduces}",
        fails.len(),
        fails.iter().filter(|r| r.claim_id == "dtb-jb-upper").count(),
        fails.iter().filter(|r| r.claim_id == "dtb-nonsquare").count(),
    );
    if unexpected.is_empty() && reproduces {
        Outcome::KnownFail(detail)
    } else {
        let ids: Vec<String> = unexpected.iter().map(|r| format!("{} t={:?}", r.claim_id, r.params.get("t"))).collect();
        Outcome::Fail(format!("{detail}; unexpected: {}", ids.join(", ")))
    }
}

fn criterion_8() -> Outcome {
    let reports = run_lemma_suite(42, 10_000).unwrap();
    let mut c = Checks::new();
    for family in ["convexity", "monotone-quotient", "triangle-refinement"] {
        for r in reports.iter().filter(|r| r.claim_id.starts_with(&format!("lemma-{family}/"))) {
            c.check(r.lhs <= 1e-8, format!("{}: max violation {:.3e}", r.claim_id, r.lhs));
        }
    }
    c.outcome()
}

/// `(spec, x, y)` with `y` a Birkhoff mate of `x` rotated by a random angle
/// of size `10^U(−9, −2)`, or unrotated.
fn birkhoff_triples(n: usize, seed: u64) -> Vec<(NormSpec, Vector2, Vector2)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = [NormSpec::euclidean(), l1(), linf(), NormSpec::LinfL1, NormSpec::Truncated, NormSpec::lp(3.0).unwrap()];
    let extra = random_polygons(seed, 10);
    (0..n)
        .map(|k| {
            let spec = if k % 3 == 2 {
                extra[rng.gen_range(0..extra.len())].clone()
            } else if k % 3 == 1 {
                NormSpec::lp(rng.gen_range(1.0..8.0)).unwrap()
            } else {
                base[rng.gen_range(0..base.len())].clone()
            };
            let x = rng.gen_range(0.2..3.0) * Vector2::direction(rng.gen_range(0.0..std::f64::consts::TAU));
            let mates = sample_mates(&spec, x, 3);
            let y = mates[rng.gen_range(0..mates.len())].1.point;
            let y = if rng.gen_bool(0.2) {
                y
            } else {
                let eps = 10f64.powf(rng.gen_range(-9.0..-2.0)) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
                Vector2::direction(y.angle() + eps)
            };
            (spec, x, rng.gen_range(0.2..3.0) * y)
        })
        .collect()
}

fn criterion_9() -> Outcome {
    let mut c = Checks::new();

    let tol = 1e-6;
    let mut compared = 0;
    let mut disagree = Vec::new();
    for (spec, x, y) in birkhoff_triples(1000, 11) {
        let oracle = spec.norm(x) - line_min_dense(&spec, x, y);
        if oracle > 0.5 * tol && oracle < 2.0 * tol {
            continue;
        }
        compared += 1;
        let (ok, _) = is_birkhoff(&spec, x, y, tol).unwrap();
        if ok != (oracle <= tol) {
            disagree.push(format!("{spec} x={x} y={y} oracle={oracle:.3e}"));
        }
    }
    c.check(
        disagree.is_empty() && compared >= 900,
        format!("is_birkhoff: {compared} compared, {} disagree {:?}", disagree.len(), disagree.first()),
    );

    let opts = SearchOpts::with_grid(512);
    let n = 4096;
    let t_grid = log_grid(1e-3, 1e3, 385);
    let r_grid = log_grid(1e-2, 1e2, 257);
    for spec in [NormSpec::euclidean(), l1(), NormSpec::LinfL1] {
        let nm = |v: Vector2| spec.norm(v);
        let pairs = birkhoff_pairs(&spec, n);
        let mut oracles: Vec<(ConstantKind, f64)> = Vec::new();
        for t in [0.5, 2.0] {
            oracles.push((ConstantKind::Atb { t }, sup_pairs(&pairs, |x, y| 0.5 * (nm(x + t * y) + nm(t * x - y)))));
            oracles.push((ConstantKind::Dtb { t }, sup_pairs(&pairs, |x, y| (nm(x + t * y) - nm(t * x - y)) / t)));
            oracles
                .push((ConstantKind::Aprime { t }, sup_torus(&spec, n, |x, y| 0.5 * (nm(x + t * y) + nm(t * x - y)))));
        }
        oracles.push((ConstantKind::A2b, sup_pairs(&pairs, |x, y| 0.5 * (nm(x + y) + nm(x - y)))));
        oracles.push((ConstantKind::Jb, sup_pairs(&pairs, |x, y| nm(x + y).min(nm(x - y)))));
        oracles.push((ConstantKind::Dprime, sup_pairs(&pairs, |x, y| nm(x + y) - nm(x - y))));
        oracles.push((
            ConstantKind::Br,
            sup_pairs(&pairs, |x, y| {
                t_grid.iter().map(|&t| (nm(x + t * y) - nm(x - t * y)) / t).fold(f64::NEG_INFINITY, f64::max)
            }),
        ));
        oracles.push((
            ConstantKind::Cnjb,
            sup_pairs(&pairs, |x, y| {
                r_grid
                    .iter()
                    .map(|&r| {
                        let (a, b) = (nm(x + r * y), nm(x - r * y));
                        (a * a + b * b) / (2.0 * (nm(x).powi(2) + nm(r * y).powi(2)))
                    })
                    .fold(f64::NEG_INFINITY, f64::max)
            }),
        ));
        oracles.push((ConstantKind::J, sup_torus(&spec, n, |x, y| nm(x + y).min(nm(x - y)))));
        oracles.push((ConstantKind::A2, sup_torus(&spec, n, |x, y| 0.5 * (nm(x + y) + nm(x - y)))));
        let lambda = 1e-7;
        oracles.push((
            ConstantKind::Skewness,
            sup_torus(&spec, n, |x, y| ((nm(x + lambda * y) - nm(x)) - (nm(y + lambda * x) - nm(y))) / lambda),
        ));
        oracles.push((ConstantKind::F, f_oracle(&spec, n)));
        for (kind, oracle) in oracles {
            let v = value(&spec, kind, &opts);
            c.check((v - oracle).abs() <= 5e-3, format!("{kind} on {spec}: {v:.6} vs oracle {oracle:.6}"));
        }
    }
    c.outcome()
}

fn main() -> ExitCode {
    let criteria: [(usize, &str, fn() -> Outcome); 9] = [
        (1, "DTB on linf-l1 equals 1/t with attainment", criterion_1),
        (2, "ATB on the hexagon equals 1 + t - min(1,t)/2", criterion_2),
        (3, "Euclidean closed forms", criterion_3),
        (4, "A2B of the truncated norm", criterion_4),
        (5, "non-square saturation", criterion_5),
        (6, "lp near-extremal witness", criterion_6),
        (7, "inequality battery on 100 random polygons", criterion_7),
        (8, "lemma property suite", criterion_8),
        (9, "oracle equivalence", criterion_9),
    ];
    let mut ok = true;
    for (id, name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let known = KNOWN_FAILURES.iter().find(|(k, _)| *k == id).map(|(_, why)| *why);
        let (status, detail) = match (outcome, known) {
            (Outcome::Pass(d), None) => ("PASS".to_string(), d),
            (Outcome::Pass(d), Some(_)) => {
                ok = false;
                ("PASS (listed as a known failure; update the list)".to_string(), d)
            }
            (Outcome::KnownFail(d), Some(why)) => (format!("FAIL (known: {why})"), d),
            (Outcome::KnownFail(d), None) | (Outcome::Fail(d), _) => {
                ok = false;
                ("FAIL".to_string(), d)
            }
        };
        println!("criterion {id}: {status} - {name} [{secs:.1}s] {detail}");
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
