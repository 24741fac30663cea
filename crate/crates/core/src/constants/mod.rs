//! Estimators for geometric constants of a normed plane.
//!
//! Every estimator returns a [`ConstantEstimate`] carrying the witness pair
//! that attains the reported value. Sup-type constants are reported from
//! below and inf-type constants from above; re-evaluating the objective at
//! the witness reproduces the value.

mod inf;
mod mates;
mod torus;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::norm::{NormSpec, UnitVector};
use crate::orthogonality::min_over_line;
use crate::search::log_grid;
use crate::vector::Vector2;

pub use inf::{estimate_d_inf, modulus_of_convexity};
pub use mates::{estimate_atb, estimate_br, estimate_dtb};
pub use torus::{estimate_f, estimate_skewness};

/// Step used for the one-sided derivative in the skewness quotient.
pub const SKEWNESS_LAMBDA: f64 = 1e-7;
/// Coarser step whose quotient is reported as a stability check.
pub const SKEWNESS_LAMBDA_CHECK: f64 = 1e-6;
/// Range and resolution of the relative-scale sweep for `cnjb`.
pub const CNJB_R_RANGE: (f64, f64) = (1e-2, 1e2);
pub const CNJB_R_POINTS: usize = 65;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ConstantKind {
    Atb { t: f64 },
    Dtb { t: f64 },
    A2b,
    Jb,
    J,
    A2,
    Aprime { t: f64 },
    Dprime,
    DInf,
    Br,
    Skewness,
    Cnjb,
    F,
    Modulus { eps: f64 },
}

impl ConstantKind {
    pub const NAMES: [&'static str; 14] =
        ["atb", "dtb", "a2b", "jb", "j", "a2", "aprime", "dprime", "d_inf", "br", "skewness", "cnjb", "f", "modulus"];

    pub fn name(&self) -> &'static str {
        match self {
            ConstantKind::Atb { .. } => "atb",
            ConstantKind::Dtb { .. } => "dtb",
            ConstantKind::A2b => "a2b",
            ConstantKind::Jb => "jb",
            ConstantKind::J => "j",
            ConstantKind::A2 => "a2",
            ConstantKind::Aprime { .. } => "aprime",
            ConstantKind::Dprime => "dprime",
            ConstantKind::DInf => "d_inf",
            ConstantKind::Br => "br",
            ConstantKind::Skewness => "skewness",
            ConstantKind::Cnjb => "cnjb",
            ConstantKind::F => "f",
            ConstantKind::Modulus { .. } => "modulus",
        }
    }

    /// Builds a kind from its name and the parameter it needs.
    pub fn from_parts(name: &str, t: Option<f64>, eps: Option<f64>) -> Result<Self> {
        let need_t = || t.ok_or_else(|| Error::InvalidOptions(format!("constant {name} needs t")));
        let kind = match name.trim().to_ascii_lowercase().as_str() {
            "atb" => ConstantKind::Atb { t: need_t()? },
            "dtb" => ConstantKind::Dtb { t: need_t()? },
            "aprime" => ConstantKind::Aprime { t: need_t()? },
            "modulus" => ConstantKind::Modulus {
                eps: eps.ok_or_else(|| Error::InvalidOptions("constant modulus needs eps".into()))?,
            },
            "a2b" => ConstantKind::A2b,
            "jb" => ConstantKind::Jb,
            "j" => ConstantKind::J,
            "a2" => ConstantKind::A2,
            "dprime" => ConstantKind::Dprime,
            "d_inf" | "d-inf" => ConstantKind::DInf,
            "br" => ConstantKind::Br,
            "skewness" => ConstantKind::Skewness,
            "cnjb" => ConstantKind::Cnjb,
            "f" => ConstantKind::F,
            other => {
                return Err(Error::parse("constant kind", other, format!("expected one of {}", Self::NAMES.join(", "))))
            }
        };
        kind.validate()?;
        Ok(kind)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            ConstantKind::Atb { t } | ConstantKind::Dtb { t } | ConstantKind::Aprime { t } => check_t(t),
            ConstantKind::Modulus { eps } => check_eps(eps),
            _ => Ok(()),
        }
    }

    pub fn bound_side(&self) -> BoundSide {
        match self {
            ConstantKind::DInf | ConstantKind::Modulus { .. } => BoundSide::UpperOfInf,
            _ => BoundSide::LowerOfSup,
        }
    }

    /// Parameters carried by the kind itself.
    pub fn params(&self) -> BTreeMap<String, f64> {
        let mut m = BTreeMap::new();
        match *self {
            ConstantKind::Atb { t } | ConstantKind::Dtb { t } | ConstantKind::Aprime { t } => {
                m.insert("t".into(), t);
            }
            ConstantKind::Modulus { eps } => {
                m.insert("eps".into(), eps);
            }
            _ => {}
        }
        m
    }
}

impl fmt::Display for ConstantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ConstantKind::Atb { t } | ConstantKind::Dtb { t } | ConstantKind::Aprime { t } => {
                write!(f, "{}:{}", self.name(), t)
            }
            ConstantKind::Modulus { eps } => write!(f, "modulus:{eps}"),
            _ => f.write_str(self.name()),
        }
    }
}

/// Parses `name` or `name:<param>`, e.g. `atb:0.5`, `modulus:1`, `br`.
impl FromStr for ConstantKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.len() > crate::grammar::MAX_INPUT_LEN {
            return Err(Error::parse("constant kind", "<oversized input>", "input too long"));
        }
        let (name, param) = match s.trim().split_once(':') {
            Some((n, p)) => {
                let v: f64 =
                    p.trim().parse().map_err(|_| Error::parse("constant kind", s, "expected a real parameter"))?;
                if !v.is_finite() {
                    return Err(Error::parse("constant kind", s, "parameter must be finite"));
                }
                (n, Some(v))
            }
            None => (s.trim(), None),
        };
        let takes_t = matches!(name, "atb" | "dtb" | "aprime");
        let takes_eps = name == "modulus";
        if param.is_some() && !takes_t && !takes_eps {
            return Err(Error::parse("constant kind", s, "this constant takes no parameter"));
        }
        ConstantKind::from_parts(name, param.filter(|_| takes_t), param.filter(|_| takes_eps))
    }
}

impl Serialize for ConstantKind {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

pub(crate) fn check_t(t: f64) -> Result<()> {
    if t > 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(Error::OutOfRange { name: "t", value: t, expected: "t > 0" })
    }
}

fn check_eps(eps: f64) -> Result<()> {
    if (0.0..=2.0).contains(&eps) {
        Ok(())
    } else {
        Err(Error::OutOfRange { name: "eps", value: eps, expected: "0 <= eps <= 2" })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BoundSide {
    /// The value is attained by the witness, so the true supremum is at least this.
    LowerOfSup,
    /// The value is attained by the witness, so the true infimum is at most this.
    UpperOfInf,
}

/// Coarsest grid visited by [`grid_levels`].
pub(crate) const MIN_GRID_LEVEL: usize = 32;

/// `n` and its successive halvings down to [`MIN_GRID_LEVEL`], finest first.
///
/// Sup searches keep the best result over all levels, so the levels of `n`
/// contain those of `n/2^k` and an estimate never drops when the grid is
/// refined by a power of two.
pub(crate) fn grid_levels(n: usize) -> impl Iterator<Item = usize> {
    std::iter::successors(Some(n), |&m| (m / 2 >= MIN_GRID_LEVEL).then_some(m / 2))
}

/// Log-spaced grid for the outer supremum over `t`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TGrid {
    pub min: f64,
    pub max: f64,
    pub points: usize,
}

impl TGrid {
    pub fn values(&self) -> Vec<f64> {
        log_grid(self.min, self.max, self.points)
    }
}

impl Default for TGrid {
    fn default() -> Self {
        TGrid { min: 1e-3, max: 1e3, points: 96 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchOpts {
    /// Number of grid directions over a half turn.
    pub grid_n: usize,
    /// Golden-section iterations per refinement stage.
    pub refine_iters: usize,
    pub t_grid: TGrid,
    /// Tolerance for accepting Birkhoff mates at witnesses.
    pub tol: f64,
}

impl Default for SearchOpts {
    fn default() -> Self {
        SearchOpts { grid_n: 2048, refine_iters: 40, t_grid: TGrid::default(), tol: 1e-7 }
    }
}

impl SearchOpts {
    pub fn with_grid(grid_n: usize) -> Self {
        SearchOpts { grid_n, ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.grid_n < 64 {
            return Err(Error::InvalidOptions(format!("grid_n = {} < 64", self.grid_n)));
        }
        if self.refine_iters == 0 {
            return Err(Error::InvalidOptions("refine_iters must be positive".into()));
        }
        let g = self.t_grid;
        if !(g.min > 0.0 && g.min < g.max && g.max.is_finite()) || g.points < 2 {
            return Err(Error::InvalidOptions(format!("t grid needs 0 < min < max and at least 2 points, got {g:?}")));
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::InvalidOptions(format!("tol = {} must be positive", self.tol)));
        }
        Ok(())
    }
}

/// Witness pair of an estimate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Witness {
    pub x: UnitVector,
    pub y: UnitVector,
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Witness", 4)?;
        st.serialize_field("theta_x", &self.x.theta)?;
        st.serialize_field("theta_y", &self.y.theta)?;
        st.serialize_field("x", &self.x.point.as_array())?;
        st.serialize_field("y", &self.y.point.as_array())?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConstantEstimate {
    pub kind: ConstantKind,
    /// Kind parameters plus search by-products such as the maximising `t`.
    pub params: BTreeMap<String, f64>,
    pub value: f64,
    pub witness: Witness,
    pub grid_n: usize,
    pub refine_iters: usize,
    pub bound_side: BoundSide,
}

impl ConstantEstimate {
    /// Objective of the kind evaluated at the stored witness.
    pub fn reevaluate(&self, spec: &NormSpec) -> f64 {
        let p = |k: &str| self.params.get(k).copied().unwrap_or(f64::NAN);
        let (x, y) = (self.witness.x.point, self.witness.y.point);
        match self.kind {
            ConstantKind::Br => br_objective(spec, x, y, p("t")),
            ConstantKind::F => f_objective(spec, x, y, p("t")),
            ConstantKind::Cnjb => cnjb_objective(spec, x, y, p("r")),
            ConstantKind::Skewness => skew_quotient(spec, x, y, p("lambda")),
            ConstantKind::DInf => min_over_line(spec, x, y).map_or(f64::NAN, |m| m.value),
            ConstantKind::Modulus { .. } => modulus_objective(spec, x, y),
            kind => pair_objective(kind, spec, x, y),
        }
    }

    pub(crate) fn new(
        kind: ConstantKind,
        value: f64,
        witness: Witness,
        opts: &SearchOpts,
        extra: &[(&str, f64)],
    ) -> Self {
        let mut params = kind.params();
        for &(k, v) in extra {
            params.insert(k.to_string(), v);
        }
        ConstantEstimate {
            kind,
            params,
            value,
            witness,
            grid_n: opts.grid_n,
            refine_iters: opts.refine_iters,
            bound_side: kind.bound_side(),
        }
    }
}

/// Objective of the kinds that depend on the pair only.
pub(crate) fn pair_objective(kind: ConstantKind, spec: &NormSpec, x: Vector2, y: Vector2) -> f64 {
    let n = |v| spec.norm(v);
    match kind {
        ConstantKind::Atb { t } | ConstantKind::Aprime { t } => 0.5 * (n(x + t * y) + n(t * x - y)),
        ConstantKind::Dtb { t } => (n(x + t * y) - n(t * x - y)) / t,
        ConstantKind::A2b | ConstantKind::A2 => 0.5 * (n(x + y) + n(x - y)),
        ConstantKind::Jb | ConstantKind::J => n(x + y).min(n(x - y)),
        ConstantKind::Dprime => n(x + y) - n(x - y),
        _ => unreachable!("{kind} needs an extra parameter"),
    }
}

pub(crate) fn br_objective(spec: &NormSpec, x: Vector2, y: Vector2, t: f64) -> f64 {
    (spec.norm(x + t * y) - spec.norm(x - t * y)) / t
}

pub(crate) fn f_objective(spec: &NormSpec, x: Vector2, y: Vector2, t: f64) -> f64 {
    0.5 * (spec.norm(x + t * y) - spec.norm(t * x + y))
}

pub(crate) fn cnjb_objective(spec: &NormSpec, x: Vector2, y: Vector2, r: f64) -> f64 {
    let ry = r * y;
    let (a, b) = (spec.norm(x + ry), spec.norm(x - ry));
    let (nx, ny) = (spec.norm(x), spec.norm(ry));
    (a * a + b * b) / (2.0 * (nx * nx + ny * ny))
}

/// `(‖x + λy‖ − ‖y + λx‖)/λ` with the unit norms subtracted first, which
/// keeps rounding in the norms from being amplified by `1/λ`.
pub(crate) fn skew_quotient(spec: &NormSpec, x: Vector2, y: Vector2, lambda: f64) -> f64 {
    let a = spec.norm(x + lambda * y) - spec.norm(x);
    let b = spec.norm(y + lambda * x) - spec.norm(y);
    (a - b) / lambda
}

pub(crate) fn modulus_objective(spec: &NormSpec, x: Vector2, y: Vector2) -> f64 {
    1.0 - 0.5 * spec.norm(x + y)
}

/// Estimates any constant, dispatching on the kind.
pub fn estimate(spec: &NormSpec, kind: ConstantKind, opts: &SearchOpts) -> Result<ConstantEstimate> {
    kind.validate()?;
    match kind {
        ConstantKind::Atb { t } => estimate_atb(spec, t, opts),
        ConstantKind::Dtb { t } => estimate_dtb(spec, t, opts),
        ConstantKind::Br => estimate_br(spec, opts),
        ConstantKind::Skewness => estimate_skewness(spec, opts),
        ConstantKind::DInf => estimate_d_inf(spec, opts),
        ConstantKind::F => estimate_f(spec, opts),
        ConstantKind::Modulus { eps } => modulus_of_convexity(spec, eps, opts),
        _ => estimate_classic(kind, spec, opts),
    }
}

/// Classical constants: `a2b`, `jb`, `dprime` and `cnjb` over Birkhoff
/// mates, `j`, `a2` and `aprime` over all unit pairs.
pub fn estimate_classic(kind: ConstantKind, spec: &NormSpec, opts: &SearchOpts) -> Result<ConstantEstimate> {
    kind.validate()?;
    match kind {
        ConstantKind::A2b => mates::estimate_pair_kind(spec, ConstantKind::A2b, opts),
        ConstantKind::Jb => mates::estimate_pair_kind(spec, ConstantKind::Jb, opts),
        ConstantKind::Dprime => mates::estimate_pair_kind(spec, ConstantKind::Dprime, opts),
        ConstantKind::Cnjb => mates::estimate_cnjb(spec, opts),
        ConstantKind::J | ConstantKind::A2 | ConstantKind::Aprime { .. } => torus::estimate_pair_kind(spec, kind, opts),
        other => Err(Error::InvalidOptions(format!("{other} is not a classical constant; use its own estimator"))),
    }
}
