//! Command implementations.

use std::fmt;

use banach_core::verification::{random_polygons, Suites};
use banach_core::{
    builtin_specs, check_relation, estimate, modulus_of_convexity, parse_vector, run_battery, run_lemma_suite,
    BoundReport, ConstantKind, NormSpec, Relation, SearchOpts, Status, Vector2,
};
use serde::Serialize;

use crate::args::{
    parse_kind, parse_norm, parse_relation, Command, ConstantArgs, DeltaArgs, Format, OrthArgs, Suite, SweepArgs,
    VerifyArgs,
};
use crate::output::{emit, json_document, sweep_csv};

pub const DEFAULT_TS: [f64; 5] = [0.25, 0.5, 1.0, 2.0, 4.0];

#[derive(Debug)]
pub enum CliError {
    Core(banach_core::Error),
    Usage(String),
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Io(e) => write!(f, "cannot write output: {e}"),
        }
    }
}

impl From<banach_core::Error> for CliError {
    fn from(e: banach_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

type CmdResult = Result<u8, CliError>;

/// Configuration echoed in every JSON document.
#[derive(Debug, Default, Serialize)]
struct RunConfig {
    command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    norm: Option<NormSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    kind: Option<ConstantKind>,
    #[serde(skip_serializing_if = "Option::is_none")]
    t_range: Option<TRange>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    t_values: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    opts: Option<SearchOpts>,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    suite: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    random_polygons: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    relation: Option<Relation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tol: Option<f64>,
    format: &'static str,
}

#[derive(Debug, Clone, Copy, Serialize)]
struct TRange {
    min: f64,
    max: f64,
    steps: usize,
    log: bool,
}

impl TRange {
    fn values(&self) -> Vec<f64> {
        if self.steps == 1 {
            return vec![self.min];
        }
        let last = (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| {
                let s = i as f64 / last;
                if self.log {
                    (self.min.ln() + s * (self.max / self.min).ln()).exp()
                } else {
                    self.min + s * (self.max - self.min)
                }
            })
            .collect()
    }
}

pub fn run(command: Command) -> CmdResult {
    match command {
        Command::Constant(a) => cmd_constant(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Orth(a) => cmd_orth(a),
        Command::Delta(a) => cmd_delta(a),
    }
}

fn cmd_constant(a: ConstantArgs) -> CmdResult {
    let spec = parse_norm(&a.norm)?;
    let kind = parse_kind(&a.name, a.t, a.eps)?;
    let opts = a.search.opts();
    opts.validate()?;
    let e = estimate(&spec, kind, &opts)?;
    let config = RunConfig {
        command: "constant",
        norm: Some(spec),
        kind: Some(kind),
        opts: Some(opts),
        format: "json",
        ..Default::default()
    };
    emit(&json_document(&config, &[e]), a.out.out.as_deref())?;
    Ok(0)
}

fn cmd_sweep(a: SweepArgs) -> CmdResult {
    let spec = parse_norm(&a.norm)?;
    let name = a.name.trim().to_ascii_lowercase();
    if !matches!(name.as_str(), "atb" | "dtb" | "aprime") {
        return Err(CliError::Usage(format!(
            "sweep needs a t-dependent constant (atb, dtb, aprime), got {:?}",
            a.name
        )));
    }
    let range = TRange { min: a.t_min, max: a.t_max, steps: a.steps, log: a.log };
    if !(range.min > 0.0 && range.min.is_finite() && range.max.is_finite() && range.max >= range.min) {
        return Err(CliError::Usage(format!(
            "t range must satisfy 0 < t-min <= t-max < inf, got [{}, {}]",
            range.min, range.max
        )));
    }
    if range.steps == 0 {
        return Err(CliError::Usage("steps must be at least 1".into()));
    }
    let opts = a.search.opts();
    opts.validate()?;
    let mut rows = Vec::with_capacity(range.steps);
    for t in range.values() {
        let kind = parse_kind(&name, Some(t), None)?;
        rows.push((t, estimate(&spec, kind, &opts)?));
    }
    let text = match a.format {
        Format::Csv => sweep_csv(&rows),
        Format::Json => {
            let config = RunConfig {
                command: "sweep",
                norm: Some(spec),
                kind: Some(parse_kind(&name, Some(range.min), None)?),
                t_range: Some(range),
                opts: Some(opts),
                format: "json",
                ..Default::default()
            };
            let results: Vec<_> = rows.into_iter().map(|(_, e)| e).collect();
            json_document(&config, &results)
        }
    };
    emit(&text, a.out.out.as_deref())?;
    Ok(0)
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::All => "all",
        Suite::Atb => "atb",
        Suite::Dtb => "dtb",
        Suite::Radon => "radon",
        Suite::Lemmas => "lemmas",
    }
}

fn cmd_verify(a: VerifyArgs) -> CmdResult {
    let opts = a.search.opts();
    opts.validate()?;
    let ts = if a.t.is_empty() { DEFAULT_TS.to_vec() } else { a.t.clone() };
    if let Some(bad) = ts.iter().find(|t| !(**t > 0.0 && t.is_finite())) {
        return Err(CliError::Usage(format!("t must be positive and finite, got {bad}")));
    }
    let norm = a.norm.as_deref().map(parse_norm).transpose()?;
    let specs = match &norm {
        Some(spec) => vec![spec.clone()],
        None => {
            let mut v = builtin_specs();
            v.extend(random_polygons(a.seed, a.random_polygons));
            v
        }
    };
    let suites = Suites {
        atb: matches!(a.suite, Suite::All | Suite::Atb),
        dtb: matches!(a.suite, Suite::All | Suite::Dtb),
        radon: matches!(a.suite, Suite::All | Suite::Radon),
    };
    let mut reports: Vec<BoundReport> = Vec::new();
    if suites.atb || suites.dtb || suites.radon {
        reports.extend(run_battery(&specs, &ts, suites, &opts)?);
    }
    let lemmas = matches!(a.suite, Suite::All | Suite::Lemmas);
    if lemmas {
        reports.extend(run_lemma_suite(a.seed, a.samples)?);
    }
    let config = RunConfig {
        command: "verify",
        norm,
        t_values: if suites == (Suites { atb: false, dtb: false, radon: false }) { vec![] } else { ts },
        opts: Some(opts),
        seed: Some(a.seed),
        suite: Some(suite_name(a.suite)),
        samples: lemmas.then_some(a.samples),
        random_polygons: (a.norm.is_none() && a.random_polygons > 0).then_some(a.random_polygons),
        format: "json",
        ..Default::default()
    };
    emit(&json_document(&config, &reports), a.out.out.as_deref())?;
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    eprintln!(
        "{} reports: {} pass, {} info, {} note, {} not applicable, {} fail",
        reports.len(),
        count(Status::Pass),
        count(Status::Info),
        count(Status::Note),
        count(Status::NotApplicable),
        count(Status::Fail)
    );
    Ok(if count(Status::Fail) > 0 { 1 } else { 0 })
}

#[derive(Serialize)]
struct OrthResult {
    holds: bool,
    defect: f64,
    x: [f64; 2],
    y: [f64; 2],
}

fn cmd_orth(a: OrthArgs) -> CmdResult {
    let spec = parse_norm(&a.norm)?;
    let relation = parse_relation(&a.kind)?;
    let x: Vector2 = parse_vector(&a.x)?;
    let y: Vector2 = parse_vector(&a.y)?;
    if !(a.tol >= 0.0 && a.tol.is_finite()) {
        return Err(CliError::Usage(format!("tol must be finite and non-negative, got {}", a.tol)));
    }
    let (holds, defect) = check_relation(&spec, relation, x, y, a.tol)?;
    let config = RunConfig {
        command: "orth",
        norm: Some(spec),
        relation: Some(relation),
        tol: Some(a.tol),
        format: "json",
        ..Default::default()
    };
    let result = OrthResult { holds, defect, x: x.as_array(), y: y.as_array() };
    emit(&json_document(&config, &[result]), a.out.out.as_deref())?;
    Ok(0)
}

fn cmd_delta(a: DeltaArgs) -> CmdResult {
    let spec = parse_norm(&a.norm)?;
    let opts = a.search.opts();
    opts.validate()?;
    let e = modulus_of_convexity(&spec, a.eps, &opts)?;
    let config = RunConfig {
        command: "delta",
        norm: Some(spec),
        kind: Some(e.kind),
        opts: Some(opts),
        format: "json",
        ..Default::default()
    };
    emit(&json_document(&config, &[e]), a.out.out.as_deref())?;
    Ok(0)
}
