//! Text form of norm specs, vectors and parameter lists.
//!
//! ```text
//! lp:<p> | lp:inf | linf-l1 | truncated
//! hexagon:<px>,<py>;<qx>,<qy>
//! polygon:<x1>,<y1>;<x2>,<y2>;...
//! ```
//!
//! Orthogonality relations are written `birkhoff`, `isosceles`, `skew:<t>`
//! or `roberts`.
//!
//! `Display` writes the same grammar, and floats are printed in Rust's
//! shortest round-trip form, so printing and re-parsing is lossless.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::norm::NormSpec;
use crate::orthogonality::Relation;
use crate::vector::Vector2;

/// Longest input accepted by the parsers; protects against pathological inputs.
pub const MAX_INPUT_LEN: usize = 1 << 16;

fn parse_real(what: &'static str, s: &str) -> Result<f64> {
    let t = s.trim();
    let value: f64 = t.parse().map_err(|_| Error::parse(what, s, "expected a real number"))?;
    if !value.is_finite() {
        return Err(Error::parse(what, s, "value must be finite"));
    }
    Ok(value)
}

/// Parses `a,b` into a finite vector.
pub fn parse_vector(s: &str) -> Result<Vector2> {
    if s.len() > MAX_INPUT_LEN {
        return Err(Error::parse("vector", "<oversized input>", "input too long"));
    }
    let mut parts = s.split(',');
    let (a, b) = match (parts.next(), parts.next(), parts.next()) {
        (Some(a), Some(b), None) => (a, b),
        _ => return Err(Error::parse("vector", s, "expected two comma-separated numbers")),
    };
    Ok(Vector2::new(parse_real("vector", a)?, parse_real("vector", b)?))
}

fn parse_vector_list(s: &str) -> Result<Vec<Vector2>> {
    s.split(';').map(parse_vector).collect()
}

/// Parses a norm spec in the grammar above.
pub fn parse_norm_spec(s: &str) -> Result<NormSpec> {
    if s.len() > MAX_INPUT_LEN {
        return Err(Error::parse("norm spec", "<oversized input>", "input too long"));
    }
    let s = s.trim();
    let (head, body) = match s.split_once(':') {
        Some((h, b)) => (h, Some(b)),
        None => (s, None),
    };
    match (head.to_ascii_lowercase().as_str(), body) {
        ("linf-l1", None) => Ok(NormSpec::LinfL1),
        ("truncated", None) => Ok(NormSpec::Truncated),
        ("lp", Some(p)) => {
            let p = p.trim();
            let value = if p.eq_ignore_ascii_case("inf") { f64::INFINITY } else { parse_real("lp exponent", p)? };
            NormSpec::lp(value)
        }
        ("hexagon", Some(b)) => {
            let vs = parse_vector_list(b)?;
            if vs.len() != 2 {
                return Err(Error::parse("hexagon", s, "expected exactly two generators p;q"));
            }
            NormSpec::hexagon(vs[0], vs[1])
        }
        ("polygon", Some(b)) => NormSpec::polygon(parse_vector_list(b)?),
        _ => Err(Error::parse(
            "norm spec",
            s,
            "expected lp:<p>, lp:inf, linf-l1, truncated, hexagon:<p>;<q> or polygon:<v1>;<v2>;...",
        )),
    }
}

impl FromStr for NormSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_norm_spec(s)
    }
}

impl fmt::Display for NormSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormSpec::Lp(lp) if lp.is_infinite() => write!(f, "lp:inf"),
            NormSpec::Lp(lp) => write!(f, "lp:{}", lp.p()),
            NormSpec::LinfL1 => write!(f, "linf-l1"),
            NormSpec::Truncated => write!(f, "truncated"),
            NormSpec::Hexagon(h) => write!(f, "hexagon:{};{}", h.p(), h.q()),
            NormSpec::Polygon(poly) => {
                write!(f, "polygon:")?;
                for (i, v) in poly.vertices().iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    write!(f, "{v}")?;
                }
                Ok(())
            }
        }
    }
}

impl Serialize for NormSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for NormSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses an orthogonality relation: `birkhoff`, `isosceles`, `skew:<t>` or `roberts`.
pub fn parse_relation(s: &str) -> Result<Relation> {
    if s.len() > MAX_INPUT_LEN {
        return Err(Error::parse("relation", "<oversized input>", "input too long"));
    }
    let s = s.trim();
    let (head, body) = match s.split_once(':') {
        Some((h, b)) => (h, Some(b)),
        None => (s, None),
    };
    match (head.to_ascii_lowercase().as_str(), body) {
        ("birkhoff", None) => Ok(Relation::Birkhoff),
        ("isosceles", None) => Ok(Relation::Isosceles),
        ("roberts", None) => Ok(Relation::Roberts),
        ("skew", Some(t)) => {
            let t = parse_real("skew parameter", t)?;
            if t <= 0.0 {
                return Err(Error::parse("relation", s, "skew parameter must be positive"));
            }
            Ok(Relation::SkewIsosceles { t })
        }
        _ => Err(Error::parse("relation", s, "expected birkhoff, isosceles, skew:<t> or roberts")),
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_relation(s)
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::Birkhoff => write!(f, "birkhoff"),
            Relation::Isosceles => write!(f, "isosceles"),
            Relation::SkewIsosceles { t } => write!(f, "skew:{t}"),
            Relation::Roberts => write!(f, "roberts"),
        }
    }
}
