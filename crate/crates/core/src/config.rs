//! Line-oriented algebra configuration files.
//!
//! ```text
//! % comment
//! primary: false, true
//! hedge: very class=+ rank=2 abbrev=V
//! positive: very -> very, more, little
//! negative: very -> probably
//! limit: 2
//! inverse: very more true -> probably true
//! ```

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{AlgebraErrors, HedgeAlgebra, HedgeAlgebraSpec, HedgeClass, HedgeDecl, Polarity};
use crate::domain::TruthDomain;
use crate::inverse::{InverseError, InverseTable, Override};
use crate::TruthSpace;

/// The four-hedge algebra (very, more, probably, little) with `l = 2`.
pub const DEFAULT_ALGEBRA: &str = include_str!("../../../programs/vmpl.alg");

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid algebra: {0}")]
    Algebra(#[from] AlgebraErrors),
    #[error("inverse mapping override: {0}")]
    Inverse(#[from] InverseError),
}

/// A parsed configuration; overrides are resolved once the domain exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraConfig {
    pub spec: HedgeAlgebraSpec,
    pub overrides: Vec<RawOverride>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawOverride {
    pub line: usize,
    pub hedge: String,
    pub from: String,
    pub to: String,
}

fn syntax(line: usize, message: impl Into<String>) -> ConfigError {
    ConfigError::Syntax { line, message: message.into() }
}

pub fn parse_config(text: &str) -> Result<AlgebraConfig, ConfigError> {
    let mut primaries = None;
    let mut hedges = Vec::new();
    let mut positivity = Vec::new();
    let mut limit = None;
    let mut strict = false;
    let mut overrides = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('%').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, rest) = content
            .split_once(':')
            .ok_or_else(|| syntax(line, format!("expected `key: value`, found `{content}`")))?;
        let rest = rest.trim();
        match key.trim() {
            "primary" => {
                let parts: Vec<&str> = rest.split(',').map(str::trim).collect();
                match parts.as_slice() {
                    [neg, pos] if !neg.is_empty() && !pos.is_empty() => {
                        primaries = Some((neg.to_string(), pos.to_string()))
                    }
                    _ => return Err(syntax(line, "primary: expects `<negative>, <positive>`")),
                }
            }
            "hedge" => hedges.push(parse_hedge(line, rest)?),
            key @ ("positive" | "negative") => {
                let pol = if key == "positive" { Polarity::Positive } else { Polarity::Negative };
                let (h, list) = rest
                    .split_once("->")
                    .ok_or_else(|| syntax(line, format!("{key}: expects `<hedge> -> <list>`")))?;
                let h = h.trim();
                if h.is_empty() {
                    return Err(syntax(line, "missing hedge before `->`"));
                }
                for other in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                    positivity.push((h.to_string(), other.to_string(), pol));
                }
            }
            "limit" => {
                limit = Some(
                    rest.parse::<usize>()
                        .map_err(|_| syntax(line, format!("limit must be a non-negative integer, found `{rest}`")))?,
                )
            }
            "strict" => {
                strict = match rest {
                    "true" | "yes" => true,
                    "false" | "no" => false,
                    _ => return Err(syntax(line, "strict: expects true or false")),
                }
            }
            "inverse" => {
                let (lhs, to) = rest
                    .split_once("->")
                    .ok_or_else(|| syntax(line, "inverse: expects `<hedge> <value> -> <value>`"))?;
                let mut words = lhs.split_whitespace();
                let hedge = words.next().ok_or_else(|| syntax(line, "inverse: missing hedge"))?;
                let from: Vec<&str> = words.collect();
                if from.is_empty() || to.trim().is_empty() {
                    return Err(syntax(line, "inverse: missing value"));
                }
                overrides.push(RawOverride {
                    line,
                    hedge: hedge.to_string(),
                    from: from.join(" "),
                    to: to.split_whitespace().collect::<Vec<_>>().join(" "),
                });
            }
            other => return Err(syntax(line, format!("unknown key `{other}`"))),
        }
    }

    let primaries = primaries.ok_or_else(|| syntax(0, "missing `primary:` line"))?;
    let limit = limit.ok_or_else(|| syntax(0, "missing `limit:` line"))?;
    Ok(AlgebraConfig {
        spec: HedgeAlgebraSpec { primaries, hedges, positivity, limit, strict },
        overrides,
    })
}

fn parse_hedge(line: usize, rest: &str) -> Result<HedgeDecl, ConfigError> {
    let mut words = rest.split_whitespace();
    let name = words.next().ok_or_else(|| syntax(line, "hedge: missing name"))?;
    let mut class = None;
    let mut rank = None;
    let mut abbrev = None;
    for attr in words {
        let (k, v) = attr
            .split_once('=')
            .ok_or_else(|| syntax(line, format!("hedge attribute `{attr}` is not `key=value`")))?;
        match k {
            "class" => {
                class = Some(match v {
                    "+" => HedgeClass::Positive,
                    "-" => HedgeClass::Negative,
                    _ => return Err(syntax(line, format!("class must be + or -, found `{v}`"))),
                })
            }
            "rank" => {
                rank = Some(v.parse::<u32>().map_err(|_| syntax(line, format!("bad rank `{v}`")))?)
            }
            "abbrev" => abbrev = Some(v.to_string()),
            _ => return Err(syntax(line, format!("unknown hedge attribute `{k}`"))),
        }
    }
    Ok(HedgeDecl {
        name: name.to_string(),
        class: class.ok_or_else(|| syntax(line, format!("hedge `{name}` lacks class=")))?,
        rank: rank.ok_or_else(|| syntax(line, format!("hedge `{name}` lacks rank=")))?,
        abbrev,
    })
}

impl AlgebraConfig {
    /// Validates the algebra, enumerates the domain and builds the inverse
    /// mappings (applying and re-validating any overrides).
    pub fn build(self) -> Result<TruthSpace, ConfigError> {
        let algebra = Arc::new(HedgeAlgebra::new(self.spec)?);
        let domain = Arc::new(TruthDomain::enumerate(algebra.clone()));
        let mut resolved = Vec::with_capacity(self.overrides.len());
        for o in &self.overrides {
            let hedge = algebra
                .find_hedge(&o.hedge)
                .ok_or_else(|| syntax(o.line, format!("unknown hedge `{}`", o.hedge)))?;
            let from = domain.parse_literal(&o.from).map_err(|e| syntax(o.line, e.to_string()))?;
            let to = domain.parse_literal(&o.to).map_err(|e| syntax(o.line, e.to_string()))?;
            resolved.push(Override { hedge, from, to });
        }
        let inverse = if resolved.is_empty() {
            InverseTable::build(domain.clone())
        } else {
            InverseTable::with_overrides(domain.clone(), &resolved)?
        };
        Ok(TruthSpace::new(domain, inverse))
    }
}

pub fn load_space(text: &str) -> Result<TruthSpace, ConfigError> {
    parse_config(text)?.build()
}

pub fn default_space() -> TruthSpace {
    load_space(DEFAULT_ALGEBRA).expect("bundled algebra is valid")
}

/// The bundled algebra's spec with a different length limit.
pub fn example_spec(limit: usize) -> HedgeAlgebraSpec {
    let mut spec = parse_config(DEFAULT_ALGEBRA).expect("bundled algebra parses").spec;
    spec.limit = limit;
    spec
}
