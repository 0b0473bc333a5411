//! Inverse mappings `h⁻` of hedges over a finite truth domain.
//!
//! The default table follows the standard construction for lin-HAs (hedges
//! indexed `h₋q … h₋₁, h₁ … h_p` by `≤ₑ`), transferred to the `c⁻` side by
//! negation, and then clamped so that no value of `H(c⁺)` or `H(c⁻)` is sent
//! to `W`, `0` or `1`.

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{HedgeAlgebra, HedgeId, Primary, TruthValue};
use crate::domain::{Level, Side, TruthDomain};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InverseError {
    #[error("{hedge}⁻({arg}) must be {expected}, found {found}")]
    FixedPoint { hedge: String, arg: String, expected: String, found: String },
    #[error("{hedge}⁻ is not monotone: {hedge}⁻({x}) < {hedge}⁻({y}) although {x} > {y}")]
    NotMonotone { hedge: String, x: String, y: String },
    #[error("{h} ≤ₑ {k} but {h}⁻({x}) < {k}⁻({x})")]
    NotAntitone { h: String, k: String, x: String },
    #[error("{hedge}⁻({arg}) = {found} crosses to the other side of W")]
    SideCrossing { hedge: String, arg: String, found: String },
    #[error("override for {hedge}⁻({arg}) given twice")]
    DuplicateOverride { hedge: String, arg: String },
    #[error("table has {found} columns for {expected} hedges, or a column of the wrong length")]
    Shape { expected: usize, found: usize },
}

/// One `inverse:` row of an algebra config.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Override {
    pub hedge: HedgeId,
    pub from: Level,
    pub to: Level,
}

/// For every hedge, a total map on domain levels.
#[derive(Debug, Clone)]
pub struct InverseTable {
    domain: Arc<TruthDomain>,
    /// `maps[h][x] = h⁻(x)`
    maps: Vec<Vec<Level>>,
}

impl InverseTable {
    /// The constructed default table.
    pub fn build(domain: Arc<TruthDomain>) -> InverseTable {
        let alg = domain.algebra();
        let maps = alg
            .hedge_ids()
            .map(|h| {
                domain
                    .levels()
                    .map(|x| {
                        if alg.limit() == 0 {
                            x
                        } else {
                            construct(&domain, alg.position(Some(h)), x)
                        }
                    })
                    .collect()
            })
            .collect();
        InverseTable { domain, maps }
    }

    /// The default table with some entries replaced; the result must still
    /// satisfy every condition.
    pub fn with_overrides(domain: Arc<TruthDomain>, overrides: &[Override]) -> Result<InverseTable, InverseError> {
        let mut table = InverseTable::build(domain);
        let mut seen = std::collections::HashSet::new();
        for o in overrides {
            if !seen.insert((o.hedge, o.from)) {
                return Err(InverseError::DuplicateOverride {
                    hedge: table.hedge_name(Some(o.hedge)),
                    arg: table.domain.literal(o.from),
                });
            }
            table.maps[o.hedge.index()][o.from.index()] = o.to;
        }
        table.validate()?;
        Ok(table)
    }

    /// A table given column by column (one column per hedge, in declaration
    /// order), validated.
    pub fn from_maps(domain: Arc<TruthDomain>, maps: Vec<Vec<Level>>) -> Result<InverseTable, InverseError> {
        let expected = domain.algebra().hedges().len();
        if maps.len() != expected || maps.iter().any(|m| m.len() != domain.len()) {
            return Err(InverseError::Shape { expected, found: maps.len() });
        }
        let table = InverseTable { domain, maps };
        table.validate()?;
        Ok(table)
    }

    pub fn domain(&self) -> &TruthDomain {
        &self.domain
    }

    /// `h⁻(v)`; `None` is the identity hedge `I`.
    pub fn apply(&self, h: Option<HedgeId>, v: Level) -> Level {
        match h {
            None => v,
            Some(h) => self.maps[h.index()][v.index()],
        }
    }

    pub fn column(&self, h: HedgeId) -> &[Level] {
        &self.maps[h.index()]
    }

    /// Least `v` with `h⁻(v) ≥ t`, if any. Relies on monotonicity.
    pub fn least_preimage_at_least(&self, h: HedgeId, t: Level) -> Option<Level> {
        let col = &self.maps[h.index()];
        let i = col.partition_point(|&y| y < t);
        (i < col.len()).then(|| Level(i as u32))
    }

    fn hedge_name(&self, h: Option<HedgeId>) -> String {
        match h {
            None => "I".to_string(),
            Some(h) => self.domain.algebra().hedge(h).name.clone(),
        }
    }

    /// Checks Conditions (1)–(3), the fixed points and side preservation.
    pub fn validate(&self) -> Result<(), InverseError> {
        let d = &*self.domain;
        let alg = d.algebra();
        let lit = |l: Level| d.literal(l);
        let fixed = [Level::BOTTOM, d.middle(), d.top()];
        let c_plus = d
            .level_of(&TruthValue::primary(Primary::Positive))
            .expect("c⁺ is always in the domain");

        for h in alg.hedge_ids() {
            let name = self.hedge_name(Some(h));
            let col = &self.maps[h.index()];
            for &x in &fixed {
                if col[x.index()] != x {
                    return Err(InverseError::FixedPoint {
                        hedge: name,
                        arg: lit(x),
                        expected: lit(x),
                        found: lit(col[x.index()]),
                    });
                }
            }
            if alg.limit() > 0 {
                let hc = d.apply_hedge(h, c_plus);
                if col[hc.index()] != c_plus {
                    return Err(InverseError::FixedPoint {
                        hedge: name,
                        arg: lit(hc),
                        expected: lit(c_plus),
                        found: lit(col[hc.index()]),
                    });
                }
            }
            for x in d.levels() {
                let y = col[x.index()];
                let crosses = match d.side(x) {
                    Side::Positive => y < d.middle(),
                    Side::Negative => y > d.middle(),
                    Side::Fixed => false,
                };
                if crosses {
                    return Err(InverseError::SideCrossing { hedge: name, arg: lit(x), found: lit(y) });
                }
            }
            for w in 1..col.len() {
                if col[w] < col[w - 1] {
                    return Err(InverseError::NotMonotone {
                        hedge: name,
                        x: lit(Level(w as u32)),
                        y: lit(Level(w as u32 - 1)),
                    });
                }
            }
        }

        let order = alg.extended_order();
        for (i, &h) in order.iter().enumerate() {
            for &k in &order[i + 1..] {
                for x in d.levels() {
                    if self.apply(h, x) < self.apply(k, x) {
                        return Err(InverseError::NotAntitone {
                            h: self.hedge_name(h),
                            k: self.hedge_name(k),
                            x: lit(x),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

/// `h_r⁻(x)` for the hedge at signed position `r`, clamped into the domain.
fn construct(d: &TruthDomain, r: i32, x: Level) -> Level {
    let alg = d.algebra();
    let raw = match d.value(x) {
        TruthValue::Term { hedges, primary: Primary::Positive } => positive(alg, r, hedges),
        TruthValue::Term { hedges, primary: Primary::Negative } => {
            let (p, q) = class_bounds(alg);
            let z = if r.abs() <= p.min(q) {
                -r
            } else if r > q {
                -q
            } else {
                p
            };
            alg.negate(&positive(alg, z, hedges))
        }
        other => other.clone(),
    };
    let (pos_lo, pos_hi) = d.positive_span();
    let (neg_lo, neg_hi) = d.negative_span();
    match (d.side(x), &raw) {
        (Side::Positive, TruthValue::Middle) => pos_lo,
        (Side::Positive, TruthValue::Top) => pos_hi,
        (Side::Negative, TruthValue::Middle) => neg_hi,
        (Side::Negative, TruthValue::Bottom) => neg_lo,
        _ => d.level_of(&raw).expect("construction stays within the length limit"),
    }
}

fn class_bounds(alg: &HedgeAlgebra) -> (i32, i32) {
    let (p, q) = alg.class_sizes();
    (p as i32, q as i32)
}

fn hedge_at(alg: &HedgeAlgebra, r: i32) -> Option<HedgeId> {
    alg.at_position(r).expect("position within [-q, p]")
}

/// Unclamped `h_r⁻(x)` for `x ∈ H(c⁺)` given as hedges outermost-first.
fn positive(alg: &HedgeAlgebra, r: i32, hedges: &[HedgeId]) -> TruthValue {
    let (p, q) = class_bounds(alg);
    let Some((&h_s, sigma)) = hedges.split_last() else {
        return if r.abs() <= p.min(q) {
            TruthValue::term(hedge_at(alg, -r).into_iter().collect(), Primary::Positive)
        } else if r > q {
            TruthValue::Middle
        } else {
            TruthValue::Top
        };
    };
    let s = alg.position(Some(h_s));
    if r == s {
        return TruthValue::primary(Primary::Positive);
    }
    let d = s - r;
    if d < -q {
        return TruthValue::Middle;
    }
    if d > p {
        return TruthValue::Top;
    }
    let h_d = hedge_at(alg, d).expect("d ≠ 0 since r ≠ s");
    let top = hedge_at(alg, p).expect("p ≥ 1");
    let direction = |h: HedgeId| alg.sign_of(&[top, h], Primary::Positive);
    let mut out: Vec<HedgeId> = if direction(h_s) == direction(h_d) {
        sigma.to_vec()
    } else if let Some(&h_t) = sigma.last() {
        let t = alg.position(Some(h_t));
        vec![hedge_at(alg, (-t).clamp(-q, p)).expect("t ≠ 0")]
    } else {
        Vec::new()
    };
    out.push(h_d);
    TruthValue::term(out, Primary::Positive)
}
