//! The finite, totally ordered linguistic truth domain `v₀ < … < vₙ`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::{HedgeAlgebra, HedgeId, LiteralError, Primary, TruthValue};

/// Position of a value in the enumerated domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Level(pub u32);

impl Level {
    pub const BOTTOM: Level = Level(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

#[derive(Debug, Clone)]
pub struct TruthDomain {
    algebra: Arc<HedgeAlgebra>,
    values: Vec<TruthValue>,
    index: HashMap<TruthValue, Level>,
    middle: Level,
}

impl TruthDomain {
    /// Enumerates every hedge string of length at most `l` over both primaries,
    /// adds `0`, `W`, `1`, and sorts with the algebra's comparator.
    pub fn enumerate(algebra: Arc<HedgeAlgebra>) -> TruthDomain {
        let hedges: Vec<HedgeId> = algebra.hedge_ids().collect();
        let mut strings: Vec<Vec<HedgeId>> = vec![Vec::new()];
        let mut frontier: Vec<Vec<HedgeId>> = vec![Vec::new()];
        for _ in 0..algebra.limit() {
            let mut next = Vec::with_capacity(frontier.len() * hedges.len());
            for s in &frontier {
                for &h in &hedges {
                    let mut t = Vec::with_capacity(s.len() + 1);
                    t.push(h);
                    t.extend_from_slice(s);
                    next.push(t);
                }
            }
            strings.extend(next.iter().cloned());
            frontier = next;
        }

        let mut values = Vec::with_capacity(2 * strings.len() + 3);
        values.push(TruthValue::Bottom);
        values.push(TruthValue::Middle);
        values.push(TruthValue::Top);
        for primary in [Primary::Negative, Primary::Positive] {
            for s in &strings {
                values.push(TruthValue::term(s.clone(), primary));
            }
        }
        values.sort_by(|a, b| algebra.cmp_values(a, b));

        let index: HashMap<TruthValue, Level> = values
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), Level(i as u32)))
            .collect();
        let middle = index[&TruthValue::Middle];
        TruthDomain { algebra, values, index, middle }
    }

    pub fn algebra(&self) -> &HedgeAlgebra {
        &self.algebra
    }

    pub fn algebra_arc(&self) -> &Arc<HedgeAlgebra> {
        &self.algebra
    }

    pub fn values(&self) -> &[TruthValue] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `n`, the level of `1`.
    pub fn top(&self) -> Level {
        Level(self.values.len() as u32 - 1)
    }

    pub fn middle(&self) -> Level {
        self.middle
    }

    pub fn levels(&self) -> impl DoubleEndedIterator<Item = Level> + ExactSizeIterator {
        (0..self.values.len() as u32).map(Level)
    }

    pub fn value(&self, level: Level) -> &TruthValue {
        &self.values[level.index()]
    }

    pub fn level_of(&self, value: &TruthValue) -> Option<Level> {
        self.index.get(value).copied()
    }

    pub fn negate(&self, level: Level) -> Level {
        self.index[&self.algebra.negate(self.value(level))]
    }

    /// Hedge application at the level of indices (clamped at the limit).
    pub fn apply_hedge(&self, h: HedgeId, level: Level) -> Level {
        match self.algebra.apply_hedge(h, self.value(level)) {
            Ok(v) => self.index[&v],
            Err(_) => level,
        }
    }

    pub fn parse_literal(&self, text: &str) -> Result<Level, LiteralError> {
        self.parse_words(text.split_whitespace())
    }

    pub fn parse_words<'a, I>(&self, words: I) -> Result<Level, LiteralError>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let words: Vec<&str> = words.into_iter().collect();
        let v = self.algebra.parse_words(words.iter().copied())?;
        self.level_of(&v).ok_or_else(|| LiteralError::NotInDomain(words.join(" ")))
    }

    /// Literal words, e.g. `probably true`.
    pub fn literal(&self, level: Level) -> String {
        self.algebra.format(self.value(level))
    }

    /// `probably true (v30)`
    pub fn format_value(&self, level: Level) -> String {
        format!("{} ({})", self.literal(level), level)
    }

    /// Smallest and largest levels on the `c⁺` side.
    pub fn positive_span(&self) -> (Level, Level) {
        (Level(self.middle.0 + 1), Level(self.top().0 - 1))
    }

    /// Smallest and largest levels on the `c⁻` side.
    pub fn negative_span(&self) -> (Level, Level) {
        (Level(1), Level(self.middle.0 - 1))
    }

    pub fn side(&self, level: Level) -> Side {
        match self.value(level) {
            TruthValue::Bottom | TruthValue::Middle | TruthValue::Top => Side::Fixed,
            TruthValue::Term { primary: Primary::Negative, .. } => Side::Negative,
            TruthValue::Term { primary: Primary::Positive, .. } => Side::Positive,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Negative,
    Fixed,
    Positive,
}
