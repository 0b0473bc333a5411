//! Linear symmetric hedge algebras and their term comparison.
//!
//! A [`HedgeAlgebra`] is built from a [`HedgeAlgebraSpec`] that names the two
//! primary terms, the hedges with their class (H⁺ or H⁻) and strength rank,
//! the complete positivity relation between hedges, and the length limit `l`.
//! Terms ([`TruthValue`]) are hedge strings over `c⁻`/`c⁺` plus the three
//! constants `0`, `W` and `1`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

/// Largest domain the enumerator is willing to materialise.
pub const MAX_DOMAIN_SIZE: usize = 1 << 20;

/// Index of a hedge in declaration order within its algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HedgeId(pub(crate) u16);

impl HedgeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// H⁺ (hedges that raise `c⁺`) or H⁻ (hedges that lower it).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HedgeClass {
    Positive,
    Negative,
}

impl fmt::Display for HedgeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HedgeClass::Positive => f.write_str("+"),
            HedgeClass::Negative => f.write_str("-"),
        }
    }
}

/// Whether one hedge strengthens (positive) or weakens (negative) another.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Polarity {
    Positive,
    Negative,
}

impl Polarity {
    fn factor(self) -> i8 {
        match self {
            Polarity::Positive => 1,
            Polarity::Negative => -1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Primary {
    Negative,
    Positive,
}

impl Primary {
    pub fn opposite(self) -> Primary {
        match self {
            Primary::Negative => Primary::Positive,
            Primary::Positive => Primary::Negative,
        }
    }
}

/// Result of the sign function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Minus => -1,
            Sign::Zero => 0,
            Sign::Plus => 1,
        }
    }

    fn from_i8(v: i8) -> Sign {
        match v.signum() {
            -1 => Sign::Minus,
            0 => Sign::Zero,
            _ => Sign::Plus,
        }
    }
}

/// A linguistic truth value: one of the three constants or a hedge string
/// applied to a primary term. `hedges[0]` is the outermost hedge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TruthValue {
    Bottom,
    Middle,
    Top,
    Term { hedges: Vec<HedgeId>, primary: Primary },
}

impl TruthValue {
    pub fn primary(primary: Primary) -> TruthValue {
        TruthValue::Term { hedges: Vec::new(), primary }
    }

    pub fn term(hedges: Vec<HedgeId>, primary: Primary) -> TruthValue {
        TruthValue::Term { hedges, primary }
    }

    pub fn is_constant(&self) -> bool {
        !matches!(self, TruthValue::Term { .. })
    }

    /// Number of hedges in the string (0 for constants).
    pub fn hedge_len(&self) -> usize {
        match self {
            TruthValue::Term { hedges, .. } => hedges.len(),
            _ => 0,
        }
    }

    fn rank(&self) -> u8 {
        match self {
            TruthValue::Bottom => 0,
            TruthValue::Term { primary: Primary::Negative, .. } => 1,
            TruthValue::Middle => 2,
            TruthValue::Term { primary: Primary::Positive, .. } => 3,
            TruthValue::Top => 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HedgeDecl {
    pub name: String,
    pub class: HedgeClass,
    /// Strength within the class; a higher rank modifies more.
    pub rank: u32,
    /// Optional short symbol (e.g. `V`), accepted wherever the name is.
    pub abbrev: Option<String>,
}

/// Unvalidated description of a linear symmetric hedge algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HedgeAlgebraSpec {
    /// Names of `c⁻` and `c⁺`.
    pub primaries: (String, String),
    pub hedges: Vec<HedgeDecl>,
    /// `(h', h, p)`: `h'` has polarity `p` with respect to `h`.
    pub positivity: Vec<(String, String, Polarity)>,
    pub limit: usize,
    /// Reject hedge applications past the limit instead of clamping.
    pub strict: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("primary terms must have distinct non-empty names")]
    BadPrimaries,
    #[error("duplicate hedge name `{0}`")]
    DuplicateHedge(String),
    #[error("hedge name `{0}` collides with a primary or reserved word")]
    ReservedName(String),
    #[error("hedges `{0}` and `{1}` share rank {2} in class {3}")]
    DuplicateRank(String, String, u32, HedgeClass),
    #[error("hedge `{0}` has rank 0; ranks are positive")]
    ZeroRank(String),
    #[error("positivity entry references undeclared hedge `{0}`")]
    UndeclaredInPositivity(String),
    #[error("missing positivity entry for `{0}` w.r.t. `{1}`")]
    MissingPolarity(String, String),
    #[error("positivity of `{0}` w.r.t. `{1}` is given more than once")]
    RepeatedPolarity(String, String),
    #[error("class {0} is empty while class {1} is not")]
    EmptyClass(HedgeClass, HedgeClass),
    #[error("`{0}` and `{1}` are in the same class but differ in polarity w.r.t. `{2}`")]
    IncompatiblePolarity(String, String, String),
    #[error("`{0}` and `{1}` are in opposite classes but agree in polarity w.r.t. `{2}`")]
    ConversePolarity(String, String, String),
    #[error("domain for limit {0} would exceed {MAX_DOMAIN_SIZE} values")]
    DomainTooLarge(usize),
    #[error("hedge id {0} is not declared in this algebra")]
    UnknownHedge(u16),
    #[error("applying `{0}` would exceed the length limit {1}")]
    LimitExceeded(String, usize),
}

/// Every violation found while validating a spec.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct AlgebraErrors(pub Vec<AlgebraError>);

impl fmt::Display for AlgebraErrors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

pub(crate) const RESERVED_LITERALS: [&str; 3] = ["absfalse", "middle", "abstrue"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hedge {
    pub name: String,
    pub class: HedgeClass,
    pub rank: u32,
    pub abbrev: Option<String>,
}

/// A validated linear symmetric hedge algebra with length limit `l`.
#[derive(Debug, Clone)]
pub struct HedgeAlgebra {
    primaries: [String; 2],
    hedges: Vec<Hedge>,
    /// `polarity[h'][h]`
    polarity: Vec<Vec<Polarity>>,
    /// Signed position under the extended ordering; `I` sits at 0.
    position: Vec<i32>,
    /// `by_position[r + q]` is the hedge at position `r`, `None` for `I`.
    by_position: Vec<Option<HedgeId>>,
    p: usize,
    q: usize,
    limit: usize,
    strict: bool,
    names: HashMap<String, HedgeId>,
}

impl HedgeAlgebra {
    pub fn new(spec: HedgeAlgebraSpec) -> Result<HedgeAlgebra, AlgebraErrors> {
        let mut errors = Vec::new();
        let (neg, pos) = (spec.primaries.0.trim(), spec.primaries.1.trim());
        if neg.is_empty() || pos.is_empty() || neg == pos {
            errors.push(AlgebraError::BadPrimaries);
        }

        let mut names: HashMap<String, HedgeId> = HashMap::new();
        for (i, h) in spec.hedges.iter().enumerate() {
            let id = HedgeId(i as u16);
            let mut aliases = vec![h.name.clone()];
            aliases.extend(h.abbrev.iter().cloned());
            for alias in aliases {
                if alias == neg || alias == pos || RESERVED_LITERALS.contains(&alias.as_str()) {
                    errors.push(AlgebraError::ReservedName(alias));
                } else if names.insert(alias.clone(), id).is_some() {
                    errors.push(AlgebraError::DuplicateHedge(alias));
                }
            }
            if h.rank == 0 {
                errors.push(AlgebraError::ZeroRank(h.name.clone()));
            }
        }

        // Linear order inside each class by rank.
        let mut positives = Vec::new();
        let mut negatives = Vec::new();
        for (i, h) in spec.hedges.iter().enumerate() {
            match h.class {
                HedgeClass::Positive => positives.push(i),
                HedgeClass::Negative => negatives.push(i),
            }
        }
        for class in [&mut positives, &mut negatives] {
            class.sort_by_key(|&i| spec.hedges[i].rank);
            for w in class.windows(2) {
                let (a, b) = (&spec.hedges[w[0]], &spec.hedges[w[1]]);
                if a.rank == b.rank {
                    errors.push(AlgebraError::DuplicateRank(
                        a.name.clone(),
                        b.name.clone(),
                        a.rank,
                        a.class,
                    ));
                }
            }
        }
        if positives.is_empty() != negatives.is_empty() {
            let (empty, other) = if positives.is_empty() {
                (HedgeClass::Positive, HedgeClass::Negative)
            } else {
                (HedgeClass::Negative, HedgeClass::Positive)
            };
            errors.push(AlgebraError::EmptyClass(empty, other));
        }

        // Positivity must be total: each ordered pair exactly once.
        let n = spec.hedges.len();
        let mut given: BTreeMap<(usize, usize), Polarity> = BTreeMap::new();
        let lookup = |name: &str| spec.hedges.iter().position(|h| h.name == name || h.abbrev.as_deref() == Some(name));
        for (a, b, pol) in &spec.positivity {
            match (lookup(a), lookup(b)) {
                (Some(i), Some(j)) => {
                    if given.insert((i, j), *pol).is_some() {
                        errors.push(AlgebraError::RepeatedPolarity(a.clone(), b.clone()));
                    }
                }
                (None, _) => errors.push(AlgebraError::UndeclaredInPositivity(a.clone())),
                (_, None) => errors.push(AlgebraError::UndeclaredInPositivity(b.clone())),
            }
        }
        let mut polarity = vec![vec![Polarity::Positive; n]; n];
        let mut complete = true;
        for i in 0..n {
            for j in 0..n {
                match given.get(&(i, j)) {
                    Some(p) => polarity[i][j] = *p,
                    None => {
                        complete = false;
                        errors.push(AlgebraError::MissingPolarity(
                            spec.hedges[i].name.clone(),
                            spec.hedges[j].name.clone(),
                        ));
                    }
                }
            }
        }

        // Compatible hedges act alike on every hedge; converse ones oppositely.
        if complete {
            for k in 0..n {
                for a in 0..n {
                    for b in (a + 1)..n {
                        let same_class = spec.hedges[a].class == spec.hedges[b].class;
                        let same_pol = polarity[a][k] == polarity[b][k];
                        let (ha, hb, hk) = (
                            spec.hedges[a].name.clone(),
                            spec.hedges[b].name.clone(),
                            spec.hedges[k].name.clone(),
                        );
                        if same_class && !same_pol {
                            errors.push(AlgebraError::IncompatiblePolarity(ha, hb, hk));
                        } else if !same_class && same_pol {
                            errors.push(AlgebraError::ConversePolarity(ha, hb, hk));
                        }
                    }
                }
            }
        }

        if domain_size(n, spec.limit).map_or(true, |s| s > MAX_DOMAIN_SIZE) {
            errors.push(AlgebraError::DomainTooLarge(spec.limit));
        }

        if !errors.is_empty() {
            return Err(AlgebraErrors(errors));
        }

        let (p, q) = (positives.len(), negatives.len());
        let mut position = vec![0i32; n];
        let mut by_position = vec![None; p + q + 1];
        for (k, &i) in positives.iter().enumerate() {
            position[i] = k as i32 + 1;
            by_position[q + k + 1] = Some(HedgeId(i as u16));
        }
        for (k, &i) in negatives.iter().enumerate() {
            position[i] = -(k as i32 + 1);
            by_position[q - k - 1] = Some(HedgeId(i as u16));
        }

        Ok(HedgeAlgebra {
            primaries: [neg.to_string(), pos.to_string()],
            hedges: spec
                .hedges
                .into_iter()
                .map(|h| Hedge { name: h.name, class: h.class, rank: h.rank, abbrev: h.abbrev })
                .collect(),
            polarity,
            position,
            by_position,
            p,
            q,
            limit: spec.limit,
            strict: spec.strict,
            names,
        })
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    pub fn hedges(&self) -> &[Hedge] {
        &self.hedges
    }

    pub fn hedge_ids(&self) -> impl Iterator<Item = HedgeId> + '_ {
        (0..self.hedges.len()).map(|i| HedgeId(i as u16))
    }

    pub fn hedge(&self, id: HedgeId) -> &Hedge {
        &self.hedges[id.index()]
    }

    pub fn check(&self, id: HedgeId) -> Result<(), AlgebraError> {
        if id.index() < self.hedges.len() {
            Ok(())
        } else {
            Err(AlgebraError::UnknownHedge(id.0))
        }
    }

    /// Looks a hedge up by name or abbreviation.
    pub fn find_hedge(&self, name: &str) -> Option<HedgeId> {
        self.names.get(name).copied()
    }

    pub fn primary_name(&self, primary: Primary) -> &str {
        match primary {
            Primary::Negative => &self.primaries[0],
            Primary::Positive => &self.primaries[1],
        }
    }

    /// Number of hedges in H⁺ and H⁻.
    pub fn class_sizes(&self) -> (usize, usize) {
        (self.p, self.q)
    }

    /// Signed position of a hedge (or the identity, `None`) under `≤ₑ`.
    pub fn position(&self, h: Option<HedgeId>) -> i32 {
        h.map_or(0, |h| self.position[h.index()])
    }

    /// Hedge at signed position `r`; `Some(None)` is the identity.
    pub fn at_position(&self, r: i32) -> Option<Option<HedgeId>> {
        let idx = r + self.q as i32;
        if idx < 0 {
            return None;
        }
        self.by_position.get(idx as usize).copied()
    }

    /// Hedges and the identity ascending under `≤ₑ`.
    pub fn extended_order(&self) -> Vec<Option<HedgeId>> {
        self.by_position.clone()
    }

    /// `≤ₑ` comparison on `H ∪ {I}`.
    pub fn cmp_extended(&self, a: Option<HedgeId>, b: Option<HedgeId>) -> Ordering {
        self.position(a).cmp(&self.position(b))
    }

    pub fn polarity(&self, outer: HedgeId, inner: HedgeId) -> Polarity {
        self.polarity[outer.index()][inner.index()]
    }

    fn greatest(&self) -> Option<HedgeId> {
        self.by_position.last().copied().flatten()
    }

    /// Number of values in the enumerated domain.
    pub fn domain_size(&self) -> usize {
        domain_size(self.hedges.len(), self.limit).unwrap_or(usize::MAX)
    }

    fn validate(&self, v: &TruthValue) -> Result<(), AlgebraError> {
        if let TruthValue::Term { hedges, .. } = v {
            for &h in hedges {
                self.check(h)?;
            }
        }
        Ok(())
    }

    pub fn sign(&self, v: &TruthValue) -> Result<Sign, AlgebraError> {
        self.validate(v)?;
        Ok(match v {
            TruthValue::Term { hedges, primary } => Sign::from_i8(self.sign_of(hedges, *primary)),
            _ => Sign::Zero,
        })
    }

    /// Sign of the term `hedges` (outermost first) over `primary`.
    ///
    /// The base case keeps the primary's sign for H⁺ hedges and flips it for
    /// H⁻ hedges, so that `Vc⁻ < c⁻` and `Pc⁻ > c⁻`. The recursive case
    /// multiplies by the polarity of each hedge w.r.t. the one beneath it.
    pub(crate) fn sign_of(&self, hedges: &[HedgeId], primary: Primary) -> i8 {
        let mut sign: i8 = match primary {
            Primary::Negative => -1,
            Primary::Positive => 1,
        };
        let mut inner: Option<HedgeId> = None;
        for &h in hedges.iter().rev() {
            sign *= match inner {
                None => match self.hedges[h.index()].class {
                    HedgeClass::Positive => 1,
                    HedgeClass::Negative => -1,
                },
                Some(k) => self.polarity(h, k).factor(),
            };
            inner = Some(h);
        }
        sign
    }

    /// Sign of `h z` where `z` is given innermost-first.
    fn sign_applied(&self, h: HedgeId, z_inner_first: &[HedgeId], primary: Primary) -> i8 {
        let mut base: i8 = match primary {
            Primary::Negative => -1,
            Primary::Positive => 1,
        };
        let mut inner: Option<HedgeId> = None;
        for &k in z_inner_first.iter().chain(std::iter::once(&h)) {
            base *= match inner {
                None => match self.hedges[k.index()].class {
                    HedgeClass::Positive => 1,
                    HedgeClass::Negative => -1,
                },
                Some(i) => self.polarity(k, i).factor(),
            };
            inner = Some(k);
        }
        base
    }

    pub fn compare(&self, x: &TruthValue, y: &TruthValue) -> Result<Ordering, AlgebraError> {
        self.validate(x)?;
        self.validate(y)?;
        Ok(self.cmp_values(x, y))
    }

    /// Total order on validated values.
    pub(crate) fn cmp_values(&self, x: &TruthValue, y: &TruthValue) -> Ordering {
        let by_region = x.rank().cmp(&y.rank());
        if by_region != Ordering::Equal {
            return by_region;
        }
        let (xs, ys, primary) = match (x, y) {
            (
                TruthValue::Term { hedges: xs, primary },
                TruthValue::Term { hedges: ys, .. },
            ) => (xs, ys, *primary),
            _ => return Ordering::Equal,
        };
        // Walk from the primary outwards to the first differing hedge.
        let xi: Vec<HedgeId> = xs.iter().rev().copied().collect();
        let yi: Vec<HedgeId> = ys.iter().rev().copied().collect();
        let common = xi.iter().zip(&yi).take_while(|(a, b)| a == b).count();
        if common == xi.len() && common == yi.len() {
            return Ordering::Equal;
        }
        let h = xi.get(common).copied();
        let k = yi.get(common).copied();
        let z = &xi[..common];
        let direction = match self.greatest() {
            Some(top) => self.sign_applied(top, z, primary),
            None => 1,
        };
        let ord = self.cmp_extended(h, k);
        if direction >= 0 {
            ord
        } else {
            ord.reverse()
        }
    }

    pub fn negate(&self, v: &TruthValue) -> TruthValue {
        match v {
            TruthValue::Bottom => TruthValue::Top,
            TruthValue::Top => TruthValue::Bottom,
            TruthValue::Middle => TruthValue::Middle,
            TruthValue::Term { hedges, primary } => TruthValue::Term {
                hedges: hedges.clone(),
                primary: primary.opposite(),
            },
        }
    }

    /// Prepends `h`; at the length limit the value is returned unchanged
    /// (or rejected in strict mode). `0`, `W`, `1` are fixed points.
    pub fn apply_hedge(&self, h: HedgeId, v: &TruthValue) -> Result<TruthValue, AlgebraError> {
        self.check(h)?;
        self.validate(v)?;
        match v {
            TruthValue::Term { hedges, primary } => {
                if hedges.len() >= self.limit {
                    if self.strict {
                        return Err(AlgebraError::LimitExceeded(
                            self.hedges[h.index()].name.clone(),
                            self.limit,
                        ));
                    }
                    return Ok(v.clone());
                }
                let mut out = Vec::with_capacity(hedges.len() + 1);
                out.push(h);
                out.extend_from_slice(hedges);
                Ok(TruthValue::Term { hedges: out, primary: *primary })
            }
            other => Ok(other.clone()),
        }
    }

    /// Renders a value as words, e.g. `very more true` or `absfalse`.
    pub fn format(&self, v: &TruthValue) -> String {
        match v {
            TruthValue::Bottom => RESERVED_LITERALS[0].to_string(),
            TruthValue::Middle => RESERVED_LITERALS[1].to_string(),
            TruthValue::Top => RESERVED_LITERALS[2].to_string(),
            TruthValue::Term { hedges, primary } => {
                let mut out = String::new();
                for h in hedges {
                    out.push_str(&self.hedges[h.index()].name);
                    out.push(' ');
                }
                out.push_str(self.primary_name(*primary));
                out
            }
        }
    }

    /// Compact notation: abbreviations glued together, e.g. `VMtrue`.
    pub fn format_short(&self, v: &TruthValue) -> String {
        match v {
            TruthValue::Term { hedges, primary } => {
                let mut out = String::new();
                for h in hedges {
                    let hd = &self.hedges[h.index()];
                    out.push_str(hd.abbrev.as_deref().unwrap_or(&hd.name));
                    if hd.abbrev.is_none() {
                        out.push(' ');
                    }
                }
                out.push_str(self.primary_name(*primary));
                out
            }
            other => self.format(other),
        }
    }

    /// Parses whitespace-separated words: hedges followed by a primary, or one
    /// of `absfalse`, `middle`, `abstrue`. Length is not checked here.
    pub fn parse_words<'a, I>(&self, words: I) -> Result<TruthValue, LiteralError>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let words: Vec<&str> = words.into_iter().collect();
        match words.as_slice() {
            [] => return Err(LiteralError::Empty),
            [w] if *w == RESERVED_LITERALS[0] => return Ok(TruthValue::Bottom),
            [w] if *w == RESERVED_LITERALS[1] => return Ok(TruthValue::Middle),
            [w] if *w == RESERVED_LITERALS[2] => return Ok(TruthValue::Top),
            _ => {}
        }
        let (last, init) = words.split_last().expect("non-empty");
        let primary = if *last == self.primaries[0] {
            Primary::Negative
        } else if *last == self.primaries[1] {
            Primary::Positive
        } else {
            return Err(LiteralError::MissingPrimary(last.to_string()));
        };
        let mut hedges = Vec::with_capacity(init.len());
        for w in init {
            match self.find_hedge(w) {
                Some(h) => hedges.push(h),
                None => return Err(LiteralError::UnknownHedge(w.to_string())),
            }
        }
        Ok(TruthValue::Term { hedges, primary })
    }

    pub fn parse_literal(&self, text: &str) -> Result<TruthValue, LiteralError> {
        self.parse_words(text.split_whitespace())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiteralError {
    #[error("empty truth literal")]
    Empty,
    #[error("truth literal must end in a primary term, found `{0}`")]
    MissingPrimary(String),
    #[error("unknown hedge `{0}` in truth literal")]
    UnknownHedge(String),
    #[error("truth literal `{0}` is not in the domain")]
    NotInDomain(String),
}

/// `2·Σ_{k=0}^{l} |H|^k + 3`, or `None` on overflow.
pub fn domain_size(hedges: usize, limit: usize) -> Option<usize> {
    if limit > MAX_DOMAIN_SIZE {
        return None;
    }
    let mut total: usize = 0;
    let mut power: usize = 1;
    for k in 0..=limit {
        if k > 0 {
            power = power.checked_mul(hedges)?;
        }
        total = total.checked_add(power)?;
    }
    total.checked_mul(2)?.checked_add(3)
}
