use std::collections::BTreeMap;
use std::fmt;

use crate::lang::{Atom, Term, Var};

/// An idempotent substitution.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Subst(BTreeMap<Var, Term>);

impl Subst {
    pub fn new() -> Subst {
        Subst::default()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, v: &Var) -> Option<&Term> {
        self.0.get(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Var, &Term)> {
        self.0.iter()
    }

    fn walk(&self, t: &Term) -> Term {
        let mut cur = t.clone();
        while let Term::Var(v) = &cur {
            match self.0.get(v) {
                Some(next) => cur = next.clone(),
                None => break,
            }
        }
        cur
    }

    pub fn apply_term(&self, t: &Term) -> Term {
        match t {
            Term::Var(v) => self.0.get(v).cloned().unwrap_or_else(|| t.clone()),
            c => c.clone(),
        }
    }

    pub fn apply_atom(&self, a: &Atom) -> Atom {
        if self.0.is_empty() {
            return a.clone();
        }
        Atom { pred: a.pred.clone(), args: a.args.iter().map(|t| self.apply_term(t)).collect() }
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Subst) -> Subst {
        let mut out: BTreeMap<Var, Term> =
            self.0.iter().map(|(v, t)| (v.clone(), other.apply_term(t))).collect();
        for (v, t) in &other.0 {
            out.entry(v.clone()).or_insert_with(|| t.clone());
        }
        out.retain(|v, t| *t != Term::Var(v.clone()));
        Subst(out)
    }
}

/// Bindings whose right-hand sides contain none of the bound variables.
impl FromIterator<(Var, Term)> for Subst {
    fn from_iter<I: IntoIterator<Item = (Var, Term)>>(iter: I) -> Subst {
        Subst(iter.into_iter().collect())
    }
}

impl fmt::Display for Subst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (v, t)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}={t}")?;
        }
        f.write_str("}")
    }
}

/// Most general unifier of two function-free atoms.
pub fn mgu(a: &Atom, b: &Atom) -> Option<Subst> {
    if a.pred != b.pred || a.args.len() != b.args.len() {
        return None;
    }
    let mut s = Subst::new();
    for (x, y) in a.args.iter().zip(&b.args) {
        let (x, y) = (s.walk(x), s.walk(y));
        if x == y {
            continue;
        }
        match (x, y) {
            (Term::Var(v), t) | (t, Term::Var(v)) => {
                s.0.insert(v, t);
            }
            (Term::Const(_), Term::Const(_)) => return None,
        }
    }
    let resolved: BTreeMap<Var, Term> = s.0.keys().map(|v| (v.clone(), s.walk(&Term::Var(v.clone())))).collect();
    Some(Subst(resolved))
}
