//! Goal words: expressions over atoms, truth values and truth functions.

use std::fmt::Write;

use super::subst::Subst;
use super::threshold::{next_threshold, ThresholdContext};
use crate::algebra::HedgeId;
use crate::connectives::{Connective, Implication};
use crate::domain::Level;
use crate::lang::{Atom, Body, Term, Var};
use crate::TruthSpace;

/// An atom still to be resolved, with the least value it must reach for the
/// derivation to stay above the query threshold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Goal {
    pub atom: Atom,
    pub threshold: Level,
    /// Number of rule applications above this atom.
    pub depth: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Word {
    Atom(Goal),
    Value(Level),
    Op(Connective, Vec<Word>),
    /// A hedge of the body formula, before it is turned into `h⁻`.
    Hedge(HedgeId, Box<Word>),
    Inverse(HedgeId, Box<Word>),
    TNorm(Implication, Box<Word>, Level),
}

impl Word {
    /// Builds the word for a rule body, renaming variables to generation `gen`
    /// and propagating `threshold` to the atoms. `None` if some hedge makes
    /// the threshold unreachable.
    pub fn from_body(body: &Body, threshold: Level, depth: u32, gen: u32, space: &TruthSpace) -> Option<Word> {
        Some(match body {
            Body::Atom(a) => Word::Atom(Goal { atom: rename(a, gen), threshold, depth }),
            Body::Op(op, cs) => {
                let ctx = match op {
                    Connective::ConjG => ThresholdContext::ConjG,
                    Connective::ConjL => ThresholdContext::ConjL,
                    Connective::Disj => ThresholdContext::Disj,
                };
                let t = next_threshold(space, threshold, ctx)?;
                let children = cs
                    .iter()
                    .map(|c| Word::from_body(c, t, depth, gen, space))
                    .collect::<Option<Vec<_>>>()?;
                Word::Op(*op, children)
            }
            Body::Hedge(h, b) => {
                let t = next_threshold(space, threshold, ThresholdContext::Hedge(*h))?;
                Word::Hedge(*h, Box::new(Word::from_body(b, t, depth, gen, space)?))
            }
        })
    }

    pub fn leftmost_atom(&self) -> Option<&Goal> {
        match self {
            Word::Atom(g) => Some(g),
            Word::Value(_) => None,
            Word::Op(_, cs) => cs.iter().find_map(Word::leftmost_atom),
            Word::Hedge(_, b) | Word::Inverse(_, b) | Word::TNorm(_, b, _) => b.leftmost_atom(),
        }
    }

    pub fn leftmost_atom_mut(&mut self) -> Option<&mut Word> {
        if matches!(self, Word::Atom(_)) {
            return Some(self);
        }
        match self {
            Word::Op(_, cs) => cs.iter_mut().find_map(Word::leftmost_atom_mut),
            Word::Hedge(_, b) | Word::Inverse(_, b) | Word::TNorm(_, b, _) => b.leftmost_atom_mut(),
            _ => None,
        }
    }

    /// Rule 3 on the leftmost hedge node; false if there is none.
    pub fn expand_hedge(&mut self) -> bool {
        match self {
            Word::Hedge(h, b) => {
                let inner = std::mem::replace(&mut **b, Word::Value(Level::BOTTOM));
                *self = Word::Inverse(*h, Box::new(inner));
                true
            }
            Word::Op(_, cs) => cs.iter_mut().any(Word::expand_hedge),
            Word::Inverse(_, b) | Word::TNorm(_, b, _) => b.expand_hedge(),
            Word::Atom(_) | Word::Value(_) => false,
        }
    }

    pub fn apply(&mut self, s: &Subst) {
        if s.is_empty() {
            return;
        }
        match self {
            Word::Atom(g) => g.atom = s.apply_atom(&g.atom),
            Word::Value(_) => {}
            Word::Op(_, cs) => cs.iter_mut().for_each(|c| c.apply(s)),
            Word::Hedge(_, b) | Word::Inverse(_, b) | Word::TNorm(_, b, _) => b.apply(s),
        }
    }

    pub fn vars(&self, out: &mut Vec<Var>) {
        match self {
            Word::Atom(g) => out.extend(g.atom.vars().cloned()),
            Word::Value(_) => {}
            Word::Op(_, cs) => cs.iter().for_each(|c| c.vars(out)),
            Word::Hedge(_, b) | Word::Inverse(_, b) | Word::TNorm(_, b, _) => b.vars(out),
        }
    }

    /// Rule 5: the value of an atom-free word. `None` while atoms remain.
    pub fn eval(&self, space: &TruthSpace) -> Option<Level> {
        Some(match self {
            Word::Atom(_) => return None,
            Word::Value(v) => *v,
            Word::Op(op, cs) => {
                let vals = cs.iter().map(|c| c.eval(space)).collect::<Option<Vec<_>>>()?;
                op.fold(vals, space.top())
            }
            Word::Hedge(h, b) | Word::Inverse(h, b) => space.inverse().apply(Some(*h), b.eval(space)?),
            Word::TNorm(imp, b, r) => imp.t_norm(b.eval(space)?, *r, space.top()),
        })
    }

    /// Replaces every atom-free proper subword by its value, so that a word
    /// stays proportional to the atoms still open. Returns whether `self` is
    /// atom-free.
    pub fn fold_closed(&mut self, space: &TruthSpace) -> bool {
        fn fold(w: &mut Word, space: &TruthSpace) {
            if !w.fold_closed(space) || matches!(w, Word::Value(_)) {
                return;
            }
            *w = Word::Value(w.eval(space).expect("atom-free"));
        }
        match self {
            Word::Atom(_) => false,
            Word::Value(_) => true,
            Word::Op(_, cs) => {
                let mut closed = true;
                for c in cs.iter_mut() {
                    fold(c, space);
                    closed &= matches!(c, Word::Value(_));
                }
                closed
            }
            Word::Hedge(_, b) | Word::Inverse(_, b) | Word::TNorm(_, b, _) => {
                fold(b, space);
                matches!(**b, Word::Value(_))
            }
        }
    }

    /// Notation close to the textbook one, e.g.
    /// `C_G(and_g(V⁻(st_hd(ann)), P⁻(hira_un(ann))), VMtrue)`.
    pub fn render(&self, space: &TruthSpace) -> String {
        let mut out = String::new();
        self.render_into(space, &mut out);
        out
    }

    fn render_into(&self, space: &TruthSpace, out: &mut String) {
        let alg = space.algebra();
        let short = |h: &HedgeId| {
            let hd = alg.hedge(*h);
            hd.abbrev.clone().unwrap_or_else(|| hd.name.clone())
        };
        match self {
            Word::Atom(g) => write!(out, "{}", g.atom).unwrap(),
            Word::Value(v) => out.push_str(&alg.format_short(space.domain().value(*v))),
            Word::Op(op, cs) => {
                write!(out, "{}(", op.keyword()).unwrap();
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        out.push_str(", ");
                    }
                    c.render_into(space, out);
                }
                out.push(')');
            }
            Word::Hedge(h, b) => {
                write!(out, "{} ", short(h)).unwrap();
                b.render_into(space, out);
            }
            Word::Inverse(h, b) => {
                write!(out, "{}⁻(", short(h)).unwrap();
                b.render_into(space, out);
                out.push(')');
            }
            Word::TNorm(imp, b, r) => {
                write!(out, "C_{imp}(").unwrap();
                b.render_into(space, out);
                write!(out, ", {})", alg.format_short(space.domain().value(*r))).unwrap();
            }
        }
    }
}

pub(crate) fn rename(a: &Atom, gen: u32) -> Atom {
    if gen == 0 {
        return a.clone();
    }
    let args = a
        .args
        .iter()
        .map(|t| match t {
            Term::Var(v) => Term::Var(Var { name: v.name.clone(), gen }),
            c => c.clone(),
        })
        .collect();
    Atom { pred: a.pred.clone(), args }
}
