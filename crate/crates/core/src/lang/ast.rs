use std::fmt;
use std::sync::Arc;

use crate::algebra::HedgeId;
use crate::connectives::{Connective, Implication};
use crate::domain::Level;
use crate::TruthSpace;

/// A variable; `gen` is 0 for variables written in the source and is bumped
/// when a rule is renamed apart during a derivation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    pub name: Arc<str>,
    pub gen: u32,
}

impl Var {
    pub fn new(name: &str) -> Var {
        Var { name: name.into(), gen: 0 }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gen == 0 {
            f.write_str(&self.name)
        } else {
            write!(f, "{}_{}", self.name, self.gen)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Const(Arc<str>),
    Var(Var),
}

impl Term {
    pub fn constant(name: &str) -> Term {
        Term::Const(name.into())
    }

    pub fn var(name: &str) -> Term {
        Term::Var(Var::new(name))
    }

    pub fn is_ground(&self) -> bool {
        matches!(self, Term::Const(_))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Const(c) => f.write_str(c),
            Term::Var(v) => v.fmt(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom {
    pub pred: Arc<str>,
    pub args: Vec<Term>,
}

impl Atom {
    pub fn new(pred: &str, args: Vec<Term>) -> Atom {
        Atom { pred: pred.into(), args }
    }

    pub fn arity(&self) -> usize {
        self.args.len()
    }

    pub fn is_ground(&self) -> bool {
        self.args.iter().all(Term::is_ground)
    }

    pub fn vars(&self) -> impl Iterator<Item = &Var> {
        self.args.iter().filter_map(|t| match t {
            Term::Var(v) => Some(v),
            Term::Const(_) => None,
        })
    }

    /// `name/arity`
    pub fn signature(&self) -> String {
        format!("{}/{}", self.pred, self.args.len())
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pred)?;
        if !self.args.is_empty() {
            f.write_str("(")?;
            for (i, a) in self.args.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                a.fmt(f)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Body formulas, generic over the leaf type so the fixpoint engine can use
/// interned ground atoms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Body<A = Atom> {
    Atom(A),
    Op(Connective, Vec<Body<A>>),
    Hedge(HedgeId, Box<Body<A>>),
}

impl<A> Body<A> {
    /// Leaves, left to right.
    pub fn atoms(&self) -> Vec<&A> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect<'a>(&'a self, out: &mut Vec<&'a A>) {
        match self {
            Body::Atom(a) => out.push(a),
            Body::Op(_, cs) => cs.iter().for_each(|c| c.collect(out)),
            Body::Hedge(_, b) => b.collect(out),
        }
    }

    pub fn map<B>(&self, f: &mut impl FnMut(&A) -> B) -> Body<B> {
        match self {
            Body::Atom(a) => Body::Atom(f(a)),
            Body::Op(op, cs) => Body::Op(*op, cs.iter().map(|c| c.map(f)).collect()),
            Body::Hedge(h, b) => Body::Hedge(*h, Box::new(b.map(f))),
        }
    }
}

/// 1-based source position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, PartialOrd, Ord)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

/// `head <-i body : tv.` Equality ignores the position.
#[derive(Debug, Clone)]
pub struct Rule {
    pub head: Atom,
    pub imp: Implication,
    pub body: Body,
    pub tv: Level,
    pub pos: Pos,
}

impl PartialEq for Rule {
    fn eq(&self, o: &Rule) -> bool {
        self.head == o.head && self.imp == o.imp && self.body == o.body && self.tv == o.tv
    }
}

impl Eq for Rule {}

/// `atom : tv.` Equality ignores the position.
#[derive(Debug, Clone)]
pub struct Fact {
    pub atom: Atom,
    pub tv: Level,
    pub pos: Pos,
}

impl PartialEq for Fact {
    fn eq(&self, o: &Fact) -> bool {
        self.atom == o.atom && self.tv == o.tv
    }
}

impl Eq for Fact {}

#[derive(Debug, Clone)]
pub struct Program {
    pub space: TruthSpace,
    /// Path given by a `use algebra "…".` directive, if any.
    pub algebra_path: Option<String>,
    pub rules: Vec<Rule>,
    pub facts: Vec<Fact>,
}

impl PartialEq for Program {
    fn eq(&self, o: &Program) -> bool {
        self.algebra_path == o.algebra_path && self.rules == o.rules && self.facts == o.facts
    }
}

impl Program {
    pub fn new(space: TruthSpace) -> Program {
        Program { space, algebra_path: None, rules: Vec::new(), facts: Vec::new() }
    }

    /// Every constant occurring in the program, sorted and deduplicated.
    pub fn constants(&self) -> Vec<Arc<str>> {
        let mut out: Vec<Arc<str>> = Vec::new();
        let mut push = |a: &Atom| {
            for t in &a.args {
                if let Term::Const(c) = t {
                    out.push(c.clone());
                }
            }
        };
        for f in &self.facts {
            push(&f.atom);
        }
        for r in &self.rules {
            push(&r.head);
            for a in r.body.atoms() {
                push(a);
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Predicate signatures `(name, arity)`, sorted.
    pub fn predicates(&self) -> Vec<(Arc<str>, usize)> {
        let mut out = Vec::new();
        for f in &self.facts {
            out.push((f.atom.pred.clone(), f.atom.arity()));
        }
        for r in &self.rules {
            out.push((r.head.pred.clone(), r.head.arity()));
            for a in r.body.atoms() {
                out.push((a.pred.clone(), a.arity()));
            }
        }
        out.sort();
        out.dedup();
        out
    }
}
