use std::collections::{BTreeSet, HashMap};
use std::fmt;

use super::ast::{Atom, Body, Pos, Program, Term, Var};
use crate::connectives::Implication;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiagnosticKind {
    /// Two statements with the same logical part (up to variable renaming)
    /// but different truth values.
    DuplicateLogicalPart { first: Pos },
    /// A head variable absent from the body (safe mode only).
    UnsafeVariable(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub pos: Pos,
    pub kind: DiagnosticKind,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            DiagnosticKind::DuplicateLogicalPart { first } => write!(
                f,
                "{}: same logical part as the statement at {} but a different truth value",
                self.pos, first
            ),
            DiagnosticKind::UnsafeVariable(v) => {
                write!(f, "{}: head variable {v} does not occur in the body", self.pos)
            }
        }
    }
}

#[derive(Debug, PartialEq, Eq, Hash)]
enum Key {
    Fact(Atom),
    Rule(Atom, Implication, Body),
}

/// Renames variables to `V0, V1, …` in order of first occurrence.
struct Canon(HashMap<Var, Var>);

impl Canon {
    fn atom(&mut self, a: &Atom) -> Atom {
        let args = a
            .args
            .iter()
            .map(|t| match t {
                Term::Var(v) => {
                    let n = self.0.len();
                    Term::Var(self.0.entry(v.clone()).or_insert_with(|| Var::new(&format!("V{n}"))).clone())
                }
                c => c.clone(),
            })
            .collect();
        Atom { pred: a.pred.clone(), args }
    }
}

/// Checks the program invariants; never fails, returns what it finds.
pub fn validate_program(p: &Program, safe: bool) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    let mut seen: HashMap<Key, (Pos, crate::domain::Level)> = HashMap::new();
    let mut note = |key: Key, pos: Pos, tv, out: &mut Vec<Diagnostic>| match seen.get(&key) {
        Some(&(first, prev)) if prev != tv => {
            out.push(Diagnostic { pos, kind: DiagnosticKind::DuplicateLogicalPart { first } })
        }
        Some(_) => {}
        None => {
            seen.insert(key, (pos, tv));
        }
    };
    for f in &p.facts {
        let key = Key::Fact(Canon(HashMap::new()).atom(&f.atom));
        note(key, f.pos, f.tv, &mut out);
    }
    for r in &p.rules {
        let mut c = Canon(HashMap::new());
        let head = c.atom(&r.head);
        let body = r.body.map(&mut |a| c.atom(a));
        note(Key::Rule(head, r.imp, body), r.pos, r.tv, &mut out);

        if safe {
            let body_vars: BTreeSet<&Var> = r.body.atoms().into_iter().flat_map(|a| a.vars()).collect();
            let mut reported = BTreeSet::new();
            for v in r.head.vars() {
                if !body_vars.contains(v) && reported.insert(v) {
                    out.push(Diagnostic { pos: r.pos, kind: DiagnosticKind::UnsafeVariable(v.to_string()) });
                }
            }
        }
    }
    out.sort_by_key(|d| d.pos);
    out
}
