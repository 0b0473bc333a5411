//! Translation of programs into plain Prolog clauses.
//!
//! Truth values become their domain indices. Every atom gets one extra
//! argument holding its truth value; rule bodies call the body atoms first,
//! then the connectives and inverse mappings over their results, and finally
//! the t-norm of the implication:
//!
//! ```text
//! gd_em(X,_TV0) :- st_hd(X,_TV1), inv_map(v,_TV1,_TV2), hira_un(X,_TV3),
//!     inv_map(p,_TV3,_TV4), and_luka(_TV2,_TV4,_TV5), and_godel(_TV5,38,_TV0).
//! ```

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write;

use crate::algebra::HedgeAlgebra;
use crate::connectives::{Connective, Implication};
use crate::domain::Level;
use crate::lang::{Atom, Body, Program, Term};
use crate::TruthSpace;

/// Name of the truth argument in compiled queries.
pub const TRUTH_VAR: &str = "Truth_value";

/// Clause text for a whole program, preamble included.
pub fn compile_program(p: &Program) -> String {
    let mut out = preamble(&p.space);
    let hedges = hedge_atoms(p.space.algebra());
    let mut defined: BTreeSet<(&str, usize)> = p.facts.iter().map(|f| (&*f.atom.pred, f.atom.args.len())).collect();
    defined.extend(p.rules.iter().map(|r| (&*r.head.pred, r.head.args.len())));
    let undefined: BTreeSet<(&str, usize)> = p
        .rules
        .iter()
        .flat_map(|r| r.body.atoms())
        .map(|a| (&*a.pred, a.args.len()))
        .filter(|k| !defined.contains(k))
        .collect();
    // called but never defined: fail instead of raising an existence error
    if !undefined.is_empty() {
        out.push('\n');
    }
    for (pred, arity) in undefined {
        writeln!(out, ":- dynamic({}/{}).", quote(pred), arity + 1).unwrap();
    }
    if !p.rules.is_empty() {
        out.push('\n');
    }
    for r in &p.rules {
        let mut c = Clause { calls: Vec::new(), next: 1, hedges: &hedges };
        let tv = c.body(&r.body);
        let t_norm = match r.imp {
            Implication::Godel => "and_godel",
            Implication::Lukasiewicz => "and_luka",
        };
        c.calls.push(format!("{t_norm}({tv},{},_TV0)", r.tv.0));
        writeln!(out, "{} :- {}.", atom(&r.head, "_TV0"), c.calls.join(", ")).unwrap();
    }
    if !p.facts.is_empty() {
        out.push('\n');
    }
    for f in &p.facts {
        writeln!(out, "{}.", atom(&f.atom, &f.tv.0.to_string())).unwrap();
    }
    out
}

/// `?- p(…,Truth_value).`
pub fn compile_query(q: &Atom) -> String {
    format!("?- {}.", atom(q, TRUTH_VAR))
}

/// Index header, truth functions and the `inv_map/3` table.
pub fn preamble(space: &TruthSpace) -> String {
    let d = space.domain();
    let n = space.top().0;
    let mut out = String::new();
    for l in d.levels() {
        writeln!(out, "% {l} = {}", d.literal(l)).unwrap();
    }
    out.push('\n');
    out.push_str("and_godel(X,Y,Z) :- (X=<Y,Z=X;X>Y,Z=Y).\n");
    writeln!(out, "and_luka(X,Y,Z) :- H is X+Y-{n},(H=<0,Z=0;H>0,Z=H).").unwrap();
    out.push_str("or_godel(X,Y,Z) :- (X=<Y,Z=Y;X>Y,Z=X).\n\n");
    let fixed = [Level::BOTTOM, d.middle(), d.top()];
    let hedges = hedge_atoms(space.algebra());
    for x in d.levels() {
        if fixed.contains(&x) {
            writeln!(out, "inv_map(H,{0},{0}).", x.0).unwrap();
            continue;
        }
        for (h, name) in space.algebra().hedge_ids().zip(&hedges) {
            writeln!(out, "inv_map({name},{},{}).", x.0, space.inverse().apply(Some(h), x).0).unwrap();
        }
    }
    out
}

/// Prolog atoms naming the hedges: lowercased abbreviations when these are
/// distinct, otherwise the hedge names.
pub fn hedge_atoms(alg: &HedgeAlgebra) -> Vec<String> {
    let short: Vec<String> = alg
        .hedges()
        .iter()
        .map(|h| h.abbrev.as_deref().unwrap_or(&h.name).to_lowercase())
        .collect();
    let distinct = short.iter().collect::<HashSet<_>>().len() == short.len();
    let names = if distinct { short } else { alg.hedges().iter().map(|h| h.name.clone()).collect() };
    names.iter().map(|s| quote(s)).collect()
}

struct Clause<'a> {
    calls: Vec<String>,
    next: usize,
    hedges: &'a [String],
}

impl Clause<'_> {
    fn fresh(&mut self) -> String {
        let v = format!("_TV{}", self.next);
        self.next += 1;
        v
    }

    /// Emits the calls computing `b` and returns the variable holding its value.
    fn body(&mut self, b: &Body) -> String {
        match b {
            Body::Atom(a) => {
                let v = self.fresh();
                self.calls.push(atom(a, &v));
                v
            }
            Body::Hedge(h, inner) => {
                let x = self.body(inner);
                let v = self.fresh();
                self.calls.push(format!("inv_map({},{x},{v})", self.hedges[h.index()]));
                v
            }
            Body::Op(op, cs) => {
                let name = match op {
                    Connective::ConjG => "and_godel",
                    Connective::ConjL => "and_luka",
                    Connective::Disj => "or_godel",
                };
                let mut acc = self.body(&cs[0]);
                for c in &cs[1..] {
                    let y = self.body(c);
                    let v = self.fresh();
                    self.calls.push(format!("{name}({acc},{y},{v})"));
                    acc = v;
                }
                acc
            }
        }
    }
}

fn atom(a: &Atom, extra: &str) -> String {
    let mut args: Vec<String> = a.args.iter().map(term).collect();
    args.push(extra.to_string());
    format!("{}({})", quote(&a.pred), args.join(","))
}

fn term(t: &Term) -> String {
    match t {
        Term::Const(c) => quote(c),
        Term::Var(v) => {
            let s = v.to_string();
            // keep clear of the generated truth variables
            if s.starts_with("_TV") || s == TRUTH_VAR {
                format!("U{s}")
            } else {
                s
            }
        }
    }
}

/// An atom as Prolog text, quoted unless it is a plain name or a number.
fn quote(s: &str) -> String {
    let mut cs = s.chars();
    let plain = matches!(cs.next(), Some(c) if c.is_ascii_lowercase())
        && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    let number = !s.is_empty() && s.chars().all(|c| c.is_ascii_digit());
    if plain || number {
        s.to_string()
    } else {
        format!("'{}'", s.replace('\\', "\\\\").replace('\'', "\\'"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{default_space, parse_program, parse_query};

    fn compile(text: &str) -> String {
        compile_program(&parse_program(text, &default_space()).unwrap())
    }

    #[test]
    fn worked_rule() {
        let out = compile(
            "gd_em(X) <-g and_l(#very(st_hd(X)), #probably(hira_un(X))) : very more true.
             hira_un(ann) : very true. st_hd(ann) : more true.",
        );
        assert!(out.contains(
            "gd_em(X,_TV0) :- st_hd(X,_TV1), inv_map(v,_TV1,_TV2), hira_un(X,_TV3), \
             inv_map(p,_TV3,_TV4), and_luka(_TV2,_TV4,_TV5), and_godel(_TV5,38,_TV0).\n"
        ));
        assert!(out.contains("hira_un(ann,41).\nst_hd(ann,36).\n"));
        assert!(out.contains("inv_map(v,33,25).\n"));
        assert!(out.contains("inv_map(l,17,21).\n"));
        assert!(out.contains("inv_map(H,22,22).\n"));
        assert!(out.contains("and_luka(X,Y,Z) :- H is X+Y-44,(H=<0,Z=0;H>0,Z=H).\n"));
    }

    #[test]
    fn nary_and_disjunction() {
        let out = compile("p(X) <-l or(q(X), r(X), s) : true.");
        assert!(out.contains(
            "p(X,_TV0) :- q(X,_TV1), r(X,_TV2), or_godel(_TV1,_TV2,_TV3), s(_TV4), \
             or_godel(_TV3,_TV4,_TV5), and_luka(_TV5,33,_TV0).\n"
        ));
    }

    #[test]
    fn facts_only() {
        let out = compile("p(a) : true.");
        assert!(out.ends_with("inv_map(H,44,44).\n\np(a,33).\n"));
        assert!(!out.contains(":- p"));
    }

    #[test]
    fn undefined_predicates_are_dynamic() {
        let out = compile("p(X) <-g and_g(q(X), r) : true. q(a) : true.");
        assert!(out.contains("\n\n:- dynamic(r/1).\n\np(X,_TV0) :- "));
        assert!(!compile("p <-g q : true. q : true.").contains("dynamic"));
    }

    #[test]
    fn queries() {
        assert_eq!(compile_query(&parse_query("gd_em(X)").unwrap()), "?- gd_em(X,Truth_value).");
        assert_eq!(compile_query(&parse_query("p(a)").unwrap()), "?- p(a,Truth_value).");
        assert_eq!(compile_query(&parse_query("p(X, Y)").unwrap()), "?- p(X,Y,Truth_value).");
        assert_eq!(compile_query(&parse_query("p(Truth_value)").unwrap()), "?- p(UTruth_value,Truth_value).");
    }

    #[test]
    fn table_has_every_entry() {
        let out = compile("");
        let rows = out.lines().filter(|l| l.starts_with("inv_map(")).count();
        assert_eq!(rows, 3 + 42 * 4);
    }
}
