//! Fuzzy IF-THEN control rules as programs.
//!
//! A rule `IF x is A THEN y is B` becomes
//! `good(X,Y) <-g and_g(A(X), B(Y)) : λ`, where a hedged label such as
//! `very large` becomes `#very(large(X))`. The satisfaction degrees of the
//! primary labels are facts. `G(r,t) = M_P(good(r,t))` is the goodness
//! surface; for each input the best output maximises it.
//!
//! ```text
//! inputs: r1, r2
//! outputs: t1, t2
//! rule: very large => fast
//! rule: small => slow conf very true
//! sat large r1 more true
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::HedgeId;
use crate::connectives::{Connective, Implication};
use crate::domain::Level;
use crate::fixpoint::{ground, tp_apply, FixpointError, Interpretation};
use crate::lang::{Atom, Body, Fact, Pos, Program, Rule, Term};
use crate::TruthSpace;

pub const GOOD: &str = "good";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ControlError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("no satisfaction degree for {pred}({point})")]
    MissingEntry { pred: String, point: String },
    #[error("T_P^2(bottom) is not a fixpoint: {0}")]
    NotFixpoint(String),
    #[error(transparent)]
    Fixpoint(#[from] FixpointError),
}

/// A label such as `very large`: hedges outermost first, then a primary predicate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Label {
    pub hedges: Vec<HedgeId>,
    pub pred: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ControlRule {
    pub input: Label,
    pub output: Label,
    pub conf: Level,
}

#[derive(Debug, Clone)]
pub struct ControlSystem {
    pub space: TruthSpace,
    pub inputs: Vec<String>,
    pub outputs: Vec<String>,
    pub rules: Vec<ControlRule>,
    /// `(predicate, point) -> degree`
    pub sat: BTreeMap<(String, String), Level>,
}

fn is_name(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_lowercase() || c.is_ascii_digit())
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn reserved(s: &str) -> bool {
    matches!(s, GOOD | "and_g" | "and_l" | "or")
}

pub fn parse_control(text: &str, space: &TruthSpace) -> Result<ControlSystem, ControlError> {
    let mut cs = ControlSystem {
        space: space.clone(),
        inputs: Vec::new(),
        outputs: Vec::new(),
        rules: Vec::new(),
        sat: BTreeMap::new(),
    };
    let d = space.domain();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |message: String| ControlError::Syntax { line, message };
        let l = raw.split('%').next().unwrap_or("").trim();
        if l.is_empty() {
            continue;
        }
        let points = |rest: &str| -> Result<Vec<String>, ControlError> {
            rest.split(',')
                .map(|p| {
                    let p = p.trim();
                    if is_name(p) {
                        Ok(p.to_string())
                    } else {
                        Err(err(format!("bad point name `{p}`")))
                    }
                })
                .collect()
        };
        if let Some(rest) = l.strip_prefix("inputs:") {
            cs.inputs.extend(points(rest)?);
        } else if let Some(rest) = l.strip_prefix("outputs:") {
            cs.outputs.extend(points(rest)?);
        } else if let Some(rest) = l.strip_prefix("rule:") {
            let (lhs, rhs) = rest.split_once("=>").ok_or_else(|| err("expected `=>`".into()))?;
            let (rhs, conf) = match rhs.split_once(" conf ") {
                Some((r, c)) => (r, d.parse_literal(c.trim()).map_err(|e| err(e.to_string()))?),
                None => (rhs, space.top()),
            };
            let input = parse_label(lhs, space).map_err(err)?;
            let output = parse_label(rhs, space).map_err(err)?;
            cs.rules.push(ControlRule { input, output, conf });
        } else if let Some(rest) = l.strip_prefix("sat ") {
            let mut words = rest.split_whitespace();
            let (Some(pred), Some(point)) = (words.next(), words.next()) else {
                return Err(err("expected `sat <pred> <point> <literal>`".into()));
            };
            let v = d.parse_words(words).map_err(|e| err(e.to_string()))?;
            if cs.sat.insert((pred.to_string(), point.to_string()), v).is_some() {
                return Err(err(format!("duplicate entry for {pred}({point})")));
            }
        } else {
            return Err(err(format!("unrecognised line `{l}`")));
        }
    }
    Ok(cs)
}

fn parse_label(text: &str, space: &TruthSpace) -> Result<Label, String> {
    let words: Vec<&str> = text.split_whitespace().collect();
    let Some((pred, hs)) = words.split_last() else { return Err("empty label".into()) };
    if !is_name(pred) || reserved(pred) {
        return Err(format!("bad predicate `{pred}`"));
    }
    let hedges = hs
        .iter()
        .map(|h| space.algebra().find_hedge(h).ok_or_else(|| format!("unknown hedge `{h}`")))
        .collect::<Result<_, _>>()?;
    Ok(Label { hedges, pred: pred.to_string() })
}

fn label_body(l: &Label, var: &str) -> Body {
    let mut b = Body::Atom(Atom::new(&l.pred, vec![Term::var(var)]));
    for &h in l.hedges.iter().rev() {
        b = Body::Hedge(h, Box::new(b));
    }
    b
}

/// The program of a control system under the given implication.
pub fn compile_control(cs: &ControlSystem, imp: Implication) -> Result<Program, ControlError> {
    let mut p = Program::new(cs.space.clone());
    let mut used: BTreeSet<(&str, &[String])> = BTreeSet::new();
    for r in &cs.rules {
        let body = Body::Op(Connective::ConjG, vec![label_body(&r.input, "X"), label_body(&r.output, "Y")]);
        p.rules.push(Rule {
            head: Atom::new(GOOD, vec![Term::var("X"), Term::var("Y")]),
            imp,
            body,
            tv: r.conf,
            pos: Pos::default(),
        });
        used.insert((&r.input.pred, &cs.inputs));
        used.insert((&r.output.pred, &cs.outputs));
    }
    for (pred, points) in used {
        for pt in points {
            let v = *cs
                .sat
                .get(&(pred.to_string(), pt.clone()))
                .ok_or_else(|| ControlError::MissingEntry { pred: pred.to_string(), point: pt.clone() })?;
            if v > Level::BOTTOM {
                p.facts.push(Fact { atom: Atom::new(pred, vec![Term::Const(Arc::from(pt.as_str()))]), tv: v, pos: Pos::default() });
            }
        }
    }
    Ok(p)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Surface {
    pub inputs: Vec<String>,
    pub outputs: Vec<String>,
    /// `grid[i][j] = G(inputs[i], outputs[j])`
    pub grid: Vec<Vec<Level>>,
}

impl Surface {
    /// For each input, the output with the largest `G`; ties go to the
    /// earliest output.
    pub fn recommended(&self) -> Vec<Option<&str>> {
        self.grid
            .iter()
            .map(|row| {
                let mut best: Option<(usize, Level)> = None;
                for (j, &v) in row.iter().enumerate() {
                    if best.map_or(true, |(_, b)| v > b) {
                        best = Some((j, v));
                    }
                }
                best.map(|(j, _)| self.outputs[j].as_str())
            })
            .collect()
    }

    pub fn render(&self, space: &TruthSpace) -> String {
        let d = space.domain();
        let cell = |v: Level| format!("{} ({v})", d.literal(v));
        let mut widths: Vec<usize> = self.outputs.iter().map(|o| o.len()).collect();
        for row in &self.grid {
            for (j, &v) in row.iter().enumerate() {
                widths[j] = widths[j].max(cell(v).chars().count());
            }
        }
        let first = self.inputs.iter().map(|s| s.len()).max().unwrap_or(0);
        let mut out = String::new();
        write!(out, "{:first$}", "").unwrap();
        for (o, w) in self.outputs.iter().zip(&widths) {
            write!(out, " | {o:w$}").unwrap();
        }
        trim_line(&mut out);
        for (i, row) in self.grid.iter().enumerate() {
            write!(out, "{:first$}", self.inputs[i]).unwrap();
            for (&v, w) in row.iter().zip(&widths) {
                write!(out, " | {:w$}", cell(v)).unwrap();
            }
            trim_line(&mut out);
        }
        for (i, best) in self.recommended().into_iter().enumerate() {
            if let Some(b) = best {
                writeln!(out, "best {} -> {b}", self.inputs[i]).unwrap();
            }
        }
        out
    }
}

fn trim_line(out: &mut String) {
    out.truncate(out.trim_end_matches(' ').len());
    out.push('\n');
}

/// `T_P²(⊥)`, after checking that it is already the least model.
pub fn control_model(program: &Program) -> Result<Interpretation, ControlError> {
    let gp = ground(program)?;
    let f1 = tp_apply(&gp, &Interpretation::bottom());
    let f2 = tp_apply(&gp, &f1);
    let f3 = tp_apply(&gp, &f2);
    if f3 != f2 {
        let diff = f3.iter().find(|(a, v)| f2.get(a) != *v).map(|(a, _)| a.to_string()).unwrap_or_default();
        return Err(ControlError::NotFixpoint(diff));
    }
    Ok(f2)
}

pub fn goodness_surface(program: &Program, inputs: &[String], outputs: &[String]) -> Result<Surface, ControlError> {
    let m = control_model(program)?;
    let good = |x: &str, y: &str| {
        m.get(&Atom::new(GOOD, vec![Term::Const(Arc::from(x)), Term::Const(Arc::from(y))]))
    };
    let grid = inputs.iter().map(|x| outputs.iter().map(|y| good(x, y)).collect()).collect();
    Ok(Surface { inputs: inputs.to_vec(), outputs: outputs.to_vec(), grid })
}
