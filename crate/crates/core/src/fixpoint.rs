//! Bottom-up semantics: grounding, the immediate consequences operator `T_P`
//! and the least Herbrand model.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write;
use std::sync::Arc;

use thiserror::Error;

use crate::connectives::{eval_body, Implication};
use crate::domain::Level;
use crate::lang::{Atom, Body, Program, Term, Var};
use crate::solve::{mgu, Subst};
use crate::TruthSpace;

pub const DEFAULT_GROUNDING_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FixpointError {
    #[error("grounding needs {needed} instances, more than the cap of {cap}")]
    GroundingLimit { needed: String, cap: usize },
    #[error("no fixpoint after {0} iterations")]
    IterationBound(usize),
}

/// Index of an interned ground atom.
pub type AtomId = usize;

#[derive(Debug, Clone)]
pub struct GroundRule {
    pub head: AtomId,
    pub imp: Implication,
    pub body: Body<AtomId>,
    pub tv: Level,
}

/// All ground instances of a program's statements, over interned atoms.
#[derive(Debug, Clone)]
pub struct GroundProgram {
    space: TruthSpace,
    universe: Vec<Arc<str>>,
    atoms: Vec<Atom>,
    ids: HashMap<Atom, AtomId>,
    rules: Vec<GroundRule>,
    facts: Vec<(AtomId, Level)>,
    base_size: usize,
}

impl GroundProgram {
    pub fn space(&self) -> &TruthSpace {
        &self.space
    }

    /// The Herbrand universe (the program's constants, or `a` if none).
    pub fn universe(&self) -> &[Arc<str>] {
        &self.universe
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn atom_id(&self, a: &Atom) -> Option<AtomId> {
        self.ids.get(a).copied()
    }

    pub fn rules(&self) -> &[GroundRule] {
        &self.rules
    }

    pub fn facts(&self) -> &[(AtomId, Level)] {
        &self.facts
    }

    /// `|B_P|`, saturating.
    pub fn base_size(&self) -> usize {
        self.base_size
    }

    fn intern(&mut self, a: Atom) -> AtomId {
        if let Some(&id) = self.ids.get(&a) {
            return id;
        }
        let id = self.atoms.len();
        self.atoms.push(a.clone());
        self.ids.insert(a, id);
        id
    }

    fn to_dense(&self, f: &Interpretation) -> Vec<Level> {
        self.atoms.iter().map(|a| f.get(a)).collect()
    }

    fn to_sparse(&self, values: &[Level]) -> Interpretation {
        let mut f = Interpretation::bottom();
        for (a, &v) in self.atoms.iter().zip(values) {
            f.set(a.clone(), v);
        }
        f
    }
}

pub fn ground(program: &Program) -> Result<GroundProgram, FixpointError> {
    ground_with_cap(program, DEFAULT_GROUNDING_CAP)
}

pub fn ground_with_cap(program: &Program, cap: usize) -> Result<GroundProgram, FixpointError> {
    let mut universe = program.constants();
    if universe.is_empty() {
        universe.push(Arc::from("a"));
    }
    let u = universe.len();

    let rule_vars: Vec<Vec<Var>> = program
        .rules
        .iter()
        .map(|r| {
            let mut vs = Vec::new();
            collect_vars(&r.head, &mut vs);
            for a in r.body.atoms() {
                collect_vars(a, &mut vs);
            }
            vs
        })
        .collect();
    let fact_vars: Vec<Vec<Var>> = program
        .facts
        .iter()
        .map(|f| {
            let mut vs = Vec::new();
            collect_vars(&f.atom, &mut vs);
            vs
        })
        .collect();

    let mut needed: u128 = 0;
    for vs in rule_vars.iter().chain(&fact_vars) {
        needed = needed.saturating_add((u as u128).saturating_pow(vs.len() as u32));
    }
    if needed > cap as u128 {
        return Err(FixpointError::GroundingLimit { needed: needed.to_string(), cap });
    }

    let base_size = program
        .predicates()
        .iter()
        .fold(0usize, |acc, (_, arity)| acc.saturating_add(u.saturating_pow(*arity as u32)));
    let mut gp = GroundProgram {
        space: program.space.clone(),
        universe,
        atoms: Vec::new(),
        ids: HashMap::new(),
        rules: Vec::new(),
        facts: Vec::new(),
        base_size,
    };

    for (f, vs) in program.facts.iter().zip(&fact_vars) {
        for s in assignments(vs, &gp.universe.clone()) {
            let id = gp.intern(s.apply_atom(&f.atom));
            gp.facts.push((id, f.tv));
        }
    }
    for (r, vs) in program.rules.iter().zip(&rule_vars) {
        for s in assignments(vs, &gp.universe.clone()) {
            let head = gp.intern(s.apply_atom(&r.head));
            let body = r.body.map(&mut |a: &Atom| s.apply_atom(a));
            let body = body.map(&mut |a: &Atom| gp.intern(a.clone()));
            gp.rules.push(GroundRule { head, imp: r.imp, body, tv: r.tv });
        }
    }
    Ok(gp)
}

fn collect_vars(a: &Atom, out: &mut Vec<Var>) {
    for v in a.vars() {
        if !out.contains(v) {
            out.push(v.clone());
        }
    }
}

/// Every map from `vars` to `universe`, in lexicographic order.
fn assignments(vars: &[Var], universe: &[Arc<str>]) -> Vec<Subst> {
    let mut out = Vec::new();
    let mut idx = vec![0usize; vars.len()];
    loop {
        out.push(
            vars.iter()
                .zip(&idx)
                .map(|(v, &i)| (v.clone(), Term::Const(universe[i].clone())))
                .collect(),
        );
        let mut k = vars.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < universe.len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// A valuation of the Herbrand base; atoms not listed are `v0`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Interpretation {
    values: BTreeMap<Atom, Level>,
}

impl Interpretation {
    /// `⊥`.
    pub fn bottom() -> Interpretation {
        Interpretation::default()
    }

    pub fn get(&self, a: &Atom) -> Level {
        self.values.get(a).copied().unwrap_or(Level::BOTTOM)
    }

    pub fn set(&mut self, a: Atom, v: Level) {
        if v == Level::BOTTOM {
            self.values.remove(&a);
        } else {
            self.values.insert(a, v);
        }
    }

    /// Atoms with a value above `v0`.
    pub fn iter(&self) -> impl Iterator<Item = (&Atom, Level)> {
        self.values.iter().map(|(a, &v)| (a, v))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Pointwise `⊑`.
    pub fn leq(&self, other: &Interpretation) -> bool {
        self.values.iter().all(|(a, &v)| v <= other.get(a))
    }

    /// One line per atom, `<atom> : <literal> (v<i>)`, sorted.
    pub fn dump(&self, space: &TruthSpace) -> String {
        let mut lines: Vec<String> = self
            .values
            .iter()
            .map(|(a, &v)| format!("{a} : {}", space.domain().format_value(v)))
            .collect();
        lines.sort();
        let mut out = String::new();
        for l in lines {
            writeln!(out, "{l}").unwrap();
        }
        out
    }
}

/// `T_P(f)`.
pub fn tp_apply(gp: &GroundProgram, f: &Interpretation) -> Interpretation {
    let dense = gp.to_dense(f);
    gp.to_sparse(&step_all(gp, &dense))
}

fn rule_value(gp: &GroundProgram, r: &GroundRule, f: &[Level]) -> Level {
    let body = eval_body(&r.body, &gp.space, &mut |&id: &AtomId| Some(f[id])).expect("total valuation");
    r.imp.t_norm(body, r.tv, gp.space.top())
}

fn step_all(gp: &GroundProgram, f: &[Level]) -> Vec<Level> {
    let mut out = vec![Level::BOTTOM; gp.atoms.len()];
    for &(id, tv) in &gp.facts {
        out[id] = out[id].max(tv);
    }
    for r in &gp.rules {
        out[r.head] = out[r.head].max(rule_value(gp, r, f));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// Recompute every head each round.
    Naive,
    /// Recompute only heads with a ground rule whose body mentions an atom
    /// that changed in the previous round.
    #[default]
    Delta,
}

#[derive(Debug, Clone)]
pub struct LeastModel {
    pub model: Interpretation,
    /// Applications of `T_P`, counting the one that confirmed the fixpoint.
    pub iterations: usize,
    /// `T_P^k(⊥)` for `k = 0 ..= iterations - 1`, when requested.
    pub iterates: Vec<Interpretation>,
}

pub fn least_model(program: &Program) -> Result<LeastModel, FixpointError> {
    least_model_of(&ground(program)?, Mode::Delta, false)
}

pub fn least_model_of(gp: &GroundProgram, mode: Mode, record: bool) -> Result<LeastModel, FixpointError> {
    let n = gp.atoms.len();
    let bound = gp.base_size.max(n).saturating_mul(gp.space.domain().len()).saturating_add(1);

    // rules[i] whose body mentions atom a, for each a
    let mut users: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut heads: Vec<Vec<usize>> = vec![Vec::new(); n];
    if mode == Mode::Delta {
        for (i, r) in gp.rules.iter().enumerate() {
            heads[r.head].push(i);
            for &a in r.body.atoms() {
                if users[a].last() != Some(&i) {
                    users[a].push(i);
                }
            }
        }
    }
    let mut fact_max = vec![Level::BOTTOM; n];
    for &(id, tv) in &gp.facts {
        fact_max[id] = fact_max[id].max(tv);
    }

    let mut cur = vec![Level::BOTTOM; n];
    let mut iterates = Vec::new();
    let mut changed: Option<Vec<AtomId>> = None;
    let mut iterations = 0;
    loop {
        if record {
            iterates.push(gp.to_sparse(&cur));
        }
        iterations += 1;
        if iterations > bound {
            return Err(FixpointError::IterationBound(bound));
        }
        let next = match (&changed, mode) {
            (Some(delta), Mode::Delta) => {
                let mut next = cur.clone();
                let mut dirty = vec![false; n];
                for &a in delta {
                    for &i in &users[a] {
                        dirty[gp.rules[i].head] = true;
                    }
                }
                for (h, _) in dirty.iter().enumerate().filter(|(_, d)| **d) {
                    next[h] = heads[h].iter().fold(fact_max[h], |m, &i| m.max(rule_value(gp, &gp.rules[i], &cur)));
                }
                next
            }
            _ => step_all(gp, &cur),
        };
        let delta: Vec<AtomId> = (0..n).filter(|&i| next[i] != cur[i]).collect();
        if delta.is_empty() {
            break;
        }
        cur = next;
        changed = Some(delta);
    }
    Ok(LeastModel { model: gp.to_sparse(&cur), iterations, iterates })
}

/// Groundings of `query` with a value above `v0` in `model`, in atom order.
pub fn query_model(model: &Interpretation, query: &Atom) -> Vec<(Subst, Level)> {
    model.iter().filter_map(|(a, v)| mgu(query, a).map(|s| (restrict(s, query), v))).collect()
}

/// Every grounding of `query` over `universe`, including those at `v0`.
pub fn query_groundings(model: &Interpretation, query: &Atom, universe: &[Arc<str>]) -> Vec<(Subst, Level)> {
    let mut vs = Vec::new();
    collect_vars(query, &mut vs);
    assignments(&vs, universe)
        .into_iter()
        .map(|s| {
            let v = model.get(&s.apply_atom(query));
            (s, v)
        })
        .collect()
}

fn restrict(s: Subst, query: &Atom) -> Subst {
    s.iter().filter(|(v, _)| query.vars().any(|w| w == *v)).map(|(v, t)| (v.clone(), t.clone())).collect()
}
