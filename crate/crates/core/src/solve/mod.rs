//! Top-down query answering by the admissible rules.
//!
//! A derivation rewrites a goal word until no atoms are left:
//!
//! 1. an atom is replaced by `C_i(B, r)` for a matching rule `A ←ᵢ B . r`;
//! 2. an atom is replaced by `0`;
//! 3. a hedge node `hB` becomes `h⁻(B)`;
//! 4. an atom is replaced by the value of a matching fact;
//! 5. an atom-free word is evaluated.
//!
//! The search is depth-first, selecting the leftmost atom.

mod subst;
mod threshold;
mod word;

use std::collections::HashMap;

pub use subst::{mgu, Subst};
pub use threshold::{next_threshold, ThresholdContext};
pub use word::{Goal, Word};

use crate::connectives::Implication;
use crate::domain::Level;
use crate::lang::{Atom, Program, Term, Var};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOptions {
    /// Largest number of nested rule applications above an atom.
    pub depth: u32,
    /// Only answers at or above this value are sought; branches that cannot
    /// reach it are pruned.
    pub threshold: Option<Level>,
    /// Keep only the best answer per substitution.
    pub best: bool,
    /// Try alternatives in program order, and also try Rule 2 on non-ground
    /// atoms that share variables with the rest of the word.
    pub exhaustive: bool,
    pub trace: bool,
    /// Search states to visit, and pending states to hold, before giving up.
    pub max_states: usize,
}

impl Default for SolveOptions {
    fn default() -> SolveOptions {
        SolveOptions {
            depth: 64,
            threshold: None,
            best: false,
            exhaustive: false,
            trace: false,
            max_states: 1_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComputedAnswer {
    pub tv: Level,
    /// Bindings of the query variables that the derivation instantiated.
    pub subst: Subst,
    /// Number of rule applications in the derivation.
    pub steps: u32,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub states: usize,
    /// Rule applications skipped because of the depth bound.
    pub truncated: usize,
    pub budget_exhausted: bool,
}

impl SolveStats {
    /// Whether some derivation was not followed to the end.
    pub fn incomplete(&self) -> bool {
        self.truncated > 0 || self.budget_exhausted
    }
}

#[derive(Debug, Clone)]
struct State {
    word: Word,
    /// Current instances of the query variables.
    answer: Vec<Term>,
    gen: u32,
    steps: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Kind {
    Fact,
    Rule(Implication),
    Zero,
}

/// Iterator over the computed answers of one query.
pub struct Solver<'p> {
    program: &'p Program,
    options: SolveOptions,
    query_vars: Vec<Var>,
    stack: Vec<State>,
    stats: SolveStats,
    trace: Vec<String>,
}

pub fn solve<'p>(program: &'p Program, query: &Atom, options: SolveOptions) -> Solver<'p> {
    let mut query_vars: Vec<Var> = Vec::new();
    for v in query.vars() {
        if !query_vars.contains(v) {
            query_vars.push(v.clone());
        }
    }
    let threshold = options.threshold.unwrap_or(Level::BOTTOM);
    let root = State {
        word: Word::Atom(Goal { atom: query.clone(), threshold, depth: 0 }),
        answer: query_vars.iter().map(|v| Term::Var(v.clone())).collect(),
        gen: 0,
        steps: 0,
    };
    Solver { program, options, query_vars, stack: vec![root], stats: SolveStats::default(), trace: Vec::new() }
}

impl<'p> Solver<'p> {
    pub fn stats(&self) -> &SolveStats {
        &self.stats
    }

    /// Trace lines recorded so far (only with `options.trace`).
    pub fn take_trace(&mut self) -> Vec<String> {
        std::mem::take(&mut self.trace)
    }

    /// Drains the iterator, honouring `options.best`.
    pub fn collect_answers(&mut self) -> Vec<ComputedAnswer> {
        let all: Vec<ComputedAnswer> = self.by_ref().collect();
        if self.options.best {
            best_per_substitution(all)
        } else {
            all
        }
    }

    fn log(&mut self, rule: &str, st: &State) {
        if self.options.trace {
            let space = &self.program.space;
            let bindings: Vec<String> = self
                .query_vars
                .iter()
                .zip(&st.answer)
                .filter(|(v, t)| **t != Term::Var((*v).clone()))
                .map(|(v, t)| format!("{v}={t}"))
                .collect();
            self.trace.push(format!(
                "{:>3} {rule}: ({} ; {{{}}})",
                st.steps,
                st.word.render(space),
                bindings.join(", ")
            ));
        }
    }

    fn finish(&self, st: &State, tv: Level) -> ComputedAnswer {
        let subst = self
            .query_vars
            .iter()
            .zip(&st.answer)
            .filter(|(v, t)| **t != Term::Var((*v).clone()))
            .map(|(v, t)| (v.clone(), t.clone()))
            .collect();
        ComputedAnswer { tv, subst, steps: st.steps }
    }

    /// Pushes the successors of `st` (in reverse so the first is popped next).
    fn expand(&mut self, mut st: State) -> Option<ComputedAnswer> {
        let space = &self.program.space;
        if st.word.expand_hedge() {
            self.log("rule 3", &st);
            self.stack.push(st);
            return None;
        }
        let Some(goal) = st.word.leftmost_atom().cloned() else {
            let tv = st.word.eval(space).expect("no atoms left");
            st.word = Word::Value(tv);
            self.log("rule 5", &st);
            // pruning only bounds a branch from above; the final value may still fall short
            if tv < self.options.threshold.unwrap_or(Level::BOTTOM) {
                return None;
            }
            return Some(self.finish(&st, tv));
        };

        let gen = st.gen + 1;
        let mut matched = false;
        let mut alternatives: Vec<(Kind, Level, Word, Subst)> = Vec::new();
        for f in &self.program.facts {
            let Some(theta) = mgu(&goal.atom, &word::rename(&f.atom, gen)) else { continue };
            matched = true;
            if f.tv >= goal.threshold {
                alternatives.push((Kind::Fact, f.tv, Word::Value(f.tv), theta));
            }
        }
        for r in &self.program.rules {
            let Some(theta) = mgu(&goal.atom, &word::rename(&r.head, gen)) else { continue };
            matched = true;
            if goal.depth >= self.options.depth {
                self.stats.truncated += 1;
                continue;
            }
            let ctx = ThresholdContext::Rule(r.imp, r.tv);
            let Some(t) = next_threshold(space, goal.threshold, ctx) else { continue };
            let Some(body) = Word::from_body(&r.body, t, goal.depth + 1, gen, space) else { continue };
            alternatives.push((Kind::Rule(r.imp), r.tv, Word::TNorm(r.imp, Box::new(body), r.tv), theta));
        }
        if !self.options.exhaustive {
            alternatives.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        }
        let rule2 = goal.threshold == Level::BOTTOM
            && (!matched || (self.options.exhaustive && self.shares_vars(&st.word, &goal)));
        if rule2 {
            alternatives.push((Kind::Zero, Level::BOTTOM, Word::Value(Level::BOTTOM), Subst::new()));
        }

        let mut successors = Vec::with_capacity(alternatives.len());
        for (kind, _, replacement, theta) in alternatives {
            let mut next = st.clone();
            *next.word.leftmost_atom_mut().expect("goal was found") = replacement;
            next.word.apply(&theta);
            next.word.fold_closed(space);
            for t in &mut next.answer {
                *t = theta.apply_term(t);
            }
            // Renamed variables of the used statement may now occur in the word.
            next.gen = gen;
            if let Kind::Rule(_) = kind {
                next.steps += 1;
            }
            let label = match kind {
                Kind::Rule(_) => "rule 1",
                Kind::Zero => "rule 2",
                Kind::Fact => "rule 4",
            };
            self.log(label, &next);
            successors.push(next);
        }
        self.stack.extend(successors.into_iter().rev());
        None
    }

    /// Whether a variable of the selected atom also occurs elsewhere in the word.
    fn shares_vars(&self, word: &Word, goal: &Goal) -> bool {
        let mut in_word = Vec::new();
        word.vars(&mut in_word);
        goal.atom.vars().any(|v| {
            let total = in_word.iter().filter(|w| *w == v).count();
            let own = goal.atom.vars().filter(|w| *w == v).count();
            total > own
        })
    }
}

impl Iterator for Solver<'_> {
    type Item = ComputedAnswer;

    fn next(&mut self) -> Option<ComputedAnswer> {
        while let Some(st) = self.stack.pop() {
            self.stats.states += 1;
            if self.stats.states > self.options.max_states || self.stack.len() > self.options.max_states {
                self.stats.budget_exhausted = true;
                self.stack.clear();
                return None;
            }
            if let Some(ans) = self.expand(st) {
                return Some(ans);
            }
        }
        None
    }
}

/// The maximum answer per distinct substitution, in order of first appearance.
pub fn best_per_substitution(answers: Vec<ComputedAnswer>) -> Vec<ComputedAnswer> {
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut out: Vec<ComputedAnswer> = Vec::new();
    for a in answers {
        let key = a.subst.to_string();
        match index.get(&key) {
            Some(&i) if out[i].tv >= a.tv => {}
            Some(&i) => out[i] = a,
            None => {
                index.insert(key, out.len());
                out.push(a);
            }
        }
    }
    out
}
