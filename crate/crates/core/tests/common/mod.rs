#![allow(dead_code)]

use std::collections::BTreeMap;
use std::fmt::Write;

use fllp::connectives::{Connective, Implication};
use fllp::domain::Level;
use fllp::control::{compile_control, goodness_surface, ControlSystem, Label};
use fllp::fixpoint::{ground, least_model, least_model_of, tp_apply, Interpretation, Mode};
use fllp::lang::{validate_program, Atom, Body, Program, Term};
use fllp::solve::{solve, ComputedAnswer, SolveOptions};
use fllp::{default_space, parse_program, TruthSpace};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// The 45 values of the four-hedge, 2-limited domain, ascending, in the
/// notation `VVc-` etc.
pub const DOMAIN_LISTING: [&str; 45] = [
    "0", "VVc-", "MVc-", "Vc-", "PVc-", "LVc-", "VMc-", "MMc-", "Mc-", "PMc-", "LMc-", "c-", "VPc-", "MPc-",
    "Pc-", "PPc-", "LPc-", "LLc-", "PLc-", "Lc-", "MLc-", "VLc-", "W", "VLc+", "MLc+", "Lc+", "PLc+", "LLc+",
    "LPc+", "PPc+", "Pc+", "MPc+", "VPc+", "c+", "LMc+", "PMc+", "Mc+", "MMc+", "VMc+", "LVc+", "PVc+", "Vc+",
    "MVc+", "VVc+", "1",
];

/// Inverse mappings: row value, then `V⁻ M⁻ P⁻ L⁻`. `k` stands for any hedge
/// or none.
pub const INVERSE_ROWS: [(&str, [&str; 4]); 29] = [
    ("0", ["0", "0", "0", "0"]),
    ("kVc-", ["VVc-", "VVc-", "kMc-", "c-"]),
    ("kMc-", ["VVc-", "kVc-", "c-", "kPc-"]),
    ("c-", ["Vc-", "Mc-", "Pc-", "Lc-"]),
    ("VPc-", ["VMc-", "PMc-", "LLc-", "VLc-"]),
    ("MPc-", ["MMc-", "LMc-", "PLc-", "VLc-"]),
    ("Pc-", ["Mc-", "c-", "Lc-", "VLc-"]),
    ("PPc-", ["PMc-", "VPc-", "MLc-", "VLc-"]),
    ("LPc-", ["LMc-", "VPc-", "VLc-", "VLc-"]),
    ("LLc-", ["LMc-", "VPc-", "VLc-", "VLc-"]),
    ("PLc-", ["LMc-", "MPc-", "VLc-", "VLc-"]),
    ("Lc-", ["c-", "Pc-", "VLc-", "VLc-"]),
    ("MLc-", ["VPc-", "PPc-", "VLc-", "VLc-"]),
    ("VLc-", ["PPc-", "LPc-", "VLc-", "VLc-"]),
    ("W", ["W", "W", "W", "W"]),
    ("VLc+", ["VLc+", "VLc+", "LPc+", "PPc+"]),
    ("MLc+", ["VLc+", "VLc+", "PPc+", "VPc+"]),
    ("Lc+", ["VLc+", "VLc+", "Pc+", "c+"]),
    ("PLc+", ["VLc+", "VLc+", "MPc+", "LMc+"]),
    ("LLc+", ["VLc+", "VLc+", "VPc+", "LMc+"]),
    ("LPc+", ["VLc+", "VLc+", "VPc+", "LMc+"]),
    ("PPc+", ["VLc+", "MLc+", "VPc+", "PMc+"]),
    ("Pc+", ["VLc+", "Lc+", "c+", "Mc+"]),
    ("MPc+", ["VLc+", "PLc+", "LMc+", "MMc+"]),
    ("VPc+", ["VLc+", "LLc+", "PMc+", "VMc+"]),
    ("c+", ["Lc+", "Pc+", "Mc+", "Vc+"]),
    ("kMc+", ["kPc+", "c+", "kVc+", "VVc+"]),
    ("kVc+", ["c+", "kMc+", "VVc+", "VVc+"]),
    ("1", ["1", "1", "1", "1"]),
];

pub const K: [&str; 5] = ["", "V", "M", "P", "L"];

/// `VMc+` → `V M true`, `0` → `absfalse`.
pub fn short_literal(s: &str) -> String {
    match s {
        "0" => return "absfalse".into(),
        "W" => return "middle".into(),
        "1" => return "abstrue".into(),
        _ => {}
    }
    let (hedges, primary) = s.split_at(s.len() - 2);
    let mut words: Vec<String> = hedges.chars().map(|c| c.to_string()).collect();
    words.push(if primary == "c+" { "true".into() } else { "false".into() });
    words.join(" ")
}

pub fn level(space: &TruthSpace, short: &str) -> Level {
    space.domain().parse_literal(&short_literal(short)).unwrap_or_else(|e| panic!("{short}: {e}"))
}

/// Rows of the table with `k` replaced by each hedge in turn; rows without
/// `k` appear once.
pub fn inverse_rows_expanded() -> Vec<(String, [String; 4])> {
    let mut out = Vec::new();
    for (x, cols) in INVERSE_ROWS {
        if x.starts_with('k') {
            for k in K {
                let sub = |s: &str| s.replacen('k', k, 1);
                out.push((sub(x), cols.map(sub)));
            }
        } else {
            out.push((x.to_string(), cols.map(String::from)));
        }
    }
    out
}

pub fn read_program(name: &str) -> Program {
    let path = format!("{}/../../programs/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    parse_program(&text, &default_space()).unwrap()
}

// ---------------------------------------------------------------------------
// Independent oracles

pub fn t_norm(imp: Implication, a: u32, b: u32, n: u32) -> u32 {
    match imp {
        Implication::Godel => a.min(b),
        Implication::Lukasiewicz => (a + b).saturating_sub(n),
    }
}

pub fn residuum(imp: Implication, head: u32, body: u32, n: u32) -> u32 {
    if body <= head {
        return n;
    }
    match imp {
        Implication::Godel => head,
        Implication::Lukasiewicz => n + head - body,
    }
}

fn eval(space: &TruthSpace, b: &Body, f: &dyn Fn(&Atom) -> u32) -> u32 {
    let n = space.top().0;
    match b {
        Body::Atom(a) => f(a),
        Body::Hedge(h, inner) => space.inverse().apply(Some(*h), Level(eval(space, inner, f))).0,
        Body::Op(op, cs) => {
            let vals: Vec<u32> = cs.iter().map(|c| eval(space, c, f)).collect();
            let (first, rest) = vals.split_first().unwrap();
            rest.iter().fold(*first, |acc, &v| match op {
                Connective::ConjG => acc.min(v),
                Connective::ConjL => (acc + v).saturating_sub(n),
                Connective::Disj => acc.max(v),
            })
        }
    }
}

fn universe(p: &Program) -> Vec<String> {
    let c: Vec<String> = p.constants().iter().map(|s| s.to_string()).collect();
    if c.is_empty() {
        vec!["a".into()]
    } else {
        c
    }
}

fn tuples(u: &[String], k: usize) -> Vec<Vec<String>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                u.iter().map(move |c| {
                    let mut t = t.clone();
                    t.push(c.clone());
                    t
                })
            })
            .collect();
    }
    out
}

fn bind(a: &Atom, env: &BTreeMap<String, String>) -> Atom {
    let args = a
        .args
        .iter()
        .map(|t| match t {
            Term::Var(v) => Term::constant(&env[&v.to_string()]),
            c => c.clone(),
        })
        .collect();
    Atom { pred: a.pred.clone(), args }
}

/// Every ground instance of each statement as `(head, body or fact value)`.
pub struct Ground {
    pub rules: Vec<(Atom, Implication, Body, u32)>,
    pub facts: Vec<(Atom, u32)>,
    pub base: Vec<Atom>,
}

pub fn ground_naively(p: &Program) -> Ground {
    let u = universe(p);
    let mut g = Ground { rules: Vec::new(), facts: Vec::new(), base: Vec::new() };
    let names = |atoms: Vec<&Atom>| {
        let mut vs: Vec<String> = Vec::new();
        for a in atoms {
            for v in a.vars() {
                if !vs.contains(&v.to_string()) {
                    vs.push(v.to_string());
                }
            }
        }
        vs
    };
    for f in &p.facts {
        let vs = names(vec![&f.atom]);
        for t in tuples(&u, vs.len()) {
            let env: BTreeMap<String, String> = vs.iter().cloned().zip(t).collect();
            g.facts.push((bind(&f.atom, &env), f.tv.0));
        }
    }
    for r in &p.rules {
        let mut atoms = vec![&r.head];
        atoms.extend(r.body.atoms());
        let vs = names(atoms);
        for t in tuples(&u, vs.len()) {
            let env: BTreeMap<String, String> = vs.iter().cloned().zip(t).collect();
            let body = r.body.map(&mut |a: &Atom| bind(a, &env));
            g.rules.push((bind(&r.head, &env), r.imp, body, r.tv.0));
        }
    }
    for (pred, arity) in p.predicates() {
        for t in tuples(&u, arity) {
            g.base.push(Atom::new(&pred, t.iter().map(|c| Term::constant(c)).collect()));
        }
    }
    g
}

/// Least model by plain Kleene iteration over the full Herbrand base.
pub fn oracle_model(p: &Program) -> BTreeMap<Atom, u32> {
    let g = ground_naively(p);
    let n = p.space.top().0;
    let mut f: BTreeMap<Atom, u32> = g.base.iter().map(|a| (a.clone(), 0)).collect();
    loop {
        let mut next: BTreeMap<Atom, u32> = g.base.iter().map(|a| (a.clone(), 0)).collect();
        for (a, v) in &g.facts {
            let e = next.get_mut(a).unwrap();
            *e = (*e).max(*v);
        }
        for (h, imp, b, r) in &g.rules {
            let val = t_norm(*imp, eval(&p.space, b, &|a| f[a]), *r, n);
            let e = next.get_mut(h).unwrap();
            *e = (*e).max(val);
        }
        if next == f {
            return f;
        }
        f = next;
    }
}

/// Whether `f` satisfies every statement, read through the residua.
pub fn is_model(p: &Program, f: &dyn Fn(&Atom) -> u32) -> bool {
    let g = ground_naively(p);
    let n = p.space.top().0;
    g.facts.iter().all(|(a, v)| f(a) >= *v)
        && g.rules.iter().all(|(h, imp, b, r)| residuum(*imp, f(h), eval(&p.space, b, f), n) >= *r)
}

// ---------------------------------------------------------------------------
// Random programs

pub struct Gen {
    pub rng: ChaCha8Rng,
}

const VARS: [&str; 3] = ["X", "Y", "Z"];

impl Gen {
    pub fn new(seed: u64) -> Gen {
        use rand::SeedableRng;
        Gen { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    fn literal(&mut self, space: &TruthSpace) -> String {
        let i = self.rng.gen_range(1..space.domain().len() as u32);
        space.domain().literal(Level(i))
    }

    fn atom(&mut self, preds: &[(String, usize)], consts: &[&str], vars_ok: bool) -> String {
        let (p, k) = preds.choose(&mut self.rng).unwrap().clone();
        if k == 0 {
            return p;
        }
        let args: Vec<String> = (0..k)
            .map(|_| {
                if vars_ok && self.rng.gen_bool(0.6) {
                    VARS[self.rng.gen_range(0..2)].to_string()
                } else {
                    consts.choose(&mut self.rng).unwrap().to_string()
                }
            })
            .collect();
        format!("{p}({})", args.join(","))
    }

    fn body(&mut self, preds: &[(String, usize)], consts: &[&str], depth: u32, space: &TruthSpace) -> String {
        let roll = if depth == 0 { 0 } else { self.rng.gen_range(0..4) };
        match roll {
            0 => self.atom(preds, consts, true),
            1 => {
                let hs = ["very", "more", "probably", "little"];
                let h = hs.choose(&mut self.rng).unwrap();
                format!("#{h}({})", self.body(preds, consts, depth - 1, space))
            }
            _ => {
                let ops = ["and_g", "and_l", "or"];
                let op = ops.choose(&mut self.rng).unwrap();
                let k = self.rng.gen_range(2..=3);
                let cs: Vec<String> = (0..k).map(|_| self.body(preds, consts, depth - 1, space)).collect();
                format!("{op}({})", cs.join(", "))
            }
        }
    }

    /// A function-free program text with at most 4 predicates of arity at
    /// most 2, at most 3 constants and at most 6 statements.
    pub fn program_text(&mut self, space: &TruthSpace) -> String {
        let np = self.rng.gen_range(1..=4);
        let preds: Vec<(String, usize)> = (0..np).map(|i| (format!("p{i}"), self.rng.gen_range(0..=2))).collect();
        let all = ["a", "b", "c"];
        let consts = &all[..self.rng.gen_range(1..=3)];
        let ns = self.rng.gen_range(1..=6);
        let mut out = String::new();
        for _ in 0..ns {
            if self.rng.gen_bool(0.5) {
                let a = self.atom(&preds, consts, false);
                writeln!(out, "{a} : {}.", self.literal(space)).unwrap();
            } else {
                let head = self.atom(&preds, consts, true);
                let body = self.body(&preds, consts, 2, space);
                let imp = if self.rng.gen_bool(0.5) { "<-g" } else { "<-l" };
                writeln!(out, "{head} {imp} {body} : {}.", self.literal(space)).unwrap();
            }
        }
        out
    }

    /// A valid random program.
    pub fn program(&mut self, space: &TruthSpace) -> Program {
        loop {
            let text = self.program_text(space);
            let p = parse_program(&text, space).unwrap_or_else(|e| panic!("{e}\n{text}"));
            if validate_program(&p, false).is_empty() {
                return p;
            }
        }
    }
}

/// `count` programs from a fixed seed.
pub fn random_programs(seed: u64, count: usize) -> Vec<Program> {
    let space = default_space();
    let mut g = Gen::new(seed);
    (0..count).map(|_| g.program(&space)).collect()
}

pub fn is_recursive(p: &Program) -> bool {
    let mut edges: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for r in &p.rules {
        for a in r.body.atoms() {
            edges.entry(r.head.pred.to_string()).or_default().push(a.pred.to_string());
        }
    }
    fn reach(e: &BTreeMap<String, Vec<String>>, from: &str, to: &str, seen: &mut Vec<String>) -> bool {
        for n in e.get(from).into_iter().flatten() {
            if n == to {
                return true;
            }
            if !seen.contains(n) {
                seen.push(n.clone());
                if reach(e, n, to, seen) {
                    return true;
                }
            }
        }
        false
    }
    edges.keys().any(|p| reach(&edges, p, p, &mut Vec::new()))
}

/// Queries with all-variable arguments, one per predicate, plus every
/// ground atom of the Herbrand base.
pub fn queries(p: &Program) -> Vec<Atom> {
    let mut out = Vec::new();
    for (pred, arity) in p.predicates() {
        let args = (0..arity).map(|i| Term::var(VARS[i])).collect();
        out.push(Atom::new(&pred, args));
    }
    out.extend(ground_naively(p).base);
    out
}

pub fn property_options() -> SolveOptions {
    SolveOptions { depth: 16, max_states: 5_000, ..SolveOptions::default() }
}

pub fn answers(p: &Program, q: &Atom, opts: SolveOptions) -> (Vec<ComputedAnswer>, bool) {
    let mut s = solve(p, q, opts);
    let a: Vec<ComputedAnswer> = s.by_ref().collect();
    (a, s.stats().budget_exhausted)
}

// ---------------------------------------------------------------------------
// Properties shared by the module tests and the acceptance suite

/// Every computed answer is below the least-model value of each of its ground
/// instances.
pub fn check_soundness(p: &Program) -> Result<usize, String> {
    let m = least_model(p).map_err(|e| e.to_string())?.model;
    let u = universe(p);
    let mut checked = 0;
    for q in queries(p) {
        let (ans, _) = answers(p, &q, property_options());
        for a in ans {
            let inst = a.subst.apply_atom(&q);
            let vs: Vec<String> = {
                let mut vs = Vec::new();
                for v in inst.vars() {
                    if !vs.contains(&v.to_string()) {
                        vs.push(v.to_string());
                    }
                }
                vs
            };
            for t in tuples(&u, vs.len()) {
                let env: BTreeMap<String, String> = vs.iter().cloned().zip(t).collect();
                let g = bind(&inst, &env);
                checked += 1;
                if a.tv > m.get(&g) {
                    return Err(format!("{q}: answer {} {} exceeds M_P({g}) = {}", a.tv, a.subst, m.get(&g)));
                }
            }
        }
    }
    Ok(checked)
}

/// For a non-recursive program, the best exhaustive answer to each ground
/// query equals its least-model value.
pub fn check_ground_completeness(p: &Program) -> Result<usize, String> {
    let m = least_model(p).map_err(|e| e.to_string())?.model;
    let base = ground_naively(p).base;
    for a in &base {
        let opts = SolveOptions { exhaustive: true, ..property_options() };
        let (ans, exhausted) = answers(p, a, opts);
        if exhausted {
            return Err(format!("{a}: state budget exhausted"));
        }
        let best = ans.iter().map(|x| x.tv).max().unwrap_or(Level::BOTTOM);
        if best != m.get(a) {
            return Err(format!("{a}: best computed {best}, least model {}", m.get(a)));
        }
    }
    Ok(base.len())
}

pub const THRESHOLDS: [u32; 4] = [10, 22, 30, 38];

/// Pruned answers are exactly the unpruned ones at or above the threshold.
pub fn check_threshold_equivalence(p: &Program) -> Result<usize, String> {
    let mut compared = 0;
    for q in queries(p) {
        let (all, ex) = answers(p, &q, property_options());
        if ex {
            continue;
        }
        for t in THRESHOLDS {
            let opts = SolveOptions { threshold: Some(Level(t)), ..property_options() };
            let (pruned, ex) = answers(p, &q, opts);
            if ex {
                continue;
            }
            let expected: Vec<&ComputedAnswer> = all.iter().filter(|a| a.tv >= Level(t)).collect();
            let got: Vec<&ComputedAnswer> = pruned.iter().collect();
            let key = |v: &Vec<&ComputedAnswer>| -> Vec<(u32, String)> {
                v.iter().map(|a| (a.tv.0, a.subst.to_string())).collect()
            };
            if key(&expected) != key(&got) {
                return Err(format!("{q} at v{t}: expected {:?}, got {:?}", key(&expected), key(&got)));
            }
            compared += 1;
        }
    }
    Ok(compared)
}

/// Least model agrees with the oracle.
pub fn check_model_against_oracle(p: &Program) -> Result<(), String> {
    let m = least_model(p).map_err(|e| e.to_string())?.model;
    let o = oracle_model(p);
    for (a, v) in &o {
        if m.get(a).0 != *v {
            return Err(format!("{a}: least_model {} oracle v{v}", m.get(a)));
        }
    }
    for (a, _) in m.iter() {
        if !o.contains_key(a) {
            return Err(format!("{a} outside the Herbrand base"));
        }
    }
    Ok(())
}

/// A random interpretation over the atoms of `base`.
pub fn random_interpretation(rng: &mut ChaCha8Rng, base: &[Atom], n: u32) -> Interpretation {
    let mut f = Interpretation::bottom();
    for a in base {
        f.set(a.clone(), Level(rng.gen_range(0..=n)));
    }
    f
}

/// A random interpretation pointwise below `f`.
pub fn random_below(rng: &mut ChaCha8Rng, f: &Interpretation, base: &[Atom]) -> Interpretation {
    let mut g = Interpretation::bottom();
    for a in base {
        g.set(a.clone(), Level(rng.gen_range(0..=f.get(a).0)));
    }
    g
}

/// `T_P` is monotone on `pairs` random pairs `g ⊑ f` over the base of `p`.
pub fn check_tp_monotone(p: &Program, rng: &mut ChaCha8Rng, pairs: usize) -> Result<(), String> {
    let gp = ground(p).map_err(|e| e.to_string())?;
    let base = ground_naively(p).base;
    let n = p.space.top().0;
    for _ in 0..pairs {
        let f = random_interpretation(rng, &base, n);
        let g = random_below(rng, &f, &base);
        if !tp_apply(&gp, &g).leq(&tp_apply(&gp, &f)) {
            return Err(format!("T_P not monotone:\n{}\nvs\n{}", g.dump(&p.space), f.dump(&p.space)));
        }
    }
    Ok(())
}

/// Naive and delta iteration give the same iterates, and stop within
/// `|B_P|·|domain|` applications.
pub fn check_iteration(p: &Program) -> Result<usize, String> {
    let gp = ground(p).map_err(|e| e.to_string())?;
    let a = least_model_of(&gp, Mode::Naive, true).map_err(|e| e.to_string())?;
    let b = least_model_of(&gp, Mode::Delta, true).map_err(|e| e.to_string())?;
    if a.iterates != b.iterates || a.model != b.model {
        return Err("naive and delta iterates differ".into());
    }
    let bound = (gp.base_size() * p.space.domain().len()).max(1);
    if a.iterations > bound {
        return Err(format!("{} iterations, bound {bound}", a.iterations));
    }
    Ok(a.iterations)
}

// ---------------------------------------------------------------------------
// Random control systems

const HEDGES: [&str; 4] = ["very", "more", "probably", "little"];

fn label(rng: &mut ChaCha8Rng, preds: &[String]) -> String {
    let mut words: Vec<String> = (0..rng.gen_range(0..=2)).map(|_| HEDGES.choose(rng).unwrap().to_string()).collect();
    words.push(preds.choose(rng).unwrap().clone());
    words.join(" ")
}

/// Control system text with at most 5 inputs and outputs and 1 to 4 rules.
/// With `unit_conf` every rule has confidence `1`.
pub fn control_text(rng: &mut ChaCha8Rng, space: &TruthSpace, unit_conf: bool) -> String {
    let xs: Vec<String> = (0..rng.gen_range(1..=5)).map(|i| format!("x{i}")).collect();
    let ys: Vec<String> = (0..rng.gen_range(1..=5)).map(|i| format!("y{i}")).collect();
    let a: Vec<String> = (0..rng.gen_range(1..=3)).map(|i| format!("a{i}")).collect();
    let b: Vec<String> = (0..rng.gen_range(1..=3)).map(|i| format!("b{i}")).collect();
    let mut out = format!("inputs: {}\noutputs: {}\n", xs.join(", "), ys.join(", "));
    for _ in 0..rng.gen_range(1..=4) {
        write!(out, "rule: {} => {}", label(rng, &a), label(rng, &b)).unwrap();
        if !unit_conf && rng.gen_bool(0.7) {
            let c = space.domain().literal(Level(rng.gen_range(1..=space.top().0)));
            write!(out, " conf {c}").unwrap();
        }
        out.push('\n');
    }
    let n = space.top().0;
    for (preds, points) in [(&a, &xs), (&b, &ys)] {
        for p in preds {
            for x in points {
                writeln!(out, "sat {p} {x} {}", space.domain().literal(Level(rng.gen_range(0..=n)))).unwrap();
            }
        }
    }
    out
}

/// `G(x, y)` computed straight from the rules: the best rule's confidence
/// combined with the smaller of the two hedged degrees.
pub fn surface_oracle(cs: &ControlSystem, imp: Implication) -> Vec<Vec<u32>> {
    let inv = cs.space.inverse();
    let degree = |l: &Label, pt: &str| {
        let v = cs.sat[&(l.pred.clone(), pt.to_string())];
        l.hedges.iter().rev().fold(v, |v, &h| inv.apply(Some(h), v)).0
    };
    let n = cs.space.top().0;
    cs.inputs
        .iter()
        .map(|x| {
            cs.outputs
                .iter()
                .map(|y| {
                    cs.rules
                        .iter()
                        .map(|r| t_norm(imp, degree(&r.input, x).min(degree(&r.output, y)), r.conf.0, n))
                        .max()
                        .unwrap_or(0)
                })
                .collect()
        })
        .collect()
}

/// The least model equals `T_P²(⊥)` and the surface matches the oracle.
pub fn check_control(cs: &ControlSystem, imp: Implication) -> Result<(), String> {
    let p = compile_control(cs, imp).map_err(|e| e.to_string())?;
    let gp = ground(&p).map_err(|e| e.to_string())?;
    let two = tp_apply(&gp, &tp_apply(&gp, &Interpretation::bottom()));
    let m = least_model(&p).map_err(|e| e.to_string())?.model;
    if m != two {
        return Err(format!("M_P differs from T_P^2:\n{}\n{}", m.dump(&p.space), two.dump(&p.space)));
    }
    let s = goodness_surface(&p, &cs.inputs, &cs.outputs).map_err(|e| e.to_string())?;
    let got: Vec<Vec<u32>> = s.grid.iter().map(|r| r.iter().map(|v| v.0).collect()).collect();
    if got != surface_oracle(cs, imp) {
        return Err(format!("surface {got:?} oracle {:?}", surface_oracle(cs, imp)));
    }
    Ok(())
}
