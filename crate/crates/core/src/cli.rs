//! The `fllp` command line.

use std::fmt::Write as _;
use std::io::{BufRead, IsTerminal, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::connectives::Implication;
use crate::control::{compile_control, goodness_surface, parse_control};
use crate::domain::Level;
use crate::fixpoint::{ground_with_cap, least_model_of, FixpointError, Mode, DEFAULT_GROUNDING_CAP};
use crate::lang::{algebra_directive, parse_program, parse_query, validate_program, Atom, Program};
use crate::prolog::{compile_program, compile_query};
use crate::solve::{solve, ComputedAnswer, SolveOptions};
use crate::{default_space, load_space, TruthSpace};

/// Environment variable naming the algebra used when neither `--algebra`
/// nor a `use algebra` directive gives one.
pub const ALGEBRA_ENV: &str = "FLLP_ALGEBRA";

#[derive(Debug, Parser)]
#[command(name = "fllp", version, about = "Fuzzy linguistic logic programs over hedge-algebra truth domains")]
pub struct Cli {
    /// Algebra configuration file.
    #[arg(long, global = true)]
    pub algebra: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the truth domain and the inverse mappings.
    Domain,
    /// Parse and validate a program.
    Check {
        program: PathBuf,
        /// Also require every head variable to occur in the body.
        #[arg(long)]
        safe: bool,
    },
    /// Answer a query top-down; without a query, read queries from stdin.
    Query {
        program: PathBuf,
        query: Option<String>,
        #[command(flatten)]
        opts: QueryArgs,
    },
    /// Print the least Herbrand model.
    Model {
        program: PathBuf,
        /// Recompute every atom in every round.
        #[arg(long)]
        naive: bool,
        #[arg(long, default_value_t = DEFAULT_GROUNDING_CAP)]
        grounding_cap: usize,
    },
    /// Goodness surface of a control rule file.
    Surface {
        control: PathBuf,
        /// Use the Lukasiewicz implication for the control rules.
        #[arg(long)]
        lukasiewicz: bool,
    },
    /// Translate a program to Prolog.
    Compile {
        program: PathBuf,
        /// Append this query as a goal.
        #[arg(long)]
        query: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct QueryArgs {
    /// Largest number of nested rule applications.
    #[arg(long, default_value_t = 64)]
    pub depth: u32,
    /// Only answers at least this value, as a literal or `v<i>`.
    #[arg(long)]
    pub threshold: Option<String>,
    /// Best answer per substitution only.
    #[arg(long)]
    pub best: bool,
    #[arg(long)]
    pub exhaustive: bool,
    #[arg(long)]
    pub trace: bool,
}

/// An error with its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

fn resource(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn space_from(path: &Path) -> Result<TruthSpace, Failure> {
    load_space(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// `--algebra`, then the program's directive, then `FLLP_ALGEBRA`, then the
/// bundled algebra.
fn resolve_space(flag: Option<&Path>, program: Option<(&Path, &str)>) -> Result<TruthSpace, Failure> {
    if let Some(p) = flag {
        return space_from(p);
    }
    if let Some((path, text)) = program {
        let dir = algebra_directive(text).map_err(|e| usage(format!("{}:{e}", path.display())))?;
        if let Some(rel) = dir {
            let base = path.parent().unwrap_or(Path::new("."));
            return space_from(&base.join(rel));
        }
    }
    match std::env::var_os(ALGEBRA_ENV) {
        Some(p) if !p.is_empty() => space_from(Path::new(&p)),
        _ => Ok(default_space()),
    }
}

fn load_program(flag: Option<&Path>, path: &Path) -> Result<Program, Failure> {
    let text = read(path)?;
    let space = resolve_space(flag, Some((path, &text)))?;
    let p = parse_program(&text, &space).map_err(|e| usage(format!("{}:{e}", path.display())))?;
    let diags = validate_program(&p, false);
    if !diags.is_empty() {
        let lines: Vec<String> = diags.iter().map(|d| format!("{}:{d}", path.display())).collect();
        return Err(usage(lines.join("\n")));
    }
    Ok(p)
}

fn parse_level(space: &TruthSpace, text: &str) -> Result<Level, Failure> {
    let d = space.domain();
    if let Some(i) = text.strip_prefix('v').and_then(|s| s.parse::<u32>().ok()) {
        if (i as usize) < d.len() {
            return Ok(Level(i));
        }
    }
    d.parse_literal(text).map_err(|e| usage(format!("--threshold: {e}")))
}

pub fn format_answer(space: &TruthSpace, a: &ComputedAnswer) -> String {
    let bindings: Vec<String> = a.subst.iter().map(|(v, t)| format!("{v}={t}")).collect();
    let tv = space.domain().format_value(a.tv);
    if bindings.is_empty() {
        format!("answer: ; tv={tv}")
    } else {
        format!("answer: {} ; tv={tv}", bindings.join(", "))
    }
}

/// Answers (and trace lines) for one query; the flag tells whether the
/// search hit a depth or state limit.
fn answer(p: &Program, q: &Atom, opts: &SolveOptions) -> (String, bool) {
    let mut solver = solve(p, q, opts.clone());
    let answers = solver.collect_answers();
    let mut out = String::new();
    for line in solver.take_trace() {
        writeln!(out, "{line}").unwrap();
    }
    if answers.is_empty() {
        out.push_str("no answer\n");
    }
    for a in &answers {
        writeln!(out, "{}", format_answer(&p.space, a)).unwrap();
    }
    let stats = solver.stats();
    if stats.budget_exhausted {
        writeln!(out, "% search stopped after {} states; answers may be missing", stats.states).unwrap();
    } else if stats.truncated > 0 {
        writeln!(out, "% depth bound cut {} rule applications; answers may be missing", stats.truncated).unwrap();
    }
    (out, stats.incomplete())
}

pub fn domain_listing(space: &TruthSpace) -> String {
    let d = space.domain();
    let mut out = String::new();
    for l in d.levels() {
        writeln!(out, "{:<4}{}", l.to_string(), d.literal(l)).unwrap();
    }
    out
}

/// One row per value `x`: `h⁻(x)` for each hedge, as domain indices.
pub fn inverse_listing(space: &TruthSpace) -> String {
    let alg = space.algebra();
    let mut out = String::from("x   ");
    for h in alg.hedge_ids() {
        let hd = alg.hedge(h);
        write!(out, " {:>5}", format!("{}-", hd.abbrev.as_deref().unwrap_or(&hd.name))).unwrap();
    }
    out.push('\n');
    for x in space.domain().levels() {
        write!(out, "{:<4}", x.to_string()).unwrap();
        for h in alg.hedge_ids() {
            write!(out, " {:>5}", space.inverse().apply(Some(h), x).to_string()).unwrap();
        }
        out.push('\n');
    }
    out
}

fn execute(cli: Cli, input: &mut dyn BufRead, out: &mut dyn Write) -> Result<(), Failure> {
    let flag = cli.algebra.as_deref();
    let io = |e: std::io::Error| usage(e.to_string());
    match cli.command {
        Command::Domain => {
            let space = resolve_space(flag, None)?;
            write!(out, "{}\n{}", domain_listing(&space), inverse_listing(&space)).map_err(io)?;
        }
        Command::Check { program, safe } => {
            let text = read(&program)?;
            let space = resolve_space(flag, Some((&program, &text)))?;
            let p = parse_program(&text, &space).map_err(|e| usage(format!("{}:{e}", program.display())))?;
            let diags = validate_program(&p, safe);
            if !diags.is_empty() {
                let lines: Vec<String> = diags.iter().map(|d| format!("{}:{d}", program.display())).collect();
                return Err(usage(lines.join("\n")));
            }
            writeln!(out, "ok: {} rules, {} facts", p.rules.len(), p.facts.len()).map_err(io)?;
        }
        Command::Query { program, query, opts } => {
            let p = load_program(flag, &program)?;
            let options = SolveOptions {
                depth: opts.depth,
                threshold: opts.threshold.as_deref().map(|t| parse_level(&p.space, t)).transpose()?,
                best: opts.best,
                exhaustive: opts.exhaustive,
                trace: opts.trace,
                ..SolveOptions::default()
            };
            match query {
                Some(q) => {
                    let q = parse_query(&q).map_err(|e| usage(format!("query:{e}")))?;
                    let (text, incomplete) = answer(&p, &q, &options);
                    out.write_all(text.as_bytes()).map_err(io)?;
                    if incomplete {
                        return Err(resource("search limit reached"));
                    }
                }
                None => repl(&p, &options, input, out).map_err(io)?,
            }
        }
        Command::Model { program, naive, grounding_cap } => {
            let p = load_program(flag, &program)?;
            let fail = |e: FixpointError| match e {
                FixpointError::GroundingLimit { .. } => resource(e.to_string()),
                FixpointError::IterationBound(_) => Failure { code: 3, message: e.to_string() },
            };
            let gp = ground_with_cap(&p, grounding_cap).map_err(fail)?;
            let mode = if naive { Mode::Naive } else { Mode::Delta };
            let lm = least_model_of(&gp, mode, false).map_err(fail)?;
            out.write_all(lm.model.dump(&p.space).as_bytes()).map_err(io)?;
        }
        Command::Surface { control, lukasiewicz } => {
            let text = read(&control)?;
            let space = resolve_space(flag, None)?;
            let cs = parse_control(&text, &space).map_err(|e| usage(format!("{}:{e}", control.display())))?;
            let imp = if lukasiewicz { Implication::Lukasiewicz } else { Implication::Godel };
            let p = compile_control(&cs, imp).map_err(|e| usage(e.to_string()))?;
            let s = goodness_surface(&p, &cs.inputs, &cs.outputs).map_err(|e| Failure { code: 3, message: e.to_string() })?;
            out.write_all(s.render(&space).as_bytes()).map_err(io)?;
        }
        Command::Compile { program, query, out: path } => {
            let p = load_program(flag, &program)?;
            let mut text = compile_program(&p);
            if let Some(q) = query {
                let q = parse_query(&q).map_err(|e| usage(format!("query:{e}")))?;
                writeln!(text, "\n{}", compile_query(&q)).unwrap();
            }
            match path {
                Some(path) => std::fs::write(&path, text).map_err(|e| usage(format!("{}: {e}", path.display())))?,
                None => out.write_all(text.as_bytes()).map_err(io)?,
            }
        }
    }
    Ok(())
}

fn repl(p: &Program, options: &SolveOptions, input: &mut dyn BufRead, out: &mut dyn Write) -> std::io::Result<()> {
    let prompt = std::io::stdin().is_terminal();
    let mut line = String::new();
    loop {
        if prompt {
            write!(out, "?- ")?;
            out.flush()?;
        }
        line.clear();
        if input.read_line(&mut line)? == 0 {
            return Ok(());
        }
        let l = line.trim();
        if l.is_empty() || l.starts_with('%') {
            continue;
        }
        if matches!(l, "halt." | "halt" | "quit") {
            return Ok(());
        }
        match parse_query(l) {
            Ok(q) => out.write_all(answer(p, &q, options).0.as_bytes())?,
            Err(e) => writeln!(out, "error: {e}")?,
        }
    }
}

/// Runs one invocation; returns the exit status.
pub fn run<I, T>(args: I, input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match execute(cli, input, out) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
