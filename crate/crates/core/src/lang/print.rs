use std::fmt::Write;

use super::ast::{Body, Program};
use crate::algebra::HedgeAlgebra;

pub fn body_to_string(body: &Body, alg: &HedgeAlgebra) -> String {
    let mut out = String::new();
    write_body(&mut out, body, alg);
    out
}

fn write_body(out: &mut String, body: &Body, alg: &HedgeAlgebra) {
    match body {
        Body::Atom(a) => write!(out, "{a}").unwrap(),
        Body::Hedge(h, b) => {
            write!(out, "#{}(", alg.hedge(*h).name).unwrap();
            write_body(out, b, alg);
            out.push(')');
        }
        Body::Op(op, cs) => {
            out.push_str(op.keyword());
            out.push('(');
            for (i, c) in cs.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write_body(out, c, alg);
            }
            out.push(')');
        }
    }
}

/// Source text that parses back to an equal program.
pub fn program_to_string(p: &Program) -> String {
    let d = p.space.domain();
    let mut out = String::new();
    if let Some(path) = &p.algebra_path {
        writeln!(out, "use algebra \"{path}\".").unwrap();
    }
    for r in &p.rules {
        writeln!(
            out,
            "{} {} {} : {}.",
            r.head,
            r.imp.symbol(),
            body_to_string(&r.body, d.algebra()),
            d.literal(r.tv)
        )
        .unwrap();
    }
    for f in &p.facts {
        writeln!(out, "{} : {}.", f.atom, d.literal(f.tv)).unwrap();
    }
    out
}
