//! Syntax of fuzzy linguistic logic programs.
//!
//! ```text
//! use algebra "vmpl.alg".
//! gd_em(X) <-g and_g(#very(st_hd(X)), #probably(hira_un(X))) : very more true.
//! hira_un(ann) : very true.
//! ?- gd_em(ann).
//! ```

mod ast;
mod lexer;
mod parser;
mod print;
mod validate;

use std::fmt;

use thiserror::Error;

pub use ast::{Atom, Body, Fact, Pos, Program, Rule, Term, Var};
pub use parser::{algebra_directive, parse_program, parse_query};
pub use print::{body_to_string, program_to_string};
pub use validate::{validate_program, Diagnostic, DiagnosticKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub pos: Pos,
    pub message: String,
}

impl ParseError {
    pub fn new(pos: Pos, message: impl Into<String>) -> ParseError {
        ParseError { pos, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.pos, self.message)
    }
}
