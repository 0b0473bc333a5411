//! Fuzzy linguistic logic programming over hedge-algebra truth domains.
//!
//! Truth values are linguistic terms such as `very more true`, drawn from a
//! finite domain enumerated from an l-limited hedge algebra. Programs are
//! graded rules and facts whose bodies may apply hedges to subformulas.
//! Queries are answered top-down ([`solve`]) or read off the least Herbrand
//! model ([`fixpoint`]).

pub mod algebra;
pub mod cli;
pub mod config;
pub mod connectives;
pub mod control;
pub mod domain;
pub mod fixpoint;
pub mod inverse;
pub mod lang;
pub mod prolog;
pub mod solve;

use std::sync::Arc;

use crate::algebra::HedgeAlgebra;
use crate::domain::{Level, TruthDomain};
use crate::inverse::InverseTable;

pub use crate::config::{default_space, load_space};
pub use crate::connectives::Implication;
pub use crate::lang::{parse_program, parse_query, Atom, Body, Program};

/// A truth domain together with its inverse mappings. Cheap to clone.
#[derive(Debug, Clone)]
pub struct TruthSpace {
    domain: Arc<TruthDomain>,
    inverse: Arc<InverseTable>,
}

impl TruthSpace {
    pub fn new(domain: Arc<TruthDomain>, inverse: InverseTable) -> TruthSpace {
        TruthSpace { domain, inverse: Arc::new(inverse) }
    }

    pub fn algebra(&self) -> &HedgeAlgebra {
        self.domain.algebra()
    }

    pub fn domain(&self) -> &TruthDomain {
        &self.domain
    }

    pub fn inverse(&self) -> &InverseTable {
        &self.inverse
    }

    /// Level of `1`.
    pub fn top(&self) -> Level {
        self.domain.top()
    }
}
