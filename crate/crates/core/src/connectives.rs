//! Truth functions over domain levels.

use std::fmt;

use crate::domain::Level;
use crate::lang::Body;
use crate::TruthSpace;

/// Implication of a rule, paired with its t-norm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Implication {
    Godel,
    Lukasiewicz,
}

impl Implication {
    pub const ALL: [Implication; 2] = [Implication::Godel, Implication::Lukasiewicz];

    /// `C_i(a, b)`.
    pub fn t_norm(self, a: Level, b: Level, top: Level) -> Level {
        match self {
            Implication::Godel => a.min(b),
            Implication::Lukasiewicz => luka(a, b, top),
        }
    }

    /// Residuum `←ᵢ(head, body)`.
    pub fn residuum(self, head: Level, body: Level, top: Level) -> Level {
        if body <= head {
            return top;
        }
        match self {
            Implication::Godel => head,
            Implication::Lukasiewicz => Level(top.0 + head.0 - body.0),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Implication::Godel => "<-g",
            Implication::Lukasiewicz => "<-l",
        }
    }
}

impl fmt::Display for Implication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Implication::Godel => "G",
            Implication::Lukasiewicz => "L",
        })
    }
}

fn luka(a: Level, b: Level, top: Level) -> Level {
    let s = a.0 + b.0;
    if s > top.0 {
        Level(s - top.0)
    } else {
        Level::BOTTOM
    }
}

/// The three n-ary body connectives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Connective {
    ConjG,
    ConjL,
    Disj,
}

impl Connective {
    pub fn apply(self, a: Level, b: Level, top: Level) -> Level {
        match self {
            Connective::ConjG => a.min(b),
            Connective::ConjL => luka(a, b, top),
            Connective::Disj => a.max(b),
        }
    }

    /// Left fold over a non-empty argument list.
    pub fn fold(self, args: impl IntoIterator<Item = Level>, top: Level) -> Level {
        let mut it = args.into_iter();
        let first = it.next().expect("connective arguments are non-empty");
        it.fold(first, |acc, x| self.apply(acc, x, top))
    }

    pub fn keyword(self) -> &'static str {
        match self {
            Connective::ConjG => "and_g",
            Connective::ConjL => "and_l",
            Connective::Disj => "or",
        }
    }
}

/// Evaluates a ground body under a valuation of its atoms; returns the first
/// atom the valuation has no value for as the error.
pub fn eval_body<A: Clone>(
    body: &Body<A>,
    space: &TruthSpace,
    valuation: &mut impl FnMut(&A) -> Option<Level>,
) -> Result<Level, A> {
    Ok(match body {
        Body::Atom(a) => valuation(a).ok_or_else(|| a.clone())?,
        Body::Hedge(h, b) => space.inverse().apply(Some(*h), eval_body(b, space, valuation)?),
        Body::Op(op, children) => {
            let mut acc = None;
            for c in children {
                let v = eval_body(c, space, valuation)?;
                acc = Some(match acc {
                    None => v,
                    Some(a) => op.apply(a, v, space.top()),
                });
            }
            acc.expect("connective arguments are non-empty")
        }
    })
}
