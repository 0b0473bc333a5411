use super::ast::{Atom, Body, Fact, Pos, Program, Rule, Term, Var};
use super::lexer::{tokenize, Tok};
use super::ParseError;
use crate::connectives::{Connective, Implication};
use crate::domain::Level;
use crate::TruthSpace;

pub(crate) const RESERVED: [&str; 3] = ["and_g", "and_l", "or"];

struct Parser<'s> {
    toks: Vec<(Tok, Pos)>,
    i: usize,
    end: Pos,
    space: Option<&'s TruthSpace>,
    anon: u32,
}

impl<'s> Parser<'s> {
    fn new(text: &str, space: Option<&'s TruthSpace>) -> Result<Parser<'s>, ParseError> {
        let toks = tokenize(text)?;
        let lines = text.lines().count().max(1);
        let last_len = text.lines().last().map_or(0, |l| l.chars().count());
        Ok(Parser { toks, i: 0, end: Pos { line: lines, col: last_len + 1 }, space, anon: 0 })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|t| &t.0)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.i + k).map(|t| &t.0)
    }

    fn pos(&self) -> Pos {
        self.toks.get(self.i).map_or(self.end, |t| t.1)
    }

    fn at_end(&self) -> bool {
        self.i >= self.toks.len()
    }

    fn bump(&mut self) -> Option<(Tok, Pos)> {
        let t = self.toks.get(self.i).cloned();
        self.i += 1;
        t
    }

    fn error<T>(&self, expected: &str) -> Result<T, ParseError> {
        let found = self.peek().map_or("end of input".to_string(), Tok::describe);
        Err(ParseError::new(self.pos(), format!("expected {expected}, found {found}")))
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<Pos, ParseError> {
        if self.peek() == Some(&tok) {
            Ok(self.bump().expect("peeked").1)
        } else {
            self.error(what)
        }
    }

    fn directive(&mut self) -> Result<Option<String>, ParseError> {
        let is_directive = matches!(self.peek(), Some(Tok::Ident(w)) if w == "use")
            && matches!(self.peek_at(1), Some(Tok::Ident(w)) if w == "algebra");
        if !is_directive {
            return Ok(None);
        }
        self.i += 2;
        let path = match self.bump() {
            Some((Tok::Str(s), _)) => s,
            _ => {
                self.i -= 1;
                return self.error("a quoted algebra path");
            }
        };
        self.expect(Tok::Dot, "`.`")?;
        Ok(Some(path))
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        match self.bump() {
            Some((Tok::Ident(c), _)) => Ok(Term::constant(&c)),
            Some((Tok::Var(v), _)) if v == "_" => {
                self.anon += 1;
                Ok(Term::Var(Var::new(&format!("_{}", self.anon))))
            }
            Some((Tok::Var(v), _)) => Ok(Term::var(&v)),
            _ => {
                self.i -= 1;
                self.error("a constant or variable")
            }
        }
    }

    fn atom(&mut self) -> Result<(Atom, Pos), ParseError> {
        let pos = self.pos();
        let name = match self.peek() {
            Some(Tok::Ident(n)) if n.starts_with(|c: char| c.is_lowercase()) => n.clone(),
            _ => return self.error("a predicate name"),
        };
        self.i += 1;
        let mut args = Vec::new();
        if self.peek() == Some(&Tok::LParen) {
            self.i += 1;
            loop {
                args.push(self.term()?);
                match self.bump() {
                    Some((Tok::Comma, _)) => continue,
                    Some((Tok::RParen, _)) => break,
                    _ => {
                        self.i -= 1;
                        return self.error("`,` or `)`");
                    }
                }
            }
        }
        Ok((Atom::new(&name, args), pos))
    }

    fn body(&mut self) -> Result<Body, ParseError> {
        match self.peek() {
            Some(Tok::Hash) => {
                self.i += 1;
                let pos = self.pos();
                let name = match self.bump() {
                    Some((Tok::Ident(n) | Tok::Var(n), _)) => n,
                    _ => {
                        self.i -= 1;
                        return self.error("a hedge name after `#`");
                    }
                };
                let space = self.space.expect("program parsing has a truth space");
                let h = space
                    .algebra()
                    .find_hedge(&name)
                    .ok_or_else(|| ParseError::new(pos, format!("unknown hedge `{name}`")))?;
                self.expect(Tok::LParen, "`(`")?;
                let inner = self.body()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(Body::Hedge(h, Box::new(inner)))
            }
            Some(Tok::Ident(w)) if RESERVED.contains(&w.as_str()) && self.peek_at(1) == Some(&Tok::LParen) => {
                let op = match w.as_str() {
                    "and_g" => Connective::ConjG,
                    "and_l" => Connective::ConjL,
                    _ => Connective::Disj,
                };
                let pos = self.pos();
                self.i += 2;
                let mut children = vec![self.body()?];
                loop {
                    match self.bump() {
                        Some((Tok::Comma, _)) => children.push(self.body()?),
                        Some((Tok::RParen, _)) => break,
                        _ => {
                            self.i -= 1;
                            return self.error("`,` or `)`");
                        }
                    }
                }
                if children.len() < 2 {
                    return Err(ParseError::new(pos, format!("`{}` needs at least two arguments", op.keyword())));
                }
                Ok(Body::Op(op, children))
            }
            _ => Ok(Body::Atom(self.atom()?.0)),
        }
    }

    fn truth(&mut self) -> Result<Level, ParseError> {
        let pos = self.pos();
        let mut words = Vec::new();
        while let Some(Tok::Ident(w) | Tok::Var(w)) = self.peek() {
            words.push(w.clone());
            self.i += 1;
        }
        if words.is_empty() {
            return self.error("a truth value");
        }
        let space = self.space.expect("program parsing has a truth space");
        let level = space
            .domain()
            .parse_words(words.iter().map(String::as_str))
            .map_err(|e| ParseError::new(pos, e.to_string()))?;
        if level == Level::BOTTOM {
            return Err(ParseError::new(pos, "truth value of a rule or fact must not be absfalse"));
        }
        Ok(level)
    }

    fn statement(&mut self, program: &mut Program) -> Result<(), ParseError> {
        let (head, pos) = self.atom()?;
        if RESERVED.contains(&&*head.pred) {
            return Err(ParseError::new(pos, format!("`{}` is reserved for a connective", head.pred)));
        }
        match self.bump() {
            Some((Tok::Colon, _)) => {
                let tv = self.truth()?;
                self.expect(Tok::Dot, "`.`")?;
                program.facts.push(Fact { atom: head, tv, pos });
            }
            Some((Tok::Arrow(k), _)) => {
                let imp = if k == 'g' { Implication::Godel } else { Implication::Lukasiewicz };
                let body = self.body()?;
                self.expect(Tok::Colon, "`:` and a truth value")?;
                let tv = self.truth()?;
                self.expect(Tok::Dot, "`.`")?;
                program.rules.push(Rule { head, imp, body, tv, pos });
            }
            _ => {
                self.i -= 1;
                return self.error("`:` or `<-g`/`<-l`");
            }
        }
        Ok(())
    }
}

/// Parses a program; truth literals and hedges are resolved against `space`.
pub fn parse_program(text: &str, space: &TruthSpace) -> Result<Program, ParseError> {
    let mut p = Parser::new(text, Some(space))?;
    let mut program = Program::new(space.clone());
    program.algebra_path = p.directive()?;
    while !p.at_end() {
        if p.directive()?.is_some() {
            return Err(ParseError::new(p.pos(), "`use algebra` must come first"));
        }
        p.statement(&mut program)?;
    }
    Ok(program)
}

/// Reads the `use algebra "…".` directive without needing an algebra.
pub fn algebra_directive(text: &str) -> Result<Option<String>, ParseError> {
    Parser::new(text, None)?.directive()
}

/// Parses `?- atom.`; the `?-` and the final `.` are optional.
pub fn parse_query(text: &str) -> Result<Atom, ParseError> {
    let mut p = Parser::new(text, None)?;
    if p.peek() == Some(&Tok::Query) {
        p.i += 1;
    }
    let (atom, _) = p.atom()?;
    if p.peek() == Some(&Tok::Dot) {
        p.i += 1;
    }
    if !p.at_end() {
        return p.error("end of query");
    }
    Ok(atom)
}
