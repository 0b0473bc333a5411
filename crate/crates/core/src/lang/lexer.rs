use super::ast::Pos;
use super::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    /// Lower-case or digit initial: predicate, constant, hedge or truth word.
    Ident(String),
    /// Upper-case or `_` initial.
    Var(String),
    Str(String),
    LParen,
    RParen,
    Comma,
    Dot,
    Colon,
    Hash,
    Arrow(char),
    Query,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) | Tok::Var(s) => format!("`{s}`"),
            Tok::Str(s) => format!("\"{s}\""),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Hash => "`#`".into(),
            Tok::Arrow(k) => format!("`<-{k}`"),
            Tok::Query => "`?-`".into(),
        }
    }
}

fn ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

pub fn tokenize(text: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        let advance = |n: usize, i: &mut usize, col: &mut usize| {
            *i += n;
            *col += n;
        };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => advance(1, &mut i, &mut col),
            '%' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
            }
            '(' | ')' | ',' | '.' | ':' | '#' => {
                out.push((
                    match c {
                        '(' => Tok::LParen,
                        ')' => Tok::RParen,
                        ',' => Tok::Comma,
                        '.' => Tok::Dot,
                        ':' => Tok::Colon,
                        _ => Tok::Hash,
                    },
                    pos,
                ));
                advance(1, &mut i, &mut col);
            }
            '?' if chars.get(i + 1) == Some(&'-') => {
                out.push((Tok::Query, pos));
                advance(2, &mut i, &mut col);
            }
            '<' if chars.get(i + 1) == Some(&'-') => {
                let kind = chars.get(i + 2).copied();
                let closed = chars.get(i + 3).map_or(true, |&c| !ident_char(c));
                match kind {
                    Some(k @ ('g' | 'l')) if closed => {
                        out.push((Tok::Arrow(k), pos));
                        advance(3, &mut i, &mut col);
                    }
                    _ => return Err(ParseError::new(pos, "expected `<-g` or `<-l`")),
                }
            }
            '"' => {
                let start = i + 1;
                let mut j = start;
                while j < chars.len() && chars[j] != '"' && chars[j] != '\n' {
                    j += 1;
                }
                if j >= chars.len() || chars[j] != '"' {
                    return Err(ParseError::new(pos, "unterminated string"));
                }
                out.push((Tok::Str(chars[start..j].iter().collect()), pos));
                advance(j + 1 - i, &mut i, &mut col);
            }
            c if ident_char(c) => {
                let start = i;
                let mut j = i;
                while j < chars.len() && ident_char(chars[j]) {
                    j += 1;
                }
                let word: String = chars[start..j].iter().collect();
                let tok = if c.is_uppercase() || c == '_' { Tok::Var(word) } else { Tok::Ident(word) };
                out.push((tok, pos));
                advance(j - i, &mut i, &mut col);
            }
            other => return Err(ParseError::new(pos, format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}
