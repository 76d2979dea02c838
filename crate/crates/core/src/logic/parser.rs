//! Recursive-descent parser for the formula grammar.
//!
//! Operators from loosest to tightest: `<->` (left associative), `->` (right
//! associative), `|`, `&`, `!`. Atoms are identifiers matching
//! `[a-z][a-zA-Z0-9_]*`, the constants `true` and `false`, and parenthesized
//! formulae. `#` starts a comment that runs to the end of the line.
//!
//! Chains of the same n-ary operator are flattened into one node, so
//! `a & b & c` is a single three-way conjunction while `(a & b) & c` keeps
//! its nesting.

use super::formula::Formula;
use crate::error::{Error, Result};

/// 1-based source position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    True,
    False,
    Not,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
    Comma,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::True => "`true`".into(),
            Tok::False => "`false`".into(),
            Tok::Not => "`!`".into(),
            Tok::And => "`&`".into(),
            Tok::Or => "`|`".into(),
            Tok::Implies => "`->`".into(),
            Tok::Iff => "`<->`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
        }
    }
}

/// Callback resolving a functional atom such as `acc(x)` or `att(x,y)`.
pub type AtomHook<'a> = dyn Fn(&str, &[String], Pos) -> Result<Formula> + 'a;

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses a single formula.
pub fn parse_formula(text: &str) -> Result<Formula> {
    parse_with(text, None)
}

/// Parses a formula whose atoms may take the form `name(arg, ...)`, each of
/// which is resolved by `hook`.
pub fn parse_formula_with_atoms(text: &str, hook: &AtomHook<'_>) -> Result<Formula> {
    parse_with(text, Some(hook))
}

fn parse_with(text: &str, hook: Option<&AtomHook<'_>>) -> Result<Formula> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        at: 0,
        end: end_pos(text),
        hook,
    };
    if p.tokens.is_empty() {
        return Err(Error::parse(p.end.line, p.end.column, "empty formula"));
    }
    let f = p.iff()?;
    if let Some((tok, pos)) = p.tokens.get(p.at) {
        return Err(Error::parse(
            pos.line,
            pos.column,
            format!("unexpected {}", tok.describe()),
        ));
    }
    Ok(f)
}

fn end_pos(text: &str) -> Pos {
    let mut pos = Pos { line: 1, column: 1 };
    for c in text.chars() {
        if c == '\n' {
            pos.line += 1;
            pos.column = 1;
        } else {
            pos.column += 1;
        }
    }
    pos
}

fn tokenize(text: &str) -> Result<Vec<(Tok, Pos)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, column };
        let mut width = 1;
        match c {
            '\n' => {
                line += 1;
                column = 1;
                i += 1;
                continue;
            }
            c if c.is_whitespace() => {}
            '#' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
                continue;
            }
            '!' => out.push((Tok::Not, pos)),
            '&' => out.push((Tok::And, pos)),
            '|' => out.push((Tok::Or, pos)),
            '(' => out.push((Tok::LParen, pos)),
            ')' => out.push((Tok::RParen, pos)),
            ',' => out.push((Tok::Comma, pos)),
            '-' if chars.get(i + 1) == Some(&'>') => {
                out.push((Tok::Implies, pos));
                width = 2;
            }
            '<' if chars.get(i + 1) == Some(&'-') && chars.get(i + 2) == Some(&'>') => {
                out.push((Tok::Iff, pos));
                width = 3;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i + width < chars.len()
                    && (chars[i + width].is_ascii_alphanumeric() || chars[i + width] == '_')
                {
                    width += 1;
                }
                let word: String = chars[start..start + width].iter().collect();
                let tok = match word.as_str() {
                    "true" => Tok::True,
                    "false" => Tok::False,
                    w if is_identifier(w) => Tok::Ident(word),
                    _ => {
                        return Err(Error::parse(
                            line,
                            column,
                            format!("invalid identifier `{word}` (must match [a-z][a-zA-Z0-9_]*)"),
                        ))
                    }
                };
                out.push((tok, pos));
            }
            other => {
                return Err(Error::parse(
                    line,
                    column,
                    format!("unexpected character `{other}`"),
                ))
            }
        }
        i += width;
        column += width;
    }
    Ok(out)
}

struct Parser<'t, 'h> {
    tokens: Vec<(Tok, Pos)>,
    at: usize,
    end: Pos,
    hook: Option<&'t AtomHook<'h>>,
}

impl Parser<'_, '_> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> Pos {
        self.tokens.get(self.at).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        if self.eat(&tok) {
            return Ok(());
        }
        let pos = self.pos();
        let found = self
            .peek()
            .map(|t| t.describe())
            .unwrap_or_else(|| "end of input".into());
        Err(Error::parse(
            pos.line,
            pos.column,
            format!("expected {}, found {found}", tok.describe()),
        ))
    }

    fn iff(&mut self) -> Result<Formula> {
        let mut lhs = self.implies()?;
        while self.eat(&Tok::Iff) {
            let rhs = self.implies()?;
            lhs = Formula::iff(lhs, rhs);
        }
        Ok(lhs)
    }

    fn implies(&mut self) -> Result<Formula> {
        let lhs = self.or()?;
        if self.eat(&Tok::Implies) {
            let rhs = self.implies()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula> {
        let mut items = vec![self.and()?];
        while self.eat(&Tok::Or) {
            items.push(self.and()?);
        }
        Ok(Formula::or(items))
    }

    fn and(&mut self) -> Result<Formula> {
        let mut items = vec![self.unary()?];
        while self.eat(&Tok::And) {
            items.push(self.unary()?);
        }
        Ok(Formula::and(items))
    }

    fn unary(&mut self) -> Result<Formula> {
        if self.eat(&Tok::Not) {
            return Ok(Formula::not(self.unary()?));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Formula> {
        let pos = self.pos();
        let Some((tok, _)) = self.tokens.get(self.at).cloned() else {
            return Err(Error::parse(pos.line, pos.column, "unexpected end of input"));
        };
        self.at += 1;
        match tok {
            Tok::True => Ok(Formula::top()),
            Tok::False => Ok(Formula::bottom()),
            Tok::LParen => {
                let inner = self.iff()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Tok::Ident(name) if self.peek() == Some(&Tok::LParen) => {
                let Some(hook) = self.hook else {
                    return Err(Error::parse(
                        pos.line,
                        pos.column,
                        format!("`{name}(...)` atoms are not allowed here"),
                    ));
                };
                self.at += 1;
                let mut args = Vec::new();
                loop {
                    let apos = self.pos();
                    match self.tokens.get(self.at).cloned() {
                        Some((Tok::Ident(a), _)) => {
                            self.at += 1;
                            args.push(a);
                        }
                        _ => {
                            return Err(Error::parse(
                                apos.line,
                                apos.column,
                                format!("expected an argument identifier in `{name}(...)`"),
                            ))
                        }
                    }
                    if !self.eat(&Tok::Comma) {
                        break;
                    }
                }
                self.expect(Tok::RParen)?;
                hook(&name, &args, pos)
            }
            Tok::Ident(name) => Ok(Formula::Var(name)),
            other => Err(Error::parse(
                pos.line,
                pos.column,
                format!("unexpected {}", other.describe()),
            )),
        }
    }
}
