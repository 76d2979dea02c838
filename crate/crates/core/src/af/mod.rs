//! Dung argumentation frameworks and the apx-style text format.

mod stable;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::logic::is_identifier;

pub use stable::{
    is_stable, skeptical_accepted, stable_extensions, AcceptanceReport, ExtensionSet,
    MAX_STABLE_ARGUMENTS,
};
pub(crate) use stable::skeptical_masks;

/// Arguments in declaration order plus an attack relation over them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArgumentationFramework {
    arguments: Vec<String>,
    index: HashMap<String, usize>,
    attacks: BTreeSet<(usize, usize)>,
}

impl ArgumentationFramework {
    pub fn new<I, S>(arguments: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut af = ArgumentationFramework {
            arguments: Vec::new(),
            index: HashMap::new(),
            attacks: BTreeSet::new(),
        };
        for a in arguments {
            let a = a.into();
            if !is_identifier(&a) {
                return Err(Error::Invalid(format!(
                    "argument id `{a}` must match [a-z][a-zA-Z0-9_]*"
                )));
            }
            if af.index.contains_key(&a) {
                return Err(Error::Invalid(format!("argument `{a}` declared twice")));
            }
            af.index.insert(a.clone(), af.arguments.len());
            af.arguments.push(a);
        }
        Ok(af)
    }

    /// Builds an AF from arguments and `(attacker, target)` pairs.
    pub fn from_pairs<'a>(
        arguments: impl IntoIterator<Item = &'a str>,
        attacks: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self> {
        let mut af = Self::new(arguments)?;
        for (x, y) in attacks {
            af.add_attack(x, y)?;
        }
        Ok(af)
    }

    /// Same arguments, attacks given by index pairs.
    pub fn with_attack_indices(&self, attacks: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let n = self.len();
        ArgumentationFramework {
            arguments: self.arguments.clone(),
            index: self.index.clone(),
            attacks: attacks
                .into_iter()
                .inspect(|&(x, y)| assert!(x < n && y < n, "attack index out of range"))
                .collect(),
        }
    }

    pub fn add_attack(&mut self, attacker: &str, target: &str) -> Result<()> {
        let x = self.require(attacker)?;
        let y = self.require(target)?;
        self.attacks.insert((x, y));
        Ok(())
    }

    pub fn remove_attack(&mut self, attacker: &str, target: &str) -> Result<bool> {
        let x = self.require(attacker)?;
        let y = self.require(target)?;
        Ok(self.attacks.remove(&(x, y)))
    }

    pub fn len(&self) -> usize {
        self.arguments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arguments.is_empty()
    }

    pub fn arguments(&self) -> &[String] {
        &self.arguments
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub(crate) fn require(&self, id: &str) -> Result<usize> {
        self.index_of(id)
            .ok_or_else(|| Error::UnknownArgument(id.to_string()))
    }

    pub fn name(&self, i: usize) -> &str {
        &self.arguments[i]
    }

    /// Attacks as index pairs in (attacker, target) declaration order.
    pub fn attack_indices(&self) -> &BTreeSet<(usize, usize)> {
        &self.attacks
    }

    pub fn attacks(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.attacks
            .iter()
            .map(|&(x, y)| (self.arguments[x].as_str(), self.arguments[y].as_str()))
    }

    pub fn has_attack(&self, attacker: &str, target: &str) -> bool {
        match (self.index_of(attacker), self.index_of(target)) {
            (Some(x), Some(y)) => self.attacks.contains(&(x, y)),
            _ => false,
        }
    }

    /// `attackers[y]` has bit `x` set iff `x` attacks `y`.
    pub(crate) fn attacker_masks(&self) -> Vec<u64> {
        let mut masks = vec![0u64; self.len()];
        for &(x, y) in &self.attacks {
            masks[y] |= 1 << x;
        }
        masks
    }

    /// Renders the AF in apx syntax, one fact per line.
    pub fn to_apx(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for ArgumentationFramework {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in &self.arguments {
            writeln!(f, "arg({a}).")?;
        }
        for (x, y) in self.attacks() {
            writeln!(f, "att({x},{y}).")?;
        }
        Ok(())
    }
}

impl Serialize for ArgumentationFramework {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let attacks: Vec<(&str, &str)> = self.attacks().collect();
        let mut st = s.serialize_struct("ArgumentationFramework", 2)?;
        st.serialize_field("arguments", &self.arguments)?;
        st.serialize_field("attacks", &attacks)?;
        st.end()
    }
}

/// Parses `arg(<id>).` and `att(<id>,<id>).` facts. Whitespace is
/// insignificant and `#` comments run to the end of the line.
pub fn parse_af(text: &str) -> Result<ArgumentationFramework> {
    let tokens = lex(text)?;
    let mut args: Vec<(String, usize, usize)> = Vec::new();
    let mut atts: Vec<(String, String, usize, usize)> = Vec::new();
    let mut i = 0;
    let expect = |i: usize, want: &str| -> Result<()> {
        match tokens.get(i) {
            Some(t) if t.text == want => Ok(()),
            Some(t) => Err(Error::parse(
                t.line,
                t.column,
                format!("expected `{want}`, found `{}`", t.text),
            )),
            None => {
                let (line, column) = tokens.last().map(|t| (t.line, t.column)).unwrap_or((1, 1));
                Err(Error::parse(line, column, format!("expected `{want}` before end of input")))
            }
        }
    };
    let ident = |i: usize| -> Result<String> {
        match tokens.get(i) {
            Some(t) if is_identifier(&t.text) => Ok(t.text.clone()),
            Some(t) => Err(Error::parse(
                t.line,
                t.column,
                format!("expected an argument id, found `{}`", t.text),
            )),
            None => Err(Error::parse(1, 1, "unexpected end of input")),
        }
    };
    while i < tokens.len() {
        let head = &tokens[i];
        match head.text.as_str() {
            "arg" => {
                expect(i + 1, "(")?;
                let id = ident(i + 2)?;
                expect(i + 3, ")")?;
                expect(i + 4, ".")?;
                args.push((id, head.line, head.column));
                i += 5;
            }
            "att" => {
                expect(i + 1, "(")?;
                let x = ident(i + 2)?;
                expect(i + 3, ",")?;
                let y = ident(i + 4)?;
                expect(i + 5, ")")?;
                expect(i + 6, ".")?;
                atts.push((x, y, head.line, head.column));
                i += 7;
            }
            other => {
                return Err(Error::parse(
                    head.line,
                    head.column,
                    format!("expected `arg` or `att`, found `{other}`"),
                ))
            }
        }
    }
    let mut af = ArgumentationFramework::new(std::iter::empty::<String>())?;
    for (id, line, column) in args {
        if af.index.contains_key(&id) {
            return Err(Error::parse(line, column, format!("argument `{id}` declared twice")));
        }
        af.index.insert(id.clone(), af.arguments.len());
        af.arguments.push(id);
    }
    for (x, y, line, column) in atts {
        for id in [&x, &y] {
            if !af.index.contains_key(id) {
                return Err(Error::parse(
                    line,
                    column,
                    format!("attack mentions undeclared argument `{id}`"),
                ));
            }
        }
        af.add_attack(&x, &y)?;
    }
    Ok(af)
}

struct Token {
    text: String,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        let chars: Vec<char> = body.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let column = i + 1;
            if c.is_whitespace() {
                i += 1;
            } else if "(),.".contains(c) {
                out.push(Token {
                    text: c.to_string(),
                    line: ln + 1,
                    column,
                });
                i += 1;
            } else if c.is_ascii_alphanumeric() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token {
                    text: chars[start..i].iter().collect(),
                    line: ln + 1,
                    column,
                });
            } else {
                return Err(Error::parse(ln + 1, column, format!("unexpected character `{c}`")));
            }
        }
    }
    Ok(out)
}
