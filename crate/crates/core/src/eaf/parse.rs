//! Reader for the EAF text format.
//!
//! ```text
//! deductive d1 { support: delta ; delta -> beta & !gamma
//!                claim: beta & !gamma }
//! enthymeme e2 { support: eta
//!                claim: true
//!                added_support: eta -> !epsilon
//!                full_claim: !epsilon }
//! att(e2,d2).
//! ```

use super::EnthymemeAF;
use crate::af::ArgumentationFramework;
use crate::error::{Error, Result};
use crate::logic::{entails, is_consistent, is_identifier, parse_formula, relocate, Formula, FormulaSet};
use crate::structured::{validate_deductive, StructuredArgument};

const FIELDS: [&str; 4] = ["support", "claim", "added_support", "full_claim"];

struct Source {
    chars: Vec<char>,
    /// `(line, column)` of each char, 1-based.
    pos: Vec<(usize, usize)>,
}

impl Source {
    fn new(text: &str) -> Self {
        let mut chars = Vec::new();
        let mut pos = Vec::new();
        for (ln, line) in text.split('\n').enumerate() {
            let mut in_comment = false;
            for (col, c) in line.chars().enumerate() {
                in_comment |= c == '#';
                chars.push(if in_comment { ' ' } else { c });
                pos.push((ln + 1, col + 1));
            }
            chars.push('\n');
            pos.push((ln + 1, line.chars().count() + 1));
        }
        Source { chars, pos }
    }

    fn at(&self, i: usize) -> (usize, usize) {
        self.pos.get(i).copied().unwrap_or_else(|| self.pos.last().copied().unwrap_or((1, 1)))
    }

    fn error(&self, i: usize, message: impl Into<String>) -> Error {
        let (line, column) = self.at(i);
        Error::parse(line, column, message)
    }

    fn skip_ws(&self, mut i: usize) -> usize {
        while i < self.chars.len() && self.chars[i].is_whitespace() {
            i += 1;
        }
        i
    }

    fn word(&self, i: usize) -> (String, usize) {
        let mut j = i;
        while j < self.chars.len() && (self.chars[j].is_ascii_alphanumeric() || self.chars[j] == '_') {
            j += 1;
        }
        (self.chars[i..j].iter().collect(), j)
    }

    fn expect(&self, i: usize, c: char) -> Result<usize> {
        let i = self.skip_ws(i);
        if self.chars.get(i) == Some(&c) {
            Ok(i + 1)
        } else {
            let found = self.chars.get(i).map_or("end of input".to_string(), |c| format!("`{c}`"));
            Err(self.error(i, format!("expected `{c}`, found {found}")))
        }
    }

    fn formula(&self, start: usize, end: usize) -> Result<Formula> {
        let text: String = self.chars[start..end].iter().collect();
        let (line, column) = self.at(start);
        parse_formula(&text).map_err(|e| relocate(e, line, column - 1))
    }

    fn formula_list(&self, start: usize, end: usize) -> Result<FormulaSet> {
        let mut out = FormulaSet::new();
        let mut piece = start;
        for i in start..=end {
            if i == end || self.chars[i] == ';' {
                if self.chars[piece..i].iter().any(|c| !c.is_whitespace()) {
                    out.push(self.formula(piece, i)?);
                }
                piece = i + 1;
            }
        }
        Ok(out)
    }
}

#[derive(Default)]
struct Fields {
    support: Option<FormulaSet>,
    claim: Option<Formula>,
    added_support: Option<FormulaSet>,
    full_claim: Option<Formula>,
}

/// Field keywords inside a block body: `(field, start of keyword, start of value)`.
fn field_marks(src: &Source, start: usize, end: usize) -> Vec<(&'static str, usize, usize)> {
    let mut marks = Vec::new();
    let mut i = start;
    while i < end {
        let boundary = i == 0 || !(src.chars[i - 1].is_ascii_alphanumeric() || src.chars[i - 1] == '_');
        if boundary && src.chars[i].is_ascii_lowercase() {
            let (w, j) = src.word(i);
            let k = src.skip_ws(j);
            if let Some(field) = FIELDS.iter().find(|f| **f == w) {
                if k < end && src.chars[k] == ':' {
                    marks.push((*field, i, k + 1));
                    i = k + 1;
                    continue;
                }
            }
            i = j.max(i + 1);
            continue;
        }
        i += 1;
    }
    marks
}

fn block_fields(src: &Source, start: usize, end: usize) -> Result<Fields> {
    let marks = field_marks(src, start, end);
    let first = marks.first().map_or(end, |m| m.1);
    if let Some(i) = (start..first).find(|&i| !src.chars[i].is_whitespace()) {
        return Err(src.error(i, "expected a field such as `support:` or `claim:`"));
    }
    let mut fields = Fields::default();
    for (n, &(name, at, value)) in marks.iter().enumerate() {
        let stop = marks.get(n + 1).map_or(end, |m| m.1);
        let twice = || src.error(at, format!("field `{name}` given twice"));
        match name {
            "support" => {
                if fields.support.replace(src.formula_list(value, stop)?).is_some() {
                    return Err(twice());
                }
            }
            "added_support" => {
                if fields.added_support.replace(src.formula_list(value, stop)?).is_some() {
                    return Err(twice());
                }
            }
            "claim" => {
                if fields.claim.replace(src.formula(value, stop)?).is_some() {
                    return Err(twice());
                }
            }
            _ => {
                if fields.full_claim.replace(src.formula(value, stop)?).is_some() {
                    return Err(twice());
                }
            }
        }
    }
    Ok(fields)
}

fn build(kind: &str, id: &str, fields: Fields, src: &Source, at: usize) -> Result<StructuredArgument> {
    let invalid = |reason: String| Error::InvalidArgument {
        id: id.to_string(),
        reason,
    };
    let support = fields
        .support
        .ok_or_else(|| src.error(at, format!("argument `{id}` has no `support:` field")))?;
    let claim = fields
        .claim
        .ok_or_else(|| src.error(at, format!("argument `{id}` has no `claim:` field")))?;
    if kind == "deductive" {
        if fields.added_support.is_some() || fields.full_claim.is_some() {
            return Err(src.error(at, format!("deductive argument `{id}` cannot have completion fields")));
        }
        let report = validate_deductive(&support, &claim, &support);
        if !report.is_valid() {
            return Err(invalid(report.failures().join("; ")));
        }
        return Ok(StructuredArgument::deductive(id, support, claim));
    }
    let completed = fields.added_support.is_some() || fields.full_claim.is_some();
    let mut arg = StructuredArgument::enthymeme(id, support, claim.clone());
    if completed {
        arg = arg.completed_with(
            fields.added_support.unwrap_or_default(),
            fields.full_claim.unwrap_or(claim),
        );
    }
    if !entails(&FormulaSet::from(vec![arg.full_claim.clone()]), &arg.fixed_claim) {
        return Err(invalid(format!(
            "full claim `{}` does not entail claim `{}`",
            arg.full_claim, arg.fixed_claim
        )));
    }
    if !is_consistent(&arg.support()) {
        return Err(invalid(format!("support {} is inconsistent", arg.support())));
    }
    if completed && !entails(&arg.support(), &arg.full_claim) {
        return Err(invalid(format!(
            "support {} does not entail full claim `{}`",
            arg.support(),
            arg.full_claim
        )));
    }
    Ok(arg)
}

pub fn parse_eaf(text: &str) -> Result<EnthymemeAF> {
    let src = Source::new(text);
    let mut arguments: Vec<StructuredArgument> = Vec::new();
    let mut attacks: Vec<(String, String, usize)> = Vec::new();
    let mut i = src.skip_ws(0);
    while i < src.chars.len() {
        let (head, j) = src.word(i);
        match head.as_str() {
            "deductive" | "enthymeme" => {
                let k = src.skip_ws(j);
                let (id, after_id) = src.word(k);
                if !is_identifier(&id) {
                    return Err(src.error(k, "expected an argument id"));
                }
                if arguments.iter().any(|a| a.id == id) {
                    return Err(src.error(k, format!("argument `{id}` declared twice")));
                }
                let open = src.expect(after_id, '{')?;
                let close = (open..src.chars.len())
                    .find(|&c| src.chars[c] == '}')
                    .ok_or_else(|| src.error(open - 1, "unclosed `{`"))?;
                let fields = block_fields(&src, open, close)?;
                arguments.push(build(&head, &id, fields, &src, i)?);
                i = close + 1;
            }
            "att" => {
                let open = src.expect(j, '(')?;
                let k = src.skip_ws(open);
                let (x, after_x) = src.word(k);
                if !is_identifier(&x) {
                    return Err(src.error(k, "expected an argument id"));
                }
                let comma = src.expect(after_x, ',')?;
                let k = src.skip_ws(comma);
                let (y, after_y) = src.word(k);
                if !is_identifier(&y) {
                    return Err(src.error(k, "expected an argument id"));
                }
                let close = src.expect(after_y, ')')?;
                let dot = src.expect(close, '.')?;
                attacks.push((x, y, i));
                i = dot;
            }
            _ => {
                return Err(src.error(
                    i,
                    "expected `deductive`, `enthymeme` or `att`".to_string(),
                ))
            }
        }
        i = src.skip_ws(i);
    }
    let mut af = ArgumentationFramework::new(arguments.iter().map(|a| a.id.clone()))?;
    for (x, y, at) in attacks {
        for id in [&x, &y] {
            if af.index_of(id).is_none() {
                return Err(src.error(at, format!("attack mentions undeclared argument `{id}`")));
            }
        }
        af.add_attack(&x, &y)?;
    }
    Ok(EnthymemeAF { arguments, af })
}
