use std::fmt;

use serde::Serialize;

/// Propositional formula tree.
///
/// Equality, ordering and hashing are structural. Build values through the
/// smart constructors ([`Formula::and`], [`Formula::or`], ...) so that n-ary
/// nodes always carry at least two children; the text printer relies on it
/// for lossless round trips.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Formula {
    Const(bool),
    Var(String),
    Not(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn top() -> Self {
        Formula::Const(true)
    }

    pub fn bottom() -> Self {
        Formula::Const(false)
    }

    pub fn var(name: impl Into<String>) -> Self {
        Formula::Var(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    /// Conjunction; the empty conjunction is `true`, a single conjunct is
    /// returned unchanged.
    pub fn and(items: impl IntoIterator<Item = Formula>) -> Self {
        let mut items: Vec<_> = items.into_iter().collect();
        match items.len() {
            0 => Formula::top(),
            1 => items.pop().unwrap(),
            _ => Formula::And(items),
        }
    }

    /// Disjunction; the empty disjunction is `false`.
    pub fn or(items: impl IntoIterator<Item = Formula>) -> Self {
        let mut items: Vec<_> = items.into_iter().collect();
        match items.len() {
            0 => Formula::bottom(),
            1 => items.pop().unwrap(),
            _ => Formula::Or(items),
        }
    }

    pub fn implies(lhs: Formula, rhs: Formula) -> Self {
        Formula::Implies(Box::new(lhs), Box::new(rhs))
    }

    pub fn iff(lhs: Formula, rhs: Formula) -> Self {
        Formula::Iff(Box::new(lhs), Box::new(rhs))
    }

    /// Distinct variable names in order of first occurrence.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_variables(&mut out);
        out
    }

    pub(crate) fn collect_variables(&self, out: &mut Vec<String>) {
        match self {
            Formula::Const(_) => {}
            Formula::Var(v) => {
                if !out.iter().any(|o| o == v) {
                    out.push(v.clone());
                }
            }
            Formula::Not(f) => f.collect_variables(out),
            Formula::And(fs) | Formula::Or(fs) => fs.iter().for_each(|f| f.collect_variables(out)),
            Formula::Implies(a, b) | Formula::Iff(a, b) => {
                a.collect_variables(out);
                b.collect_variables(out);
            }
        }
    }

    /// Evaluates under `value`, which must answer for every variable.
    pub fn eval(&self, value: &impl Fn(&str) -> bool) -> bool {
        match self {
            Formula::Const(b) => *b,
            Formula::Var(v) => value(v),
            Formula::Not(f) => !f.eval(value),
            Formula::And(fs) => fs.iter().all(|f| f.eval(value)),
            Formula::Or(fs) => fs.iter().any(|f| f.eval(value)),
            Formula::Implies(a, b) => !a.eval(value) || b.eval(value),
            Formula::Iff(a, b) => a.eval(value) == b.eval(value),
        }
    }

    /// Replaces variables for which `subst` returns a formula.
    pub fn substitute(&self, subst: &impl Fn(&str) -> Option<Formula>) -> Formula {
        match self {
            Formula::Const(_) => self.clone(),
            Formula::Var(v) => subst(v).unwrap_or_else(|| self.clone()),
            Formula::Not(f) => Formula::not(f.substitute(subst)),
            Formula::And(fs) => Formula::And(fs.iter().map(|f| f.substitute(subst)).collect()),
            Formula::Or(fs) => Formula::Or(fs.iter().map(|f| f.substitute(subst)).collect()),
            Formula::Implies(a, b) => Formula::implies(a.substitute(subst), b.substitute(subst)),
            Formula::Iff(a, b) => Formula::iff(a.substitute(subst), b.substitute(subst)),
        }
    }

    /// Top-level conjuncts, flattening nested conjunctions.
    pub fn conjuncts(&self) -> Vec<&Formula> {
        match self {
            Formula::And(fs) => fs.iter().flat_map(|f| f.conjuncts()).collect(),
            Formula::Const(true) => Vec::new(),
            _ => vec![self],
        }
    }

    /// `Some((name, polarity))` for a variable or a negated variable.
    pub fn as_literal(&self) -> Option<(&str, bool)> {
        match self {
            Formula::Var(v) => Some((v, true)),
            Formula::Not(inner) => match inner.as_ref() {
                Formula::Var(v) => Some((v, false)),
                _ => None,
            },
            _ => None,
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Iff(..) => 1,
            Formula::Implies(..) => 2,
            Formula::Or(fs) if fs.len() >= 2 => 3,
            Formula::And(fs) if fs.len() >= 2 => 4,
            Formula::Not(_) => 5,
            _ => 6,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "(")?;
            self.fmt_at(f, 0)?;
            return write!(f, ")");
        }
        match self {
            Formula::Const(true) => write!(f, "true"),
            Formula::Const(false) => write!(f, "false"),
            Formula::Var(v) => write!(f, "{v}"),
            Formula::Not(inner) => {
                write!(f, "!")?;
                inner.fmt_at(f, 5)
            }
            Formula::And(fs) | Formula::Or(fs) if fs.len() < 2 => match fs.first() {
                Some(only) => only.fmt_at(f, min),
                None if matches!(self, Formula::And(_)) => write!(f, "true"),
                None => write!(f, "false"),
            },
            Formula::And(fs) => join(f, fs, " & ", 5),
            Formula::Or(fs) => join(f, fs, " | ", 4),
            Formula::Implies(a, b) => {
                a.fmt_at(f, 3)?;
                write!(f, " -> ")?;
                b.fmt_at(f, 2)
            }
            Formula::Iff(a, b) => {
                a.fmt_at(f, 1)?;
                write!(f, " <-> ")?;
                b.fmt_at(f, 2)
            }
        }
    }
}

fn join(f: &mut fmt::Formatter<'_>, items: &[Formula], sep: &str, min: u8) -> fmt::Result {
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            write!(f, "{sep}")?;
        }
        item.fmt_at(f, min)?;
    }
    Ok(())
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

/// Ordered collection of formulae with set semantics for logical purposes.
///
/// Membership is structural: `a & b` and `b & a` are different members.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct FormulaSet(Vec<Formula>);

impl FormulaSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Formula> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Formula] {
        &self.0
    }

    pub fn push(&mut self, f: Formula) {
        self.0.push(f);
    }

    pub fn contains(&self, f: &Formula) -> bool {
        self.0.contains(f)
    }

    /// The same set with structural duplicates removed, first occurrence kept.
    pub fn deduplicated(&self) -> FormulaSet {
        let mut out = FormulaSet::new();
        for f in &self.0 {
            if !out.contains(f) {
                out.push(f.clone());
            }
        }
        out
    }

    /// Set union preserving `self`'s order, then new members of `other`.
    pub fn union(&self, other: &FormulaSet) -> FormulaSet {
        let mut out = self.deduplicated();
        for f in &other.0 {
            if !out.contains(f) {
                out.push(f.clone());
            }
        }
        out
    }

    pub fn with(&self, f: Formula) -> FormulaSet {
        let mut out = self.clone();
        out.push(f);
        out
    }

    /// Members of `self` that are not members of `other`.
    pub fn difference(&self, other: &FormulaSet) -> FormulaSet {
        self.0.iter().filter(|f| !other.contains(f)).cloned().collect()
    }

    pub fn is_subset_of(&self, other: &FormulaSet) -> bool {
        self.0.iter().all(|f| other.contains(f))
    }

    /// Set equality, ignoring order and duplicates.
    pub fn set_eq(&self, other: &FormulaSet) -> bool {
        self.is_subset_of(other) && other.is_subset_of(self)
    }

    pub fn conjunction(&self) -> Formula {
        Formula::and(self.0.iter().cloned())
    }

    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        for f in &self.0 {
            f.collect_variables(&mut out);
        }
        out
    }
}

impl FromIterator<Formula> for FormulaSet {
    fn from_iter<I: IntoIterator<Item = Formula>>(iter: I) -> Self {
        FormulaSet(iter.into_iter().collect())
    }
}

impl From<Vec<Formula>> for FormulaSet {
    fn from(v: Vec<Formula>) -> Self {
        FormulaSet(v)
    }
}

impl IntoIterator for FormulaSet {
    type Item = Formula;
    type IntoIter = std::vec::IntoIter<Formula>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a FormulaSet {
    type Item = &'a Formula;
    type IntoIter = std::slice::Iter<'a, Formula>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for FormulaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, item) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{item}")?;
        }
        write!(f, "}}")
    }
}
