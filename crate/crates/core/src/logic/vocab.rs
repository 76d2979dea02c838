use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::formula::Formula;
use crate::error::{Error, Result};

/// Ordered sequence of distinct variable names.
///
/// The order is the canonical enumeration order: interpretations are listed
/// lexicographically over it with `false < true`.
#[derive(Debug, Clone)]
pub struct Vocabulary {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl Vocabulary {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut vocab = Vocabulary {
            names: Vec::new(),
            index: HashMap::new(),
        };
        for name in names {
            let name = name.into();
            if vocab.index.contains_key(&name) {
                return Err(Error::Invalid(format!("duplicate variable `{name}` in vocabulary")));
            }
            vocab.index.insert(name.clone(), vocab.names.len());
            vocab.names.push(name);
        }
        Ok(vocab)
    }

    /// Variables of `f` in order of first occurrence.
    pub fn of(f: &Formula) -> Self {
        Self::new(f.variables()).expect("variables() yields distinct names")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    /// Fails with the first variable of `f` outside the vocabulary.
    pub fn check(&self, f: &Formula) -> Result<()> {
        match f.variables().into_iter().find(|v| !self.contains(v)) {
            Some(v) => Err(Error::VocabularyMismatch(v)),
            None => Ok(()),
        }
    }
}

impl PartialEq for Vocabulary {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for Vocabulary {}

/// Truth assignment over a vocabulary.
#[derive(Debug, Clone)]
pub struct Interpretation {
    vocab: Arc<Vocabulary>,
    values: Vec<bool>,
}

impl Interpretation {
    pub fn from_values(vocab: Arc<Vocabulary>, values: Vec<bool>) -> Self {
        assert_eq!(vocab.len(), values.len(), "one truth value per variable");
        Interpretation { vocab, values }
    }

    pub fn from_true_set<I, S>(vocab: Arc<Vocabulary>, true_set: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut values = vec![false; vocab.len()];
        for name in true_set {
            let name = name.as_ref();
            let i = vocab
                .index_of(name)
                .ok_or_else(|| Error::VocabularyMismatch(name.to_string()))?;
            values[i] = true;
        }
        Ok(Interpretation { vocab, values })
    }

    pub fn vocabulary(&self) -> &Arc<Vocabulary> {
        &self.vocab
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        self.vocab.index_of(name).map(|i| self.values[i])
    }

    /// True variables in vocabulary order.
    pub fn true_set(&self) -> Vec<&str> {
        self.vocab
            .names()
            .iter()
            .zip(&self.values)
            .filter(|(_, v)| **v)
            .map(|(n, _)| n.as_str())
            .collect()
    }

    pub fn satisfies(&self, f: &Formula) -> Result<bool> {
        Ok(Compiled::new(f, &self.vocab)?.eval(&self.values))
    }

    pub(crate) fn same_vocabulary(&self, other: &Interpretation) -> Result<()> {
        if Arc::ptr_eq(&self.vocab, &other.vocab) || self.vocab == other.vocab {
            return Ok(());
        }
        let stray = other
            .vocab
            .names()
            .iter()
            .chain(self.vocab.names())
            .find(|n| !self.vocab.contains(n) || !other.vocab.contains(n))
            .cloned()
            .unwrap_or_else(|| "<vocabulary order differs>".into());
        Err(Error::VocabularyMismatch(stray))
    }
}

impl PartialEq for Interpretation {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values && *self.vocab == *other.vocab
    }
}

impl Eq for Interpretation {}

impl PartialOrd for Interpretation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Interpretation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vocab
            .names
            .cmp(&other.vocab.names)
            .then_with(|| self.values.cmp(&other.values))
    }
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.true_set().join(","))
    }
}

/// Formula with variables resolved to vocabulary indices.
#[derive(Debug, Clone)]
pub(crate) enum Compiled {
    Const(bool),
    Var(usize),
    Not(Box<Compiled>),
    And(Vec<Compiled>),
    Or(Vec<Compiled>),
    Implies(Box<Compiled>, Box<Compiled>),
    Iff(Box<Compiled>, Box<Compiled>),
}

impl Compiled {
    pub(crate) fn new(f: &Formula, vocab: &Vocabulary) -> Result<Self> {
        Ok(match f {
            Formula::Const(b) => Compiled::Const(*b),
            Formula::Var(v) => Compiled::Var(
                vocab
                    .index_of(v)
                    .ok_or_else(|| Error::VocabularyMismatch(v.clone()))?,
            ),
            Formula::Not(g) => Compiled::Not(Box::new(Self::new(g, vocab)?)),
            Formula::And(gs) => {
                Compiled::And(gs.iter().map(|g| Self::new(g, vocab)).collect::<Result<_>>()?)
            }
            Formula::Or(gs) => {
                Compiled::Or(gs.iter().map(|g| Self::new(g, vocab)).collect::<Result<_>>()?)
            }
            Formula::Implies(a, b) => {
                Compiled::Implies(Box::new(Self::new(a, vocab)?), Box::new(Self::new(b, vocab)?))
            }
            Formula::Iff(a, b) => {
                Compiled::Iff(Box::new(Self::new(a, vocab)?), Box::new(Self::new(b, vocab)?))
            }
        })
    }

    pub(crate) fn eval(&self, values: &[bool]) -> bool {
        match self {
            Compiled::Const(b) => *b,
            Compiled::Var(i) => values[*i],
            Compiled::Not(g) => !g.eval(values),
            Compiled::And(gs) => gs.iter().all(|g| g.eval(values)),
            Compiled::Or(gs) => gs.iter().any(|g| g.eval(values)),
            Compiled::Implies(a, b) => !a.eval(values) || b.eval(values),
            Compiled::Iff(a, b) => a.eval(values) == b.eval(values),
        }
    }

    /// Kleene three-valued evaluation; `None` marks an unknown value.
    pub(crate) fn eval_partial(&self, values: &[Option<bool>]) -> Option<bool> {
        match self {
            Compiled::Const(b) => Some(*b),
            Compiled::Var(i) => values[*i],
            Compiled::Not(g) => g.eval_partial(values).map(|b| !b),
            Compiled::And(gs) => {
                let mut known = true;
                for g in gs {
                    match g.eval_partial(values) {
                        Some(false) => return Some(false),
                        None => known = false,
                        Some(true) => {}
                    }
                }
                known.then_some(true)
            }
            Compiled::Or(gs) => {
                let mut known = true;
                for g in gs {
                    match g.eval_partial(values) {
                        Some(true) => return Some(true),
                        None => known = false,
                        Some(false) => {}
                    }
                }
                known.then_some(false)
            }
            Compiled::Implies(a, b) => match (a.eval_partial(values), b.eval_partial(values)) {
                (Some(false), _) | (_, Some(true)) => Some(true),
                (Some(true), Some(false)) => Some(false),
                _ => None,
            },
            Compiled::Iff(a, b) => match (a.eval_partial(values), b.eval_partial(values)) {
                (Some(x), Some(y)) => Some(x == y),
                _ => None,
            },
        }
    }
}
