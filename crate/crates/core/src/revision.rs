//! Model-based revision: Hamming and weighted distances, minimal-model
//! selection and the Dalal operator.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::logic::{models, Formula, Interpretation, Vocabulary};
use crate::num::Weight;

/// Per-variable flip costs with a default for unlisted variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weights<W> {
    default: W,
    overrides: HashMap<String, W>,
}

impl<W: Weight> Weights<W> {
    pub fn uniform(default: W) -> Self {
        Weights {
            default,
            overrides: HashMap::new(),
        }
    }

    pub fn unit() -> Self
    where
        W: One,
    {
        Self::uniform(W::one())
    }

    pub fn with(mut self, name: impl Into<String>, weight: W) -> Self {
        self.overrides.insert(name.into(), weight);
        self
    }

    pub fn set(&mut self, name: impl Into<String>, weight: W) {
        self.overrides.insert(name.into(), weight);
    }

    pub fn weight(&self, name: &str) -> W {
        self.overrides.get(name).unwrap_or(&self.default).clone()
    }

    fn any_positive(&self, vocab: &Vocabulary) -> bool {
        vocab.names().iter().any(|n| self.weight(n) > W::zero())
    }
}

/// Weighted distance between two interpretations together with the flipped
/// variables (vocabulary order).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Distance<W> {
    pub total: W,
    pub flips: Vec<String>,
}

/// Number of variables on which `i` and `j` differ.
pub fn hamming(i: &Interpretation, j: &Interpretation) -> Result<usize> {
    i.same_vocabulary(j)?;
    Ok(i.values().iter().zip(j.values()).filter(|(a, b)| a != b).count())
}

pub fn weighted_distance<W: Weight>(
    i: &Interpretation,
    j: &Interpretation,
    w: &Weights<W>,
) -> Result<Distance<W>> {
    i.same_vocabulary(j)?;
    let mut total = W::zero();
    let mut flips = Vec::new();
    for ((name, a), b) in i.vocabulary().names().iter().zip(i.values()).zip(j.values()) {
        if a != b {
            total = total + w.weight(name);
            flips.push(name.clone());
        }
    }
    Ok(Distance { total, flips })
}

/// Smallest weighted distance from `i` to a member of `base`; `None` for an
/// empty base.
pub fn min_distance<W: Weight>(
    i: &Interpretation,
    base: &[Interpretation],
    w: &Weights<W>,
) -> Result<Option<W>> {
    let mut best: Option<W> = None;
    for b in base {
        let d = weighted_distance(i, b, w)?.total;
        if best.as_ref().is_none_or(|cur| d < *cur) {
            best = Some(d);
        }
    }
    Ok(best)
}

/// Members of `candidates` whose distance to `base` is minimal, in canonical
/// order.
pub fn minimal_models<W: Weight>(
    base: &[Interpretation],
    candidates: &[Interpretation],
    w: &Weights<W>,
) -> Result<Vec<Interpretation>> {
    if candidates.is_empty() {
        return Ok(Vec::new());
    }
    if base.is_empty() {
        return Err(Error::Invalid("minimal-model selection needs a non-empty base".into()));
    }
    if !w.any_positive(candidates[0].vocabulary()) {
        return Err(Error::Invalid("weight map assigns zero to every variable".into()));
    }
    let mut scored = Vec::with_capacity(candidates.len());
    for c in candidates {
        let d = min_distance(c, base, w)?.expect("base is non-empty");
        scored.push((d, c));
    }
    let best = scored.iter().map(|(d, _)| d.clone()).min().unwrap();
    let mut out: Vec<Interpretation> = scored
        .into_iter()
        .filter(|(d, _)| *d == best)
        .map(|(_, c)| c.clone())
        .collect();
    out.sort();
    Ok(out)
}

/// Dalal revision of `phi` by `alpha` over `vocab`.
///
/// An inconsistent `phi` yields every model of `alpha`.
pub fn dalal_revise(
    phi: &Formula,
    alpha: &Formula,
    vocab: &Arc<Vocabulary>,
) -> Result<Vec<Interpretation>> {
    let base = models(phi, vocab)?;
    let candidates = models(alpha, vocab)?;
    if base.is_empty() {
        return Ok(candidates);
    }
    minimal_models(&base, &candidates, &Weights::<u64>::unit())
}

impl<W: Weight> Default for Weights<W>
where
    W: One,
{
    fn default() -> Self {
        Self::unit()
    }
}
