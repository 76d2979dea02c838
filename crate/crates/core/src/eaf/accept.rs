//! Acceptable AFs: revised AFs whose attack changes can be explained by
//! recompleting enthymemes from the agent's belief base.

use std::fmt;

use serde::Serialize;

use super::{smallest, EnthymemeAF};
use crate::af::ArgumentationFramework;
use crate::af_revision::RevisionOutcome;
use crate::error::{Error, Result};
use crate::logic::{entails, is_consistent, minimal_conflict_subsets, FormulaSet};
use crate::structured::{complete_enthymeme, StructuredArgument};

/// Largest number of joint completion assignments examined per AF.
pub const MAX_JOINT_ASSIGNMENTS: usize = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChangedAttack {
    pub attacker: String,
    pub target: String,
    /// Whether the attack is present in the revised AF.
    pub present: bool,
}

impl fmt::Display for ChangedAttack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.present { '+' } else { '-' };
        write!(f, "{sign}({},{})", self.attacker, self.target)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Acceptability {
    pub af: ArgumentationFramework,
    pub changed: Vec<ChangedAttack>,
    pub acceptable: bool,
    /// One completion per enthymeme touching a changed attack.
    pub witness: Vec<StructuredArgument>,
    pub reason: Option<String>,
}

impl fmt::Display for Acceptability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.af)?;
        let changed: Vec<String> = self.changed.iter().map(|c| c.to_string()).collect();
        writeln!(f, "changed: {{{}}}", changed.join(", "))?;
        writeln!(f, "acceptable: {}", self.acceptable)?;
        for w in &self.witness {
            writeln!(f, "witness: {} = {}", w.id, w)?;
        }
        if let Some(r) = &self.reason {
            writeln!(f, "reason: {r}")?;
        }
        Ok(())
    }
}

struct Candidate {
    arg: StructuredArgument,
    /// `(identity, non-minimal, |Ψ|)`.
    cost: (usize, usize, usize),
}

fn candidates(
    e: &StructuredArgument,
    base: &FormulaSet,
    pool: &FormulaSet,
    max_added: usize,
) -> Result<Vec<Candidate>> {
    let fresh = StructuredArgument::enthymeme(e.id.clone(), e.fixed_support.clone(), e.fixed_claim.clone());
    Ok(complete_enthymeme(&fresh, base, pool, max_added, false)?
        .into_iter()
        .map(|arg| {
            let identity = arg.added_support.is_empty() && arg.full_claim == arg.fixed_claim;
            let minimal = arg.added_support.iter().all(|psi| {
                let rest: FormulaSet = arg.support().iter().filter(|f| *f != psi).cloned().collect();
                !entails(&rest, &arg.full_claim)
            });
            let size = arg.added_support.len();
            Candidate {
                arg,
                cost: (identity as usize, !minimal as usize, size),
            }
        })
        .collect())
}

/// Checks every entry of `outcome` for acceptability.
///
/// Only attacks that changed and involve an enthymeme are examined: a
/// present attack needs jointly inconsistent contents, an absent one jointly
/// consistent contents. Enthymemes are recompleted with
/// [`complete_enthymeme`] and the witness minimizes, in order, the number of
/// completions that add nothing, the number whose added support is
/// redundant, and the total number of added formulae.
pub fn acceptable_afs(
    eaf: &EnthymemeAF,
    outcome: &RevisionOutcome,
    base: &FormulaSet,
    pool: &FormulaSet,
    max_added: usize,
) -> Result<Vec<Acceptability>> {
    let mut out = Vec::with_capacity(outcome.len());
    for entry in &outcome.entries {
        out.push(check(eaf, &entry.af, base, pool, max_added)?);
    }
    Ok(out)
}

fn check(
    eaf: &EnthymemeAF,
    revised: &ArgumentationFramework,
    base: &FormulaSet,
    pool: &FormulaSet,
    max_added: usize,
) -> Result<Acceptability> {
    let original = eaf.af();
    if revised.arguments() != original.arguments() {
        return Err(Error::Invalid("revised AF has different arguments".into()));
    }
    let args = eaf.arguments();
    let mut changed = Vec::new();
    let mut pairs = Vec::new();
    for &(x, y) in original.attack_indices().symmetric_difference(revised.attack_indices()) {
        if args[x].is_deductive() && args[y].is_deductive() {
            continue;
        }
        let present = revised.attack_indices().contains(&(x, y));
        changed.push(ChangedAttack {
            attacker: args[x].id.clone(),
            target: args[y].id.clone(),
            present,
        });
        pairs.push((x, y, present));
    }
    let mut result = Acceptability {
        af: revised.clone(),
        changed,
        acceptable: true,
        witness: Vec::new(),
        reason: None,
    };
    if pairs.is_empty() {
        return Ok(result);
    }

    // fixed-part conflicts survive any completion
    for &(x, y, present) in &pairs {
        let fx = args[x].fixed_content();
        let fy = args[y].fixed_content();
        if !present && !is_consistent(&fx.union(&fy)) {
            let ix = smallest(minimal_conflict_subsets(&fx, &fy)?);
            let iy = smallest(minimal_conflict_subsets(&fy, &fx)?);
            result.acceptable = false;
            result.reason = Some(format!(
                "removed attack ({},{}) cannot be justified: the fixed parts conflict, {} against {}",
                args[x].id,
                args[y].id,
                ix.first().cloned().unwrap_or_default(),
                iy.first().cloned().unwrap_or_default()
            ));
            return Ok(result);
        }
    }

    let mut touched: Vec<usize> = pairs
        .iter()
        .flat_map(|&(x, y, _)| [x, y])
        .filter(|&i| !args[i].is_deductive())
        .collect();
    touched.sort_unstable();
    touched.dedup();
    let mut options: Vec<Vec<Candidate>> = Vec::with_capacity(touched.len());
    for &i in &touched {
        options.push(candidates(&args[i], base, pool, max_added)?);
    }
    let slot = |i: usize| touched.iter().position(|&t| t == i);

    // pairs nobody can satisfy on their own give the clearest reason
    for &(x, y, present) in &pairs {
        let xs: Vec<&StructuredArgument> = match slot(x) {
            Some(s) => options[s].iter().map(|c| &c.arg).collect(),
            None => vec![&args[x]],
        };
        let ys: Vec<&StructuredArgument> = match slot(y) {
            Some(s) => options[s].iter().map(|c| &c.arg).collect(),
            None => vec![&args[y]],
        };
        let possible = if x == y {
            xs.iter().any(|a| is_consistent(&a.content()) != present)
        } else {
            xs.iter().any(|a| {
                ys.iter()
                    .any(|b| is_consistent(&a.content().union(&b.content())) != present)
            })
        };
        if !possible {
            result.acceptable = false;
            result.reason = Some(format!(
                "no completion with at most {max_added} added formulae makes the contents of {} and {} {}",
                args[x].id,
                args[y].id,
                if present { "conflict" } else { "consistent" }
            ));
            return Ok(result);
        }
    }

    let total: usize = options.iter().map(Vec::len).try_fold(1usize, |acc, n| acc.checked_mul(n)).unwrap_or(usize::MAX);
    Error::guard("joint completion assignments", MAX_JOINT_ASSIGNMENTS, total)?;

    let mut best: Option<((usize, usize, usize), Vec<usize>)> = None;
    let mut choice = vec![0usize; touched.len()];
    'outer: loop {
        {
            let content = |i: usize| match slot(i) {
                Some(s) => options[s][choice[s]].arg.content(),
                None => args[i].content(),
            };
            let ok = pairs
                .iter()
                .all(|&(x, y, present)| is_consistent(&content(x).union(&content(y))) != present);
            if ok {
                let cost = choice.iter().zip(&options).fold((0, 0, 0), |acc, (&c, o)| {
                    let k = o[c].cost;
                    (acc.0 + k.0, acc.1 + k.1, acc.2 + k.2)
                });
                if best.as_ref().is_none_or(|(b, _)| cost < *b) {
                    best = Some((cost, choice.clone()));
                }
            }
        }
        // odometer with the last enthymeme varying fastest
        let mut i = touched.len();
        loop {
            if i == 0 {
                break 'outer;
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < options[i].len() {
                break;
            }
            choice[i] = 0;
        }
    }
    match best {
        Some((_, choice)) => {
            result.witness = choice
                .iter()
                .zip(&options)
                .map(|(&c, o)| o[c].arg.clone())
                .collect();
        }
        None => {
            result.acceptable = false;
            result.reason = Some(format!(
                "no joint completion with at most {max_added} added formulae per enthymeme fits every changed attack"
            ));
        }
    }
    Ok(result)
}
