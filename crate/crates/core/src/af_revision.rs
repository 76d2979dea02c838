//! Revision of AFs through the att/acc encoding: minimal-change search over
//! attack configurations for goals written with `acc(x)` and `att(x,y)`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::af::{ArgumentationFramework, MAX_STABLE_ARGUMENTS};
use crate::combinations::Combinations;
use crate::encoding::{acc_name, att_name, canonical_model, fixed_att_values, AttAccVocabulary};
use crate::error::{Error, Result};
use crate::logic::{parse_formula_with_atoms, Compiled, Formula, Pos};

/// Upper bound on attack configurations examined by one revision.
pub const MAX_REVISION_CANDIDATES: u64 = 1 << 26;

/// A formula over `acc`/`att` atoms of a fixed argument sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoalFormula {
    arguments: Vec<String>,
    formula: Formula,
}

impl GoalFormula {
    pub fn top(arguments: &[String]) -> Self {
        GoalFormula {
            arguments: arguments.to_vec(),
            formula: Formula::top(),
        }
    }

    /// Wraps a formula already written over `att_x_y` / `acc_x` variables.
    pub fn from_formula(arguments: &[String], formula: Formula) -> Result<Self> {
        let space = AttAccVocabulary::new(arguments)?;
        for v in formula.variables() {
            if !space.vocabulary().contains(&v) {
                return Err(Error::VocabularyMismatch(format!(
                    "`{v}` is not an att/acc variable of the arguments"
                )));
            }
        }
        Ok(GoalFormula {
            arguments: arguments.to_vec(),
            formula,
        })
    }

    pub fn formula(&self) -> &Formula {
        &self.formula
    }

    pub fn arguments(&self) -> &[String] {
        &self.arguments
    }

    pub fn and(&self, other: &GoalFormula) -> Result<GoalFormula> {
        if self.arguments != other.arguments {
            return Err(Error::Invalid("goal formulas over different arguments".into()));
        }
        Ok(GoalFormula {
            arguments: self.arguments.clone(),
            formula: Formula::and([self.formula.clone(), other.formula.clone()]),
        })
    }
}

impl fmt::Display for GoalFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.formula)
    }
}

/// Parses a goal such as `att(t,u) & !acc(c)`.
pub fn parse_goal(text: &str, arguments: &[String]) -> Result<GoalFormula> {
    let known = |id: &str, pos: Pos| -> Result<()> {
        if arguments.iter().any(|a| a == id) {
            Ok(())
        } else {
            Err(Error::parse(pos.line, pos.column, format!("unknown argument `{id}`")))
        }
    };
    let hook = |name: &str, args: &[String], pos: Pos| -> Result<Formula> {
        match (name, args) {
            ("acc", [x]) => {
                known(x, pos)?;
                Ok(Formula::var(acc_name(x)))
            }
            ("att", [x, y]) => {
                known(x, pos)?;
                known(y, pos)?;
                Ok(Formula::var(att_name(x, y)))
            }
            ("acc", _) => Err(Error::parse(pos.line, pos.column, "`acc` takes one argument")),
            ("att", _) => Err(Error::parse(pos.line, pos.column, "`att` takes two arguments")),
            _ => Err(Error::parse(
                pos.line,
                pos.column,
                format!("unknown atom `{name}`, expected `acc(..)` or `att(..,..)`"),
            )),
        }
    };
    let formula = parse_formula_with_atoms(text, &hook)?;
    GoalFormula::from_formula(arguments, formula)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistanceMode {
    /// Every variable weighs 1.
    Dalal,
    /// Att variables weigh `n + 1`, acc variables 1.
    AttWeighted,
    /// Att variables weigh 1, acc variables 0.
    #[default]
    AttOnly,
}

impl DistanceMode {
    /// `(att weight, acc weight)` for an AF with `n` arguments.
    pub fn weights(self, n: usize) -> (u64, u64) {
        match self {
            DistanceMode::Dalal => (1, 1),
            DistanceMode::AttWeighted => (n as u64 + 1, 1),
            DistanceMode::AttOnly => (1, 0),
        }
    }
}

impl FromStr for DistanceMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dalal" => Ok(DistanceMode::Dalal),
            "att-weighted" => Ok(DistanceMode::AttWeighted),
            "att-only" => Ok(DistanceMode::AttOnly),
            _ => Err(Error::Invalid(format!(
                "unknown mode `{s}`, expected dalal, att-weighted or att-only"
            ))),
        }
    }
}

impl fmt::Display for DistanceMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DistanceMode::Dalal => "dalal",
            DistanceMode::AttWeighted => "att-weighted",
            DistanceMode::AttOnly => "att-only",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RevisionEntry {
    pub af: ArgumentationFramework,
    pub accepted: Vec<String>,
    pub vacuous: bool,
    pub att_added: Vec<(String, String)>,
    pub att_removed: Vec<(String, String)>,
    pub acc_changed: Vec<String>,
    pub total_weight: u64,
}

impl RevisionEntry {
    pub fn att_flip_count(&self) -> usize {
        self.att_added.len() + self.att_removed.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct RevisionOutcome {
    pub entries: Vec<RevisionEntry>,
}

impl RevisionOutcome {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn contains_af(&self, af: &ArgumentationFramework) -> bool {
        self.entries.iter().any(|e| e.af == *af)
    }
}

fn braces<T: fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn pairs(items: &[(String, String)]) -> String {
    braces(items.iter().map(|(x, y)| format!("({x},{y})")))
}

impl fmt::Display for RevisionEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.af)?;
        writeln!(f, "accepted: {}", braces(&self.accepted))?;
        if self.vacuous {
            writeln!(f, "vacuous: true")?;
        }
        writeln!(f, "att_added: {}", pairs(&self.att_added))?;
        writeln!(f, "att_removed: {}", pairs(&self.att_removed))?;
        writeln!(f, "acc_changed: {}", braces(&self.acc_changed))?;
        writeln!(f, "weight: {}", self.total_weight)
    }
}

impl fmt::Display for RevisionOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Revises `af` by `goal` under `constraint`.
///
/// Candidates are attack configurations agreeing with the unit literals of
/// `goal ∧ constraint`, visited by increasing number of further att flips
/// away from `af`. The acc part of each candidate is the one forced by the
/// stable theory. Returned entries all have the minimal weight under
/// `mode` and are ordered by att-flip count, then by flipped variables.
pub fn revise_af(
    af: &ArgumentationFramework,
    goal: &GoalFormula,
    constraint: &GoalFormula,
    mode: DistanceMode,
    require_extension: bool,
) -> Result<RevisionOutcome> {
    Error::guard("stable extension arguments", MAX_STABLE_ARGUMENTS, af.len())?;
    if goal.arguments() != af.arguments() || constraint.arguments() != af.arguments() {
        return Err(Error::Invalid("goal is not over the arguments of the AF".into()));
    }
    let n = af.len();
    let space = Arc::new(AttAccVocabulary::for_af(af)?);
    let target = Formula::and([goal.formula.clone(), constraint.formula.clone()]);
    let compiled = Compiled::new(&target, space.vocabulary())?;
    let base_model = canonical_model(af)?;
    let base = base_model.interpretation().values().to_vec();
    let Some(fixed) = fixed_att_values(&space, &target) else {
        return Ok(RevisionOutcome::default());
    };
    let (w_att, w_acc) = mode.weights(n);

    let mut start = base[..n * n].to_vec();
    let mut forced = Vec::new();
    for (i, v) in fixed.iter().enumerate() {
        if let Some(v) = *v {
            if start[i] != v {
                forced.push(i);
            }
            start[i] = v;
        }
    }
    let free: Vec<usize> = (0..n * n).filter(|&i| fixed[i].is_none()).collect();

    let mut best: Option<u64> = None;
    let mut found: Vec<(Vec<usize>, Vec<bool>, bool, u64)> = Vec::new();
    let mut budget = MAX_REVISION_CANDIDATES;
    let mut att = start.clone();
    for k in 0..=free.len() {
        let att_cost = w_att * (forced.len() + k) as u64;
        if let Some(b) = best {
            let done = match mode {
                DistanceMode::Dalal => att_cost > b,
                DistanceMode::AttOnly | DistanceMode::AttWeighted => true,
            };
            if done {
                break;
            }
        }
        for combo in Combinations::new(free.len(), k) {
            if budget == 0 {
                return Err(Error::Resource {
                    what: "revision candidates",
                    limit: MAX_REVISION_CANDIDATES as usize,
                    actual: MAX_REVISION_CANDIDATES as usize + 1,
                });
            }
            budget -= 1;
            for &c in &combo {
                att[free[c]] = !att[free[c]];
            }
            let (values, has_extension) = space.complete(&att);
            if (!require_extension || has_extension) && compiled.eval(&values) {
                let acc_diff = (0..n).filter(|&x| values[n * n + x] != base[n * n + x]).count();
                let total = att_cost + w_acc * acc_diff as u64;
                if best.is_none_or(|b| total <= b) {
                    if best.is_some_and(|b| total < b) {
                        found.clear();
                    }
                    best = Some(total);
                    let mut flipped: Vec<usize> =
                        forced.iter().copied().chain(combo.iter().map(|&c| free[c])).collect();
                    flipped.sort_unstable();
                    found.push((flipped, values, !has_extension, total));
                }
            }
            for &c in &combo {
                att[free[c]] = !att[free[c]];
            }
        }
    }

    found.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    let entries = found
        .into_iter()
        .map(|(flipped, values, vacuous, total)| {
            let revised = af.with_attack_indices(
                (0..n * n).filter(|&i| values[i]).map(|i| (i / n, i % n)),
            );
            let mut att_added = Vec::new();
            let mut att_removed = Vec::new();
            for i in flipped {
                let pair = (af.name(i / n).to_string(), af.name(i % n).to_string());
                if values[i] {
                    att_added.push(pair);
                } else {
                    att_removed.push(pair);
                }
            }
            RevisionEntry {
                accepted: (0..n)
                    .filter(|&x| values[n * n + x])
                    .map(|x| af.name(x).to_string())
                    .collect(),
                acc_changed: (0..n)
                    .filter(|&x| values[n * n + x] != base[n * n + x])
                    .map(|x| af.name(x).to_string())
                    .collect(),
                af: revised,
                vacuous,
                att_added,
                att_removed,
                total_weight: total,
            }
        })
        .collect();
    Ok(RevisionOutcome { entries })
}

/// Attack pairs on which two AFs over the same arguments differ.
pub fn attack_difference(
    a: &ArgumentationFramework,
    b: &ArgumentationFramework,
) -> BTreeSet<(usize, usize)> {
    a.attack_indices()
        .symmetric_difference(b.attack_indices())
        .copied()
        .collect()
}
