//! Enthymeme-based AFs: structured arguments with declared attacks,
//! certain and questionable attacks, integrity constraints and revision.

mod accept;
mod parse;

use std::fmt;

use serde::Serialize;

pub use accept::{acceptable_afs, Acceptability, ChangedAttack};
pub use parse::parse_eaf;

use crate::af::ArgumentationFramework;
use crate::af_revision::{revise_af, DistanceMode, GoalFormula, RevisionOutcome};
use crate::encoding::att_name;
use crate::error::{Error, Result};
use crate::logic::{minimal_conflict_subsets, Formula, FormulaSet};
use crate::structured::{is_defeater, StructuredArgument};

/// Structured arguments and the attacks declared between them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnthymemeAF {
    arguments: Vec<StructuredArgument>,
    af: ArgumentationFramework,
}

impl EnthymemeAF {
    pub fn new(
        arguments: Vec<StructuredArgument>,
        attacks: impl IntoIterator<Item = (String, String)>,
    ) -> Result<Self> {
        let mut af = ArgumentationFramework::new(arguments.iter().map(|a| a.id.clone()))?;
        for (x, y) in attacks {
            af.add_attack(&x, &y)?;
        }
        Ok(EnthymemeAF { arguments, af })
    }

    pub fn arguments(&self) -> &[StructuredArgument] {
        &self.arguments
    }

    /// The plain AF over the argument ids.
    pub fn af(&self) -> &ArgumentationFramework {
        &self.af
    }

    pub fn get(&self, id: &str) -> Option<&StructuredArgument> {
        self.arguments.iter().find(|a| a.id == id)
    }

    pub fn deductive(&self) -> impl Iterator<Item = &StructuredArgument> {
        self.arguments.iter().filter(|a| a.is_deductive())
    }

    pub fn enthymemes(&self) -> impl Iterator<Item = &StructuredArgument> {
        self.arguments.iter().filter(|a| !a.is_deductive())
    }

    fn ids(&self) -> Vec<String> {
        self.af.arguments().to_vec()
    }
}

/// `Φ ∪ {α}`: the transmitted support and claim.
pub fn fixed_part(a: &StructuredArgument) -> FormulaSet {
    a.fixed_content()
}

/// Smallest subsets of `a`'s content inconsistent with `b`'s content.
///
/// Among the ⊆-minimal conflicting subsets only those of minimum size are
/// kept; the result is empty when the two contents are jointly consistent.
pub fn involved_parts(a: &StructuredArgument, b: &StructuredArgument) -> Result<Vec<FormulaSet>> {
    Ok(smallest(minimal_conflict_subsets(&a.content(), &b.content())?))
}

pub(crate) fn smallest(sets: Vec<FormulaSet>) -> Vec<FormulaSet> {
    let Some(min) = sets.iter().map(FormulaSet::len).min() else {
        return sets;
    };
    sets.into_iter().filter(|s| s.len() == min).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AttackClassification {
    pub certain: Vec<(String, String)>,
    pub questionable: Vec<(String, String)>,
    /// Certain attacks between two deductive arguments.
    pub deductive_core: Vec<(String, String)>,
    pub warnings: Vec<String>,
    /// Certain attacks that have an involved part outside a fixed part too.
    pub notes: Vec<String>,
}

impl AttackClassification {
    pub fn is_certain(&self, x: &str, y: &str) -> bool {
        self.certain.iter().any(|(a, b)| a == x && b == y)
    }

    pub fn is_questionable(&self, x: &str, y: &str) -> bool {
        self.questionable.iter().any(|(a, b)| a == x && b == y)
    }
}

impl fmt::Display for AttackClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (x, y) in &self.certain {
            writeln!(f, "certain: ({x},{y})")?;
        }
        for (x, y) in &self.questionable {
            writeln!(f, "questionable: ({x},{y})")?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        for w in &self.warnings {
            writeln!(f, "warning: {w}")?;
        }
        Ok(())
    }
}

fn sets(items: &[FormulaSet]) -> String {
    let parts: Vec<String> = items.iter().map(|s| s.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Splits the declared attacks into certain and questionable ones.
///
/// `(x, y)` is certain when some involved part of `x` lies within
/// `fix(x)` and some involved part of `y` lies within `fix(y)`.
pub fn classify_attacks(eaf: &EnthymemeAF) -> Result<AttackClassification> {
    let mut out = AttackClassification {
        certain: Vec::new(),
        questionable: Vec::new(),
        deductive_core: Vec::new(),
        warnings: Vec::new(),
        notes: Vec::new(),
    };
    for (xs, ys) in eaf.af.attacks() {
        let x = eaf.get(xs).expect("declared argument");
        let y = eaf.get(ys).expect("declared argument");
        let inv_x = involved_parts(x, y)?;
        let inv_y = involved_parts(y, x)?;
        let pair = (xs.to_string(), ys.to_string());
        if inv_x.is_empty() {
            out.warnings.push(format!(
                "declared attack ({xs},{ys}) has no logical conflict between the contents"
            ));
            out.questionable.push(pair);
            continue;
        }
        let fx = fixed_part(x);
        let fy = fixed_part(y);
        let in_x = inv_x.iter().any(|s| s.is_subset_of(&fx));
        let in_y = inv_y.iter().any(|s| s.is_subset_of(&fy));
        if in_x && in_y {
            for (arg, inv, fix) in [(x, &inv_x, &fx), (y, &inv_y, &fy)] {
                if inv.iter().any(|s| !s.is_subset_of(fix)) {
                    let other = if arg.id == xs { ys } else { xs };
                    out.notes.push(format!(
                        "({xs},{ys}) is certain although the involved parts of {} against {other} are {}, not all inside fix({}) = {}",
                        arg.id,
                        sets(inv),
                        arg.id,
                        fix
                    ));
                }
            }
            if x.is_deductive() && y.is_deductive() {
                out.deductive_core.push(pair.clone());
            }
            out.certain.push(pair);
        } else {
            out.questionable.push(pair);
        }
    }
    for x in eaf.arguments() {
        for y in eaf.arguments() {
            if !eaf.af.has_attack(&x.id, &y.id) && is_defeater(x, y) {
                out.warnings.push(format!(
                    "{} defeats {} but the attack ({},{}) is not declared",
                    x.id, y.id, x.id, y.id
                ));
            }
        }
    }
    Ok(out)
}

fn literal(x: &str, y: &str, present: bool) -> Formula {
    let v = Formula::var(att_name(x, y));
    if present {
        v
    } else {
        Formula::not(v)
    }
}

fn goal(eaf: &EnthymemeAF, literals: Vec<Formula>) -> GoalFormula {
    GoalFormula::from_formula(&eaf.ids(), Formula::and(literals))
        .expect("literals are built from declared ids")
}

/// Fixes every attack and non-attack between deductive arguments.
pub fn constraint_deductive(eaf: &EnthymemeAF) -> GoalFormula {
    let mut lits = Vec::new();
    for x in eaf.deductive() {
        for y in eaf.deductive() {
            lits.push(literal(&x.id, &y.id, eaf.af.has_attack(&x.id, &y.id)));
        }
    }
    goal(eaf, lits)
}

/// Keeps every certain attack and forbids new attacks between deductive
/// arguments.
pub fn constraint_certain(eaf: &EnthymemeAF, classification: &AttackClassification) -> GoalFormula {
    let mut lits: Vec<Formula> = classification
        .certain
        .iter()
        .map(|(x, y)| literal(x, y, true))
        .collect();
    for x in eaf.deductive() {
        for y in eaf.deductive() {
            let core = classification
                .deductive_core
                .iter()
                .any(|(a, b)| *a == x.id && *b == y.id);
            if !core {
                lits.push(literal(&x.id, &y.id, false));
            }
        }
    }
    goal(eaf, lits)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConstraintMode {
    #[default]
    Deductive,
    Certain,
    None,
}

impl std::str::FromStr for ConstraintMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "deductive" => Ok(ConstraintMode::Deductive),
            "certain" => Ok(ConstraintMode::Certain),
            "none" => Ok(ConstraintMode::None),
            _ => Err(Error::Invalid(format!(
                "unknown constraint mode `{s}`, expected deductive, certain or none"
            ))),
        }
    }
}

/// Parses a goal over the argument ids of `eaf`.
pub fn parse_eaf_goal(eaf: &EnthymemeAF, text: &str) -> Result<GoalFormula> {
    crate::af_revision::parse_goal(text, &eaf.ids())
}

pub fn revise_eaf(
    eaf: &EnthymemeAF,
    goal: &GoalFormula,
    constraint_mode: ConstraintMode,
    mode: DistanceMode,
    require_extension: bool,
) -> Result<RevisionOutcome> {
    let constraint = match constraint_mode {
        ConstraintMode::Deductive => constraint_deductive(eaf),
        ConstraintMode::Certain => constraint_certain(eaf, &classify_attacks(eaf)?),
        ConstraintMode::None => GoalFormula::top(&eaf.ids()),
    };
    revise_af(&eaf.af, goal, &constraint, mode, require_extension)
}
