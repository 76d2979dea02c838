//! Propositional logic: formulae, parsing, models, entailment and minimal
//! conflicting subsets.

mod formula;
mod parser;
pub mod sat;
mod vocab;

pub use formula::{Formula, FormulaSet};
pub use parser::{is_identifier, parse_formula, parse_formula_with_atoms, AtomHook, Pos};
pub use sat::models;
pub use vocab::{Interpretation, Vocabulary};

pub(crate) use vocab::Compiled;

use crate::combinations::Combinations;
use crate::error::{Error, Result};

/// Default bound on the candidate set of [`minimal_conflict_subsets`].
pub const CONFLICT_CANDIDATE_LIMIT: usize = 16;

/// Whether the conjunction of `fs` has a model.
pub fn is_consistent(fs: &FormulaSet) -> bool {
    sat::satisfiable(&fs.conjunction())
}

/// `fs ⊢ f`, decided as inconsistency of `fs ∪ {¬f}`.
pub fn entails(fs: &FormulaSet, f: &Formula) -> bool {
    !is_consistent(&fs.with(Formula::not(f.clone())))
}

pub fn equivalent(a: &Formula, b: &Formula) -> bool {
    !sat::satisfiable(&Formula::not(Formula::iff(a.clone(), b.clone())))
}

/// All ⊆-minimal subsets of `candidates` that are inconsistent together
/// with `context`, smallest first and lexicographic within a size.
///
/// Empty when `candidates ∪ context` is consistent. Structural duplicates in
/// `candidates` are ignored.
pub fn minimal_conflict_subsets(
    candidates: &FormulaSet,
    context: &FormulaSet,
) -> Result<Vec<FormulaSet>> {
    minimal_conflict_subsets_bounded(candidates, context, CONFLICT_CANDIDATE_LIMIT)
}

pub fn minimal_conflict_subsets_bounded(
    candidates: &FormulaSet,
    context: &FormulaSet,
    bound: usize,
) -> Result<Vec<FormulaSet>> {
    let candidates = candidates.deduplicated();
    Error::guard("conflict candidates", bound, candidates.len())?;
    if is_consistent(&candidates.union(context)) {
        return Ok(Vec::new());
    }
    let items = candidates.as_slice();
    let mut found: Vec<u64> = Vec::new();
    let mut out = Vec::new();
    for k in 0..=items.len() {
        for combo in Combinations::new(items.len(), k) {
            let mask = combo.iter().fold(0u64, |m, &i| m | 1 << i);
            // Supersets of a conflict are conflicts but never minimal.
            if found.iter().any(|&f| mask | f == mask) {
                continue;
            }
            let subset: FormulaSet = combo.iter().map(|&i| items[i].clone()).collect();
            if !is_consistent(&subset.union(context)) {
                found.push(mask);
                out.push(subset);
            }
        }
    }
    Ok(out)
}

/// Reads a belief base: one formula per line, blank lines and `#` comments
/// ignored.
pub fn parse_formula_lines(text: &str) -> Result<FormulaSet> {
    let mut out = FormulaSet::new();
    for (i, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let f = parse_formula(body).map_err(|e| relocate(e, i + 1, 0))?;
        out.push(f);
    }
    Ok(out)
}

/// Shifts a parse error found in a fragment to its place in a larger text.
pub(crate) fn relocate(e: Error, line: usize, column_offset: usize) -> Error {
    match e {
        Error::Parse {
            line: l,
            column,
            message,
        } => Error::Parse {
            line: line + l - 1,
            column: if l == 1 { column + column_offset } else { column },
            message,
        },
        other => other,
    }
}
