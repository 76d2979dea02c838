//! Argumentation frameworks built from deductive arguments and enthymemes,
//! and their revision.
//!
//! The crate layers, bottom up:
//!
//! - [`logic`]: propositional formulae, models, entailment and minimal
//!   conflicting subsets;
//! - [`revision`]: Hamming and weighted distances and the Dalal operator;
//! - [`af`]: Dung AFs, stable extensions and skeptical acceptance;
//! - [`encoding`]: the att/acc propositional encoding of AFs;
//! - [`af_revision`]: minimal-change revision of AFs by acc/att goals;
//! - [`structured`]: deductive arguments, defeaters and enthymemes;
//! - [`eaf`]: enthymeme-based AFs, attack classification and acceptable AFs.
//!
//! Weights and certainty degrees are generic over [`num::Weight`] and
//! [`num::Certainty`]; the aliases below fix the usual choices.

pub mod af;
pub mod af_revision;
pub mod combinations;
pub mod eaf;
pub mod encoding;
pub mod error;
pub mod logic;
pub mod num;
pub mod revision;
pub mod structured;

pub use af::{parse_af, ArgumentationFramework};
pub use af_revision::{parse_goal, revise_af, DistanceMode, GoalFormula, RevisionOutcome};
pub use eaf::{parse_eaf, EnthymemeAF};
pub use error::{Error, Result};
pub use logic::{parse_formula, Formula, FormulaSet, Interpretation, Vocabulary};
pub use structured::StructuredArgument;

/// Exact rational used for certainty degrees and thresholds.
pub type Rational = num_rational::Rational64;

/// Integer flip costs.
pub type WeightMap = revision::Weights<u64>;

pub type DistanceProfile = revision::Distance<u64>;

pub type CertaintyMap = structured::Certainties<Rational>;

pub type CertaintyMapF64 = structured::Certainties<f64>;
