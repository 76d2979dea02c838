//! Deductive arguments, defeaters, exhaustive graphs and enthymemes.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::af::ArgumentationFramework;
use crate::combinations::subsets_up_to;
use crate::error::{Error, Result};
use crate::logic::{entails, is_consistent, parse_formula, relocate, Formula, FormulaSet};
use crate::num::Certainty;

/// Largest belief base [`exhaustive_graph`] will enumerate subsets of.
pub const MAX_EXHAUSTIVE_BASE: usize = 12;

/// Largest pool of extra support formulae [`complete_enthymeme`] draws from.
pub const MAX_COMPLETION_BASE: usize = 24;

/// Default bound on the number of formulae added by a completion.
pub const DEFAULT_MAX_ADDED: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ArgumentKind {
    Deductive,
    Enthymeme,
}

/// An argument `⟨Φ, α⟩`, possibly an enthymeme completed into
/// `⟨Φ ∪ Ψ, β⟩` with `β ⊢ α`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructuredArgument {
    pub id: String,
    pub kind: ArgumentKind,
    pub fixed_support: FormulaSet,
    pub fixed_claim: Formula,
    pub added_support: FormulaSet,
    pub full_claim: Formula,
    /// Set once an enthymeme has been given its hidden part, even when that
    /// part turned out empty.
    pub completed: bool,
}

impl StructuredArgument {
    pub fn deductive(id: impl Into<String>, support: FormulaSet, claim: Formula) -> Self {
        StructuredArgument {
            id: id.into(),
            kind: ArgumentKind::Deductive,
            fixed_support: support,
            full_claim: claim.clone(),
            fixed_claim: claim,
            added_support: FormulaSet::new(),
            completed: true,
        }
    }

    /// A non-completed enthymeme transmitting `⟨support, claim⟩`.
    pub fn enthymeme(id: impl Into<String>, support: FormulaSet, claim: Formula) -> Self {
        StructuredArgument {
            kind: ArgumentKind::Enthymeme,
            completed: false,
            ..Self::deductive(id, support, claim)
        }
    }

    /// This enthymeme with hidden support `added` and claim `full_claim`.
    pub fn completed_with(&self, added: FormulaSet, full_claim: Formula) -> Self {
        StructuredArgument {
            added_support: added,
            full_claim,
            completed: true,
            ..self.clone()
        }
    }

    pub fn is_deductive(&self) -> bool {
        self.kind == ArgumentKind::Deductive
    }

    /// `Φ ∪ Ψ`.
    pub fn support(&self) -> FormulaSet {
        self.fixed_support.union(&self.added_support)
    }

    /// Support together with the full claim.
    pub fn content(&self) -> FormulaSet {
        self.support().with(self.full_claim.clone())
    }

    /// The part the receiver is given: `Φ ∪ {α}`.
    pub fn fixed_content(&self) -> FormulaSet {
        self.fixed_support.with(self.fixed_claim.clone())
    }
}

impl fmt::Display for StructuredArgument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{}, {}⟩", self.support(), self.full_claim)
    }
}

/// Outcome of the four conditions on a deductive argument.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub in_base: bool,
    pub consistent: bool,
    pub entails_claim: bool,
    pub minimal: bool,
    /// Support formulae missing from the base.
    pub outside_base: Vec<Formula>,
    /// Support formulae whose removal still entails the claim.
    pub redundant: Vec<Formula>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.in_base && self.consistent && self.entails_claim && self.minimal
    }

    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.in_base {
            out.push(format!("support not in base: {}", FormulaSet::from(self.outside_base.clone())));
        }
        if !self.consistent {
            out.push("support is inconsistent".into());
        }
        if !self.entails_claim {
            out.push("support does not entail the claim".into());
        }
        if !self.minimal {
            out.push(format!("support is not minimal: {}", FormulaSet::from(self.redundant.clone())));
        }
        out
    }
}

pub fn validate_deductive(support: &FormulaSet, claim: &Formula, base: &FormulaSet) -> ValidationReport {
    let support = support.deduplicated();
    let outside_base: Vec<Formula> = support.iter().filter(|f| !base.contains(f)).cloned().collect();
    let consistent = is_consistent(&support);
    let entails_claim = entails(&support, claim);
    let redundant: Vec<Formula> = if entails_claim {
        support
            .iter()
            .filter(|f| {
                let rest: FormulaSet = support.iter().filter(|g| g != f).cloned().collect();
                entails(&rest, claim)
            })
            .cloned()
            .collect()
    } else {
        Vec::new()
    };
    ValidationReport {
        in_base: outside_base.is_empty(),
        consistent,
        entails_claim,
        minimal: redundant.is_empty(),
        outside_base,
        redundant,
    }
}

/// Whether the claim of `attacker` is inconsistent with the support of `target`.
pub fn is_defeater(attacker: &StructuredArgument, target: &StructuredArgument) -> bool {
    !is_consistent(&target.support().with(attacker.full_claim.clone()))
}

/// All deductive arguments over a base and a claim pool together with the
/// defeater relation among them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExhaustiveGraph {
    pub af: ArgumentationFramework,
    pub arguments: Vec<StructuredArgument>,
}

impl ExhaustiveGraph {
    pub fn get(&self, id: &str) -> Option<&StructuredArgument> {
        self.arguments.iter().find(|a| a.id == id)
    }
}

/// Arguments are numbered `arg1, arg2, …` by support size, then support
/// position in the base, then claim position in the pool.
pub fn exhaustive_graph(base: &FormulaSet, pool: &FormulaSet) -> Result<ExhaustiveGraph> {
    let base = base.deduplicated();
    let pool = pool.deduplicated();
    Error::guard("exhaustive graph base", MAX_EXHAUSTIVE_BASE, base.len())?;
    let items = base.as_slice();
    let mut arguments = Vec::new();
    for subset in subsets_up_to(items.len(), items.len()) {
        let support: FormulaSet = subset.iter().map(|&i| items[i].clone()).collect();
        if !is_consistent(&support) {
            continue;
        }
        for claim in pool.iter() {
            if validate_deductive(&support, claim, &base).is_valid() {
                let id = format!("arg{}", arguments.len() + 1);
                arguments.push(StructuredArgument::deductive(id, support.clone(), claim.clone()));
            }
        }
    }
    let mut af = ArgumentationFramework::new(arguments.iter().map(|a| a.id.clone()))?;
    for x in &arguments {
        for y in &arguments {
            if is_defeater(x, y) {
                af.add_attack(&x.id, &y.id)?;
            }
        }
    }
    Ok(ExhaustiveGraph { af, arguments })
}

/// Certainty degrees of formulae; unlisted formulae have degree 0.
#[derive(Debug, Clone, PartialEq)]
pub struct Certainties<C> {
    degrees: HashMap<Formula, C>,
}

impl<C: Certainty> Default for Certainties<C> {
    fn default() -> Self {
        Certainties {
            degrees: HashMap::new(),
        }
    }
}

impl<C: Certainty> Certainties<C> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, f: Formula, degree: C) -> Result<()> {
        if degree < C::zero() || degree > C::one() {
            return Err(Error::Invalid(format!("certainty {degree} of `{f}` outside [0, 1]")));
        }
        self.degrees.insert(f, degree);
        Ok(())
    }

    pub fn with(mut self, f: Formula, degree: C) -> Result<Self> {
        self.insert(f, degree)?;
        Ok(self)
    }

    pub fn get(&self, f: &Formula) -> C {
        self.degrees.get(f).cloned().unwrap_or_else(C::zero)
    }
}

/// Reads lines `<degree> : <formula>`; blank lines and `#` comments are
/// skipped.
pub fn parse_certainties<C: Certainty>(text: &str) -> Result<Certainties<C>> {
    let mut out = Certainties::new();
    for (i, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let Some((value, formula)) = body.split_once(':') else {
            return Err(Error::parse(i + 1, 1, "expected `<degree> : <formula>`"));
        };
        let column = value.chars().count() + 2;
        let degree = C::parse_value(value)
            .ok_or_else(|| Error::parse(i + 1, 1, format!("bad certainty degree `{}`", value.trim())))?;
        let f = parse_formula(formula).map_err(|e| relocate(e, i + 1, column - 1))?;
        if out.degrees.contains_key(&f) {
            return Err(Error::parse(i + 1, column, format!("certainty of `{f}` given twice")));
        }
        out.insert(f, degree)
            .map_err(|e| Error::parse(i + 1, 1, e.to_string()))?;
    }
    Ok(out)
}

/// Drops the support formulae the receiver is taken to know already, those
/// with certainty at least `tau`.
pub fn make_enthymeme<C: Certainty>(
    arg: &StructuredArgument,
    certainty: &Certainties<C>,
    tau: &C,
) -> Result<StructuredArgument> {
    if !arg.is_deductive() {
        return Err(Error::Invalid(format!("`{}` is already an enthymeme", arg.id)));
    }
    let kept: FormulaSet = arg
        .fixed_support
        .iter()
        .filter(|f| certainty.get(f) < *tau)
        .cloned()
        .collect();
    Ok(StructuredArgument::enthymeme(arg.id.clone(), kept, arg.fixed_claim.clone()))
}

/// Whether `⟨support, claim⟩` abbreviates `d`: its support is a strict
/// subset of d's and d's claim entails `claim`.
pub fn is_enthymeme_for(support: &FormulaSet, claim: &Formula, d: &StructuredArgument) -> bool {
    let full = d.support();
    support.is_subset_of(&full)
        && !full.is_subset_of(support)
        && entails(&FormulaSet::from(vec![d.full_claim.clone()]), claim)
}

/// Every completion `⟨Φ ∪ Ψ, β⟩` of `e` with `Ψ ⊆ base ∖ Φ`, `|Ψ| ≤ max_added`
/// and `β` the transmitted claim or a pool member entailing it.
///
/// Completions need `Φ ∪ Ψ` consistent and entailing `β`; with `strict`
/// the support must also be minimal for `β`. Ordered by `|Ψ|`, then by
/// position of `Ψ` in the base, then by claim (transmitted claim first).
pub fn complete_enthymeme(
    e: &StructuredArgument,
    base: &FormulaSet,
    pool: &FormulaSet,
    max_added: usize,
    strict: bool,
) -> Result<Vec<StructuredArgument>> {
    let extra = base.deduplicated().difference(&e.fixed_support);
    Error::guard("completion base", MAX_COMPLETION_BASE, extra.len())?;
    let claims: Vec<Formula> = FormulaSet::from(vec![e.fixed_claim.clone()])
        .union(pool)
        .deduplicated()
        .into_iter()
        .filter(|b| entails(&FormulaSet::from(vec![b.clone()]), &e.fixed_claim))
        .collect();
    let items = extra.as_slice();
    let mut out = Vec::new();
    for subset in subsets_up_to(items.len(), max_added) {
        let psi: FormulaSet = subset.iter().map(|&i| items[i].clone()).collect();
        let support = e.fixed_support.union(&psi);
        if !is_consistent(&support) {
            continue;
        }
        for beta in &claims {
            if !entails(&support, beta) {
                continue;
            }
            if strict && !validate_deductive(&support, beta, &support).minimal {
                continue;
            }
            out.push(e.completed_with(psi.clone(), beta.clone()));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn set(items: &[&str]) -> FormulaSet {
        items.iter().map(|s| f(s)).collect()
    }

    #[test]
    fn validation_conditions() {
        let d1 = set(&["delta", "delta -> beta & !gamma"]);
        let r = validate_deductive(&d1, &f("beta & !gamma"), &d1);
        assert!(r.is_valid(), "{:?}", r.failures());

        let r = validate_deductive(&set(&["r", "!r"]), &f("q"), &set(&["r", "!r"]));
        assert!(!r.consistent);

        let s = set(&["r", "r -> u", "l"]);
        let r = validate_deductive(&s, &f("u"), &s);
        assert!(!r.minimal);
        assert_eq!(r.redundant, [f("l")]);

        let r = validate_deductive(&set(&["a"]), &f("a"), &FormulaSet::new());
        assert!(!r.in_base);
        assert_eq!(r.outside_base, [f("a")]);
    }

    #[test]
    fn defeaters() {
        let d1 = StructuredArgument::deductive(
            "d1",
            set(&["delta", "delta -> beta & !gamma"]),
            f("beta & !gamma"),
        );
        let d2 = StructuredArgument::deductive("d2", set(&["epsilon", "epsilon -> !delta"]), f("!delta"));
        assert!(is_defeater(&d2, &d1));
        assert!(!is_defeater(&d1, &d2));
        let a = StructuredArgument::deductive("a", set(&["a"]), f("a"));
        let b = StructuredArgument::deductive("b", set(&["b"]), f("b"));
        assert!(!is_defeater(&a, &b));
        let e1 = StructuredArgument::enthymeme("e1", set(&["alpha"]), f("gamma"))
            .completed_with(set(&["alpha -> beta", "beta -> gamma"]), f("gamma"));
        assert!(is_defeater(&e1, &d1));
    }

    #[test]
    fn exhaustive_graphs() {
        let g = exhaustive_graph(&set(&["a", "!a"]), &set(&["a", "!a"])).unwrap();
        assert_eq!(g.af.arguments(), ["arg1", "arg2"]);
        assert!(g.af.has_attack("arg1", "arg2") && g.af.has_attack("arg2", "arg1"));

        let g = exhaustive_graph(&set(&["a", "a -> b", "!b"]), &set(&["b", "!b"])).unwrap();
        assert_eq!(g.arguments.len(), 2);
        assert_eq!(g.arguments[0].fixed_support, set(&["!b"]));
        assert_eq!(g.arguments[1].fixed_support, set(&["a", "a -> b"]));
        assert_eq!(g.af.attacks().count(), 2);

        let g = exhaustive_graph(&FormulaSet::new(), &set(&["a"])).unwrap();
        assert!(g.af.is_empty());

        let big: FormulaSet = (0..13).map(|i| Formula::var(format!("p{i}"))).collect();
        assert!(matches!(exhaustive_graph(&big, &FormulaSet::new()), Err(Error::Resource { .. })));
    }

    #[test]
    fn certainty_files() {
        let c: Certainties<Rational64> =
            parse_certainties("# shared\n0.9 : rain_predicted -> take_umbrella\n1/4: rain_predicted\n").unwrap();
        assert_eq!(c.get(&f("rain_predicted -> take_umbrella")), Rational64::new(9, 10));
        assert_eq!(c.get(&f("rain_predicted")), Rational64::new(1, 4));
        assert_eq!(c.get(&f("sun")), Rational64::from_integer(0));
        assert!(parse_certainties::<Rational64>("1.5 : a\n").is_err());
        assert!(parse_certainties::<Rational64>("x : a\n").is_err());
        let Error::Parse { line, .. } = parse_certainties::<f64>("0.1 : a\n0.2 : a &\n").unwrap_err() else {
            panic!()
        };
        assert_eq!(line, 2);
    }

    #[test]
    fn thresholds() {
        let d = StructuredArgument::deductive(
            "d",
            set(&["rain_predicted", "rain_predicted -> take_umbrella"]),
            f("take_umbrella"),
        );
        let c = Certainties::new()
            .with(f("rain_predicted -> take_umbrella"), Rational64::new(9, 10))
            .unwrap();
        let e = make_enthymeme(&d, &c, &Rational64::new(1, 2)).unwrap();
        assert_eq!(e.fixed_support, set(&["rain_predicted"]));
        assert!(!e.completed);
        let e = make_enthymeme(&d, &c, &Rational64::new(11, 10)).unwrap();
        assert_eq!(e.fixed_support, d.fixed_support);
        let e = make_enthymeme(&d, &c, &Rational64::from_integer(0)).unwrap();
        assert!(e.fixed_support.is_empty());
        assert!(make_enthymeme(&e, &c, &Rational64::from_integer(0)).is_err());
    }

    #[test]
    fn enthymeme_relation() {
        let e1 = StructuredArgument::deductive("d", set(&["alpha", "alpha -> beta", "beta -> gamma"]), f("gamma"));
        assert!(is_enthymeme_for(&set(&["alpha"]), &f("gamma"), &e1));
        let e2 = StructuredArgument::deductive("d", set(&["eta", "eta -> !epsilon"]), f("!epsilon"));
        assert!(is_enthymeme_for(&set(&["eta"]), &Formula::top(), &e2));
        assert!(!is_enthymeme_for(&e2.fixed_support, &e2.fixed_claim, &e2));
    }

    #[test]
    fn completions() {
        let base = set(&["eta", "eta -> iota", "eta -> !epsilon", "alpha", "alpha -> beta", "beta -> gamma"]);
        let e2 = StructuredArgument::enthymeme("e2", set(&["eta"]), Formula::top());
        let all = complete_enthymeme(&e2, &base, &set(&["iota"]), DEFAULT_MAX_ADDED, false).unwrap();
        assert!(all
            .iter()
            .any(|c| c.added_support == set(&["eta -> iota"]) && c.full_claim == f("iota")));
        assert_eq!(all[0].added_support, FormulaSet::new());
        assert_eq!(all[0].full_claim, Formula::top());

        let e1 = StructuredArgument::enthymeme("e1", set(&["alpha"]), f("gamma"));
        let all = complete_enthymeme(&e1, &base, &FormulaSet::new(), DEFAULT_MAX_ADDED, false).unwrap();
        assert!(all.iter().any(|c| c.added_support == set(&["alpha -> beta", "beta -> gamma"])));
        let strict = complete_enthymeme(&e1, &base, &FormulaSet::new(), DEFAULT_MAX_ADDED, true).unwrap();
        assert_eq!(strict.len(), 1);

        let e = StructuredArgument::enthymeme("e", set(&["a"]), f("a"));
        let all = complete_enthymeme(&e, &FormulaSet::new(), &FormulaSet::new(), 3, false).unwrap();
        assert_eq!(all.len(), 1);
        assert!(all[0].added_support.is_empty() && all[0].completed);
    }
}
