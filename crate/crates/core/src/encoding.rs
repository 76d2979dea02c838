//! Propositional att/acc encoding of AFs under stable semantics.
//!
//! For arguments `x, y` the vocabulary holds `att_<x>_<y>` (x attacks y) for
//! every ordered pair, in pair-lexicographic order of argument positions,
//! followed by `acc_<x>` (x is skeptically accepted) for every argument.
//!
//! The stable theory is handled semantically: for a fixed attack relation
//! the acc values are determined, namely by skeptical acceptance with every
//! argument accepted when no stable extension exists. The explicit
//! quantifier-expanded formula is available through
//! [`emit_stable_encoding`] for small AFs.

use std::sync::Arc;

use crate::af::{skeptical_accepted, skeptical_masks, ArgumentationFramework, MAX_STABLE_ARGUMENTS};
use crate::error::{Error, Result};
use crate::logic::{Compiled, Formula, Interpretation, Vocabulary};

/// Largest argument count accepted by [`emit_stable_encoding`].
pub const MAX_EMIT_ARGUMENTS: usize = 4;

/// Largest number of unfixed att variables [`theory_models`] will enumerate.
pub const MAX_FREE_ATT_VARIABLES: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Att(usize, usize),
    Acc(usize),
}

pub fn att_name(x: &str, y: &str) -> String {
    format!("att_{x}_{y}")
}

pub fn acc_name(x: &str) -> String {
    format!("acc_{x}")
}

/// The att/acc variables over a fixed argument sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttAccVocabulary {
    arguments: Vec<String>,
    vocab: Arc<Vocabulary>,
}

impl AttAccVocabulary {
    /// Fails when two roles would mangle to the same variable name.
    pub fn new(arguments: &[String]) -> Result<Self> {
        let mut names = Vec::with_capacity(arguments.len() * (arguments.len() + 1));
        for x in arguments {
            for y in arguments {
                names.push(att_name(x, y));
            }
        }
        names.extend(arguments.iter().map(|x| acc_name(x)));
        let vocab = Vocabulary::new(names).map_err(|_| {
            Error::Invalid(format!(
                "argument ids {arguments:?} produce ambiguous att/acc variable names"
            ))
        })?;
        Ok(AttAccVocabulary {
            arguments: arguments.to_vec(),
            vocab: Arc::new(vocab),
        })
    }

    pub fn for_af(af: &ArgumentationFramework) -> Result<Self> {
        Self::new(af.arguments())
    }

    pub fn arguments(&self) -> &[String] {
        &self.arguments
    }

    pub fn argument_count(&self) -> usize {
        self.arguments.len()
    }

    pub fn vocabulary(&self) -> &Arc<Vocabulary> {
        &self.vocab
    }

    pub fn len(&self) -> usize {
        self.vocab.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vocab.is_empty()
    }

    pub fn att_count(&self) -> usize {
        self.arguments.len() * self.arguments.len()
    }

    pub fn att_index(&self, x: usize, y: usize) -> usize {
        x * self.arguments.len() + y
    }

    pub fn acc_index(&self, x: usize) -> usize {
        self.att_count() + x
    }

    pub fn role_of_index(&self, i: usize) -> Role {
        let n = self.arguments.len();
        if i < n * n {
            Role::Att(i / n, i % n)
        } else {
            Role::Acc(i - n * n)
        }
    }

    /// Role of a variable name, resolved against the declared arguments.
    pub fn role(&self, name: &str) -> Option<Role> {
        self.vocab.index_of(name).map(|i| self.role_of_index(i))
    }

    /// Full truth vector for an attack configuration, acc values completed
    /// by the stable theory. Also returns whether a stable extension exists.
    pub(crate) fn complete(&self, att: &[bool]) -> (Vec<bool>, bool) {
        let n = self.arguments.len();
        let mut attackers = vec![0u64; n];
        for x in 0..n {
            for (y, mask) in attackers.iter_mut().enumerate() {
                if att[x * n + y] {
                    *mask |= 1 << x;
                }
            }
        }
        let (accepted, count) = skeptical_masks(&attackers);
        let mut values = Vec::with_capacity(n * n + n);
        values.extend_from_slice(&att[..n * n]);
        values.extend((0..n).map(|x| accepted >> x & 1 == 1));
        (values, count > 0)
    }

    pub(crate) fn model(self: &Arc<Self>, values: Vec<bool>) -> EncodedModel {
        EncodedModel {
            interpretation: Interpretation::from_values(self.vocab.clone(), values),
            space: self.clone(),
        }
    }
}

/// An interpretation over an [`AttAccVocabulary`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodedModel {
    space: Arc<AttAccVocabulary>,
    interpretation: Interpretation,
}

impl EncodedModel {
    pub fn new(space: Arc<AttAccVocabulary>, interpretation: Interpretation) -> Result<Self> {
        if interpretation.vocabulary().names() != space.vocab.names() {
            return Err(Error::VocabularyMismatch(
                "interpretation is not over the att/acc vocabulary".into(),
            ));
        }
        Ok(EncodedModel {
            space,
            interpretation,
        })
    }

    /// Builds a model from the names of its true att and acc variables.
    pub fn from_true_set<I, S>(space: Arc<AttAccVocabulary>, true_set: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let interpretation = Interpretation::from_true_set(space.vocab.clone(), true_set)?;
        Ok(EncodedModel {
            space,
            interpretation,
        })
    }

    pub fn space(&self) -> &Arc<AttAccVocabulary> {
        &self.space
    }

    pub fn interpretation(&self) -> &Interpretation {
        &self.interpretation
    }

    pub fn att_values(&self) -> &[bool] {
        &self.interpretation.values()[..self.space.att_count()]
    }

    pub fn acc_values(&self) -> &[bool] {
        &self.interpretation.values()[self.space.att_count()..]
    }

    /// Arguments whose acc variable is true.
    pub fn accepted(&self) -> Vec<&str> {
        self.space
            .arguments
            .iter()
            .zip(self.acc_values())
            .filter(|(_, v)| **v)
            .map(|(a, _)| a.as_str())
            .collect()
    }
}

/// The unique model of the stable encoding of `af`.
pub fn canonical_model(af: &ArgumentationFramework) -> Result<EncodedModel> {
    let space = Arc::new(AttAccVocabulary::for_af(af)?);
    let acc = skeptical_accepted(af)?;
    let mut values = vec![false; space.len()];
    for &(x, y) in af.attack_indices() {
        values[space.att_index(x, y)] = true;
    }
    for a in &acc.accepted {
        values[space.acc_index(af.require(a)?)] = true;
    }
    Ok(space.model(values))
}

/// Whether the acc values of `m` are exactly those forced by its att values.
pub fn satisfies_theory(m: &EncodedModel) -> bool {
    let (values, _) = m.space.complete(m.att_values());
    values == m.interpretation.values()
}

/// The AF whose attacks are the true att variables of `m`.
pub fn decode(m: &EncodedModel) -> ArgumentationFramework {
    let af = ArgumentationFramework::new(m.space.arguments.iter().cloned())
        .expect("encoding arguments are valid identifiers");
    let n = m.space.argument_count();
    let attacks = m
        .att_values()
        .iter()
        .enumerate()
        .filter(|(_, v)| **v)
        .map(|(i, _)| (i / n, i % n));
    af.with_attack_indices(attacks)
}

/// Att variables fixed by top-level literals of `constraint`; `None` when
/// two literals contradict each other.
pub(crate) fn fixed_att_values(
    space: &AttAccVocabulary,
    constraint: &Formula,
) -> Option<Vec<Option<bool>>> {
    let mut fixed = vec![None; space.att_count()];
    for conjunct in constraint.conjuncts() {
        if matches!(conjunct, Formula::Const(false)) {
            return None;
        }
        let Some((name, value)) = conjunct.as_literal() else {
            continue;
        };
        if let Some(Role::Att(x, y)) = space.role(name) {
            let slot = &mut fixed[space.att_index(x, y)];
            match slot {
                Some(prev) if *prev != value => return None,
                _ => *slot = Some(value),
            }
        }
    }
    Some(fixed)
}

/// Every model of the stable theory over `arguments` that satisfies
/// `constraint`, in canonical order.
pub fn theory_models(arguments: &[String], constraint: &Formula) -> Result<TheoryModels> {
    Error::guard("stable extension arguments", MAX_STABLE_ARGUMENTS, arguments.len())?;
    let space = Arc::new(AttAccVocabulary::new(arguments)?);
    let compiled = Compiled::new(constraint, &space.vocab)?;
    let (fixed, free) = match fixed_att_values(&space, constraint) {
        Some(fixed) => {
            let free: Vec<usize> = (0..space.att_count()).filter(|&i| fixed[i].is_none()).collect();
            (fixed, Some(free))
        }
        None => (vec![None; space.att_count()], None),
    };
    if let Some(free) = &free {
        Error::guard("free att variables", MAX_FREE_ATT_VARIABLES, free.len())?;
    }
    Ok(TheoryModels {
        att: fixed.iter().map(|v| v.unwrap_or(false)).collect(),
        free: free.clone().unwrap_or_default(),
        counter: 0,
        done: free.is_none(),
        compiled,
        space,
    })
}

/// Lazy stream returned by [`theory_models`].
pub struct TheoryModels {
    space: Arc<AttAccVocabulary>,
    compiled: Compiled,
    att: Vec<bool>,
    free: Vec<usize>,
    counter: u64,
    done: bool,
}

impl Iterator for TheoryModels {
    type Item = EncodedModel;

    fn next(&mut self) -> Option<EncodedModel> {
        let k = self.free.len();
        while !self.done {
            // the first free variable is the most significant digit
            for (j, &var) in self.free.iter().enumerate() {
                self.att[var] = self.counter >> (k - 1 - j) & 1 == 1;
            }
            self.counter += 1;
            if self.counter >> k != 0 {
                self.done = true;
            }
            let (values, _) = self.space.complete(&self.att);
            if self.compiled.eval(&values) {
                return Some(self.space.model(values));
            }
        }
        None
    }
}

/// Formula over argument variables and att variables whose models, for a
/// fixed attack relation, are exactly the stable extensions:
/// `⋀_y (y ⟺ ⋀_z (att_z_y → ¬z))`.
pub fn stable_fixpoint_formula(arguments: &[String]) -> Formula {
    Formula::and(arguments.iter().map(|y| {
        let unattacked = Formula::and(arguments.iter().map(|z| {
            Formula::implies(Formula::var(att_name(z, y)), Formula::not(Formula::var(z.clone())))
        }));
        Formula::iff(Formula::var(y.clone()), unattacked)
    }))
}

/// The stable encoding of `af` as an explicit formula, with each universal
/// quantifier over the argument variables expanded into a conjunction over
/// all truth assignments.
pub fn emit_stable_encoding(af: &ArgumentationFramework) -> Result<Formula> {
    Error::guard("encoding arguments", MAX_EMIT_ARGUMENTS, af.len())?;
    let space = AttAccVocabulary::for_af(af)?;
    let args = af.arguments();
    let n = args.len();
    let mut parts = Vec::new();
    for (x, xn) in args.iter().enumerate() {
        for (y, yn) in args.iter().enumerate() {
            let v = Formula::var(att_name(xn, yn));
            parts.push(if af.attack_indices().contains(&(x, y)) {
                v
            } else {
                Formula::not(v)
            });
        }
    }
    let fixpoint = stable_fixpoint_formula(args);
    for (x, xn) in args.iter().enumerate() {
        let mut cases = Vec::with_capacity(1 << n);
        for sigma in 0u32..1 << n {
            let value = |i: usize| sigma >> (n - 1 - i) & 1 == 1;
            let assigned = fixpoint.substitute(&|name| {
                args.iter()
                    .position(|a| a == name)
                    .map(|i| Formula::Const(value(i)))
            });
            cases.push(Formula::implies(assigned, Formula::Const(value(x))));
        }
        parts.push(Formula::iff(Formula::var(acc_name(xn)), Formula::and(cases)));
    }
    debug_assert!(parts
        .iter()
        .all(|p| p.variables().iter().all(|v| space.vocabulary().contains(v))));
    Ok(Formula::and(parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::models;

    fn names(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    fn f1() -> ArgumentationFramework {
        ArgumentationFramework::from_pairs(
            ["x", "y", "z", "t", "u"],
            [("x", "y"), ("x", "t"), ("y", "x"), ("y", "z"), ("z", "u"), ("t", "u")],
        )
        .unwrap()
    }

    #[test]
    fn vocabulary_layout() {
        let s = AttAccVocabulary::new(&names(&["a", "b"])).unwrap();
        assert_eq!(
            s.vocabulary().names(),
            ["att_a_a", "att_a_b", "att_b_a", "att_b_b", "acc_a", "acc_b"]
        );
        assert_eq!(s.role("att_b_a"), Some(Role::Att(1, 0)));
        assert_eq!(s.role("acc_b"), Some(Role::Acc(1)));
        assert_eq!(s.role("acc_c"), None);
    }

    #[test]
    fn ambiguous_ids_rejected() {
        // att_a_b_c from (a, b_c) and from (a_b, c)
        assert!(AttAccVocabulary::new(&names(&["a", "b_c", "a_b", "c"])).is_err());
    }

    #[test]
    fn canonical_model_of_f1() {
        let m = canonical_model(&f1()).unwrap();
        assert!(m.accepted().is_empty());
        assert_eq!(decode(&m), f1());
        assert!(satisfies_theory(&m));
    }

    #[test]
    fn unattacked_singleton() {
        let af = ArgumentationFramework::new(["x"]).unwrap();
        let m = canonical_model(&af).unwrap();
        assert_eq!(m.interpretation().to_string(), "{acc_x}");
    }

    #[test]
    fn theory_check() {
        let space = Arc::new(AttAccVocabulary::for_af(&f1()).unwrap());
        let mut true_set: Vec<String> = f1().attacks().map(|(x, y)| att_name(x, y)).collect();
        true_set.push("acc_u".into());
        let m = EncodedModel::from_true_set(space, &true_set).unwrap();
        assert!(!satisfies_theory(&m));

        let s = Arc::new(AttAccVocabulary::new(&names(&["x"])).unwrap());
        let m = EncodedModel::from_true_set(s, ["att_x_x", "acc_x"]).unwrap();
        assert!(satisfies_theory(&m));
    }

    #[test]
    fn theory_models_of_singleton() {
        let got: Vec<String> = theory_models(&names(&["x"]), &Formula::top())
            .unwrap()
            .map(|m| m.interpretation().to_string())
            .collect();
        assert_eq!(got, ["{acc_x}", "{att_x_x,acc_x}"]);
        assert_eq!(theory_models(&names(&["x"]), &Formula::bottom()).unwrap().count(), 0);
    }

    #[test]
    fn theory_models_respect_constraint() {
        let c = Formula::and([Formula::var("att_t_u"), Formula::var("att_z_u")]);
        let args = names(&["x", "y", "z", "t", "u"]);
        // 2^23 configurations is too many for a unit test; restrict further.
        let mut lits = vec![c.clone()];
        for x in &args {
            for y in &args {
                if !(x == "t" && y == "u") && !(x == "z" && y == "u") && !(x == "x") {
                    lits.push(Formula::not(Formula::var(att_name(x, y))));
                }
            }
        }
        let count = theory_models(&args, &Formula::and(lits))
            .unwrap()
            .inspect(|m| {
                assert_eq!(m.interpretation().get("att_t_u"), Some(true));
                assert_eq!(m.interpretation().get("att_z_u"), Some(true));
            })
            .count();
        assert_eq!(count, 32);
    }

    #[test]
    fn theory_models_guard() {
        let args = names(&["a", "b", "c", "d", "e", "f"]);
        assert!(matches!(
            theory_models(&args, &Formula::top()),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn emitted_encoding_has_one_model() {
        let af = ArgumentationFramework::from_pairs(["a", "b"], [("a", "b")]).unwrap();
        let f = emit_stable_encoding(&af).unwrap();
        let space = AttAccVocabulary::for_af(&af).unwrap();
        let ms = models(&f, space.vocabulary()).unwrap();
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].to_string(), "{att_a_b,acc_a}");

        let single = ArgumentationFramework::new(["x"]).unwrap();
        let f = emit_stable_encoding(&single).unwrap();
        let ms = models(&f, AttAccVocabulary::for_af(&single).unwrap().vocabulary()).unwrap();
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].to_string(), "{acc_x}");
    }

    #[test]
    fn emit_guard() {
        let af = ArgumentationFramework::new(["a", "b", "c", "d", "e"]).unwrap();
        assert!(matches!(emit_stable_encoding(&af), Err(Error::Resource { .. })));
    }
}
