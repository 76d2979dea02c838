mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use common::{naive_skeptical, naive_stable, oracle_revision, subsets_up_to, tt_consistent, Attacks};
use enthyrev::af::{skeptical_accepted, stable_extensions};
use enthyrev::encoding::{canonical_model, decode, emit_stable_encoding, satisfies_theory, AttAccVocabulary};
use enthyrev::logic::{entails, is_consistent, minimal_conflict_subsets, models};
use enthyrev::revision::{dalal_revise, minimal_models};
use enthyrev::structured::{complete_enthymeme, make_enthymeme, StructuredArgument};
use enthyrev::{
    parse_formula, revise_af, ArgumentationFramework, CertaintyMap, DistanceMode, Formula,
    FormulaSet, GoalFormula, Rational, Vocabulary, WeightMap,
};
use proptest::prelude::*;

const VARS: [&str; 4] = ["p", "q", "r", "s"];

fn formula(depth: u32) -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        1 => Just(Formula::top()),
        1 => Just(Formula::bottom()),
        8 => (0..VARS.len()).prop_map(|i| Formula::var(VARS[i])),
    ];
    leaf.prop_recursive(depth, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and([a, b])),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or([a, b])),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::iff(a, b)),
        ]
    })
}

fn vocab() -> Arc<Vocabulary> {
    Arc::new(Vocabulary::new(VARS).unwrap())
}

/// Truth table of `f` over `VARS`, bit `m` set when assignment `m` satisfies it.
fn table(f: &Formula) -> u32 {
    (0u32..16).fold(0, |acc, m| {
        let v = |name: &str| m >> VARS.iter().position(|x| *x == name).unwrap() & 1 == 1;
        acc | (f.eval(&v) as u32) << m
    })
}

fn af_strategy(max_args: usize) -> impl Strategy<Value = ArgumentationFramework> {
    (1..=max_args).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let names: Vec<String> = (0..n).map(|i| format!("a{i}")).collect();
            let attacks = bits
                .iter()
                .enumerate()
                .filter(|(_, b)| **b)
                .map(|(i, _)| (i / n, i % n));
            ArgumentationFramework::new(names).unwrap().with_attack_indices(attacks)
        })
    })
}

fn set(fs: &[Formula]) -> FormulaSet {
    fs.iter().cloned().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn display_round_trips(f in formula(4)) {
        let text = f.to_string();
        let back = parse_formula(&text).unwrap();
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(table(&back), table(&f));
    }

    #[test]
    fn entailment_matches_truth_tables(premises in proptest::collection::vec(formula(3), 0..4), goal in formula(3)) {
        let tt = premises.iter().fold(0xffff, |acc, p| acc & table(p));
        prop_assert_eq!(entails(&set(&premises), &goal), tt & !table(&goal) == 0);
        prop_assert_eq!(is_consistent(&set(&premises)), tt != 0);
    }

    #[test]
    fn conflicts_are_exactly_the_minimal_inconsistent_subsets(
        candidates in proptest::collection::vec(formula(2), 0..6),
        context in proptest::collection::vec(formula(2), 0..3),
    ) {
        let cands = set(&candidates).deduplicated();
        let ctx = set(&context);
        let found = minimal_conflict_subsets(&cands, &ctx).unwrap();
        prop_assert_eq!(found.is_empty(), is_consistent(&cands.union(&ctx)));
        let items: Vec<Formula> = cands.iter().cloned().collect();
        let inconsistent = |s: &[usize]| {
            let mut fs: Vec<Formula> = s.iter().map(|&i| items[i].clone()).collect();
            fs.extend(context.iter().cloned());
            !tt_consistent(&fs)
        };
        let all = subsets_up_to(items.len(), items.len());
        let expected: BTreeSet<Vec<usize>> = all
            .iter()
            .filter(|s| inconsistent(s))
            .filter(|s| !all.iter().any(|t| t.len() < s.len() && t.iter().all(|i| s.contains(i)) && inconsistent(t)))
            .cloned()
            .collect();
        let got: BTreeSet<Vec<usize>> = found
            .iter()
            .map(|s| s.iter().map(|f| items.iter().position(|x| x == f).unwrap()).collect())
            .collect();
        prop_assert_eq!(got, expected);
        let sizes: Vec<usize> = found.iter().map(FormulaSet::len).collect();
        prop_assert!(sizes.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn dalal_is_a_km_operator(phi in formula(3), alpha in formula(3)) {
        let v = vocab();
        let revised = dalal_revise(&phi, &alpha, &v).unwrap();
        let alpha_models = models(&alpha, &v).unwrap();
        prop_assert!(revised.iter().all(|m| m.satisfies(&alpha).unwrap()));
        prop_assert_eq!(revised.is_empty(), alpha_models.is_empty());
        let both = models(&Formula::and([phi.clone(), alpha.clone()]), &v).unwrap();
        if !both.is_empty() {
            prop_assert_eq!(&revised, &both);
        }
        let base = models(&phi, &v).unwrap();
        if !base.is_empty() {
            prop_assert_eq!(&revised, &minimal_models(&base, &alpha_models, &WeightMap::unit()).unwrap());
        }
        // revising by an equivalent formula changes nothing
        let alpha2 = Formula::not(Formula::not(alpha.clone()));
        prop_assert_eq!(&revised, &dalal_revise(&phi, &alpha2, &v).unwrap());
    }

    #[test]
    fn stable_extensions_match_brute_force(af in af_strategy(6)) {
        let got: BTreeSet<BTreeSet<usize>> = stable_extensions(&af)
            .unwrap()
            .iter()
            .map(|e| e.iter().map(|id| af.index_of(id).unwrap()).collect())
            .collect();
        let want: BTreeSet<BTreeSet<usize>> = naive_stable(af.len(), af.attack_indices()).into_iter().collect();
        prop_assert_eq!(got, want);
        let report = skeptical_accepted(&af).unwrap();
        let (acc, has_ext) = naive_skeptical(af.len(), af.attack_indices());
        let got: BTreeSet<usize> = report.accepted.iter().map(|id| af.index_of(id).unwrap()).collect();
        prop_assert_eq!(got, acc);
        prop_assert_eq!(report.vacuous, !has_ext);
    }

    #[test]
    fn canonical_model_decodes_back(af in af_strategy(5)) {
        let m = canonical_model(&af).unwrap();
        prop_assert!(satisfies_theory(&m));
        prop_assert_eq!(decode(&m), af);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn emitted_encoding_has_the_canonical_model_only(af in af_strategy(3)) {
        let f = emit_stable_encoding(&af).unwrap();
        let space = AttAccVocabulary::for_af(&af).unwrap();
        let ms = models(&f, space.vocabulary()).unwrap();
        prop_assert_eq!(ms.len(), 1);
        let canonical = canonical_model(&af).unwrap();
        prop_assert_eq!(&ms[0], canonical.interpretation());
    }
}

fn goal_strategy(args: Vec<String>) -> impl Strategy<Value = GoalFormula> {
    let names = AttAccVocabulary::new(&args).unwrap().vocabulary().names().to_vec();
    let leaf = (0..names.len()).prop_map(move |i| Formula::var(names[i].clone()));
    leaf.prop_recursive(2, 8, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and([a, b])),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::or([a, b])),
        ]
    })
    .prop_map(move |f| GoalFormula::from_formula(&args, f).unwrap())
}

fn revision_case() -> impl Strategy<Value = (ArgumentationFramework, GoalFormula, Vec<(usize, usize)>)> {
    af_strategy(3).prop_flat_map(|af| {
        let n = af.len();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect();
        (
            Just(af.clone()),
            goal_strategy(af.arguments().to_vec()),
            proptest::sample::subsequence(pairs.clone(), 0..=pairs.len().min(3)),
        )
    })
}

/// Freezes the listed pairs at their current value, as the deductive
/// constraint does for pairs of deductive arguments.
fn freeze(af: &ArgumentationFramework, pairs: &[(usize, usize)]) -> GoalFormula {
    let lits = pairs.iter().map(|&(x, y)| {
        let v = Formula::var(format!("att_{}_{}", af.name(x), af.name(y)));
        if af.attack_indices().contains(&(x, y)) {
            v
        } else {
            Formula::not(v)
        }
    });
    GoalFormula::from_formula(af.arguments(), Formula::and(lits)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn revision_succeeds_minimally_and_preserves_frozen_pairs((af, goal, frozen) in revision_case()) {
        let constraint = freeze(&af, &frozen);
        let target = Formula::and([goal.formula().clone(), constraint.formula().clone()]);
        let mut results = Vec::new();
        for mode in [DistanceMode::Dalal, DistanceMode::AttWeighted, DistanceMode::AttOnly] {
            let outcome = revise_af(&af, &goal, &constraint, mode, true).unwrap();
            let oracle = oracle_revision(&af, &target, mode, true, af.len() * af.len());
            let got: BTreeSet<(Attacks, u64)> =
                outcome.entries.iter().map(|e| (e.af.attack_indices().clone(), e.total_weight)).collect();
            let want: BTreeSet<(Attacks, u64)> =
                oracle.entries.iter().map(|e| (e.attacks.clone(), e.weight)).collect();
            prop_assert_eq!(got, want);
            for e in &outcome.entries {
                for p in &frozen {
                    prop_assert_eq!(e.af.attack_indices().contains(p), af.attack_indices().contains(p));
                }
            }
            // vacuity: an AF already satisfying the target is the only answer
            let m = canonical_model(&af).unwrap();
            let has_ext = !stable_extensions(&af).unwrap().is_empty();
            if has_ext && m.interpretation().satisfies(&target).unwrap() {
                prop_assert_eq!(outcome.len(), 1);
                prop_assert_eq!(&outcome.entries[0].af, &af);
                prop_assert_eq!(outcome.entries[0].total_weight, 0);
            }
            results.push(outcome);
        }
        prop_assert!(results[1].entries.iter().all(|e| results[2].contains_af(&e.af)));
        // entries come ordered by att-flip count
        for r in &results {
            let flips: Vec<usize> = r.entries.iter().map(|e| e.att_flip_count()).collect();
            prop_assert!(flips.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn make_enthymeme_is_monotone_in_tau(
        support in proptest::collection::vec(formula(2), 1..6),
        degrees in proptest::collection::vec(0i64..=10, 6),
        t1 in 0i64..=11,
        t2 in 0i64..=11,
    ) {
        let (lo, hi) = (t1.min(t2), t1.max(t2));
        let support = set(&support).deduplicated();
        let mut cert = CertaintyMap::new();
        for (f, d) in support.iter().zip(&degrees) {
            cert.insert(f.clone(), Rational::new(*d, 10)).unwrap();
        }
        let arg = StructuredArgument::deductive("d", support.clone(), Formula::top());
        let small = make_enthymeme(&arg, &cert, &Rational::new(lo, 10)).unwrap();
        let large = make_enthymeme(&arg, &cert, &Rational::new(hi, 10)).unwrap();
        prop_assert!(small.fixed_support.is_subset_of(&large.fixed_support));
        prop_assert!(large.fixed_support.is_subset_of(&support));
        prop_assert_eq!(&small.fixed_claim, &arg.fixed_claim);
        prop_assert!(!small.is_deductive());
    }

    #[test]
    fn completions_are_sound(
        fixed in proptest::collection::vec(formula(2), 0..3),
        claim in formula(2),
        base in proptest::collection::vec(formula(2), 0..6),
        pool in proptest::collection::vec(formula(2), 0..3),
        max_added in 0usize..3,
        strict in any::<bool>(),
    ) {
        let e = StructuredArgument::enthymeme("e", set(&fixed), claim.clone());
        let base = set(&base);
        let out = complete_enthymeme(&e, &base, &set(&pool), max_added, strict).unwrap();
        for c in &out {
            let support = c.support();
            prop_assert!(c.completed);
            prop_assert!(c.added_support.len() <= max_added);
            prop_assert!(c.added_support.is_subset_of(&base));
            prop_assert!(c.fixed_support.set_eq(&e.fixed_support));
            prop_assert!(is_consistent(&support));
            prop_assert!(entails(&support, &c.full_claim));
            prop_assert!(entails(&set(std::slice::from_ref(&c.full_claim)), &claim));
            if strict {
                for f in support.iter() {
                    let rest: FormulaSet = support.iter().filter(|g| *g != f).cloned().collect();
                    prop_assert!(!entails(&rest, &c.full_claim));
                }
            }
        }
        let sizes: Vec<usize> = out.iter().map(|c| c.added_support.len()).collect();
        prop_assert!(sizes.windows(2).all(|w| w[0] <= w[1]));
    }
}
