//! Brute-force reference implementations shared by the integration tests.
//!
//! Nothing here calls the search code under test: stable extensions are
//! found by checking every subset, goals are evaluated on the formula tree,
//! and revision candidates are every attack relation within a flip radius.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use enthyrev::{ArgumentationFramework, DistanceMode, Formula};
use rand::Rng;

pub type Attacks = BTreeSet<(usize, usize)>;

pub fn naive_stable(n: usize, attacks: &Attacks) -> Vec<BTreeSet<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        let s: BTreeSet<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let conflict_free = !attacks.iter().any(|(x, y)| s.contains(x) && s.contains(y));
        let attacks_rest = (0..n)
            .filter(|y| !s.contains(y))
            .all(|y| s.iter().any(|x| attacks.contains(&(*x, y))));
        if conflict_free && attacks_rest {
            out.push(s);
        }
    }
    out
}

/// Skeptically accepted arguments, all of them when there is no extension.
pub fn naive_skeptical(n: usize, attacks: &Attacks) -> (BTreeSet<usize>, bool) {
    let ext = naive_stable(n, attacks);
    let mut acc: BTreeSet<usize> = (0..n).collect();
    for e in &ext {
        acc = acc.intersection(e).copied().collect();
    }
    (acc, !ext.is_empty())
}

pub fn assignment(af: &ArgumentationFramework, attacks: &Attacks, accepted: &BTreeSet<usize>) -> HashMap<String, bool> {
    let n = af.len();
    let mut m = HashMap::new();
    for x in 0..n {
        for y in 0..n {
            m.insert(
                format!("att_{}_{}", af.name(x), af.name(y)),
                attacks.contains(&(x, y)),
            );
        }
        m.insert(format!("acc_{}", af.name(x)), accepted.contains(&x));
    }
    m
}

pub fn holds(f: &Formula, m: &HashMap<String, bool>) -> bool {
    f.eval(&|v| *m.get(v).unwrap_or_else(|| panic!("unknown variable {v}")))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct OracleEntry {
    pub attacks: Attacks,
    pub weight: u64,
}

pub struct OracleResult {
    pub entries: Vec<OracleEntry>,
    /// Whether the radius searched is large enough to certify minimality.
    pub complete: bool,
    pub min_att_flips: Option<usize>,
}

fn combinations(n: usize, k: usize, out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>, start: usize) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for i in start..n {
        cur.push(i);
        combinations(n, k, out, cur, i + 1);
        cur.pop();
    }
}

/// Every minimal-weight revision of `af` found among the attack relations
/// differing from `af` on at most `radius` pairs.
pub fn oracle_revision(
    af: &ArgumentationFramework,
    target: &Formula,
    mode: DistanceMode,
    require_extension: bool,
    radius: usize,
) -> OracleResult {
    let n = af.len();
    let (w_att, w_acc) = match mode {
        DistanceMode::Dalal => (1, 1),
        DistanceMode::AttWeighted => (n as u64 + 1, 1),
        DistanceMode::AttOnly => (1, 0),
    };
    let base: Attacks = af.attack_indices().clone();
    let (base_acc, _) = naive_skeptical(n, &base);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect();
    let mut found: Vec<OracleEntry> = Vec::new();
    let mut min_flips = None;
    for k in 0..=radius.min(pairs.len()) {
        let mut combos = Vec::new();
        combinations(pairs.len(), k, &mut combos, &mut Vec::new(), 0);
        for c in combos {
            let mut attacks = base.clone();
            for i in c {
                if !attacks.remove(&pairs[i]) {
                    attacks.insert(pairs[i]);
                }
            }
            let (acc, has_ext) = naive_skeptical(n, &attacks);
            if require_extension && !has_ext {
                continue;
            }
            if !holds(target, &assignment(af, &attacks, &acc)) {
                continue;
            }
            min_flips = Some(min_flips.map_or(k, |m: usize| m.min(k)));
            let acc_diff = acc.symmetric_difference(&base_acc).count() as u64;
            found.push(OracleEntry {
                attacks,
                weight: w_att * k as u64 + w_acc * acc_diff,
            });
        }
    }
    let best = found.iter().map(|e| e.weight).min();
    let complete = radius >= pairs.len()
        || match best {
            Some(b) => w_att * (radius as u64 + 1) > b,
            None => false,
        };
    let mut entries: Vec<OracleEntry> = found.into_iter().filter(|e| Some(e.weight) == best).collect();
    entries.sort();
    OracleResult {
        entries,
        complete,
        min_att_flips: min_flips,
    }
}

/// Random formula over `vars`, at most `depth` connectives deep.
pub fn random_formula(rng: &mut impl Rng, vars: &[&str], depth: usize) -> Formula {
    if depth == 0 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..10) {
            0 => Formula::top(),
            1 => Formula::bottom(),
            _ => Formula::var(vars[rng.gen_range(0..vars.len())]),
        };
    }
    let op = rng.gen_range(0..5);
    let mut sub = || random_formula(rng, vars, depth - 1);
    match op {
        0 => Formula::not(sub()),
        1 => Formula::and([sub(), sub()]),
        2 => Formula::or([sub(), sub()]),
        3 => Formula::implies(sub(), sub()),
        _ => Formula::iff(sub(), sub()),
    }
}

/// Truth-table consistency of a finite set of formulae.
pub fn tt_consistent(fs: &[Formula]) -> bool {
    let mut vars: Vec<String> = fs.iter().flat_map(|f| f.variables()).collect();
    vars.sort();
    vars.dedup();
    assert!(vars.len() <= 20, "too many variables for a truth table");
    (0u32..1 << vars.len()).any(|mask| {
        let value = |v: &str| {
            let i = vars.iter().position(|x| x == v).unwrap();
            mask >> i & 1 == 1
        };
        fs.iter().all(|f| f.eval(&value))
    })
}

/// Every subset of `items` (as index lists) of size at most `k`.
pub fn subsets_up_to(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for size in 0..=k.min(n) {
        combinations(n, size, &mut out, &mut Vec::new(), 0);
    }
    out
}
