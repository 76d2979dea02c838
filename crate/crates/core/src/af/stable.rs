//! Stable semantics and skeptical acceptance.

use serde::Serialize;

use super::ArgumentationFramework;
use crate::error::{Error, Result};

/// Largest AF whose stable extensions will be enumerated.
pub const MAX_STABLE_ARGUMENTS: usize = 22;

/// Stable extensions of an AF, each listed in argument declaration order,
/// the whole set sorted lexicographically by argument position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ExtensionSet {
    extensions: Vec<Vec<String>>,
}

impl ExtensionSet {
    pub fn len(&self) -> usize {
        self.extensions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.extensions.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[String]> {
        self.extensions.iter().map(Vec::as_slice)
    }

    /// Whether `set` (in any order) is one of the extensions.
    pub fn contains(&self, set: &[&str]) -> bool {
        self.extensions
            .iter()
            .any(|e| e.len() == set.len() && set.iter().all(|s| e.iter().any(|x| x == s)))
    }
}

/// Skeptically accepted arguments. When the AF has no stable extension every
/// argument counts as accepted and `vacuous` is set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AcceptanceReport {
    pub accepted: Vec<String>,
    pub vacuous: bool,
}

pub fn is_stable(af: &ArgumentationFramework, set: &[&str]) -> Result<bool> {
    let mut mask = 0u64;
    for id in set {
        mask |= 1 << af.require(id)?;
    }
    Error::guard("stable extension arguments", 64, af.len())?;
    Ok(is_stable_mask(&af.attacker_masks(), mask))
}

pub(crate) fn is_stable_mask(attackers: &[u64], set: u64) -> bool {
    attackers.iter().enumerate().all(|(y, &att)| {
        let inside = set >> y & 1 == 1;
        let hit = att & set != 0;
        // members are unattacked by members, outsiders are attacked by one
        inside != hit
    })
}

pub fn stable_extensions(af: &ArgumentationFramework) -> Result<ExtensionSet> {
    Error::guard("stable extension arguments", MAX_STABLE_ARGUMENTS, af.len())?;
    let attackers = af.attacker_masks();
    let mut masks = Vec::new();
    search(&attackers, &mut |m| masks.push(m));
    let mut extensions: Vec<Vec<usize>> = masks
        .into_iter()
        .map(|m| (0..af.len()).filter(|i| m >> i & 1 == 1).collect())
        .collect();
    extensions.sort();
    Ok(ExtensionSet {
        extensions: extensions
            .into_iter()
            .map(|e| e.into_iter().map(|i| af.name(i).to_string()).collect())
            .collect(),
    })
}

pub fn skeptical_accepted(af: &ArgumentationFramework) -> Result<AcceptanceReport> {
    Error::guard("stable extension arguments", MAX_STABLE_ARGUMENTS, af.len())?;
    let (accepted, count) = skeptical_masks(&af.attacker_masks());
    Ok(AcceptanceReport {
        accepted: (0..af.len())
            .filter(|i| accepted >> i & 1 == 1)
            .map(|i| af.name(i).to_string())
            .collect(),
        vacuous: count == 0,
    })
}

/// Intersection of all stable extensions (all arguments when there is none)
/// and the number of extensions.
pub(crate) fn skeptical_masks(attackers: &[u64]) -> (u64, usize) {
    let all = if attackers.len() == 64 {
        u64::MAX
    } else {
        (1u64 << attackers.len()) - 1
    };
    let mut meet = all;
    let mut count = 0;
    search(attackers, &mut |m| {
        meet &= m;
        count += 1;
    });
    (meet, count)
}

/// Depth-first search over include/exclude decisions in argument order.
///
/// An argument may join only if it is conflict-free with the current
/// members; a branch dies once an excluded argument has no remaining
/// potential attacker.
fn search(attackers: &[u64], emit: &mut impl FnMut(u64)) {
    let n = attackers.len();
    let mut attacks_of = vec![0u64; n];
    for (y, &att) in attackers.iter().enumerate() {
        for (x, out) in attacks_of.iter_mut().enumerate() {
            if att >> x & 1 == 1 {
                *out |= 1 << y;
            }
        }
    }
    go(attackers, &attacks_of, 0, 0, 0, emit);
}

fn go(
    attackers: &[u64],
    attacks_of: &[u64],
    depth: usize,
    members: u64,
    excluded: u64,
    emit: &mut impl FnMut(u64),
) {
    let n = attackers.len();
    let undecided = if depth >= 64 { 0 } else { !0u64 << depth } & low_mask(n);
    // every excluded argument needs an attacker among members or undecided
    let mut rest = excluded;
    while rest != 0 {
        let y = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if attackers[y] & (members | undecided) == 0 {
            return;
        }
    }
    if depth == n {
        if is_stable_mask(attackers, members) {
            emit(members);
        }
        return;
    }
    let bit = 1u64 << depth;
    let conflict = attackers[depth] & (members | bit) != 0 || attacks_of[depth] & members != 0;
    if !conflict {
        go(attackers, attacks_of, depth + 1, members | bit, excluded, emit);
    }
    go(attackers, attacks_of, depth + 1, members, excluded | bit, emit);
}

fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}
