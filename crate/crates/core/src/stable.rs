//! External and internal stability, exhaustive minimal-stable-set search, and
//! the top cycle, minimal covering set and minimal extending set.

use crate::altset::AltSet;
use crate::error::{Error, Result};
use crate::game;
use crate::limits::{self, limits};
use crate::qualified;
use crate::solution::{chosen_in, solve_in, SolutionId};
use crate::tournament::Tournament;

/// Outcome of an exhaustive search for inclusion-minimal stable (or
/// retentive) sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableSetReport {
    pub subject: SolutionId,
    /// Minimal sets in search order (by cardinality, then bit pattern).
    pub sets: Vec<AltSet>,
    pub union: AltSet,
    pub unique: bool,
    pub internally_stable: Vec<bool>,
}

impl StableSetReport {
    pub(crate) fn from_sets(
        subject: SolutionId,
        t: &Tournament,
        sets: Vec<AltSet>,
    ) -> Result<Self> {
        let union = sets.iter().fold(AltSet::EMPTY, |acc, &s| acc.union(s));
        let internally_stable = sets
            .iter()
            .map(|&s| is_internally_stable(subject, t, s))
            .collect::<Result<Vec<_>>>()?;
        Ok(StableSetReport {
            subject,
            unique: sets.len() == 1,
            sets,
            union,
            internally_stable,
        })
    }
}

/// `b` is externally `s`-stable in the sub-tournament on `within` iff no
/// alternative of `within ∖ b` is chosen by `s` from `b ∪ {a}`.
pub fn is_externally_stable_in(
    s: SolutionId,
    t: &Tournament,
    within: AltSet,
    b: AltSet,
) -> Result<bool> {
    if b.is_empty() {
        return Err(Error::EmptySet);
    }
    t.check_subset(within)?;
    for a in within.difference(b).iter() {
        if chosen_in(s, t, b.with(a), a)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_externally_stable(s: SolutionId, t: &Tournament, b: AltSet) -> Result<bool> {
    t.check_subset(b)?;
    is_externally_stable_in(s, t, t.alternatives(), b)
}

/// `s(b) = b`.
pub fn is_internally_stable(s: SolutionId, t: &Tournament, b: AltSet) -> Result<bool> {
    if b.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(solve_in(s, t, b)? == b)
}

fn search_cap(s: SolutionId) -> (&'static str, usize) {
    match s {
        SolutionId::Ba => ("ME", limits().extending_search),
        _ => ("minimal stable sets", limits().stable_search),
    }
}

/// All inclusion-minimal externally `s`-stable subsets of `within`.
///
/// Subsets are visited by increasing cardinality, so a stable set is minimal
/// iff it contains none of the minimal sets found before it; supersets of
/// found sets are skipped without a stability check.
pub fn minimal_stable_sets_in(
    s: SolutionId,
    t: &Tournament,
    within: AltSet,
) -> Result<StableSetReport> {
    let (solver, cap) = search_cap(s);
    limits::ensure(solver, within.len(), cap)?;
    let mut minimal: Vec<AltSet> = Vec::new();
    for b in within.subsets_by_size().skip(1) {
        if minimal.iter().any(|m| m.is_subset(b)) {
            continue;
        }
        if is_externally_stable_in(s, t, within, b)? {
            minimal.push(b);
        }
    }
    StableSetReport::from_sets(s, t, minimal)
}

pub fn minimal_stable_sets(s: SolutionId, t: &Tournament) -> Result<StableSetReport> {
    minimal_stable_sets_in(s, t, t.alternatives())
}

/// Every externally `s`-stable set, minimal or not, in search order.
pub fn externally_stable_sets(s: SolutionId, t: &Tournament) -> Result<Vec<AltSet>> {
    let (solver, cap) = search_cap(s);
    limits::ensure(solver, t.order(), cap)?;
    let mut out = Vec::new();
    for b in t.alternatives().subsets_by_size().skip(1) {
        if is_externally_stable(s, t, b)? {
            out.push(b);
        }
    }
    Ok(out)
}

/// Copeland-seeded closure: keep adding dominators of the newest members
/// until nothing outside beats the current set.
pub fn top_cycle_in(t: &Tournament, within: AltSet) -> AltSet {
    let mut b = qualified::copeland_set_in(t, within);
    let mut frontier = b;
    loop {
        let outside = within.difference(b);
        frontier = frontier
            .iter()
            .fold(AltSet::EMPTY, |acc, a| acc.union(t.dominators(a).intersection(outside)));
        if frontier.is_empty() {
            return b;
        }
        b = b.union(frontier);
    }
}

pub fn top_cycle(t: &Tournament) -> AltSet {
    top_cycle_in(t, t.alternatives())
}

/// Alternatives reaching everything through dominance paths.
pub fn top_cycle_by_reachability(t: &Tournament) -> AltSet {
    let all = t.alternatives();
    all.iter()
        .filter(|&a| {
            let mut reach = AltSet::singleton(a);
            let mut frontier = reach;
            while !frontier.is_empty() {
                let next = frontier
                    .iter()
                    .fold(AltSet::EMPTY, |acc, x| acc.union(t.dominion(x)));
                frontier = next.difference(reach);
                reach = reach.union(next);
            }
            reach == all
        })
        .collect()
}

/// Minimal covering set, seeded with the bipartisan set and grown by the
/// bipartisan set of the alternatives still uncovered by the current set.
pub fn minimal_covering_set_in(t: &Tournament, within: AltSet) -> AltSet {
    let mut b = game::bipartisan_in(t, within);
    loop {
        let uncovered: AltSet = within
            .difference(b)
            .iter()
            .filter(|&a| qualified::is_king(t, b.with(a), a))
            .collect();
        if uncovered.is_empty() {
            return b;
        }
        b = b.union(game::bipartisan_in(t, uncovered));
    }
}

pub fn minimal_covering_set(t: &Tournament) -> AltSet {
    minimal_covering_set_in(t, t.alternatives())
}

/// All minimal extending (externally Banks-stable) sets.
pub fn minimal_extending_set(t: &Tournament) -> Result<StableSetReport> {
    minimal_stable_sets(SolutionId::Ba, t)
}
