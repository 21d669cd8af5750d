//! Solutions built from maximal qualified subsets: Condorcet non-losers,
//! Copeland, the uncovered set (and its iteration), and the Banks set.
//!
//! Every solver has an `_in` form that works on the sub-tournament induced by
//! a universe `within` without materializing it.

use std::collections::HashSet;

use rand::seq::IteratorRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::altset::AltSet;
use crate::error::Result;
use crate::limits::{self, limits};
use crate::tournament::Tournament;

/// Condorcet non-losers: everything that beats something, or the lone
/// alternative of an order-1 universe.
pub fn cnl_in(t: &Tournament, within: AltSet) -> AltSet {
    if within.len() <= 1 {
        return within;
    }
    within
        .iter()
        .filter(|&a| !t.dominion(a).intersection(within).is_empty())
        .collect()
}

pub fn cnl(t: &Tournament) -> AltSet {
    cnl_in(t, t.alternatives())
}

/// Per-alternative dominion sizes. Alternatives outside the universe score 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CopelandScores {
    pub scores: Vec<usize>,
}

impl CopelandScores {
    pub fn max(&self) -> usize {
        self.scores.iter().copied().max().unwrap_or(0)
    }
}

pub fn copeland_in(t: &Tournament, within: AltSet) -> (CopelandScores, AltSet) {
    let mut scores = vec![0; t.order()];
    for a in within.iter() {
        scores[a] = t.score_within(a, within);
    }
    let best = within.iter().map(|a| scores[a]).max().unwrap_or(0);
    let set = within.iter().filter(|&a| scores[a] == best).collect();
    (CopelandScores { scores }, set)
}

pub fn copeland(t: &Tournament) -> (CopelandScores, AltSet) {
    copeland_in(t, t.alternatives())
}

pub fn copeland_set_in(t: &Tournament, within: AltSet) -> AltSet {
    copeland_in(t, within).1
}

/// `covers[a]` is the set of alternatives that `a` covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringRelation {
    covers: Vec<AltSet>,
}

impl CoveringRelation {
    pub fn covers(&self, a: usize, b: usize) -> bool {
        self.covers[a].contains(b)
    }

    pub fn covered_by(&self, a: usize) -> AltSet {
        self.covers[a]
    }

    pub fn is_empty(&self) -> bool {
        self.covers.iter().all(|c| c.is_empty())
    }

    /// All alternatives covered by some member of the relation's domain.
    pub fn covered(&self) -> AltSet {
        self.covers.iter().fold(AltSet::EMPTY, |acc, &c| acc.union(c))
    }
}

/// `a` covers `b` iff `D(b) ⊊ D(a)` within the universe.
pub fn covering_relation_in(t: &Tournament, within: AltSet) -> CoveringRelation {
    let mut covers = vec![AltSet::EMPTY; t.order()];
    for a in within.iter() {
        let da = t.dominion(a).intersection(within);
        for b in within.iter() {
            if a != b && t.dominion(b).intersection(within).is_proper_subset(da) {
                covers[a].insert(b);
            }
        }
    }
    CoveringRelation { covers }
}

pub fn covering_relation(t: &Tournament) -> CoveringRelation {
    covering_relation_in(t, t.alternatives())
}

/// Kings of the universe: alternatives reaching every other in at most two steps.
pub fn uncovered_in(t: &Tournament, within: AltSet) -> AltSet {
    within.iter().filter(|&a| is_king(t, within, a)).collect()
}

#[inline]
pub(crate) fn is_king(t: &Tournament, within: AltSet, a: usize) -> bool {
    let one = t.dominion(a).intersection(within);
    let mut reach = one.with(a);
    for c in one.iter() {
        reach = reach.union(t.dominion(c));
        if within.is_subset(reach) {
            return true;
        }
    }
    within.is_subset(reach)
}

pub fn uncovered(t: &Tournament) -> AltSet {
    uncovered_in(t, t.alternatives())
}

/// Maximal elements of the covering relation.
pub fn uncovered_by_covering_in(t: &Tournament, within: AltSet) -> AltSet {
    within.difference(covering_relation_in(t, within).covered())
}

/// `M² + M` over integers, with `m_ij = 1` iff `i ≻ j` or `i = j`; keeps the
/// rows without a zero entry.
pub fn uncovered_by_matrix(t: &Tournament) -> AltSet {
    let n = t.order();
    let m: Vec<Vec<u32>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| u32::from(i == j || t.beats(i, j)))
                .collect()
        })
        .collect();
    (0..n)
        .filter(|&i| {
            (0..n).all(|j| {
                let square: u32 = (0..n).map(|k| m[i][k] * m[k][j]).sum();
                square + m[i][j] != 0
            })
        })
        .collect()
}

/// Repeated restriction to the uncovered set until it is a fixpoint.
pub fn iterated_uncovered_in(t: &Tournament, within: AltSet) -> AltSet {
    let mut current = within;
    loop {
        let next = uncovered_in(t, current);
        if next == current {
            return current;
        }
        current = next;
    }
}

pub fn iterated_uncovered(t: &Tournament) -> AltSet {
    iterated_uncovered_in(t, t.alternatives())
}

/// Exact Banks set of the universe.
///
/// Transitive chains are grown from the bottom: the state is the set of
/// alternatives that beat every chain member, and adding one of them as the
/// new top intersects the state with its dominators. A chain whose state
/// becomes empty cannot be extended, so its top is a Banks winner.
pub fn banks_in(t: &Tournament, within: AltSet) -> Result<AltSet> {
    limits::ensure("BA", within.len(), limits().banks)?;
    Ok(banks_unchecked(t, within))
}

pub(crate) fn banks_unchecked(t: &Tournament, within: AltSet) -> AltSet {
    let mut found = AltSet::EMPTY;
    explore_chains(t, within, &mut found);
    found
}

fn explore_chains(t: &Tournament, challengers: AltSet, found: &mut AltSet) {
    if challengers.is_subset(*found) {
        return;
    }
    for c in challengers.iter() {
        let next = challengers.intersection(t.dominators(c));
        if next.is_empty() {
            found.insert(c);
        } else if !next.is_subset(*found) {
            explore_chains(t, next, found);
        }
    }
}

pub fn banks(t: &Tournament) -> Result<AltSet> {
    banks_in(t, t.alternatives())
}

/// `true` iff `a` tops some transitive subset of `within` that no member of
/// `within` beats entirely.
///
/// Searches top-down from `{a}`: some chain member must beat each current
/// challenger, so the search branches on the killers of the challenger with
/// the fewest of them.
pub fn in_banks(t: &Tournament, within: AltSet, a: usize) -> bool {
    debug_assert!(within.contains(a));
    let mut seen = HashSet::new();
    chain_search(t, within, a, AltSet::singleton(a), &mut seen)
}

fn chain_search(
    t: &Tournament,
    within: AltSet,
    top: usize,
    chain: AltSet,
    seen: &mut HashSet<AltSet>,
) -> bool {
    if !seen.insert(chain) {
        return false;
    }
    let challengers = chain
        .iter()
        .fold(within, |acc, s| acc.intersection(t.dominators(s)));
    if challengers.is_empty() {
        return true;
    }
    let pool = t.dominion(top).intersection(within).difference(chain);
    let mut best: Option<AltSet> = None;
    for c in challengers.iter() {
        let killers: AltSet = pool
            .intersection(t.dominators(c))
            .iter()
            .filter(|&q| keeps_transitive(t, chain, q))
            .collect();
        if killers.is_empty() {
            return false;
        }
        if best.map_or(true, |b| killers.len() < b.len()) {
            best = Some(killers);
        }
    }
    best.unwrap()
        .iter()
        .any(|q| chain_search(t, within, top, chain.with(q), seen))
}

/// Whether `chain ∪ {q}` is still transitive, given that `chain` is.
#[inline]
fn keeps_transitive(t: &Tournament, chain: AltSet, q: usize) -> bool {
    let dq = t.dominion(q);
    dq.intersection(chain)
        .iter()
        .all(|s| t.dominion(s).intersection(chain).is_subset(dq))
}

/// Greedy maximal-chain sampler: starts from a seeded random alternative and
/// repeatedly adds a seeded random alternative that beats the whole chain.
/// The final top is always a Banks winner.
pub fn banks_element_in(t: &Tournament, within: AltSet, seed: u64) -> Option<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut top = within.iter().choose(&mut rng)?;
    let mut challengers = within.intersection(t.dominators(top));
    while let Some(c) = challengers.iter().choose(&mut rng) {
        top = c;
        challengers = challengers.intersection(t.dominators(c));
    }
    Some(top)
}

pub fn banks_element(t: &Tournament, seed: u64) -> usize {
    banks_element_in(t, t.alternatives(), seed).expect("tournaments are non-empty")
}
