//! Tournament equilibrium set and retentive sets.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;

use crate::altset::AltSet;
use crate::error::{Error, Result};
use crate::limits::{self, limits};
use crate::qualified;
use crate::solution::{solve_in, SolutionId};
use crate::stable::StableSetReport;
use crate::tournament::Tournament;

/// A binary relation on a subset of alternatives, stored as successor sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    universe: AltSet,
    succ: Vec<AltSet>,
}

impl Relation {
    pub fn empty(order: usize, universe: AltSet) -> Self {
        Relation { universe, succ: vec![AltSet::EMPTY; order] }
    }

    pub fn universe(&self) -> AltSet {
        self.universe
    }

    pub fn insert(&mut self, a: usize, b: usize) {
        debug_assert!(self.universe.contains(a) && self.universe.contains(b));
        self.succ[a].insert(b);
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.succ[a].contains(b)
    }

    pub fn successors(&self, a: usize) -> AltSet {
        self.succ[a]
    }

    /// Maximal elements of the transitive closure: `a` is kept unless some
    /// `b` reaches `a` without being reached back.
    pub fn maximal_of_closure(&self) -> Result<AltSet> {
        if self.universe.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        let mut reach = self.succ.clone();
        for k in self.universe.iter() {
            for a in self.universe.iter() {
                if reach[a].contains(k) {
                    reach[a] = reach[a].union(reach[k]);
                }
            }
        }
        Ok(self
            .universe
            .iter()
            .filter(|&a| {
                !self
                    .universe
                    .iter()
                    .any(|b| reach[b].contains(a) && !reach[a].contains(b))
            })
            .collect())
    }
}

/// Maximal elements of the transitive closure of `r` restricted to `universe`.
pub fn mtc(universe: AltSet, r: &Relation) -> Result<AltSet> {
    let mut sub = Relation::empty(r.succ.len(), universe);
    for a in universe.iter() {
        sub.succ[a] = r.succ[a].intersection(universe);
    }
    sub.maximal_of_closure()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TeqMode {
    /// Closure of the full TEQ relation.
    Naive,
    /// Grows a set from the Copeland winners and only evaluates TEQ on the
    /// dominator sets of members.
    Seeded,
}

impl FromStr for TeqMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "naive" => Ok(TeqMode::Naive),
            "seeded" => Ok(TeqMode::Seeded),
            other => Err(format!("unknown TEQ mode {other:?}")),
        }
    }
}

impl fmt::Display for TeqMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TeqMode::Naive => "naive",
            TeqMode::Seeded => "seeded",
        })
    }
}

/// Memo table from subsets of one fixed tournament to their TEQ.
pub trait TeqMemo {
    fn get(&self, mode: TeqMode, key: AltSet) -> Option<AltSet>;
    fn put(&mut self, mode: TeqMode, key: AltSet, value: AltSet);
}

#[derive(Debug, Default, Clone)]
pub struct TeqCache {
    map: HashMap<(TeqMode, AltSet), AltSet>,
}

impl TeqCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

impl TeqMemo for TeqCache {
    fn get(&self, mode: TeqMode, key: AltSet) -> Option<AltSet> {
        self.map.get(&(mode, key)).copied()
    }

    fn put(&mut self, mode: TeqMode, key: AltSet, value: AltSet) {
        self.map.insert((mode, key), value);
    }
}

/// A cache shared between threads working on the same tournament.
#[derive(Debug)]
pub struct SharedTeqCache {
    tournament: Tournament,
    map: RwLock<HashMap<(TeqMode, AltSet), AltSet>>,
}

impl SharedTeqCache {
    pub fn new(t: Tournament) -> Self {
        SharedTeqCache { tournament: t, map: RwLock::new(HashMap::new()) }
    }

    pub fn tournament(&self) -> &Tournament {
        &self.tournament
    }

    pub fn teq_in(&self, within: AltSet, mode: TeqMode) -> Result<AltSet> {
        let mut handle = self;
        teq_with(&self.tournament, within, mode, &mut handle)
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl TeqMemo for &SharedTeqCache {
    fn get(&self, mode: TeqMode, key: AltSet) -> Option<AltSet> {
        self.map.read().expect("lock poisoned").get(&(mode, key)).copied()
    }

    fn put(&mut self, mode: TeqMode, key: AltSet, value: AltSet) {
        self.map.write().expect("lock poisoned").insert((mode, key), value);
    }
}

fn cap(mode: TeqMode) -> (&'static str, usize) {
    match mode {
        TeqMode::Naive => ("TEQ(naive)", limits().teq_naive),
        TeqMode::Seeded => ("TEQ", limits().teq_seeded),
    }
}

/// TEQ of the sub-tournament on `within`, memoized in `memo`.
pub fn teq_with<M: TeqMemo>(
    t: &Tournament,
    within: AltSet,
    mode: TeqMode,
    memo: &mut M,
) -> Result<AltSet> {
    if within.is_empty() {
        return Err(Error::EmptySet);
    }
    t.check_subset(within)?;
    let (solver, cap) = cap(mode);
    limits::ensure(solver, within.len(), cap)?;
    Ok(teq_rec(t, within, mode, memo))
}

fn teq_rec<M: TeqMemo>(t: &Tournament, x: AltSet, mode: TeqMode, memo: &mut M) -> AltSet {
    if x.len() <= 1 {
        return x;
    }
    if let Some(hit) = memo.get(mode, x) {
        return hit;
    }
    let value = match mode {
        TeqMode::Naive => naive(t, x, memo),
        TeqMode::Seeded => seeded(t, x, memo),
    };
    memo.put(mode, x, value);
    value
}

fn naive<M: TeqMemo>(t: &Tournament, x: AltSet, memo: &mut M) -> AltSet {
    let mut r = Relation::empty(t.order(), x);
    for a in x.iter() {
        let d = t.dominators(a).intersection(x);
        if !d.is_empty() {
            for b in teq_rec(t, d, TeqMode::Naive, memo).iter() {
                r.insert(b, a);
            }
        }
    }
    r.maximal_of_closure().expect("non-empty universe")
}

fn seeded<M: TeqMemo>(t: &Tournament, x: AltSet, memo: &mut M) -> AltSet {
    let mut b = qualified::copeland_set_in(t, x);
    let mut c = b;
    let mut r = Relation::empty(t.order(), x);
    loop {
        let mut d = AltSet::EMPTY;
        for a in c.iter() {
            let dom = t.dominators(a).intersection(x);
            if !dom.is_empty() {
                let chosen = teq_rec(t, dom, TeqMode::Seeded, memo);
                for y in chosen.iter() {
                    r.insert(y, a);
                }
                d = d.union(chosen);
            }
        }
        if d.is_subset(b) {
            return mtc(b, &r).expect("non-empty universe");
        }
        c = d;
        b = b.union(c);
    }
}

pub fn teq_in(t: &Tournament, within: AltSet, mode: TeqMode) -> Result<AltSet> {
    teq_with(t, within, mode, &mut TeqCache::new())
}

pub fn teq(t: &Tournament, mode: TeqMode) -> Result<AltSet> {
    teq_in(t, t.alternatives(), mode)
}

/// The TEQ relation on `within`: `b → a` iff `b ∈ TEQ(D̄(a) ∩ within)`.
pub fn teq_relation(t: &Tournament, within: AltSet) -> Result<Relation> {
    t.check_subset(within)?;
    limits::ensure("TEQ(naive)", within.len(), limits().teq_naive)?;
    let mut memo = TeqCache::new();
    let mut r = Relation::empty(t.order(), within);
    for a in within.iter() {
        let d = t.dominators(a).intersection(within);
        if !d.is_empty() {
            for b in teq_rec(t, d, TeqMode::Naive, &mut memo).iter() {
                r.insert(b, a);
            }
        }
    }
    Ok(r)
}

/// For each alternative with a non-empty dominator set, `S(D̄(a))`.
fn dominator_choices(s: SolutionId, t: &Tournament) -> Result<Vec<Option<AltSet>>> {
    let mut memo = TeqCache::new();
    t.alternatives()
        .iter()
        .map(|a| {
            let d = t.dominators(a);
            if d.is_empty() {
                Ok(None)
            } else if s == SolutionId::Teq {
                teq_with(t, d, TeqMode::Seeded, &mut memo).map(Some)
            } else {
                solve_in(s, t, d).map(Some)
            }
        })
        .collect()
}

fn retentive(choices: &[Option<AltSet>], b: AltSet) -> bool {
    b.iter().all(|x| choices[x].map_or(true, |c| c.is_subset(b)))
}

/// `b` is `s`-retentive iff `s(D̄(x)) ⊆ b` for every `x ∈ b` that has a
/// dominator.
pub fn is_retentive(s: SolutionId, t: &Tournament, b: AltSet) -> Result<bool> {
    if b.is_empty() {
        return Err(Error::EmptySet);
    }
    t.check_subset(b)?;
    Ok(retentive(&dominator_choices(s, t)?, b))
}

/// All inclusion-minimal `s`-retentive sets.
pub fn minimal_retentive_sets(s: SolutionId, t: &Tournament) -> Result<StableSetReport> {
    limits::ensure("minimal retentive sets", t.order(), limits().stable_search)?;
    let choices = dominator_choices(s, t)?;
    let mut minimal: Vec<AltSet> = Vec::new();
    for b in t.alternatives().subsets_by_size().skip(1) {
        if minimal.iter().any(|m| m.is_subset(b)) {
            continue;
        }
        if retentive(&choices, b) {
            minimal.push(b);
        }
    }
    StableSetReport::from_sets(s, t, minimal)
}
