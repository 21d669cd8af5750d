use std::fmt::{self, Write as _};
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::altset::AltSet;
use crate::enumerate;
use crate::error::{Error, Result};
use crate::solution::{solve, solve_in, SolutionId};
use crate::tournament::{Decomposition, Tournament};

/// Rewirings of the unchosen sub-tournament tried by the IUA check before it
/// falls back to sampling.
pub const IUA_REWIRING_CAP: u64 = 1 << 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomId {
    Mon,
    Iua,
    Wsp,
    Ssp,
    Com,
    Irr,
}

impl AxiomId {
    pub const ALL: [AxiomId; 6] =
        [AxiomId::Mon, AxiomId::Iua, AxiomId::Wsp, AxiomId::Ssp, AxiomId::Com, AxiomId::Irr];

    pub fn name(self) -> &'static str {
        match self {
            AxiomId::Mon => "MON",
            AxiomId::Iua => "IUA",
            AxiomId::Wsp => "WSP",
            AxiomId::Ssp => "SSP",
            AxiomId::Com => "COM",
            AxiomId::Irr => "IRR",
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AxiomId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        AxiomId::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| format!("unknown axiom {s:?}"))
    }
}

/// The change applied to the original tournament.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Change {
    /// `winner` now beats `loser`.
    Flip { winner: usize, loser: usize },
    /// Edges among unchosen alternatives rewired.
    Rewire(Tournament),
    /// Restriction to a superset of the choice set.
    Restrict(AltSet),
    /// Composition of component choices along the summary.
    Compose(Decomposition),
    /// Nothing changed (IRR).
    None,
}

/// A concrete instance for an axiom check. For IRR it certifies that a
/// regular tournament gets a proper subset; for every other axiom it is a
/// violation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomWitness {
    pub solution: SolutionId,
    pub axiom: AxiomId,
    pub tournament: Tournament,
    pub change: Change,
    /// Choice on the original tournament.
    pub before: AltSet,
    /// Choice after the change (or the composed choice for COM).
    pub after: AltSet,
}

fn rewired(t: &Tournament, pairs: &[(usize, usize)], mask: u64) -> Tournament {
    let n = t.order();
    let mut rows: Vec<AltSet> = (0..n).map(|a| t.dominion(a)).collect();
    for (k, &(i, j)) in pairs.iter().enumerate() {
        let (w, l) = if mask >> k & 1 == 1 { (i, j) } else { (j, i) };
        rows[w].insert(l);
        rows[l].remove(w);
    }
    Tournament::from_valid_rows(rows)
}

fn composed(s: SolutionId, t: &Tournament, d: &Decomposition) -> Result<AltSet> {
    let top = solve(s, &d.summary)?;
    let mut out = AltSet::EMPTY;
    for i in top.iter() {
        out = out.union(solve_in(s, t, d.blocks[i])?);
    }
    Ok(out)
}

impl AxiomWitness {
    /// Recomputes both sides; `true` when the witness still stands.
    pub fn replay(&self) -> Result<bool> {
        let s = self.solution;
        let t = &self.tournament;
        let before = solve(s, t)?;
        Ok(match &self.change {
            Change::Flip { winner, loser } => {
                before.contains(*winner) && !solve(s, &t.flip(*winner, *loser))?.contains(*winner)
            }
            Change::Rewire(t2) => solve(s, t2)? != before,
            Change::Restrict(b) => {
                let after = solve_in(s, t, *b)?;
                match self.axiom {
                    AxiomId::Wsp => !after.is_subset(before),
                    _ => after != before,
                }
            }
            Change::Compose(d) => composed(s, t, d)? != before,
            Change::None => t.is_regular() && before != t.alternatives(),
        })
    }

    /// Line-oriented rendering with 1-based labels.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "witness:{}:{}", self.solution, self.axiom);
        for line in self.tournament.to_matrix_string().lines() {
            let _ = writeln!(out, "witness: {line}");
        }
        let change = match &self.change {
            Change::Flip { winner, loser } => format!("flip {} beats {}", winner + 1, loser + 1),
            Change::Rewire(t2) => {
                let mut s = "rewire".to_string();
                for line in t2.to_matrix_string().lines().skip(1) {
                    s.push(' ');
                    s.push_str(line);
                }
                s
            }
            Change::Restrict(b) => format!("restrict {}", b.display_one_based()),
            Change::Compose(d) => {
                let blocks: Vec<String> = d.blocks.iter().map(|b| b.display_one_based()).collect();
                format!("compose {}", blocks.join(" "))
            }
            Change::None => "none".to_string(),
        };
        let _ = writeln!(out, "change: {change}");
        let _ = writeln!(
            out,
            "before: {} after: {}",
            self.before.display_one_based(),
            self.after.display_one_based()
        );
        out
    }
}

/// Checks one axiom on `t`; `Ok(None)` means it passes there.
///
/// COM needs a decomposition and is handled by [`check_composition`]; asking
/// for it here yields `NotAProduct`.
pub fn check_axiom(s: SolutionId, axiom: AxiomId, t: &Tournament) -> Result<Option<AxiomWitness>> {
    check_axiom_seeded(s, axiom, t, 0)
}

/// As [`check_axiom`], with `seed` driving IUA sampling when the unchosen
/// sub-tournament has more than [`IUA_REWIRING_CAP`] rewirings.
pub fn check_axiom_seeded(
    s: SolutionId,
    axiom: AxiomId,
    t: &Tournament,
    seed: u64,
) -> Result<Option<AxiomWitness>> {
    let before = solve(s, t)?;
    let all = t.alternatives();
    let witness = |change: Change, after: AltSet| AxiomWitness {
        solution: s,
        axiom,
        tournament: t.clone(),
        change,
        before,
        after,
    };
    match axiom {
        AxiomId::Mon => {
            for winner in before.iter() {
                for loser in t.dominators(winner).iter() {
                    let after = solve(s, &t.flip(winner, loser))?;
                    if !after.contains(winner) {
                        return Ok(Some(witness(Change::Flip { winner, loser }, after)));
                    }
                }
            }
            Ok(None)
        }
        AxiomId::Iua => {
            let unchosen = all.difference(before).to_vec();
            let pairs: Vec<(usize, usize)> = unchosen
                .iter()
                .enumerate()
                .flat_map(|(k, &i)| unchosen[k + 1..].iter().map(move |&j| (i, j)))
                .collect();
            let total = 1u64.checked_shl(pairs.len() as u32).unwrap_or(u64::MAX);
            let masks: Box<dyn Iterator<Item = u64>> = if total <= IUA_REWIRING_CAP {
                Box::new(0..total)
            } else {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let width = pairs.len();
                Box::new((0..IUA_REWIRING_CAP).map(move |_| rng.gen::<u64>() & (u64::MAX >> (64 - width))))
            };
            for mask in masks {
                let t2 = rewired(t, &pairs, mask);
                if &t2 == t {
                    continue;
                }
                let after = solve(s, &t2)?;
                if after != before {
                    return Ok(Some(witness(Change::Rewire(t2), after)));
                }
            }
            Ok(None)
        }
        AxiomId::Wsp | AxiomId::Ssp => {
            let unchosen = all.difference(before);
            for removed in unchosen.subsets_by_size().skip(1) {
                let b = all.difference(removed);
                let after = solve_in(s, t, b)?;
                let fails = match axiom {
                    AxiomId::Wsp => !after.is_subset(before),
                    _ => after != before,
                };
                if fails {
                    return Ok(Some(witness(Change::Restrict(b), after)));
                }
            }
            Ok(None)
        }
        AxiomId::Com => Err(Error::NotAProduct),
        AxiomId::Irr => {
            if !t.is_regular() {
                return Err(Error::NotRegular);
            }
            Ok((before != all).then(|| witness(Change::None, before)))
        }
    }
}

/// COM on a product: `S(t)` must equal the union of `S` over the components
/// picked by `S` on the summary.
pub fn check_composition(
    s: SolutionId,
    t: &Tournament,
    d: &Decomposition,
) -> Result<Option<AxiomWitness>> {
    let check = Decomposition::from_blocks(t, d.blocks.clone())?;
    if check.summary != d.summary {
        return Err(Error::NotAProduct);
    }
    let before = solve(s, t)?;
    let after = composed(s, t, d)?;
    Ok((before != after).then(|| AxiomWitness {
        solution: s,
        axiom: AxiomId::Com,
        tournament: t.clone(),
        change: Change::Compose(d.clone()),
        before,
        after,
    }))
}

/// Result of checking an axiom on every labeled tournament of one order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomTally {
    pub checked: u64,
    pub violations: u64,
    /// The witness on the smallest labeled index.
    pub first: Option<AxiomWitness>,
}

/// Checks `axiom` for `s` on every labeled tournament of order `n` (regular
/// ones only for IRR).
pub fn axiom_sweep(s: SolutionId, axiom: AxiomId, n: usize) -> Result<AxiomTally> {
    let mut tally = AxiomTally { checked: 0, violations: 0, first: None };
    for t in enumerate::tournaments(n, enumerate::Mode::Labeled)? {
        if axiom == AxiomId::Irr && !t.is_regular() {
            continue;
        }
        tally.checked += 1;
        if let Some(w) = check_axiom(s, axiom, &t)? {
            tally.violations += 1;
            tally.first.get_or_insert(w);
        }
    }
    Ok(tally)
}

/// The first labeled tournament (by order, then index) in `orders` that
/// witnesses `axiom` for `s`.
pub fn find_axiom_witness(
    s: SolutionId,
    axiom: AxiomId,
    orders: std::ops::RangeInclusive<usize>,
) -> Result<Option<AxiomWitness>> {
    for n in orders {
        for t in enumerate::tournaments(n, enumerate::Mode::Labeled)? {
            if axiom == AxiomId::Irr && !t.is_regular() {
                continue;
            }
            if let Some(w) = check_axiom(s, axiom, &t)? {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}
