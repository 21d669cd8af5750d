use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::altset::AltSet;
use crate::error::Result;
use crate::game;
use crate::qualified;
use crate::solution::{solve, SolutionId};
use crate::stable::{self, StableSetReport};
use crate::teq::{self, TeqMode};
use crate::tournament::Tournament;

/// Whether a violated property breaks the build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    /// A proved theorem or an implementation oracle.
    Hard,
    /// An open conjecture or one of its consequences; violations are findings.
    Conjectural,
}

/// A yes/no property of a single tournament.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    BaInUc,
    CoInUc,
    UcInTc,
    McInUcInf,
    UcInfInUc,
    McInTc,
    BpInMc,
    McUnique,
    McInternal,
    TcOracle,
    UcOracle,
    TeqModes,
    TeqSubDominance,
    Equilibrium,
    Condorcet,
    TeqInMe,
    MeInMc,
    MeInBa,
    MeUnique,
    TeqRetentiveUnique,
    TeqIsMrUnion,
}

impl Property {
    pub const ALL: [Property; 21] = [
        Property::BaInUc,
        Property::CoInUc,
        Property::UcInTc,
        Property::McInUcInf,
        Property::UcInfInUc,
        Property::McInTc,
        Property::BpInMc,
        Property::McUnique,
        Property::McInternal,
        Property::TcOracle,
        Property::UcOracle,
        Property::TeqModes,
        Property::TeqSubDominance,
        Property::Equilibrium,
        Property::Condorcet,
        Property::TeqInMe,
        Property::MeInMc,
        Property::MeInBa,
        Property::MeUnique,
        Property::TeqRetentiveUnique,
        Property::TeqIsMrUnion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::BaInUc => "ba-in-uc",
            Property::CoInUc => "co-in-uc",
            Property::UcInTc => "uc-in-tc",
            Property::McInUcInf => "mc-in-ucinf",
            Property::UcInfInUc => "ucinf-in-uc",
            Property::McInTc => "mc-in-tc",
            Property::BpInMc => "bp-in-mc",
            Property::McUnique => "mc-unique",
            Property::McInternal => "mc-internal",
            Property::TcOracle => "tc-oracle",
            Property::UcOracle => "uc-oracle",
            Property::TeqModes => "teq-modes",
            Property::TeqSubDominance => "teq-sub-dominance",
            Property::Equilibrium => "equilibrium",
            Property::Condorcet => "condorcet",
            Property::TeqInMe => "teq-in-me",
            Property::MeInMc => "me-in-mc",
            Property::MeInBa => "me-in-ba",
            Property::MeUnique => "me-unique",
            Property::TeqRetentiveUnique => "teq-retentive-unique",
            Property::TeqIsMrUnion => "teq-is-mr-union",
        }
    }

    pub fn status(self) -> Status {
        match self {
            Property::TeqInMe
            | Property::MeInMc
            | Property::MeInBa
            | Property::MeUnique
            | Property::TeqRetentiveUnique
            | Property::TeqIsMrUnion => Status::Conjectural,
            _ => Status::Hard,
        }
    }

    /// Evaluates the property; `Ok(true)` means it holds on `t`.
    pub fn holds(self, s: &Solved<'_>) -> Result<bool> {
        use SolutionId as S;
        let sub = |a: SolutionId, b: SolutionId| -> Result<bool> { Ok(s.get(a)?.is_subset(s.get(b)?)) };
        match self {
            Property::BaInUc => sub(S::Ba, S::Uc),
            Property::CoInUc => sub(S::Co, S::Uc),
            Property::UcInTc => sub(S::Uc, S::Tc),
            Property::McInUcInf => sub(S::Mc, S::UcInf),
            Property::UcInfInUc => sub(S::UcInf, S::Uc),
            Property::McInTc => sub(S::Mc, S::Tc),
            Property::BpInMc => sub(S::Bp, S::Mc),
            Property::McUnique => {
                let r = s.minimal_uc_stable()?;
                Ok(r.unique && r.union == s.get(S::Mc)?)
            }
            Property::McInternal => {
                let mc = s.get(S::Mc)?;
                Ok(qualified::uncovered_in(s.t, mc) == mc)
            }
            Property::TcOracle => Ok(s.get(S::Tc)? == stable::top_cycle_by_reachability(s.t)),
            Property::UcOracle => {
                let kings = s.get(S::Uc)?;
                let all = s.t.alternatives();
                Ok(kings == qualified::uncovered_by_covering_in(s.t, all)
                    && kings == qualified::uncovered_by_matrix(s.t))
            }
            Property::TeqModes => Ok(s.teq_naive()? == s.get(S::Teq)?),
            Property::TeqSubDominance => {
                let r = teq::teq_relation(s.t, s.t.alternatives())?;
                Ok(s.t
                    .alternatives()
                    .iter()
                    .all(|a| r.successors(a).is_subset(s.t.dominion(a))))
            }
            Property::Equilibrium => {
                let g = game::tournament_game(s.t);
                let eq = game::solve_symmetric_game(&g)?;
                game::verify_equilibrium(&g, &eq)
            }
            Property::Condorcet => match s.t.condorcet_winner() {
                None => Ok(true),
                Some(w) => {
                    let want = AltSet::singleton(w);
                    for id in [S::Co, S::Uc, S::UcInf, S::Ba, S::Tc, S::Mc, S::Me, S::Bp, S::Teq] {
                        if s.get(id)? != want {
                            return Ok(false);
                        }
                    }
                    Ok(true)
                }
            },
            Property::TeqInMe => sub(S::Teq, S::Me),
            Property::MeInMc => sub(S::Me, S::Mc),
            Property::MeInBa => sub(S::Me, S::Ba),
            Property::MeUnique => Ok(s.minimal_extending()?.unique),
            Property::TeqRetentiveUnique => Ok(s.minimal_teq_retentive()?.unique),
            Property::TeqIsMrUnion => Ok(s.minimal_teq_retentive()?.union == s.get(S::Teq)?),
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim().to_ascii_lowercase();
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown property {s:?}"))
    }
}

/// Expands a check name (a group or a single property) into properties.
pub fn expand_check(name: &str) -> Result<Vec<Property>, String> {
    use Property as P;
    let group: &[Property] = match name.trim().to_ascii_lowercase().as_str() {
        "inclusions" => &[
            P::BaInUc,
            P::CoInUc,
            P::UcInTc,
            P::McInUcInf,
            P::UcInfInUc,
            P::McInTc,
            P::BpInMc,
        ],
        "conjectures" => &[
            P::TeqInMe,
            P::MeInMc,
            P::MeInBa,
            P::MeUnique,
            P::TeqRetentiveUnique,
            P::TeqIsMrUnion,
        ],
        "mc-unique" => &[P::McUnique, P::McInternal],
        "me-unique" => &[P::MeUnique],
        "teq-unique" => &[P::TeqRetentiveUnique, P::TeqIsMrUnion],
        "oracles" => &[P::TcOracle, P::UcOracle, P::TeqModes, P::TeqSubDominance],
        "equilibrium" => &[P::Equilibrium],
        "condorcet" => &[P::Condorcet],
        "hard" => return Ok(P::ALL.into_iter().filter(|p| p.status() == Status::Hard).collect()),
        "all" => return Ok(P::ALL.to_vec()),
        other => return other.parse::<Property>().map(|p| vec![p]),
    };
    Ok(group.to_vec())
}

/// Parses a comma-separated check list into a sorted, de-duplicated set.
pub fn parse_checks(list: &str) -> Result<Vec<Property>, String> {
    let mut out = Vec::new();
    for name in list.split(',').filter(|s| !s.trim().is_empty()) {
        out.extend(expand_check(name)?);
    }
    if out.is_empty() {
        return Err("no checks selected".to_string());
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Lazily computed solutions of one tournament, shared by all properties
/// evaluated on it.
pub struct Solved<'t> {
    pub t: &'t Tournament,
    sets: RefCell<HashMap<SolutionId, AltSet>>,
    teq_naive: RefCell<Option<AltSet>>,
    uc_stable: RefCell<Option<StableSetReport>>,
    extending: RefCell<Option<StableSetReport>>,
    teq_retentive: RefCell<Option<StableSetReport>>,
}

impl<'t> Solved<'t> {
    pub fn new(t: &'t Tournament) -> Self {
        Solved {
            t,
            sets: RefCell::default(),
            teq_naive: RefCell::default(),
            uc_stable: RefCell::default(),
            extending: RefCell::default(),
            teq_retentive: RefCell::default(),
        }
    }

    pub fn get(&self, id: SolutionId) -> Result<AltSet> {
        if let Some(&hit) = self.sets.borrow().get(&id) {
            return Ok(hit);
        }
        let value = match id {
            SolutionId::Me => self.minimal_extending()?.union,
            _ => solve(id, self.t)?,
        };
        self.sets.borrow_mut().insert(id, value);
        Ok(value)
    }

    pub fn teq_naive(&self) -> Result<AltSet> {
        if let Some(hit) = *self.teq_naive.borrow() {
            return Ok(hit);
        }
        let value = teq::teq(self.t, TeqMode::Naive)?;
        *self.teq_naive.borrow_mut() = Some(value);
        Ok(value)
    }

    fn report(
        &self,
        cell: &RefCell<Option<StableSetReport>>,
        compute: impl FnOnce() -> Result<StableSetReport>,
    ) -> Result<StableSetReport> {
        if let Some(hit) = cell.borrow().as_ref() {
            return Ok(hit.clone());
        }
        let value = compute()?;
        *cell.borrow_mut() = Some(value.clone());
        Ok(value)
    }

    pub fn minimal_uc_stable(&self) -> Result<StableSetReport> {
        self.report(&self.uc_stable, || stable::minimal_stable_sets(SolutionId::Uc, self.t))
    }

    pub fn minimal_extending(&self) -> Result<StableSetReport> {
        self.report(&self.extending, || stable::minimal_extending_set(self.t))
    }

    pub fn minimal_teq_retentive(&self) -> Result<StableSetReport> {
        self.report(&self.teq_retentive, || teq::minimal_retentive_sets(SolutionId::Teq, self.t))
    }
}
