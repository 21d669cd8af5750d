use std::fmt;
use std::str::FromStr;

use crate::altset::AltSet;
use crate::error::{Error, Result};
use crate::limits::{self, limits};
use crate::tournament::Tournament;
use crate::{game, qualified, stable, teq};

/// The tournament solutions this crate can compute.
///
/// `Trivial` always returns every alternative; its minimal retentive set is
/// the top cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SolutionId {
    Cnl,
    Co,
    Uc,
    UcInf,
    Ba,
    Tc,
    Mc,
    Me,
    Bp,
    Teq,
    Trivial,
}

impl SolutionId {
    pub const ALL: [SolutionId; 11] = [
        SolutionId::Cnl,
        SolutionId::Co,
        SolutionId::Uc,
        SolutionId::UcInf,
        SolutionId::Ba,
        SolutionId::Tc,
        SolutionId::Mc,
        SolutionId::Me,
        SolutionId::Bp,
        SolutionId::Teq,
        SolutionId::Trivial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SolutionId::Cnl => "CNL",
            SolutionId::Co => "CO",
            SolutionId::Uc => "UC",
            SolutionId::UcInf => "UC_INF",
            SolutionId::Ba => "BA",
            SolutionId::Tc => "TC",
            SolutionId::Mc => "MC",
            SolutionId::Me => "ME",
            SolutionId::Bp => "BP",
            SolutionId::Teq => "TEQ",
            SolutionId::Trivial => "ALL",
        }
    }

    /// Whether the solver searches exponentially many subsets.
    pub fn is_exponential(self) -> bool {
        matches!(self, SolutionId::Ba | SolutionId::Me | SolutionId::Teq)
    }
}

impl fmt::Display for SolutionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SolutionId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let id = match s.trim().to_ascii_lowercase().as_str() {
            "cnl" => SolutionId::Cnl,
            "co" => SolutionId::Co,
            "uc" => SolutionId::Uc,
            "ucinf" | "uc_inf" | "uc-inf" => SolutionId::UcInf,
            "ba" => SolutionId::Ba,
            "tc" => SolutionId::Tc,
            "mc" => SolutionId::Mc,
            "me" => SolutionId::Me,
            "bp" => SolutionId::Bp,
            "teq" => SolutionId::Teq,
            "all" | "trivial" => SolutionId::Trivial,
            other => return Err(format!("unknown solution {other:?}")),
        };
        Ok(id)
    }
}

/// Applies solution `id` to the sub-tournament induced by `within`.
pub fn solve_in(id: SolutionId, t: &Tournament, within: AltSet) -> Result<AltSet> {
    if within.is_empty() {
        return Err(Error::EmptySet);
    }
    t.check_subset(within)?;
    Ok(match id {
        SolutionId::Cnl => qualified::cnl_in(t, within),
        SolutionId::Co => qualified::copeland_set_in(t, within),
        SolutionId::Uc => qualified::uncovered_in(t, within),
        SolutionId::UcInf => qualified::iterated_uncovered_in(t, within),
        SolutionId::Ba => qualified::banks_in(t, within)?,
        SolutionId::Tc => stable::top_cycle_in(t, within),
        SolutionId::Mc => stable::minimal_covering_set_in(t, within),
        SolutionId::Me => stable::minimal_stable_sets_in(SolutionId::Ba, t, within)?.union,
        SolutionId::Bp => game::bipartisan_in(t, within),
        SolutionId::Teq => teq::teq_in(t, within, teq::TeqMode::Seeded)?,
        SolutionId::Trivial => within,
    })
}

pub fn solve(id: SolutionId, t: &Tournament) -> Result<AltSet> {
    solve_in(id, t, t.alternatives())
}

/// `a ∈ S(within)`, with fast paths that avoid computing the whole choice set.
pub fn chosen_in(id: SolutionId, t: &Tournament, within: AltSet, a: usize) -> Result<bool> {
    debug_assert!(within.contains(a));
    match id {
        SolutionId::Cnl => Ok(within.len() == 1 || !t.dominion(a).intersection(within).is_empty()),
        SolutionId::Uc => Ok(qualified::is_king(t, within, a)),
        SolutionId::Ba => {
            limits::ensure("BA", within.len(), limits().banks)?;
            Ok(qualified::in_banks(t, within, a))
        }
        SolutionId::Trivial => Ok(true),
        _ => Ok(solve_in(id, t, within)?.contains(a)),
    }
}
