//! Exhaustive and random tournament generation.
//!
//! Labeled tournaments of order `n` are numbered by their upper-triangle bit
//! string: the pairs `(i, j)` with `i < j` are listed row by row, `(0,1)`,
//! `(0,2)`, …, `(n-2,n-1)`, the first pair being the most significant bit, and
//! a set bit means `i ≻ j`. Labeled enumeration walks indices `0..2^m` in
//! increasing order, so streams are lexicographic over that bit string.

use rand::Rng;

use crate::altset::AltSet;
use crate::error::{Error, Result};
use crate::iso;
use crate::tournament::Tournament;

/// Largest order whose labeled index fits in a `u64`.
pub const LABELED_CAP: usize = 11;
/// Largest order for canonical (one-per-isomorphism-class) enumeration.
pub const CANONICAL_CAP: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Labeled,
    Canonical,
}

impl std::str::FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "labeled" | "labelled" => Ok(Mode::Labeled),
            "canonical" => Ok(Mode::Canonical),
            other => Err(format!("unknown enumeration mode {other:?}")),
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Labeled => "labeled",
            Mode::Canonical => "canonical",
        })
    }
}

/// Number of unordered pairs, i.e. bits in a labeled index.
pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Number of labeled tournaments of order `n`.
pub fn labeled_count(n: usize) -> Result<u64> {
    check_order(n, LABELED_CAP)?;
    Ok(1u64 << pair_count(n))
}

fn check_order(n: usize, cap: usize) -> Result<()> {
    if n == 0 {
        Err(Error::EmptyTournament)
    } else if n > cap {
        Err(Error::OrderTooLarge { order: n, cap })
    } else {
        Ok(())
    }
}

/// The labeled tournament with the given index.
pub fn from_index(n: usize, index: u64) -> Result<Tournament> {
    let total = labeled_count(n)?;
    if index >= total {
        return Err(Error::OrderTooLarge {
            order: n,
            cap: LABELED_CAP,
        });
    }
    Ok(from_index_unchecked(n, index))
}

pub(crate) fn from_index_unchecked(n: usize, index: u64) -> Tournament {
    let m = pair_count(n);
    let mut rows = vec![AltSet::EMPTY; n];
    let mut p = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            if (index >> (m - 1 - p)) & 1 == 1 {
                rows[i].insert(j);
            } else {
                rows[j].insert(i);
            }
            p += 1;
        }
    }
    Tournament::from_valid_rows(rows)
}

/// Inverse of [`from_index`].
pub fn index_of(t: &Tournament) -> u64 {
    let n = t.order();
    assert!(n <= LABELED_CAP, "labeled index defined up to order {LABELED_CAP}");
    let mut code = 0u64;
    for i in 0..n {
        for j in (i + 1)..n {
            code = (code << 1) | u64::from(t.beats(i, j));
        }
    }
    code
}

/// Stream of all tournaments of order `n` in the given mode.
pub fn tournaments(n: usize, mode: Mode) -> Result<Box<dyn Iterator<Item = Tournament> + Send>> {
    match mode {
        Mode::Labeled => {
            let total = labeled_count(n)?;
            Ok(Box::new((0..total).map(move |i| from_index_unchecked(n, i))))
        }
        Mode::Canonical => {
            check_order(n, CANONICAL_CAP)?;
            let total = labeled_count(n)?;
            Ok(Box::new(
                (0..total)
                    .map(move |i| from_index_unchecked(n, i))
                    .filter(iso::is_canonical),
            ))
        }
    }
}

/// Labeled indices `range` of order `n`, filtered by `mode`; lets callers
/// partition the index space across workers.
pub fn in_range(
    n: usize,
    mode: Mode,
    range: std::ops::Range<u64>,
) -> impl Iterator<Item = (u64, Tournament)> {
    range
        .map(move |i| (i, from_index_unchecked(n, i)))
        .filter(move |(_, t)| mode == Mode::Labeled || iso::is_canonical(t))
}

/// Uniformly random labeled tournament: every edge oriented by a fair coin.
pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Tournament> {
    Tournament::from_fn(n, |_, _| rng.gen_bool(0.5))
}

/// Random tournament in which alternative `winner` beats everyone.
pub fn random_with_winner<R: Rng + ?Sized>(
    n: usize,
    winner: usize,
    rng: &mut R,
) -> Result<Tournament> {
    if winner >= n {
        return Err(Error::AlternativeOutOfRange {
            alternative: winner,
            order: n,
        });
    }
    Tournament::from_fn(n, |i, j| {
        if i == winner {
            true
        } else if j == winner {
            false
        } else {
            rng.gen_bool(0.5)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_labeled_is_eight() {
        assert_eq!(tournaments(3, Mode::Labeled).unwrap().count(), 8);
    }

    #[test]
    fn three_canonical_is_two() {
        let reps: Vec<Tournament> = tournaments(3, Mode::Canonical).unwrap().collect();
        assert_eq!(reps.len(), 2);
        assert!(reps.iter().any(|t| t.condorcet_winner().is_some()));
        assert!(reps.iter().any(|t| t.condorcet_winner().is_none()));
    }

    #[test]
    fn index_round_trip() {
        for i in 0..64 {
            let t = from_index(4, i).unwrap();
            assert_eq!(index_of(&t), i);
        }
        assert!(from_index(4, 64).is_err());
    }

    #[test]
    fn first_index_is_reverse_transitive() {
        // All-zero bit string: j ≻ i for every i < j.
        let t = from_index(3, 0).unwrap();
        assert_eq!(t.condorcet_winner(), Some(2));
        let t = from_index(3, 7).unwrap();
        assert_eq!(t, Tournament::transitive(3).unwrap());
    }

    #[test]
    fn caps() {
        assert!(matches!(
            tournaments(12, Mode::Labeled).err(),
            Some(Error::OrderTooLarge { order: 12, .. })
        ));
        assert!(matches!(
            tournaments(8, Mode::Canonical).err(),
            Some(Error::OrderTooLarge { order: 8, .. })
        ));
        assert!(matches!(tournaments(0, Mode::Labeled).err(), Some(Error::EmptyTournament)));
    }
}
