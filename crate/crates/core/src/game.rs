//! Tournament games and the bipartisan set.
//!
//! The equilibrium is found by an exact-rational phase-one simplex on
//! `M s ≤ 0, Σ s = 1, s ≥ 0` with Bland's anti-cycling rule. No floating point
//! is involved, so `s_a > 0` versus `s_a = 0` is decided exactly.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::altset::AltSet;
use crate::error::{Error, Result};
use crate::tournament::Tournament;

/// Skew-symmetric ±1 payoff matrix of a tournament.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TournamentGame {
    payoff: Vec<Vec<i8>>,
}

impl TournamentGame {
    pub fn new(payoff: Vec<Vec<i8>>) -> Result<Self> {
        let n = payoff.len();
        for (i, row) in payoff.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                let ok = if i == j {
                    v == 0
                } else {
                    (v == 1 || v == -1) && payoff[j][i] == -v
                };
                if !ok {
                    return Err(Error::NotATournament(format!(
                        "payoff entry ({}, {}) breaks skew symmetry",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(TournamentGame { payoff })
    }

    pub fn order(&self) -> usize {
        self.payoff.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i8 {
        self.payoff[i][j]
    }

    pub fn rows(&self) -> &[Vec<i8>] {
        &self.payoff
    }
}

pub fn tournament_game(t: &Tournament) -> TournamentGame {
    game_in(t, t.alternatives())
}

/// The game of the sub-tournament on `within`, rows in ascending label order.
pub fn game_in(t: &Tournament, within: AltSet) -> TournamentGame {
    let labels = within.to_vec();
    let payoff = labels
        .iter()
        .map(|&i| {
            labels
                .iter()
                .map(|&j| {
                    if i == j {
                        0
                    } else if t.beats(i, j) {
                        1
                    } else {
                        -1
                    }
                })
                .collect()
        })
        .collect();
    TournamentGame { payoff }
}

/// Mixed strategy with exact rational weights (always in lowest terms).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Strategy {
    weights: Vec<BigRational>,
}

impl Strategy {
    pub fn new(weights: Vec<BigRational>) -> Result<Self> {
        if weights.iter().any(|w| w.is_negative()) {
            return Err(Error::Infeasible);
        }
        let total: BigRational = weights.iter().cloned().sum();
        if !total.is_one() {
            return Err(Error::Infeasible);
        }
        Ok(Strategy { weights })
    }

    /// Builds a strategy from `(numerator, denominator)` pairs.
    pub fn from_ratios(pairs: &[(i64, i64)]) -> Result<Self> {
        Self::new(
            pairs
                .iter()
                .map(|&(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
                .collect(),
        )
    }

    pub fn pure(n: usize, a: usize) -> Self {
        let mut weights = vec![BigRational::zero(); n];
        weights[a] = BigRational::one();
        Strategy { weights }
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Indices played with positive probability.
    pub fn support(&self) -> AltSet {
        self.weights
            .iter()
            .enumerate()
            .filter(|(_, w)| w.is_positive())
            .map(|(i, _)| i)
            .collect()
    }

    /// Parses `index:numerator/denominator` pairs (1-based indices).
    pub fn parse(text: &str) -> Result<Self> {
        let mut pairs: Vec<(usize, BigRational)> = Vec::new();
        for (k, tok) in text.split_whitespace().enumerate() {
            let bad = || Error::MalformedInput {
                line: 1,
                message: format!("bad strategy entry {tok:?}"),
            };
            let (idx, frac) = tok.split_once(':').ok_or_else(bad)?;
            let idx: usize = idx.parse().map_err(|_| bad())?;
            let (num, den) = frac.split_once('/').ok_or_else(bad)?;
            let num: BigInt = num.parse().map_err(|_| bad())?;
            let den: BigInt = den.parse().map_err(|_| bad())?;
            if idx != k + 1 || den.is_zero() {
                return Err(bad());
            }
            pairs.push((idx, BigRational::new(num, den)));
        }
        Self::new(pairs.into_iter().map(|(_, w)| w).collect())
    }
}

impl fmt::Display for Strategy {
    /// `1:1/3 2:1/3 3:1/3`: every index in ascending order, 1-based.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.weights.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}:{}/{}", i + 1, w.numer(), w.denom())?;
        }
        Ok(())
    }
}

/// Solves `M s ≤ 0, Σ s = 1, s ≥ 0` exactly.
///
/// Phase-one simplex: row `i` is `Σ_j m_ij s_j + w_i = 0` with slack `w_i`,
/// the last row is `Σ_j s_j + r = 1` with artificial `r`, and `r` is
/// minimized. Column order is `s_0..s_{n-1}, w_0..w_{n-1}, r`; Bland's rule
/// picks the lowest-index entering column and breaks ratio ties by the
/// lowest-index basic variable.
pub fn solve_symmetric_game(g: &TournamentGame) -> Result<Strategy> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyTournament);
    }
    let cols = 2 * n + 1;
    let artificial = 2 * n;
    let zero = BigRational::zero();
    let one = BigRational::one();

    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(n + 1);
    let mut rhs: Vec<BigRational> = Vec::with_capacity(n + 1);
    for i in 0..n {
        let mut row = vec![zero.clone(); cols];
        for j in 0..n {
            row[j] = BigRational::from_integer(BigInt::from(g.entry(i, j)));
        }
        row[n + i] = one.clone();
        rows.push(row);
        rhs.push(zero.clone());
    }
    let mut last = vec![zero.clone(); cols];
    for cell in last.iter_mut().take(n) {
        *cell = one.clone();
    }
    last[artificial] = one.clone();
    rows.push(last);
    rhs.push(one.clone());
    let mut basis: Vec<usize> = (n..2 * n).chain(std::iter::once(artificial)).collect();

    // Reduced costs of "minimize r": cost row minus the artificial's row.
    let mut reduced: Vec<BigRational> = vec![zero.clone(); cols];
    reduced[artificial] = one.clone();
    let art_row = rows[n].clone();
    for (c, v) in reduced.iter_mut().zip(&art_row) {
        *c -= v;
    }

    loop {
        let Some(enter) = (0..cols).find(|&c| reduced[c].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, BigRational)> = None;
        for r in 0..rows.len() {
            let a = &rows[r][enter];
            if !a.is_positive() {
                continue;
            }
            let ratio = &rhs[r] / a;
            let better = match &leave {
                None => true,
                Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
            };
            if better {
                leave = Some((r, ratio));
            }
        }
        // Unbounded is impossible: the objective is bounded below by 0.
        let (pr, _) = leave.ok_or(Error::Infeasible)?;

        let pivot = rows[pr][enter].clone();
        for v in rows[pr].iter_mut() {
            *v /= &pivot;
        }
        rhs[pr] /= &pivot;
        let pivot_row = rows[pr].clone();
        let pivot_rhs = rhs[pr].clone();
        for r in 0..rows.len() {
            if r == pr || rows[r][enter].is_zero() {
                continue;
            }
            let factor = rows[r][enter].clone();
            for (v, p) in rows[r].iter_mut().zip(&pivot_row) {
                *v -= &factor * p;
            }
            rhs[r] -= &factor * &pivot_rhs;
        }
        let factor = reduced[enter].clone();
        for (v, p) in reduced.iter_mut().zip(&pivot_row) {
            *v -= &factor * p;
        }
        basis[pr] = enter;
    }

    let residual = basis
        .iter()
        .position(|&b| b == artificial)
        .map_or(BigRational::zero(), |r| rhs[r].clone());
    if !residual.is_zero() {
        return Err(Error::Infeasible);
    }
    let mut weights = vec![zero; n];
    for (r, &b) in basis.iter().enumerate() {
        if b < n {
            weights[b] = rhs[r].clone();
        }
    }
    Strategy::new(weights)
}

/// Certificate check: feasibility of the system plus complementary slackness.
pub fn verify_equilibrium(g: &TournamentGame, s: &Strategy) -> Result<bool> {
    let n = g.order();
    if s.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: s.len(),
        });
    }
    let w = s.weights();
    if w.iter().any(|x| x.is_negative()) || !w.iter().cloned().sum::<BigRational>().is_one() {
        return Ok(false);
    }
    for i in 0..n {
        let mut payoff = BigRational::zero();
        for (j, wj) in w.iter().enumerate() {
            match g.entry(i, j) {
                1 => payoff += wj,
                -1 => payoff -= wj,
                _ => {}
            }
        }
        if payoff.is_positive() || (w[i].is_positive() && !payoff.is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Support of the equilibrium of the game on `within`, in original labels.
pub fn bipartisan_in(t: &Tournament, within: AltSet) -> AltSet {
    if within.len() <= 1 {
        return within;
    }
    let labels = within.to_vec();
    let strategy = solve_symmetric_game(&game_in(t, within))
        .expect("tournament games always have an equilibrium");
    strategy.support().iter().map(|i| labels[i]).collect()
}

pub fn bipartisan(t: &Tournament) -> AltSet {
    bipartisan_in(t, t.alternatives())
}

/// Equilibrium strategy of the full tournament game.
pub fn equilibrium(t: &Tournament) -> Strategy {
    solve_symmetric_game(&tournament_game(t)).expect("tournament games always have an equilibrium")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn uniform(n: i64) -> Strategy {
        Strategy::from_ratios(&vec![(1, n); n as usize]).unwrap()
    }

    #[test]
    fn rock_paper_scissors_matrix() {
        let g = tournament_game(&fixtures::three_cycle());
        assert_eq!(g.rows(), &[vec![0, 1, -1], vec![-1, 0, 1], vec![1, -1, 0]]);
        let g = tournament_game(&fixtures::transitive_triple());
        assert_eq!(g.rows(), &[vec![0, 1, 1], vec![-1, 0, 1], vec![-1, -1, 0]]);
        let g = tournament_game(&Tournament::transitive(1).unwrap());
        assert_eq!(g.rows(), &[vec![0]]);
    }

    #[test]
    fn solves_small_games() {
        let rps = tournament_game(&fixtures::three_cycle());
        assert_eq!(solve_symmetric_game(&rps).unwrap(), uniform(3));
        let tr = tournament_game(&fixtures::transitive_triple());
        assert_eq!(solve_symmetric_game(&tr).unwrap(), Strategy::pure(3, 0));
        let c5 = tournament_game(&Tournament::cyclic(5).unwrap());
        assert_eq!(solve_symmetric_game(&c5).unwrap(), uniform(5));
    }

    #[test]
    fn verification() {
        let rps = tournament_game(&fixtures::three_cycle());
        assert!(verify_equilibrium(&rps, &uniform(3)).unwrap());
        assert!(!verify_equilibrium(&rps, &Strategy::pure(3, 0)).unwrap());
        let tr = tournament_game(&fixtures::transitive_triple());
        assert!(verify_equilibrium(&tr, &Strategy::pure(3, 0)).unwrap());
        assert!(matches!(
            verify_equilibrium(&tr, &Strategy::pure(2, 0)),
            Err(Error::DimensionMismatch { expected: 3, got: 2 })
        ));
    }

    #[test]
    fn bipartisan_examples() {
        assert_eq!(bipartisan(&fixtures::transitive_triple()), AltSet::from([0]));
        assert_eq!(bipartisan(&fixtures::three_cycle()), AltSet::full(3));
        let f1 = fixtures::f1();
        let s = equilibrium(&f1);
        assert!(verify_equilibrium(&tournament_game(&f1), &s).unwrap());
    }

    #[test]
    fn strategy_text_round_trip() {
        let s = uniform(3);
        assert_eq!(s.to_string(), "1:1/3 2:1/3 3:1/3");
        assert_eq!(Strategy::parse("1:1/3 2:1/3 3:1/3").unwrap(), s);
        assert_eq!(Strategy::pure(2, 1).to_string(), "1:0/1 2:1/1");
        assert!(Strategy::parse("1:1/2 2:1/3").is_err());
        assert!(Strategy::parse("2:1/1").is_err());
    }

    #[test]
    fn rejects_non_skew_matrices() {
        assert!(TournamentGame::new(vec![vec![0, 1], vec![1, 0]]).is_err());
        assert!(TournamentGame::new(vec![vec![1]]).is_err());
        assert!(TournamentGame::new(vec![vec![0, 1], vec![-1, 0]]).is_ok());
    }
}
