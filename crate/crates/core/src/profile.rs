use crate::altset::AltSet;
use crate::error::{Error, Result};
use crate::tournament::Tournament;

/// Voters' linear orders over `0..n`, most preferred first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreferenceProfile {
    order: usize,
    voters: Vec<Vec<usize>>,
}

impl PreferenceProfile {
    pub fn new(voters: Vec<Vec<usize>>) -> Result<Self> {
        let order = voters.first().map(Vec::len).ok_or(Error::EmptySet)?;
        if order == 0 {
            return Err(Error::EmptyTournament);
        }
        if order > Tournament::MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order,
                cap: Tournament::MAX_ORDER,
            });
        }
        for (v, ranking) in voters.iter().enumerate() {
            let seen: AltSet = ranking.iter().copied().filter(|&a| a < order).collect();
            if ranking.len() != order || seen != AltSet::full(order) {
                return Err(Error::InconsistentAlternativeSets { voter: v + 1 });
            }
        }
        Ok(PreferenceProfile { order, voters })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn voters(&self) -> &[Vec<usize>] {
        &self.voters
    }

    /// Parses the profile file format: `#` comments, a line with `n`, then
    /// one voter per line as a space-separated permutation of `1..=n`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line_no, header) = lines.next().ok_or(Error::EmptyTournament)?;
        let n: usize = header.parse().map_err(|_| Error::MalformedInput {
            line: line_no,
            message: format!("expected the number of alternatives, found {header:?}"),
        })?;
        if n == 0 {
            return Err(Error::EmptyTournament);
        }
        let mut voters = Vec::new();
        for (line_no, line) in lines {
            let ranking = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>()
                        .ok()
                        .filter(|&a| (1..=n).contains(&a))
                        .map(|a| a - 1)
                        .ok_or_else(|| Error::MalformedInput {
                            line: line_no,
                            message: format!("{tok:?} is not an alternative in 1..={n}"),
                        })
                })
                .collect::<Result<Vec<usize>>>()?;
            voters.push(ranking);
        }
        if voters.is_empty() {
            return Err(Error::MalformedInput {
                line: line_no,
                message: "profile has no voters".to_string(),
            });
        }
        if voters.iter().any(|v| v.len() != n) {
            let voter = voters.iter().position(|v| v.len() != n).unwrap() + 1;
            return Err(Error::InconsistentAlternativeSets { voter });
        }
        Self::new(voters)
    }
}

/// Pairwise strict-majority tournament of an odd electorate.
pub fn mcgarvey(profile: &PreferenceProfile) -> Result<Tournament> {
    let voters = profile.voters();
    if voters.len() % 2 == 0 {
        return Err(Error::EvenElectorate(voters.len()));
    }
    let n = profile.order();
    let positions: Vec<Vec<usize>> = voters
        .iter()
        .map(|ranking| {
            let mut pos = vec![0; n];
            for (rank, &a) in ranking.iter().enumerate() {
                pos[a] = rank;
            }
            pos
        })
        .collect();
    Tournament::from_fn(n, |i, j| {
        let support = positions.iter().filter(|pos| pos[i] < pos[j]).count();
        2 * support > voters.len()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn condorcet_paradox_is_a_cycle() {
        let p = PreferenceProfile::new(vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).unwrap();
        let t = mcgarvey(&p).unwrap();
        assert!(t.beats(0, 1) && t.beats(1, 2) && t.beats(2, 0));
    }

    #[test]
    fn single_and_unanimous_voters() {
        let one = PreferenceProfile::new(vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(mcgarvey(&one).unwrap(), Tournament::transitive(3).unwrap());
        let three = PreferenceProfile::new(vec![vec![0, 1, 2]; 3]).unwrap();
        assert_eq!(mcgarvey(&three).unwrap(), Tournament::transitive(3).unwrap());
    }

    #[test]
    fn even_electorate_rejected() {
        let p = PreferenceProfile::new(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(mcgarvey(&p), Err(Error::EvenElectorate(2)));
    }

    #[test]
    fn inconsistent_voters_rejected() {
        assert_eq!(
            PreferenceProfile::new(vec![vec![0, 1, 2], vec![0, 0, 2]]),
            Err(Error::InconsistentAlternativeSets { voter: 2 })
        );
        assert!(matches!(
            PreferenceProfile::parse("3\n1 2 3\n1 2\n"),
            Err(Error::InconsistentAlternativeSets { voter: 2 })
        ));
        assert!(matches!(
            PreferenceProfile::parse("3\n1 2 4\n"),
            Err(Error::MalformedInput { line: 2, .. })
        ));
    }

    #[test]
    fn parses_profile_file() {
        let p = PreferenceProfile::parse("# paradox\n3\n1 2 3\n2 3 1\n3 1 2\n").unwrap();
        assert_eq!(p.voters().len(), 3);
        assert_eq!(p.voters()[1], vec![1, 2, 0]);
    }
}
