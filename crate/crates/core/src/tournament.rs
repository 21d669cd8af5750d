use std::fmt;

use crate::altset::AltSet;
use crate::error::{Error, Result};

/// A complete, asymmetric dominance relation on `order` alternatives.
///
/// Row `i` holds the dominion of alternative `i` as a bit set; the column
/// view (dominators) is kept alongside so both directions are one word load.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    dominion: Vec<AltSet>,
    dominators: Vec<AltSet>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Dominion,
    Dominators,
}

impl Tournament {
    pub const MAX_ORDER: usize = AltSet::CAPACITY;

    /// Builds a tournament from its dominion rows, validating irreflexivity,
    /// asymmetry and completeness.
    pub fn from_dominion(rows: Vec<AltSet>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyTournament);
        }
        if n > Self::MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order: n,
                cap: Self::MAX_ORDER,
            });
        }
        let all = AltSet::full(n);
        for (i, row) in rows.iter().enumerate() {
            if !row.is_subset(all) {
                return Err(Error::NotATournament(format!(
                    "row {} references alternatives beyond order {n}",
                    i + 1
                )));
            }
            if row.contains(i) {
                return Err(Error::NotATournament(format!(
                    "alternative {} dominates itself",
                    i + 1
                )));
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                match (rows[i].contains(j), rows[j].contains(i)) {
                    (true, false) | (false, true) => {}
                    (true, true) => {
                        return Err(Error::NotATournament(format!(
                            "{} and {} dominate each other",
                            i + 1,
                            j + 1
                        )))
                    }
                    (false, false) => {
                        return Err(Error::NotATournament(format!(
                            "no edge between {} and {}",
                            i + 1,
                            j + 1
                        )))
                    }
                }
            }
        }
        Ok(Self::from_valid_rows(rows))
    }

    /// Rows already known to form a tournament.
    pub(crate) fn from_valid_rows(dominion: Vec<AltSet>) -> Self {
        let n = dominion.len();
        let mut dominators = vec![AltSet::EMPTY; n];
        for (i, row) in dominion.iter().enumerate() {
            for j in row.iter() {
                dominators[j].insert(i);
            }
        }
        Tournament {
            dominion,
            dominators,
        }
    }

    /// Builds a tournament from a predicate `beats(i, j)` consulted for
    /// `i < j` only.
    pub fn from_fn(n: usize, mut beats: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyTournament);
        }
        if n > Self::MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order: n,
                cap: Self::MAX_ORDER,
            });
        }
        let mut rows = vec![AltSet::EMPTY; n];
        for i in 0..n {
            for j in (i + 1)..n {
                if beats(i, j) {
                    rows[i].insert(j);
                } else {
                    rows[j].insert(i);
                }
            }
        }
        Ok(Self::from_valid_rows(rows))
    }

    /// `0 ≻ 1 ≻ … ≻ n-1`.
    pub fn transitive(n: usize) -> Result<Self> {
        Self::from_fn(n, |_, _| true)
    }

    /// Circulant tournament on an odd order: `i` beats `i+1, …, i+(n-1)/2` mod n.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n % 2 == 0 {
            return Err(Error::NotATournament(format!(
                "a cyclic tournament needs odd order, got {n}"
            )));
        }
        let half = n / 2;
        Self::from_fn(n, |i, j| j - i <= half)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.dominion.len()
    }

    #[inline]
    pub fn alternatives(&self) -> AltSet {
        AltSet::full(self.order())
    }

    #[inline]
    pub fn beats(&self, a: usize, b: usize) -> bool {
        self.dominion[a].contains(b)
    }

    #[inline]
    pub fn dominion(&self, a: usize) -> AltSet {
        self.dominion[a]
    }

    #[inline]
    pub fn dominators(&self, a: usize) -> AltSet {
        self.dominators[a]
    }

    /// Checked neighborhood query restricted to `within` (defaults to all).
    pub fn neighborhood(
        &self,
        a: usize,
        direction: Direction,
        within: Option<AltSet>,
    ) -> Result<AltSet> {
        self.check_alternative(a)?;
        let within = within.unwrap_or_else(|| self.alternatives());
        if !within.is_subset(self.alternatives()) {
            let bad = within.difference(self.alternatives()).first().unwrap_or(0);
            return Err(Error::AlternativeOutOfRange {
                alternative: bad,
                order: self.order(),
            });
        }
        let side = match direction {
            Direction::Dominion => self.dominion[a],
            Direction::Dominators => self.dominators[a],
        };
        Ok(side.intersection(within))
    }

    pub fn check_alternative(&self, a: usize) -> Result<()> {
        if a < self.order() {
            Ok(())
        } else {
            Err(Error::AlternativeOutOfRange {
                alternative: a,
                order: self.order(),
            })
        }
    }

    pub fn check_subset(&self, b: AltSet) -> Result<()> {
        match b.difference(self.alternatives()).first() {
            None => Ok(()),
            Some(a) => Err(Error::AlternativeOutOfRange {
                alternative: a,
                order: self.order(),
            }),
        }
    }

    /// Copeland degree `|D(a)|` within `within`.
    #[inline]
    pub fn score_within(&self, a: usize, within: AltSet) -> usize {
        self.dominion[a].intersection(within).len()
    }

    pub fn scores(&self) -> Vec<usize> {
        self.dominion.iter().map(|d| d.len()).collect()
    }

    pub fn is_regular(&self) -> bool {
        let scores = self.scores();
        scores.iter().all(|&s| s == scores[0])
    }

    /// The undominated alternative of `within`, if there is one.
    pub fn condorcet_winner_within(&self, within: AltSet) -> Option<usize> {
        within
            .iter()
            .find(|&a| self.dominators[a].intersection(within).is_empty())
    }

    pub fn condorcet_winner(&self) -> Option<usize> {
        self.condorcet_winner_within(self.alternatives())
    }

    pub fn condorcet_loser_within(&self, within: AltSet) -> Option<usize> {
        within
            .iter()
            .find(|&a| self.dominion[a].intersection(within).is_empty())
    }

    /// `true` iff every alternative outside `b` relates uniformly to all of `b`.
    pub fn is_component(&self, b: AltSet) -> Result<bool> {
        if b.is_empty() {
            return Err(Error::EmptySet);
        }
        self.check_subset(b)?;
        Ok(self
            .alternatives()
            .difference(b)
            .iter()
            .all(|a| b.is_subset(self.dominion[a]) || b.is_subset(self.dominators[a])))
    }

    /// The tournament induced on `members`, relabeled to `0..members.len()`
    /// in ascending order of the original labels.
    pub fn restrict(&self, members: AltSet) -> Result<Tournament> {
        self.check_subset(members)?;
        if members.is_empty() {
            return Err(Error::EmptyTournament);
        }
        let labels = members.to_vec();
        let rows = labels
            .iter()
            .map(|&a| {
                labels
                    .iter()
                    .enumerate()
                    .filter(|&(_, &b)| self.beats(a, b))
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect();
        Ok(Self::from_valid_rows(rows))
    }

    /// Relabels alternative `i` as `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Tournament> {
        let n = self.order();
        if perm.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: perm.len(),
            });
        }
        let mut seen = AltSet::EMPTY;
        for &p in perm {
            if p >= n || seen.contains(p) {
                return Err(Error::NotATournament(
                    "relabeling is not a permutation".to_string(),
                ));
            }
            seen.insert(p);
        }
        let mut rows = vec![AltSet::EMPTY; n];
        for i in 0..n {
            for j in self.dominion[i].iter() {
                rows[perm[i]].insert(perm[j]);
            }
        }
        Ok(Self::from_valid_rows(rows))
    }

    /// Reverses the edge between `a` and `b`.
    pub fn flip(&self, a: usize, b: usize) -> Tournament {
        let mut rows = self.dominion.clone();
        if rows[a].contains(b) {
            rows[a].remove(b);
            rows[b].insert(a);
        } else {
            rows[b].remove(a);
            rows[a].insert(b);
        }
        Self::from_valid_rows(rows)
    }

    /// Parses the matrix file format: optional `#` comment lines, a line with
    /// the order `n`, then `n` rows of `n` characters from `{0,1}`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line_no, header) = lines.next().ok_or(Error::EmptyTournament)?;
        let n: usize = header.parse().map_err(|_| Error::MalformedInput {
            line: line_no,
            message: format!("expected the order, found {header:?}"),
        })?;
        if n == 0 {
            return Err(Error::EmptyTournament);
        }
        if n > Self::MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order: n,
                cap: Self::MAX_ORDER,
            });
        }
        let mut rows = Vec::with_capacity(n);
        for r in 0..n {
            let (line_no, line) = lines.next().ok_or(Error::MalformedInput {
                line: line_no,
                message: format!("expected {n} rows, found {r}"),
            })?;
            if line.chars().count() != n {
                return Err(Error::MalformedInput {
                    line: line_no,
                    message: format!("row has {} entries, expected {n}", line.chars().count()),
                });
            }
            let mut row = AltSet::EMPTY;
            for (c, ch) in line.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => row.insert(c),
                    other => {
                        return Err(Error::MalformedInput {
                            line: line_no,
                            message: format!("unexpected character {other:?}"),
                        })
                    }
                }
            }
            rows.push(row);
        }
        if let Some((line_no, _)) = lines.next() {
            return Err(Error::MalformedInput {
                line: line_no,
                message: format!("trailing content after {n} rows"),
            });
        }
        Self::from_dominion(rows)
    }

    /// Serializes to the matrix file format (no comments, trailing newline).
    pub fn to_matrix_string(&self) -> String {
        let n = self.order();
        let mut out = String::with_capacity((n + 1) * (n + 1) + 4);
        out.push_str(&n.to_string());
        out.push('\n');
        for row in &self.dominion {
            for c in 0..n {
                out.push(if row.contains(c) { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tournament(")?;
        for (i, row) in self.dominion.iter().enumerate() {
            if i > 0 {
                write!(f, "/")?;
            }
            for c in 0..self.order() {
                write!(f, "{}", u8::from(row.contains(c)))?;
            }
        }
        write!(f, ")")
    }
}

impl fmt::Display for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_matrix_string())
    }
}

impl std::str::FromStr for Tournament {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// A partition of the alternatives into components together with the
/// summary tournament on the blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub blocks: Vec<AltSet>,
    pub summary: Tournament,
}

impl Decomposition {
    /// Derives the summary from `t` after checking that `blocks` partition the
    /// alternatives into components.
    pub fn from_blocks(t: &Tournament, blocks: Vec<AltSet>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::NotAProduct);
        }
        let mut covered = AltSet::EMPTY;
        for &b in &blocks {
            if b.is_empty() || !b.intersection(covered).is_empty() {
                return Err(Error::NotAProduct);
            }
            t.check_subset(b)?;
            if !t.is_component(b)? {
                return Err(Error::NotAProduct);
            }
            covered = covered.union(b);
        }
        if covered != t.alternatives() {
            return Err(Error::NotAProduct);
        }
        let reps: Vec<usize> = blocks.iter().map(|b| b.first().unwrap()).collect();
        let summary = Tournament::from_fn(blocks.len(), |i, j| t.beats(reps[i], reps[j]))?;
        Ok(Decomposition { blocks, summary })
    }

    /// Index of the block containing `a`.
    pub fn block_of(&self, a: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(a))
    }
}

/// Substitutes `parts[i]` for summary alternative `i`. Block `i` occupies the
/// consecutive labels following blocks `0..i`.
pub fn product(summary: &Tournament, parts: &[Tournament]) -> Result<(Tournament, Decomposition)> {
    if parts.len() != summary.order() {
        return Err(Error::ArityMismatch {
            expected: summary.order(),
            got: parts.len(),
        });
    }
    let total: usize = parts.iter().map(Tournament::order).sum();
    if total > Tournament::MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order: total,
            cap: Tournament::MAX_ORDER,
        });
    }
    let mut offsets = Vec::with_capacity(parts.len());
    let mut blocks = Vec::with_capacity(parts.len());
    let mut next = 0;
    for p in parts {
        offsets.push(next);
        blocks.push(AltSet::from_bits(AltSet::full(p.order()).bits() << next));
        next += p.order();
    }
    let mut rows = vec![AltSet::EMPTY; total];
    for (i, part) in parts.iter().enumerate() {
        let outward = summary
            .dominion(i)
            .iter()
            .fold(AltSet::EMPTY, |acc, j| acc.union(blocks[j]));
        for a in 0..part.order() {
            let inner = AltSet::from_bits(part.dominion(a).bits() << offsets[i]);
            rows[offsets[i] + a] = inner.union(outward);
        }
    }
    let t = Tournament::from_valid_rows(rows);
    let decomposition = Decomposition {
        blocks,
        summary: summary.clone(),
    };
    Ok((t, decomposition))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_cycle() -> Tournament {
        Tournament::parse("3\n010\n001\n100").unwrap()
    }

    #[test]
    fn parses_the_three_cycle() {
        let t = three_cycle();
        assert!(t.beats(0, 1) && t.beats(1, 2) && t.beats(2, 0));
        assert_eq!(t.order(), 3);
    }

    #[test]
    fn parses_transitive_triple() {
        let t = Tournament::parse("3\n011\n001\n000").unwrap();
        assert_eq!(t, Tournament::transitive(3).unwrap());
    }

    #[test]
    fn rejects_symmetric_pair() {
        assert!(matches!(
            Tournament::parse("2\n01\n01"),
            Err(Error::NotATournament(_))
        ));
    }

    #[test]
    fn rejects_malformed_and_empty() {
        assert!(matches!(
            Tournament::parse("3\n01\n001\n100"),
            Err(Error::MalformedInput { line: 2, .. })
        ));
        assert!(matches!(
            Tournament::parse("2\n0x\n00"),
            Err(Error::MalformedInput { .. })
        ));
        assert!(matches!(
            Tournament::parse("2\n11\n00"),
            Err(Error::NotATournament(_))
        ));
        assert!(matches!(Tournament::parse("0\n"), Err(Error::EmptyTournament)));
        assert!(matches!(Tournament::parse("# only\n"), Err(Error::EmptyTournament)));
        assert!(matches!(
            Tournament::parse("1\n0\n0"),
            Err(Error::MalformedInput { .. })
        ));
    }

    #[test]
    fn comments_and_whitespace_are_normalized() {
        let t = Tournament::parse("# a comment\n3\n  010\n# mid\n001\n100\n\n").unwrap();
        assert_eq!(t.to_matrix_string(), "3\n010\n001\n100\n");
    }

    #[test]
    fn neighborhoods() {
        let t = three_cycle();
        assert_eq!(
            t.neighborhood(0, Direction::Dominion, None).unwrap(),
            AltSet::from([1])
        );
        assert_eq!(
            t.neighborhood(0, Direction::Dominators, None).unwrap(),
            AltSet::from([2])
        );
        let tr = Tournament::transitive(3).unwrap();
        assert_eq!(
            tr.neighborhood(2, Direction::Dominators, Some(AltSet::from([0, 1])))
                .unwrap(),
            AltSet::from([0, 1])
        );
        assert!(matches!(
            t.neighborhood(3, Direction::Dominion, None),
            Err(Error::AlternativeOutOfRange { .. })
        ));
    }

    #[test]
    fn condorcet_winner_cases() {
        assert_eq!(Tournament::transitive(3).unwrap().condorcet_winner(), Some(0));
        assert_eq!(three_cycle().condorcet_winner(), None);
    }

    #[test]
    fn product_identity_cases() {
        let t = three_cycle();
        let single = Tournament::transitive(1).unwrap();
        let (p, d) = product(&single, std::slice::from_ref(&t)).unwrap();
        assert_eq!(p, t);
        assert_eq!(d.blocks, vec![AltSet::full(3)]);

        let two = Tournament::transitive(2).unwrap();
        let (p, _) = product(&two, &[single.clone(), single.clone()]).unwrap();
        assert_eq!(p, two);

        assert!(matches!(
            product(&two, &[single]),
            Err(Error::ArityMismatch { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn components() {
        let t = three_cycle();
        assert!(t.is_component(AltSet::from([1])).unwrap());
        assert!(!t.is_component(AltSet::from([0, 1])).unwrap());
        assert!(t.is_component(AltSet::full(3)).unwrap());
        assert_eq!(t.is_component(AltSet::EMPTY), Err(Error::EmptySet));
    }

    #[test]
    fn restrict_and_permute() {
        let t = Tournament::transitive(4).unwrap();
        let r = t.restrict(AltSet::from([1, 3])).unwrap();
        assert!(r.beats(0, 1));
        let p = three_cycle().permute(&[1, 2, 0]).unwrap();
        assert!(p.beats(1, 2) && p.beats(2, 0) && p.beats(0, 1));
        let f = t.flip(0, 3);
        assert!(f.beats(3, 0));
    }
}
