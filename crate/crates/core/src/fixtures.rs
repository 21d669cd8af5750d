//! Named example tournaments shipped with the crate.
//!
//! Labels here are 0-based; the matrix files under `fixtures/` carry the same
//! relations and are what the CLI reads.

use crate::altset::AltSet;
use crate::tournament::{product, Tournament};

pub const F1_MATRIX: &str = include_str!("../fixtures/f1.txt");
pub const F2_MATRIX: &str = include_str!("../fixtures/f2.txt");
pub const F3_MATRIX: &str = include_str!("../fixtures/f3.txt");

pub fn three_cycle() -> Tournament {
    Tournament::cyclic(3).expect("order 3 is odd")
}

pub fn transitive_triple() -> Tournament {
    Tournament::transitive(3).expect("order 3")
}

/// A 3-cycle `{0,1,2}` plus a Condorcet loser `3`.
pub fn cycle_with_loser() -> Tournament {
    Tournament::from_fn(4, |i, j| j == 3 || (i, j) == (0, 1) || (i, j) == (1, 2)).expect("order 4")
}

/// Order 10: three 3-cycle blocks in a cyclic arrangement plus alternative 9,
/// which beats only 2, 5 and 8.
pub fn f1() -> Tournament {
    let block = |a: usize| a / 3;
    let within = |a: usize, b: usize| (a % 3 + 1) % 3 == b % 3;
    Tournament::from_fn(10, |i, j| {
        if j == 9 {
            !matches!(i, 2 | 5 | 8)
        } else if block(i) == block(j) {
            within(i, j)
        } else {
            (block(i) + 1) % 3 == block(j)
        }
    })
    .expect("order 10")
}

/// Order 8: `i ≻ j` for `i < j` except `7≻3, 6≻2, 5≻1, 6≻0, 7≻0`.
pub fn f2() -> Tournament {
    const REVERSED: [(usize, usize); 5] = [(3, 7), (2, 6), (1, 5), (0, 6), (0, 7)];
    Tournament::from_fn(8, |i, j| !REVERSED.contains(&(i, j))).expect("order 8")
}

/// Order 5: 3-cycle block `{0,1,2}` beating 3, `3 ≻ 4`, and `4` beating the block.
pub fn f3() -> Tournament {
    let single = Tournament::transitive(1).expect("order 1");
    product(&three_cycle(), &[three_cycle(), single.clone(), single])
        .expect("arity matches")
        .0
}

/// F3 with alternatives 3 and 4 each replaced by a 3-cycle (order 9).
pub fn f3_with_cycle_components() -> Tournament {
    let single = Tournament::transitive(1).expect("order 1");
    product(
        &f3(),
        &[
            single.clone(),
            single.clone(),
            single,
            three_cycle(),
            three_cycle(),
        ],
    )
    .expect("arity matches")
    .0
}

/// All alternatives of F1 except 9.
pub fn f1_extending_set() -> AltSet {
    AltSet::full(9)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_files_match_constructors() {
        assert_eq!(Tournament::parse(F1_MATRIX).unwrap(), f1());
        assert_eq!(Tournament::parse(F2_MATRIX).unwrap(), f2());
        assert_eq!(Tournament::parse(F3_MATRIX).unwrap(), f3());
    }

    #[test]
    fn f1_structure() {
        let t = f1();
        assert_eq!(t.dominion(9), AltSet::from([2, 5, 8]));
        for b in [[0, 1, 2], [3, 4, 5], [6, 7, 8]] {
            assert!(t.beats(b[0], b[1]) && t.beats(b[1], b[2]) && t.beats(b[2], b[0]));
        }
        assert!(t.beats(0, 3) && t.beats(3, 6) && t.beats(6, 0));
        assert!(!t.is_component(AltSet::from([0, 1, 2])).unwrap());
    }

    #[test]
    fn f2_structure() {
        let t = f2();
        for (a, b) in [(7, 3), (6, 2), (5, 1), (6, 0), (7, 0)] {
            assert!(t.beats(a, b));
        }
        assert!(t.beats(4, 5) && t.beats(5, 6) && t.beats(6, 7) && t.beats(0, 1));
        assert_eq!(t.dominion(4), AltSet::from([5, 6, 7]));
    }

    #[test]
    fn f3_structure() {
        let t = f3();
        assert!(t.beats(0, 1) && t.beats(1, 2) && t.beats(2, 0));
        assert!((0..3).all(|a| t.beats(a, 3) && t.beats(4, a)));
        assert!(t.beats(3, 4));
        assert!(t.is_component(AltSet::from([0, 1, 2])).unwrap());
        assert!(!t.is_component(AltSet::from([3, 4])).unwrap());
    }

    #[test]
    fn cycle_with_loser_structure() {
        let t = cycle_with_loser();
        assert_eq!(t.dominators(3), AltSet::from([0, 1, 2]));
        assert!(t.beats(0, 1) && t.beats(1, 2) && t.beats(2, 0));
    }
}
