//! Tournament isomorphism and canonical forms for small orders.

use crate::altset::AltSet;
use crate::enumerate;
use crate::tournament::Tournament;

/// Finds a relabeling `pi` with `i ≻ j` in `t1` iff `pi[i] ≻ pi[j]` in `t2`.
pub fn are_isomorphic(t1: &Tournament, t2: &Tournament) -> Option<Vec<usize>> {
    let n = t1.order();
    if n != t2.order() {
        return None;
    }
    let inv1 = invariants(t1);
    let inv2 = invariants(t2);
    let mut sorted1 = inv1.clone();
    let mut sorted2 = inv2.clone();
    sorted1.sort_unstable();
    sorted2.sort_unstable();
    if sorted1 != sorted2 {
        return None;
    }

    // Assign the most constrained vertices first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (inv1.iter().filter(|x| **x == inv1[v]).count(), v));

    let mut map = vec![usize::MAX; n];
    let mut used = AltSet::EMPTY;
    if extend(t1, t2, &inv1, &inv2, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    t1: &Tournament,
    t2: &Tournament,
    inv1: &[(usize, Vec<usize>)],
    inv2: &[(usize, Vec<usize>)],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut AltSet,
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for c in 0..t2.order() {
        if used.contains(c) || inv2[c] != inv1[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| t1.beats(v, u) == t2.beats(c, map[u]));
        if !consistent {
            continue;
        }
        map[v] = c;
        used.insert(c);
        if extend(t1, t2, inv1, inv2, order, depth + 1, map, used) {
            return true;
        }
        used.remove(c);
        map[v] = usize::MAX;
    }
    false
}

/// Per-vertex invariant: own score plus the sorted scores of its dominion.
fn invariants(t: &Tournament) -> Vec<(usize, Vec<usize>)> {
    let scores = t.scores();
    (0..t.order())
        .map(|v| {
            let mut out: Vec<usize> = t.dominion(v).iter().map(|w| scores[w]).collect();
            out.sort_unstable();
            (scores[v], out)
        })
        .collect()
}

/// Canonical code of `t`: the smallest labeled index (see
/// [`enumerate::index_of`]) over all relabelings that list alternatives in
/// non-decreasing score order. Two tournaments are isomorphic iff their
/// canonical codes agree.
pub fn canonical_code(t: &Tournament) -> u64 {
    let n = t.order();
    assert!(
        n <= enumerate::LABELED_CAP,
        "canonical codes are defined up to order {}",
        enumerate::LABELED_CAP
    );
    let scores = t.scores();
    let mut by_score: Vec<usize> = (0..n).collect();
    by_score.sort_by_key(|&v| (scores[v], v));
    // Score classes as contiguous ranges of new labels.
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in &by_score {
        match classes.last_mut() {
            Some(c) if scores[c[0]] == scores[v] => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut best = u64::MAX;
    let mut layout = Vec::with_capacity(n);
    search_layouts(t, &classes, 0, &mut layout, &mut best);
    best
}

fn search_layouts(
    t: &Tournament,
    classes: &[Vec<usize>],
    class_idx: usize,
    layout: &mut Vec<usize>,
    best: &mut u64,
) {
    let Some(class) = classes.get(class_idx) else {
        // layout[new] = old
        let code = code_of_layout(t, layout);
        *best = (*best).min(code);
        return;
    };
    let mut items = class.clone();
    permute_all(&mut items, 0, &mut |perm| {
        let base = layout.len();
        layout.extend_from_slice(perm);
        search_layouts(t, classes, class_idx + 1, layout, best);
        layout.truncate(base);
    });
}

fn permute_all(items: &mut [usize], k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute_all(items, k + 1, visit);
        items.swap(k, i);
    }
}

fn code_of_layout(t: &Tournament, layout: &[usize]) -> u64 {
    let n = layout.len();
    let mut code = 0u64;
    for i in 0..n {
        for j in (i + 1)..n {
            code = (code << 1) | u64::from(t.beats(layout[i], layout[j]));
        }
    }
    code
}

/// `true` iff `t` is the representative of its isomorphism class, i.e. its
/// scores are non-decreasing in label order and its own index equals its
/// canonical code.
pub fn is_canonical(t: &Tournament) -> bool {
    let scores = t.scores();
    if scores.windows(2).any(|w| w[0] > w[1]) {
        return false;
    }
    enumerate::index_of(t) == canonical_code(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotated_three_cycle_is_isomorphic() {
        let c = Tournament::cyclic(3).unwrap();
        let r = c.permute(&[2, 0, 1]).unwrap();
        let pi = are_isomorphic(&c, &r).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    assert_eq!(c.beats(i, j), r.beats(pi[i], pi[j]));
                }
            }
        }
    }

    #[test]
    fn cycle_and_transitive_triple_differ() {
        let c = Tournament::cyclic(3).unwrap();
        let t = Tournament::transitive(3).unwrap();
        assert!(are_isomorphic(&c, &t).is_none());
        assert!(are_isomorphic(&t, &c).is_none());
        assert_ne!(canonical_code(&c), canonical_code(&t));
    }

    #[test]
    fn reflexive_identity() {
        let t = Tournament::parse("4\n0110\n0011\n0001\n1000").unwrap();
        assert!(are_isomorphic(&t, &t).is_some());
        let t5 = Tournament::cyclic(5).unwrap();
        assert_eq!(are_isomorphic(&t5, &t5).map(|p| p.len()), Some(5));
    }
}
