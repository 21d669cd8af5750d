use std::fmt;

/// A set of alternatives packed into a single machine word.
///
/// Bit `i` is set iff alternative `i` is a member. Tournaments are capped at
/// [`AltSet::CAPACITY`] alternatives, so every subset fits in one `u64` and
/// intersections, unions and dominion queries are single word operations.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct AltSet(u64);

impl AltSet {
    pub const CAPACITY: usize = 64;

    pub const EMPTY: AltSet = AltSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        AltSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, 1, .., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            AltSet(u64::MAX)
        } else {
            AltSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(a: usize) -> Self {
        AltSet(1u64 << a)
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn contains(self, a: usize) -> bool {
        a < 64 && self.0 & (1u64 << a) != 0
    }

    #[inline]
    pub fn insert(&mut self, a: usize) {
        self.0 |= 1u64 << a;
    }

    #[inline]
    pub fn remove(&mut self, a: usize) {
        self.0 &= !(1u64 << a);
    }

    #[inline]
    pub const fn with(self, a: usize) -> Self {
        AltSet(self.0 | (1u64 << a))
    }

    #[inline]
    pub const fn without(self, a: usize) -> Self {
        AltSet(self.0 & !(1u64 << a))
    }

    #[inline]
    pub const fn union(self, other: AltSet) -> Self {
        AltSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: AltSet) -> Self {
        AltSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: AltSet) -> Self {
        AltSet(self.0 & !other.0)
    }

    #[inline]
    pub const fn is_subset(self, other: AltSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_proper_subset(self, other: AltSet) -> bool {
        self.is_subset(other) && self.0 != other.0
    }

    /// Smallest member, if any.
    #[inline]
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Members in ascending order.
    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, ordered by cardinality and, within one
    /// cardinality, by increasing bit pattern over the members of `self`.
    pub fn subsets_by_size(self) -> impl Iterator<Item = AltSet> {
        let members = self.to_vec();
        let m = members.len();
        (0..=m).flat_map(move |k| {
            let members = members.clone();
            CombinationBits::new(m, k).map(move |pattern| {
                let mut out = AltSet::EMPTY;
                let mut p = pattern;
                while p != 0 {
                    let i = p.trailing_zeros() as usize;
                    out.insert(members[i]);
                    p &= p - 1;
                }
                out
            })
        })
    }

    /// All subsets of `self` (any order), including the empty set.
    pub fn subsets(self) -> impl Iterator<Item = AltSet> {
        // Enumerates submasks in decreasing order, then the empty set.
        let full = self.0;
        let mut next = Some(full);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == 0 { None } else { Some((cur - 1) & full) };
            Some(AltSet(cur))
        })
    }

    /// Renders the set with 1-based indices, e.g. `{1,2,5}`.
    pub fn display_one_based(self) -> String {
        let items: Vec<String> = self.iter().map(|a| (a + 1).to_string()).collect();
        format!("{{{}}}", items.join(","))
    }
}

impl fmt::Debug for AltSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for AltSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|a| a.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

impl FromIterator<usize> for AltSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = AltSet::EMPTY;
        for a in iter {
            s.insert(a);
        }
        s
    }
}

impl<const N: usize> From<[usize; N]> for AltSet {
    fn from(items: [usize; N]) -> Self {
        items.into_iter().collect()
    }
}

impl IntoIterator for AltSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        Iter(self.0)
    }
}

#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let a = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(a)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// k-subsets of `0..m` as bit patterns in increasing numeric order (Gosper).
struct CombinationBits {
    current: Option<u64>,
    limit: u64,
}

impl CombinationBits {
    fn new(m: usize, k: usize) -> Self {
        debug_assert!(m < 64);
        let current = if k > m {
            None
        } else if k == 0 {
            Some(0)
        } else {
            Some((1u64 << k) - 1)
        };
        CombinationBits {
            current,
            limit: 1u64 << m,
        }
    }
}

impl Iterator for CombinationBits {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.current?;
        self.current = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let next = (((r ^ cur) >> 2) / c) | r;
            (next < self.limit).then_some(next)
        };
        Some(cur)
    }
}
