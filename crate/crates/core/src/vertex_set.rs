use std::fmt;

/// Largest vertex count representable by [`VertexSet`].
pub const MAX_VERTICES: usize = 128;

/// A set of vertices drawn from `1..=128`, stored as a bitmask (vertex `v` is bit `v - 1`).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        VertexSet(1u128 << (v - 1))
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1u128 << (v - 1)) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= Self::singleton(v).0;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !Self::singleton(v).0;
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | Self::singleton(v).0)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !Self::singleton(v).0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Smallest vertex, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Vertices strictly greater than `v`.
    pub fn above(self, v: usize) -> Self {
        if v >= MAX_VERTICES {
            VertexSet::EMPTY
        } else {
            VertexSet(self.0 & !((1u128 << v) - 1))
        }
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Relabel the members of `self` by their rank inside `within`, so that the
    /// smallest vertex of `within` becomes 1. Members outside `within` are dropped.
    pub fn compress(self, within: VertexSet) -> Self {
        let mut out = 0u128;
        for (rank, v) in within.iter().enumerate() {
            if self.contains(v) {
                out |= 1u128 << rank;
            }
        }
        VertexSet(out)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter(u128);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(tz + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}
