//! Fixed-width vertex sets over at most [`MAX_VERTICES`] vertices.

use std::fmt;

/// Largest vertex count any graph in this crate may have.
pub const MAX_VERTICES: usize = 128;

const WORDS: usize = MAX_VERTICES / 64;

/// A set of vertex ids in `0..MAX_VERTICES`, stored as a bitmask.
///
/// `Ord` compares sets as ascending id sequences, lexicographically, so that
/// `{1,4} < {2,3}` and `{1} < {1,2}`. This is the canonical order used for
/// gamma-set lists everywhere in the crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet { words: [0; WORDS] };

    /// The set `{0, 1, .., n-1}`.
    pub fn all_below(n: usize) -> VertexSet {
        assert!(n <= MAX_VERTICES, "vertex count {n} exceeds {MAX_VERTICES}");
        let mut words = [0u64; WORDS];
        for (i, w) in words.iter_mut().enumerate() {
            let lo = i * 64;
            if n >= lo + 64 {
                *w = u64::MAX;
            } else if n > lo {
                *w = (1u64 << (n - lo)) - 1;
            }
        }
        VertexSet { words }
    }

    pub fn singleton(v: usize) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        s.insert(v);
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.words[v / 64] &= !(1u64 << (v % 64));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < MAX_VERTICES);
        self.words[v / 64] & (1u64 << (v % 64)) != 0
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut words = self.words;
        for (a, b) in words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
        VertexSet { words }
    }

    #[inline]
    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut words = self.words;
        for (a, b) in words.iter_mut().zip(other.words.iter()) {
            *a &= b;
        }
        VertexSet { words }
    }

    /// Elements of `self` not in `other`.
    #[inline]
    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut words = self.words;
        for (a, b) in words.iter_mut().zip(other.words.iter()) {
            *a &= !b;
        }
        VertexSet { words }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    /// Smallest member, if any.
    pub fn smallest(&self) -> Option<usize> {
        for (i, w) in self.words.iter().enumerate() {
            if *w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Iterates members in ascending order.
    pub fn iter(&self) -> Members {
        Members {
            words: self.words,
            idx: 0,
        }
    }

    /// Members in ascending order as a vector of 0-based ids.
    pub fn members(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(ids: I) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for v in ids {
            s.insert(v);
        }
        s
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        if self.words == other.words {
            return std::cmp::Ordering::Equal;
        }
        // Lexicographic over ascending member sequences; a shared prefix
        // makes the shorter set the smaller one.
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_members(iter)
    }
}

pub struct Members {
    words: [u64; WORDS],
    idx: usize,
}

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.idx < WORDS {
            let w = self.words[self.idx];
            if w != 0 {
                let bit = w.trailing_zeros() as usize;
                self.words[self.idx] &= w - 1;
                return Some(self.idx * 64 + bit);
            }
            self.idx += 1;
        }
        None
    }
}
