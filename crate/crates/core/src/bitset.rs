//! Fixed-capacity vertex sets backed by `u64` words.
//!
//! A [`VertexSet`] always belongs to a graph of a known order `n`; all
//! members are indices in `[0, n)`. Iteration order is ascending, which keeps
//! every algorithm in the crate deterministic.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

const WORD_BITS: usize = 64;

/// A set of vertex indices below a fixed capacity.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet {
    capacity: usize,
    words: Vec<u64>,
}

#[inline(always)]
fn word_count(capacity: usize) -> usize {
    capacity.div_ceil(WORD_BITS)
}

impl VertexSet {
    /// Creates an empty set able to hold vertices `0..capacity`.
    pub fn new(capacity: usize) -> Self {
        VertexSet {
            capacity,
            words: vec![0; word_count(capacity)],
        }
    }

    /// Creates a set from an iterator of members.
    ///
    /// # Panics
    /// Panics if a member is `>= capacity`.
    pub fn from_members<I: IntoIterator<Item = usize>>(capacity: usize, members: I) -> Self {
        let mut s = VertexSet::new(capacity);
        for v in members {
            s.insert(v);
        }
        s
    }

    /// Creates the full set `{0, ..., capacity-1}`.
    pub fn full(capacity: usize) -> Self {
        let mut s = VertexSet::new(capacity);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.mask_tail();
        s
    }

    #[inline]
    fn mask_tail(&mut self) {
        let extra = self.words.len() * WORD_BITS - self.capacity;
        if extra > 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= u64::MAX >> extra;
            }
        }
    }

    /// The capacity this set was created with (the host graph's order).
    #[inline(always)]
    pub fn capacity(&self) -> usize {
        self.capacity
    }

    /// Inserts `v`; returns `true` if it was not already present.
    ///
    /// # Panics
    /// Panics if `v >= capacity`.
    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.capacity, "vertex {v} out of capacity {}", self.capacity);
        let (w, b) = (v / WORD_BITS, v % WORD_BITS);
        let was = (self.words[w] >> b) & 1;
        self.words[w] |= 1 << b;
        was == 0
    }

    /// Removes `v`; returns `true` if it was present.
    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.capacity {
            return false;
        }
        let (w, b) = (v / WORD_BITS, v % WORD_BITS);
        let was = (self.words[w] >> b) & 1;
        self.words[w] &= !(1 << b);
        was == 1
    }

    #[inline(always)]
    pub fn contains(&self, v: usize) -> bool {
        v < self.capacity && (self.words[v / WORD_BITS] >> (v % WORD_BITS)) & 1 == 1
    }

    /// Number of members.
    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Ascending iterator over members.
    pub fn iter(&self) -> Members<'_> {
        Members {
            set: self,
            word: 0,
            bits: self.words.first().copied().unwrap_or(0),
        }
    }

    /// Collects the members into a `Vec`, ascending.
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn check_same_capacity(&self, other: &VertexSet) {
        assert_eq!(
            self.capacity, other.capacity,
            "vertex sets belong to graphs of different order"
        );
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.check_same_capacity(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.check_same_capacity(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.check_same_capacity(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    /// Complement within `0..capacity`.
    pub fn complement(&self) -> VertexSet {
        let mut s = self.clone();
        for w in s.words.iter_mut() {
            *w = !*w;
        }
        s.mask_tail();
        s
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.check_same_capacity(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.check_same_capacity(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Number of members shared with `other`.
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.check_same_capacity(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
pub struct Members<'a> {
    set: &'a VertexSet,
    word: usize,
    bits: u64,
}

impl Iterator for Members<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.bits != 0 {
                let b = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(self.word * WORD_BITS + b);
            }
            self.word += 1;
            if self.word >= self.set.words.len() {
                return None;
            }
            self.bits = self.set.words[self.word];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_remove_contains() {
        let mut s = VertexSet::new(130);
        assert!(s.insert(0));
        assert!(s.insert(64));
        assert!(s.insert(129));
        assert!(!s.insert(64));
        assert_eq!(s.len(), 3);
        assert!(s.contains(129));
        assert!(!s.contains(1));
        assert!(s.remove(64));
        assert!(!s.remove(64));
        assert_eq!(s.to_vec(), vec![0, 129]);
    }

    #[test]
    fn complement_respects_capacity() {
        let s = VertexSet::from_members(67, [0, 66]);
        let c = s.complement();
        assert_eq!(c.len(), 65);
        assert!(!c.contains(0));
        assert!(!c.contains(66));
        assert!(c.contains(65));
        // Tail bits beyond the capacity stay clear.
        assert_eq!(c.union(&s), VertexSet::full(67));
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_members(10, [1, 2, 3]);
        let b = VertexSet::from_members(10, [3, 4]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3]);
        assert_eq!(a.union(&b).len(), 4);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 2]);
        assert!(!a.is_disjoint(&b));
        assert!(a.intersection(&b).is_subset(&a));
        assert_eq!(a.intersection_len(&b), 1);
    }

    #[test]
    fn iteration_is_ascending() {
        let s = VertexSet::from_members(200, [199, 0, 63, 64, 128]);
        assert_eq!(s.to_vec(), vec![0, 63, 64, 128, 199]);
        assert_eq!(s.first(), Some(0));
        assert_eq!(VertexSet::new(5).first(), None);
    }
}
