//! Fixed-capacity bitsets used for vertex sets and watcher labels.
//!
//! Capacity is fixed at construction (the order of the host graph, or the
//! number of watchers). All binary operations require equal capacities.

use std::fmt;

const WORD_BITS: usize = 64;

fn word_count(nbits: usize) -> usize {
    nbits.div_ceil(WORD_BITS).max(1)
}

/// A set of small integers in `[0, capacity)`, stored as a bitmask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    nbits: usize,
    words: Vec<u64>,
}

/// Vertex sets are bitmasks over `[0, n)` for a graph of order `n`.
pub type VertexSet = BitSet;

/// A label is the set of watcher indices covering a vertex (or vertex set).
pub type Label = BitSet;

impl BitSet {
    pub fn new(nbits: usize) -> Self {
        BitSet {
            nbits,
            words: vec![0; word_count(nbits)],
        }
    }

    pub fn full(nbits: usize) -> Self {
        let mut s = Self::new(nbits);
        for i in 0..nbits {
            s.insert(i);
        }
        s
    }

    pub fn singleton(nbits: usize, i: usize) -> Self {
        let mut s = Self::new(nbits);
        s.insert(i);
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(nbits: usize, iter: I) -> Self {
        let mut s = Self::new(nbits);
        for i in iter {
            s.insert(i);
        }
        s
    }

    /// Number of distinct values this set can hold.
    pub fn capacity(&self) -> usize {
        self.nbits
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.nbits, "bit {} out of range (capacity {})", i, self.nbits);
        self.words[i / WORD_BITS] |= 1 << (i % WORD_BITS);
    }

    pub fn remove(&mut self, i: usize) {
        assert!(i < self.nbits);
        self.words[i / WORD_BITS] &= !(1 << (i % WORD_BITS));
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.nbits && self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

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

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD_BITS + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(self.nbits, other.nbits, "bitset capacity mismatch");
    }

    pub fn union_with(&mut self, other: &Self) {
        self.check_same(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.check_same(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &Self) {
        self.check_same(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.check_same(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint_from(&self, other: &Self) -> bool {
        self.check_same(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// The set as a single machine word. Requires capacity <= 64.
    pub fn as_u64(&self) -> u64 {
        assert!(self.nbits <= 64, "bitset too wide for u64");
        self.words[0]
    }

    pub fn from_u64(nbits: usize, mask: u64) -> Self {
        assert!(nbits <= 64);
        assert!(nbits == 64 || mask >> nbits == 0, "mask has bits beyond capacity");
        let mut s = Self::new(nbits);
        s.words[0] = mask;
        s
    }
}

// Numeric order on the underlying mask, so "lexicographically smallest"
// reports are reproducible.
impl Ord for BitSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.check_same(other);
        for (a, b) in self.words.iter().rev().zip(other.words.iter().rev()) {
            match a.cmp(b) {
                std::cmp::Ordering::Equal => continue,
                ord => return ord,
            }
        }
        std::cmp::Ordering::Equal
    }
}

impl PartialOrd for BitSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_contains_iter() {
        let mut s = BitSet::new(130);
        s.insert(0);
        s.insert(64);
        s.insert(129);
        assert!(s.contains(0) && s.contains(64) && s.contains(129));
        assert!(!s.contains(1));
        assert_eq!(s.to_vec(), vec![0, 64, 129]);
        assert_eq!(s.len(), 3);
        s.remove(64);
        assert_eq!(s.to_vec(), vec![0, 129]);
    }

    #[test]
    fn set_algebra() {
        let a = BitSet::from_iter(10, [1, 3, 5]);
        let b = BitSet::from_iter(10, [3, 5, 7]);
        assert_eq!(a.union(&b).to_vec(), vec![1, 3, 5, 7]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3, 5]);
        assert!(BitSet::from_iter(10, [3, 5]).is_subset_of(&a));
        assert!(!a.is_subset_of(&b));
        assert!(a.is_disjoint_from(&BitSet::from_iter(10, [0, 2])));
    }

    #[test]
    fn numeric_order() {
        let a = BitSet::from_iter(100, [0, 1]); // value 3
        let b = BitSet::from_iter(100, [2]); // value 4
        let c = BitSet::from_iter(100, [99]);
        assert!(a < b);
        assert!(b < c);
        assert_eq!(a.cmp(&a), std::cmp::Ordering::Equal);
    }

    #[test]
    fn u64_round_trip() {
        let s = BitSet::from_u64(6, 0b101001);
        assert_eq!(s.to_vec(), vec![0, 3, 5]);
        assert_eq!(s.as_u64(), 0b101001);
    }
}
