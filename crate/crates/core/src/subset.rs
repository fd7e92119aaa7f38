//! Fixed-universe bitsets.
//!
//! A [`Subset`] is the common currency of the crate: filters and order-ideals
//! of an algebra, upsets of a poset, and elements of the free extension are
//! all subsets of some dense index range `0..len`.

use std::cmp::Ordering;
use std::fmt;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    len: usize,
    words: Vec<u64>,
}

impl Subset {
    pub fn empty(len: usize) -> Self {
        Subset {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Subset::empty(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Self {
        let mut s = Subset::empty(len);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Builds the subset whose characteristic vector is the binary expansion of `bits`.
    pub fn from_bits(len: usize, bits: u64) -> Self {
        assert!(len <= WORD || bits >> (WORD - 1) >> 1 == 0);
        let mut s = Subset::empty(len);
        if len > 0 {
            let mask = if len >= WORD { u64::MAX } else { (1u64 << len) - 1 };
            s.words[0] = bits & mask;
        }
        s
    }

    pub fn singleton(len: usize, i: usize) -> Self {
        Subset::from_indices(len, [i])
    }

    /// Size of the universe this subset lives in.
    pub fn universe(&self) -> usize {
        self.len
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len, "index {i} outside universe of size {}", self.len);
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    pub fn remove(&mut self, i: usize) {
        if i < self.len {
            self.words[i / WORD] &= !(1 << (i % WORD));
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.len
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Subset) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        debug_assert_eq!(self.len, other.len);
        Subset {
            len: self.len,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn union(&self, other: &Subset) -> Subset {
        debug_assert_eq!(self.len, other.len);
        Subset {
            len: self.len,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
        }
    }

    pub fn difference(&self, other: &Subset) -> Subset {
        debug_assert_eq!(self.len, other.len);
        Subset {
            len: self.len,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect(),
        }
    }

    /// Relative complement within `0..len`.
    pub fn complement(&self) -> Subset {
        Subset::full(self.len).difference(self)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.contains(i))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Compares by the numeric value of the characteristic vector.
    pub fn cmp_value(&self, other: &Subset) -> Ordering {
        self.words.iter().rev().cmp(other.words.iter().rev())
    }

    /// Order used for deterministic listings: cardinality first, then numeric value.
    pub fn cmp_card_value(&self, other: &Subset) -> Ordering {
        self.count()
            .cmp(&other.count())
            .then_with(|| self.cmp_value(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// All subsets of `0..len`, in increasing numeric order. `len` must be below 64.
pub fn all_subsets(len: usize) -> impl Iterator<Item = Subset> {
    assert!(len < WORD, "refusing to enumerate 2^{len} subsets");
    (0..1u64 << len).map(move |bits| Subset::from_bits(len, bits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_membership() {
        let mut s = Subset::empty(70);
        s.insert(3);
        s.insert(65);
        assert!(s.contains(3) && s.contains(65) && !s.contains(4));
        assert_eq!(s.count(), 2);
        assert_eq!(s.to_vec(), vec![3, 65]);
        s.remove(3);
        assert_eq!(s.to_vec(), vec![65]);
        assert!(!s.contains(200));
    }

    #[test]
    fn complement_stays_in_universe() {
        let s = Subset::from_indices(5, [0, 2]);
        assert_eq!(s.complement().to_vec(), vec![1, 3, 4]);
        assert!(Subset::empty(0).complement().is_empty());
        assert!(Subset::full(5).is_full());
    }

    #[test]
    fn card_value_order() {
        let a = Subset::from_indices(3, [2]);
        let b = Subset::from_indices(3, [0, 1]);
        let c = Subset::from_indices(3, [1]);
        assert_eq!(a.cmp_card_value(&b), Ordering::Less);
        assert_eq!(c.cmp_card_value(&a), Ordering::Less);
        assert_eq!(a.cmp_value(&b), Ordering::Greater);
    }

    proptest! {
        #[test]
        fn set_algebra_laws(x in 0u64..1 << 12, y in 0u64..1 << 12) {
            let (a, b) = (Subset::from_bits(12, x), Subset::from_bits(12, y));
            prop_assert_eq!(a.union(&b).complement(), a.complement().intersection(&b.complement()));
            prop_assert_eq!(a.intersection(&b).is_subset(&a), true);
            prop_assert_eq!(a.is_disjoint(&b), a.intersection(&b).is_empty());
            prop_assert_eq!(a.difference(&b), a.intersection(&b.complement()));
            prop_assert_eq!(a.count() + a.complement().count(), 12);
        }
    }
}
