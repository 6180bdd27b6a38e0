//! Bitset subsets of a carrier `0..n` with `n <= 64`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

/// Largest carrier a [`Subset`] can describe.
pub const MAX_CARRIER: usize = 64;

/// A subset of the carrier `0..n`, stored as a membership mask.
///
/// The carrier size travels with the mask so that complements and
/// full sets are well defined. Operations combining two subsets expect
/// them to come from the same carrier.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subset {
    bits: u64,
    n: u8,
}

impl Subset {
    fn mask(n: usize) -> u64 {
        if n == MAX_CARRIER {
            u64::MAX
        } else {
            (1u64 << n) - 1
        }
    }

    pub fn empty(n: usize) -> Self {
        assert!(
            n <= MAX_CARRIER,
            "carrier of size {n} exceeds {MAX_CARRIER}"
        );
        Subset {
            bits: 0,
            n: n as u8,
        }
    }

    pub fn full(n: usize) -> Self {
        assert!(
            n <= MAX_CARRIER,
            "carrier of size {n} exceeds {MAX_CARRIER}"
        );
        Subset {
            bits: Self::mask(n),
            n: n as u8,
        }
    }

    pub fn singleton(n: usize, i: usize) -> Self {
        let mut s = Self::empty(n);
        s.insert(i);
        s
    }

    /// Builds a subset from a raw mask; bits at or above `n` are dropped.
    pub fn from_bits(n: usize, bits: u64) -> Self {
        assert!(
            n <= MAX_CARRIER,
            "carrier of size {n} exceeds {MAX_CARRIER}"
        );
        Subset {
            bits: bits & Self::mask(n),
            n: n as u8,
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, items: I) -> Self {
        let mut s = Self::empty(n);
        for i in items {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Size of the carrier this subset lives in.
    #[inline]
    pub fn carrier_len(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.n as usize && self.bits >> i & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        assert!(
            i < self.n as usize,
            "index {i} outside carrier of size {}",
            self.n
        );
        self.bits |= 1 << i;
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        if i < self.n as usize {
            self.bits &= !(1 << i);
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn is_full(&self) -> bool {
        self.bits == Self::mask(self.n as usize)
    }

    #[inline]
    pub fn union(&self, other: &Subset) -> Subset {
        debug_assert_eq!(self.n, other.n);
        Subset {
            bits: self.bits | other.bits,
            n: self.n,
        }
    }

    #[inline]
    pub fn intersection(&self, other: &Subset) -> Subset {
        debug_assert_eq!(self.n, other.n);
        Subset {
            bits: self.bits & other.bits,
            n: self.n,
        }
    }

    #[inline]
    pub fn difference(&self, other: &Subset) -> Subset {
        debug_assert_eq!(self.n, other.n);
        Subset {
            bits: self.bits & !other.bits,
            n: self.n,
        }
    }

    #[inline]
    pub fn complement(&self) -> Subset {
        Subset {
            bits: !self.bits & Self::mask(self.n as usize),
            n: self.n,
        }
    }

    #[inline]
    pub fn is_subset(&self, other: &Subset) -> bool {
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn intersects(&self, other: &Subset) -> bool {
        self.bits & other.bits != 0
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Members {
        Members { bits: self.bits }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// The order used to list subsets deterministically: smaller sets
    /// first, then by mask value.
    pub fn canonical_cmp(&self, other: &Subset) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then(self.bits.cmp(&other.bits))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Iterator over the members of a [`Subset`].
#[derive(Clone)]
pub struct Members {
    bits: u64,
}

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let i = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.bits.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Members {}

impl IntoIterator for &Subset {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_complement() {
        let s = Subset::from_indices(5, [0, 3]);
        assert_eq!(s.complement().to_vec(), vec![1, 2, 4]);
        assert!(Subset::full(64).is_full());
        assert_eq!(Subset::full(64).len(), 64);
        assert!(Subset::empty(3).complement().is_full());
    }

    #[test]
    fn members_ascend() {
        let s = Subset::from_bits(8, 0b1010_0110);
        assert_eq!(s.to_vec(), vec![1, 2, 5, 7]);
        assert_eq!(s.first(), Some(1));
        assert_eq!(format!("{s:?}"), "{1, 2, 5, 7}");
    }

    #[test]
    fn from_bits_truncates() {
        assert_eq!(Subset::from_bits(2, 0b111).to_vec(), vec![0, 1]);
    }

    #[test]
    fn canonical_order_by_size_then_mask() {
        let a = Subset::from_indices(3, [2]);
        let b = Subset::from_indices(3, [0, 1]);
        assert_eq!(a.canonical_cmp(&b), Ordering::Less);
        let c = Subset::from_indices(3, [0, 2]);
        assert_eq!(b.canonical_cmp(&c), Ordering::Less);
    }

    #[test]
    fn serializes_as_index_list() {
        let s = Subset::from_indices(4, [3, 1]);
        assert_eq!(serde_json::to_string(&s).unwrap(), "[1,3]");
    }
}
