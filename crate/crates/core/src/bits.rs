//! Fixed-width vertex/element sets.

use std::fmt;

/// A subset of `{0, …, 127}` packed into a `u128`.
///
/// The derived `Ord` compares raw bit patterns; canonical orders elsewhere sort
/// by `(len, value)` through [`Bits::canonical_key`].
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bits(pub u128);

impl Bits {
    pub const CAPACITY: usize = 128;
    pub const EMPTY: Bits = Bits(0);

    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= Self::CAPACITY);
        if n == Self::CAPACITY {
            Bits(u128::MAX)
        } else {
            Bits((1u128 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(i: usize) -> Self {
        Bits(1u128 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(items: I) -> Self {
        items.into_iter().fold(Bits::EMPTY, |acc, i| acc.with(i))
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        i < Self::CAPACITY && self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn with(self, i: usize) -> Self {
        Bits(self.0 | 1u128 << i)
    }

    #[inline]
    pub fn without(self, i: usize) -> Self {
        Bits(self.0 & !(1u128 << i))
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    #[inline]
    pub fn union(self, other: Bits) -> Self {
        Bits(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Bits) -> Self {
        Bits(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Bits) -> Self {
        Bits(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Bits) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Bits) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest index present plus one (0 for the empty set).
    #[inline]
    pub fn span(self) -> usize {
        128 - self.0.leading_zeros() as usize
    }

    pub fn iter(self) -> BitsIter {
        BitsIter(self.0)
    }

    #[inline]
    pub fn canonical_key(self) -> (usize, u128) {
        (self.len(), self.0)
    }

    /// Every subset of `self`, starting from the empty set.
    pub fn subsets(self) -> impl Iterator<Item = Bits> {
        let mask = self.0;
        let mut cur = Some(0u128);
        std::iter::from_fn(move || {
            let out = cur?;
            cur = if out == mask {
                None
            } else {
                Some((out.wrapping_sub(mask)) & mask)
            };
            Some(Bits(out))
        })
    }
}

pub struct BitsIter(u128);

impl Iterator for BitsIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for BitsIter {}

impl FromIterator<usize> for Bits {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Bits::from_indices(iter)
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Keeps only the inclusion-maximal sets, deduplicated and canonically sorted.
pub fn maximal_sets(mut sets: Vec<Bits>) -> Vec<Bits> {
    sets.sort_by_key(|s| std::cmp::Reverse(s.canonical_key()));
    sets.dedup();
    let mut kept: Vec<Bits> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort_by_key(|s| s.canonical_key());
    kept
}

/// Keeps only the inclusion-minimal sets, deduplicated and canonically sorted.
pub fn minimal_sets(mut sets: Vec<Bits>) -> Vec<Bits> {
    sets.sort_by_key(|s| s.canonical_key());
    sets.dedup();
    let mut kept: Vec<Bits> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_enumerates_power_set() {
        let s = Bits::from_indices([1, 4, 6]);
        let subs: Vec<Bits> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|x| x.is_subset(s)));
        assert_eq!(Bits::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn full_and_span() {
        assert_eq!(Bits::full(0), Bits::EMPTY);
        assert_eq!(Bits::full(128).len(), 128);
        assert_eq!(Bits::from_indices([0, 5]).span(), 6);
        assert_eq!(Bits::EMPTY.span(), 0);
    }

    #[test]
    fn extremal_sets() {
        let a = Bits::from_indices([0]);
        let ab = Bits::from_indices([0, 1]);
        let c = Bits::from_indices([2]);
        assert_eq!(maximal_sets(vec![a, ab, c, ab]), vec![c, ab]);
        assert_eq!(minimal_sets(vec![ab, a, c, a]), vec![a, c]);
    }
}
