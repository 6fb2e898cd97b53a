//! Colour sets over a palette of at most 64 colours, stored as a bitmask.

use core::fmt;
use core::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub, SubAssign};

/// Largest palette supported by [`ColourSet`].
pub const MAX_UNIVERSE: usize = 64;

/// A colour id. Colours are small integers `0..MAX_UNIVERSE`.
pub type Colour = u8;

/// A finite set of colours drawn from `0..64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ColourSet(u64);

impl ColourSet {
    pub const EMPTY: ColourSet = ColourSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        ColourSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, 1, ..., size - 1}`.
    pub const fn universe(size: usize) -> Self {
        if size >= 64 {
            ColourSet(u64::MAX)
        } else {
            ColourSet((1u64 << size) - 1)
        }
    }

    /// The half-open range `start..end` of colours.
    pub const fn range(start: usize, end: usize) -> Self {
        if end <= start {
            return ColourSet(0);
        }
        let hi = Self::universe(end).0;
        let lo = Self::universe(start).0;
        ColourSet(hi & !lo)
    }

    #[inline]
    pub const fn singleton(c: Colour) -> Self {
        ColourSet(1u64 << c)
    }

    /// Builds a set from colour ids; returns `None` if an id is out of range.
    pub fn try_from_colours<I: IntoIterator<Item = usize>>(colours: I) -> Option<Self> {
        let mut bits = 0u64;
        for c in colours {
            if c >= MAX_UNIVERSE {
                return None;
            }
            bits |= 1u64 << c;
        }
        Some(ColourSet(bits))
    }

    /// Panics on ids `>= 64`.
    pub fn from_colours<I: IntoIterator<Item = usize>>(colours: I) -> Self {
        Self::try_from_colours(colours).expect("colour id out of range")
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
    pub const fn contains(self, c: Colour) -> bool {
        (c as usize) < MAX_UNIVERSE && self.0 & (1u64 << c) != 0
    }

    #[inline]
    pub fn insert(&mut self, c: Colour) {
        self.0 |= 1u64 << c;
    }

    #[inline]
    pub fn remove(&mut self, c: Colour) {
        self.0 &= !(1u64 << c);
    }

    #[inline]
    pub const fn is_subset(self, other: ColourSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: ColourSet) -> bool {
        self.0 & other.0 == 0
    }

    pub const fn min(self) -> Option<Colour> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as Colour)
        }
    }

    pub const fn max(self) -> Option<Colour> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as Colour)
        }
    }

    /// Number of colours needed to index every member, i.e. `max + 1`.
    pub fn span(self) -> usize {
        self.max().map_or(0, |c| c as usize + 1)
    }

    /// The `k` smallest members (all of them when `k >= len`).
    pub fn smallest(self, k: usize) -> ColourSet {
        let mut out = ColourSet::EMPTY;
        for c in self.iter().take(k) {
            out.insert(c);
        }
        out
    }

    /// The `k` largest members.
    pub fn largest(self, k: usize) -> ColourSet {
        let skip = self.len().saturating_sub(k);
        let mut out = ColourSet::EMPTY;
        for c in self.iter().skip(skip) {
            out.insert(c);
        }
        out
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// All `k`-subsets in lexicographic order of their sorted members.
    pub fn subsets(self, k: usize) -> Subsets {
        Subsets::new(self, k)
    }

    /// Lexicographic comparison of the sorted member sequences.
    pub fn lex_cmp(self, other: ColourSet) -> core::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl BitOr for ColourSet {
    type Output = ColourSet;
    #[inline]
    fn bitor(self, rhs: Self) -> Self {
        ColourSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for ColourSet {
    #[inline]
    fn bitor_assign(&mut self, rhs: Self) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for ColourSet {
    type Output = ColourSet;
    #[inline]
    fn bitand(self, rhs: Self) -> Self {
        ColourSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for ColourSet {
    #[inline]
    fn bitand_assign(&mut self, rhs: Self) {
        self.0 &= rhs.0;
    }
}

impl Sub for ColourSet {
    type Output = ColourSet;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        ColourSet(self.0 & !rhs.0)
    }
}

impl SubAssign for ColourSet {
    #[inline]
    fn sub_assign(&mut self, rhs: Self) {
        self.0 &= !rhs.0;
    }
}

impl Not for ColourSet {
    type Output = ColourSet;
    #[inline]
    fn not(self) -> Self {
        ColourSet(!self.0)
    }
}

impl FromIterator<Colour> for ColourSet {
    fn from_iter<I: IntoIterator<Item = Colour>>(iter: I) -> Self {
        let mut s = ColourSet::EMPTY;
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl IntoIterator for ColourSet {
    type Item = Colour;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl fmt::Debug for ColourSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ColourSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, c) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

/// Ascending iterator over the members of a [`ColourSet`].
#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = Colour;

    #[inline]
    fn next(&mut self) -> Option<Colour> {
        if self.0 == 0 {
            return None;
        }
        let c = self.0.trailing_zeros() as Colour;
        self.0 &= self.0 - 1;
        Some(c)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// Lexicographic iterator over the `k`-subsets of a colour set.
#[derive(Clone)]
pub struct Subsets {
    elems: [Colour; MAX_UNIVERSE],
    n: usize,
    k: usize,
    idx: [u8; MAX_UNIVERSE],
    done: bool,
}

impl Subsets {
    fn new(set: ColourSet, k: usize) -> Self {
        let mut elems = [0; MAX_UNIVERSE];
        let mut n = 0;
        for c in set.iter() {
            elems[n] = c;
            n += 1;
        }
        let mut idx = [0u8; MAX_UNIVERSE];
        for (i, slot) in idx.iter_mut().enumerate().take(k.min(MAX_UNIVERSE)) {
            *slot = i as u8;
        }
        Subsets {
            elems,
            n,
            k,
            idx,
            done: k > n,
        }
    }
}

impl Iterator for Subsets {
    type Item = ColourSet;

    fn next(&mut self) -> Option<ColourSet> {
        if self.done {
            return None;
        }
        let (n, k) = (self.n, self.k);
        let mut out = ColourSet::EMPTY;
        for &i in &self.idx[..k] {
            out.insert(self.elems[i as usize]);
        }
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if (self.idx[i] as usize) < n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn set_algebra() {
        let a = ColourSet::from_colours([1, 2, 3, 4]);
        let b = ColourSet::from_colours([3, 4, 5, 6]);
        assert_eq!(a - b, ColourSet::from_colours([1, 2]));
        assert_eq!((a & b).len(), 2);
        assert_eq!((a | b).len(), 6);
        assert!(ColourSet::from_colours([3]).is_subset(a));
        assert_eq!(a.min(), Some(1));
        assert_eq!(a.max(), Some(4));
        assert_eq!(a.span(), 5);
        assert_eq!(ColourSet::range(2, 5), ColourSet::from_colours([2, 3, 4]));
        assert_eq!(ColourSet::universe(64).len(), 64);
        assert!(ColourSet::try_from_colours([64]).is_none());
    }

    #[test]
    fn subsets_are_lexicographic() {
        let s = ColourSet::from_colours([0, 1, 2, 3]);
        let subs: Vec<_> = s.subsets(2).collect();
        assert_eq!(subs.len(), 6);
        assert_eq!(subs[0], ColourSet::from_colours([0, 1]));
        assert_eq!(subs[1], ColourSet::from_colours([0, 2]));
        assert_eq!(subs[5], ColourSet::from_colours([2, 3]));
        for w in subs.windows(2) {
            assert_eq!(w[0].lex_cmp(w[1]), core::cmp::Ordering::Less);
        }
        assert_eq!(s.subsets(0).count(), 1);
        assert_eq!(s.subsets(5).count(), 0);
        assert_eq!(ColourSet::universe(10).subsets(4).count(), 210);
    }

    #[test]
    fn smallest_and_largest() {
        let s = ColourSet::from_colours([2, 5, 7, 9]);
        assert_eq!(s.smallest(2), ColourSet::from_colours([2, 5]));
        assert_eq!(s.largest(3), ColourSet::from_colours([5, 7, 9]));
        assert_eq!(s.smallest(9), s);
    }
}
