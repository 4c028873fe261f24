use std::cmp::Ordering;
use std::fmt;

/// Largest ground set an [`ElementSet`] can address.
pub const MAX_ELEMENTS: usize = 32;

/// A subset of `0..n` stored as a bitmask, `n <= 32`.
///
/// The `Ord` impl is lexicographic order on the sorted element lists, so
/// `{0,1,2} < {0,1,3} < {0,2} < {1}`. Use [`ElementSet::bits`] when a plain
/// numeric order is wanted.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Default)]
pub struct ElementSet(u32);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn from_bits(bits: u32) -> Self {
        ElementSet(bits)
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS, "ground set too large");
        if n == MAX_ELEMENTS {
            ElementSet(u32::MAX)
        } else {
            ElementSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        debug_assert!(e < MAX_ELEMENTS);
        ElementSet(1 << e)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut s = ElementSet::EMPTY;
        for e in it {
            s.insert(e);
        }
        s
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, e: usize) -> bool {
        e < MAX_ELEMENTS && self.0 & (1 << e) != 0
    }

    #[inline]
    pub fn insert(&mut self, e: usize) {
        self.0 |= 1 << e;
    }

    #[inline]
    pub fn remove(&mut self, e: usize) {
        self.0 &= !(1 << e);
    }

    #[inline]
    pub fn with(self, e: usize) -> Self {
        ElementSet(self.0 | 1 << e)
    }

    #[inline]
    pub fn without(self, e: usize) -> Self {
        ElementSet(self.0 & !(1 << e))
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest element, if any.
    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 31 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Every subset of `self`, in increasing numeric order of the mask.
    pub fn subsets(self) -> impl Iterator<Item = ElementSet> {
        let mask = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask {
                None
            } else {
                Some((cur.wrapping_sub(mask)) & mask)
            };
            Some(ElementSet(cur))
        })
    }

    /// Maps every element through `f`.
    pub fn map(self, mut f: impl FnMut(usize) -> usize) -> Self {
        ElementSet::from_indices(self.iter().map(&mut f))
    }
}

pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

impl IntoIterator for ElementSet {
    type Item = usize;
    type IntoIter = Elements;

    fn into_iter(self) -> Elements {
        self.iter()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ElementSet::from_indices(iter)
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // Both lists agree below the first differing element x. The list
        // holding x is smaller unless the other list ends right there.
        let x = diff.trailing_zeros();
        let above = if x == 31 { 0 } else { u32::MAX << (x + 1) };
        let (with_x, without_x) = if self.0 & (1 << x) != 0 {
            (Ordering::Less, other.0)
        } else {
            (Ordering::Greater, self.0)
        };
        if without_x & above != 0 {
            with_x
        } else {
            with_x.reverse()
        }
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Iterator over the `k`-subsets of `{0, .., n-1}` (Gosper's hack), in
/// increasing numeric order.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = ElementSet> {
    assert!(n <= MAX_ELEMENTS);
    let limit: u64 = 1u64 << n;
    let mut cur: Option<u64> = if k > n { None } else { Some((1u64 << k) - 1) };
    std::iter::from_fn(move || {
        let v = cur?;
        if v >= limit {
            cur = None;
            return None;
        }
        cur = if v == 0 {
            None
        } else {
            let c = v & v.wrapping_neg();
            let r = v + c;
            Some((((r ^ v) >> 2) / c) | r)
        };
        Some(ElementSet(v as u32))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> ElementSet {
        ElementSet::from_indices(v.iter().copied())
    }

    #[test]
    fn lexicographic_order_matches_sorted_lists() {
        let mut all: Vec<ElementSet> = (0u32..64).map(ElementSet::from_bits).collect();
        let mut by_list = all.clone();
        by_list.sort_by_key(|s| s.to_vec());
        all.sort();
        assert_eq!(all, by_list);
        assert!(set(&[0, 1, 2]) < set(&[0, 2]));
        assert!(set(&[0, 1]) < set(&[0, 1, 2]));
        assert!(set(&[]) < set(&[5]));
    }

    #[test]
    fn k_subsets_counts() {
        assert_eq!(k_subsets(6, 3).count(), 20);
        assert_eq!(k_subsets(5, 0).count(), 1);
        assert_eq!(k_subsets(3, 4).count(), 0);
        assert!(k_subsets(7, 4).all(|s| s.len() == 4));
    }

    #[test]
    fn subsets_enumerates_power_set() {
        let s = set(&[1, 3, 4]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
    }

    #[test]
    fn display() {
        assert_eq!(set(&[0, 3]).to_string(), "{0,3}");
        assert_eq!(ElementSet::EMPTY.to_string(), "{}");
    }
}
