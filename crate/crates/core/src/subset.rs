use std::fmt;

/// A subset of a ground set of at most 63 elements, as a bitmask over
/// element positions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Subset(u64);

pub const MAX_GROUND: usize = 63;

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_bits(bits: u64) -> Subset {
        Subset(bits)
    }

    /// `{0, ..., n-1}`.
    pub fn full(n: usize) -> Subset {
        assert!(n <= MAX_GROUND, "ground set too large");
        Subset((1u64 << n) - 1)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(idx: I) -> Subset {
        Subset(idx.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Subset {
        Subset(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Subset {
        Subset(self.0 & !(1 << i))
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn minus(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Element positions in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        })
    }

    /// Every subset of `self`, starting from `self` and ending with the empty set.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let mask = self.0;
        let mut next = Some(mask);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == 0 { None } else { Some((cur - 1) & mask) };
            Some(Subset(cur))
        })
    }

    /// Re-indexes a subset of `0..positions.len()` onto `positions`.
    pub(crate) fn spread(self, positions: &[usize]) -> Subset {
        Subset::from_indices(self.iter().map(|k| positions[k]))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_basics() {
        let s = Subset::from_indices([0, 2, 5]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 2, 5]);
        assert_eq!(s.subsets().count(), 8);
        assert!(s.subsets().all(|t| t.is_subset_of(s)));
        assert_eq!(Subset::full(3).minus(s), Subset::from_indices([1]));
        assert_eq!(Subset::from_indices([0, 1]).spread(&[3, 7]), Subset::from_indices([3, 7]));
        assert_eq!(Subset::EMPTY.subsets().count(), 1);
    }
}
