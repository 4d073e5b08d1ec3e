use std::fmt;

/// Index of a Coxeter generator.
pub type Gen = u8;

/// A set of generators, stored as a bitmask. Ranks up to 8 fit in one byte.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenSet(pub u8);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn full(n: usize) -> GenSet {
        debug_assert!(n <= 8);
        GenSet(((1u16 << n) - 1) as u8)
    }

    pub fn singleton(s: Gen) -> GenSet {
        GenSet(1 << s)
    }

    pub fn pair(s: Gen, t: Gen) -> GenSet {
        GenSet((1 << s) | (1 << t))
    }

    pub fn contains(self, s: Gen) -> bool {
        self.0 & (1 << s) != 0
    }

    pub fn with(self, s: Gen) -> GenSet {
        GenSet(self.0 | (1 << s))
    }

    pub fn without(self, s: Gen) -> GenSet {
        GenSet(self.0 & !(1 << s))
    }

    pub fn union(self, other: GenSet) -> GenSet {
        GenSet(self.0 | other.0)
    }

    pub fn intersection(self, other: GenSet) -> GenSet {
        GenSet(self.0 & other.0)
    }

    pub fn difference(self, other: GenSet) -> GenSet {
        GenSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: GenSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = Gen> {
        (0..8u8).filter(move |&s| self.contains(s))
    }

    /// All subsets of `self`, in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = GenSet> {
        let mask = self.0 as u16;
        let mut next = Some(0u16);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask {
                None
            } else {
                Some(((cur | !mask) + 1) & mask)
            };
            Some(GenSet(cur as u8))
        })
    }
}

impl FromIterator<Gen> for GenSet {
    fn from_iter<I: IntoIterator<Item = Gen>>(iter: I) -> Self {
        iter.into_iter().fold(GenSet::EMPTY, GenSet::with)
    }
}

impl fmt::Debug for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_enumerates_power_set() {
        let s: GenSet = [0, 2, 3].into_iter().collect();
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|x| x.is_subset(s)));
        assert_eq!(subs[0], GenSet::EMPTY);
        assert_eq!(*subs.last().unwrap(), s);
    }

    #[test]
    fn full_rank_eight() {
        assert_eq!(GenSet::full(8).len(), 8);
        assert_eq!(GenSet::full(0), GenSet::EMPTY);
    }
}
