//! Small point sets as machine-word bitmasks.
//!
//! Every geometry in this crate has at most 63 points (the largest is
//! PG(3,3) with 40), so a `u64` mask indexed by point number covers all of
//! them. Sets compare and hash by mask, which doubles as the canonical
//! order for hyperplane families.

/// A subset of the points `0..v` of some geometry, packed into a `u64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PointSet(pub u64);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    /// The full set `{0, .., v-1}`.
    pub fn full(v: usize) -> PointSet {
        debug_assert!(v <= 64);
        if v == 64 {
            PointSet(u64::MAX)
        } else {
            PointSet((1u64 << v) - 1)
        }
    }

    pub fn singleton(i: usize) -> PointSet {
        PointSet(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(iter: I) -> PointSet {
        let mut s = PointSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u64 << i);
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: PointSet) -> PointSet {
        PointSet(self.0 | other.0)
    }

    pub fn intersection(self, other: PointSet) -> PointSet {
        PointSet(self.0 & other.0)
    }

    pub fn difference(self, other: PointSet) -> PointSet {
        PointSet(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: PointSet) -> PointSet {
        PointSet(self.0 ^ other.0)
    }

    /// Complement within the full set `{0, .., v-1}`.
    pub fn complement(self, v: usize) -> PointSet {
        PointSet(PointSet::full(v).0 & !self.0)
    }

    pub fn is_subset_of(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: PointSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Member indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Smallest member, if any.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> PointSet {
        PointSet::from_indices(iter)
    }
}

impl std::fmt::Display for PointSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_set_algebra() {
        let a = PointSet::from_indices([0, 2, 5]);
        let b = PointSet::from_indices([2, 3]);
        assert_eq!(a.len(), 3);
        assert!(a.contains(5) && !a.contains(1));
        assert_eq!(a.intersection(b), PointSet::from_indices([2]));
        assert_eq!(a.union(b).len(), 4);
        assert_eq!(a.symmetric_difference(b), PointSet::from_indices([0, 3, 5]));
        assert_eq!(a.complement(6), PointSet::from_indices([1, 3, 4]));
        assert!(PointSet::from_indices([2]).is_subset_of(b));
        assert_eq!(a.to_vec(), vec![0, 2, 5]);
        assert_eq!(format!("{a}"), "{0,2,5}");
    }

    #[test]
    fn full_set_boundaries() {
        assert_eq!(PointSet::full(0), PointSet::EMPTY);
        assert_eq!(PointSet::full(27).len(), 27);
        assert_eq!(PointSet::full(64).len(), 64);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn set_algebra_laws(a in any::<u32>(), b in any::<u32>()) {
                let v = 32;
                let (a, b) = (PointSet(a as u64), PointSet(b as u64));
                // De Morgan
                prop_assert_eq!(
                    a.union(b).complement(v),
                    a.complement(v).intersection(b.complement(v))
                );
                // the Veldkamp-sum identity: complement of the symmetric
                // difference equals symmetric difference with one complement
                prop_assert_eq!(
                    a.symmetric_difference(b).complement(v),
                    a.complement(v).symmetric_difference(b)
                );
                prop_assert_eq!(
                    a.union(b).len() + a.intersection(b).len(),
                    a.len() + b.len()
                );
                prop_assert_eq!(a.iter().count(), a.len());
            }
        }
    }
}
