//! Subsets of the index set `[m]` packed into a `u64`.
//!
//! Index `j` (0-based) is bit `j`. Every routine in the crate that ranges over
//! `J ⊆ [m]` iterates masks in increasing numeric order, which is the
//! deterministic merge order for parallel work.

use std::fmt;

/// Largest supported number of panels / vertices in a subset mask.
pub const MAX_INDEX: usize = 63;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Mask(pub u64);

impl Mask {
    pub const EMPTY: Mask = Mask(0);

    pub fn full(m: usize) -> Mask {
        assert!(m <= MAX_INDEX, "at most {MAX_INDEX} indices supported");
        if m == 0 {
            Mask(0)
        } else {
            Mask(u64::MAX >> (64 - m))
        }
    }

    pub fn singleton(j: usize) -> Mask {
        Mask(1 << j)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Mask {
        Mask(it.into_iter().fold(0, |acc, j| acc | (1 << j)))
    }

    pub fn contains(self, j: usize) -> bool {
        self.0 >> j & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Mask) -> Mask {
        Mask(self.0 | other.0)
    }

    pub fn intersection(self, other: Mask) -> Mask {
        Mask(self.0 & other.0)
    }

    pub fn difference(self, other: Mask) -> Mask {
        Mask(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Mask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let j = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(j)
            }
        })
    }

    /// All subsets of `[m]` in increasing numeric order.
    pub fn all(m: usize) -> impl Iterator<Item = Mask> {
        (0..=Mask::full(m).0).map(Mask)
    }

    /// All subsets of `self`, including the empty set and `self`.
    pub fn subsets(self) -> impl Iterator<Item = Mask> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(Mask(cur))
        })
    }

    /// 1-based label list, e.g. `{1,3}`.
    pub fn label(self) -> String {
        let parts: Vec<String> = self.iter().map(|j| (j + 1).to_string()).collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl fmt::Display for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Serialized as the ascending list of 1-based indices.
impl serde::Serialize for Mask {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter().map(|j| j + 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_enumerates_power_set() {
        let s = Mask::from_indices([0, 2, 5]);
        let subs: Vec<Mask> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(subs[0], Mask::EMPTY);
        assert_eq!(*subs.last().unwrap(), s);
    }

    #[test]
    fn full_and_label() {
        assert_eq!(Mask::full(0), Mask::EMPTY);
        assert_eq!(Mask::full(3).0, 0b111);
        assert_eq!(Mask::from_indices([0, 2]).label(), "{1,3}");
        assert_eq!(Mask::all(2).count(), 4);
    }
}
