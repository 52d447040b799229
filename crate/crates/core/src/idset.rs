//! Fixed-width bitsets over element ids.

use std::fmt;

/// A set of element ids backed by `u64` words. All sets built for one poset
/// share the same width so they compare and hash structurally.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdSet {
    words: Box<[u64]>,
}

impl IdSet {
    pub fn new(capacity: usize) -> Self {
        IdSet {
            words: vec![0; capacity.div_ceil(64).max(1)].into_boxed_slice(),
        }
    }

    pub fn from_ids(capacity: usize, ids: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::new(capacity);
        for id in ids {
            s.insert(id);
        }
        s
    }

    #[inline]
    pub fn contains(&self, id: usize) -> bool {
        self.words
            .get(id / 64)
            .is_some_and(|w| w & (1 << (id % 64)) != 0)
    }

    #[inline]
    pub fn insert(&mut self, id: usize) -> bool {
        let w = &mut self.words[id / 64];
        let bit = 1 << (id % 64);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, id: usize) {
        self.words[id / 64] &= !(1 << (id % 64));
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &IdSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn union_with(&mut self, other: &IdSet) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    /// Ids in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let tz = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + tz)
            })
        })
    }

    pub fn to_ids(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for IdSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
