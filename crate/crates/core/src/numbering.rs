//! Monotone numberings: injective labelings `0, 1, ..., N-1 -> P` with the
//! root at position 0 and every prefix a downward-closed set.

use std::fmt;

use crate::error::{Error, Result};
use crate::idset::IdSet;
use crate::poset::{Poset, PosetWindow, ROOT};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathNumbering {
    seq: Vec<usize>,
}

impl PathNumbering {
    /// Wraps a sequence after checking it is a monotone numbering of `poset`.
    pub fn new(poset: &Poset, seq: Vec<usize>) -> Result<Self> {
        let p = PathNumbering { seq };
        p.validate(poset)?;
        Ok(p)
    }

    pub(crate) fn from_vec_unchecked(seq: Vec<usize>) -> Self {
        PathNumbering { seq }
    }

    pub fn validate(&self, poset: &Poset) -> Result<()> {
        if self.seq.first() != Some(&ROOT) {
            return Err(Error::InvalidNumbering("position 0 must be the root".into()));
        }
        let mut seen = IdSet::new(poset.len());
        for (pos, &x) in self.seq.iter().enumerate() {
            if x >= poset.len() {
                return Err(Error::UnknownElement(x));
            }
            if !seen.insert(x) {
                return Err(Error::InvalidNumbering(format!(
                    "element {x} repeated at position {pos}"
                )));
            }
            if let Some(&l) = poset.lower_covers(x).iter().find(|&&l| !seen.contains(l)) {
                return Err(Error::InvalidNumbering(format!(
                    "prefix ending at position {pos} is not an ideal: {x} placed before its lower cover {l}"
                )));
            }
        }
        Ok(())
    }

    pub fn elements(&self) -> &[usize] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn get(&self, pos: usize) -> usize {
        self.seq[pos]
    }

    /// The ideal spanned by the whole numbering.
    pub fn endpoint(&self, n: usize) -> IdSet {
        IdSet::from_ids(n, self.seq.iter().copied())
    }

    pub(crate) fn swapped(&self, i: usize) -> PathNumbering {
        let mut seq = self.seq.clone();
        seq.swap(i, i + 1);
        PathNumbering { seq }
    }

    /// Comma-separated ids, the path dump format.
    pub fn to_csv(&self) -> String {
        self.seq.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Debug for PathNumbering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Path({})", self.to_csv())
    }
}

/// All numberings of `length` positions (root included), in lexicographic
/// order of their id sequences.
pub fn enumerate_numberings(window: &PosetWindow, length: usize) -> Result<Vec<PathNumbering>> {
    enumerate_numberings_limited(window, length, usize::MAX)
}

pub fn enumerate_numberings_limited(
    window: &PosetWindow,
    length: usize,
    limit: usize,
) -> Result<Vec<PathNumbering>> {
    let poset = &window.poset;
    if length > poset.len() {
        return Err(Error::LengthTooLarge {
            requested: length,
            available: poset.len(),
        });
    }
    let mut out = Vec::new();
    if length == 0 {
        return Ok(out);
    }
    // missing[x] = number of lower covers of x not yet placed.
    let mut missing: Vec<usize> = (0..poset.len()).map(|x| poset.lower_covers(x).len()).collect();
    let mut placed = vec![false; poset.len()];
    let mut seq = Vec::with_capacity(length);
    place(poset, ROOT, &mut missing, &mut placed, &mut seq, true);
    backtrack(poset, length, limit, &mut missing, &mut placed, &mut seq, &mut out)?;
    Ok(out)
}

fn place(
    poset: &Poset,
    x: usize,
    missing: &mut [usize],
    placed: &mut [bool],
    seq: &mut Vec<usize>,
    add: bool,
) {
    if add {
        placed[x] = true;
        seq.push(x);
        for &u in poset.upper_covers(x) {
            missing[u] -= 1;
        }
    } else {
        placed[x] = false;
        seq.pop();
        for &u in poset.upper_covers(x) {
            missing[u] += 1;
        }
    }
}

fn backtrack(
    poset: &Poset,
    length: usize,
    limit: usize,
    missing: &mut [usize],
    placed: &mut [bool],
    seq: &mut Vec<usize>,
    out: &mut Vec<PathNumbering>,
) -> Result<()> {
    if seq.len() == length {
        if out.len() == limit {
            return Err(Error::TooManyPaths { limit });
        }
        out.push(PathNumbering::from_vec_unchecked(seq.clone()));
        return Ok(());
    }
    for x in 0..poset.len() {
        if placed[x] || missing[x] != 0 {
            continue;
        }
        place(poset, x, missing, placed, seq, true);
        let r = backtrack(poset, length, limit, missing, placed, seq, out);
        place(poset, x, missing, placed, seq, false);
        r?;
    }
    Ok(())
}
