use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

/// A permutation of `0..n` as an image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Box<[u32]>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm {
            images: (0..n as u32).collect(),
        }
    }

    /// Panics if `images` is not a permutation.
    pub fn from_images(images: Vec<u32>) -> Perm {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            assert!(!std::mem::replace(&mut seen[x as usize], true), "not a permutation");
        }
        Perm {
            images: images.into_boxed_slice(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    /// Apply `self` first, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm {
            images: inv.into_boxed_slice(),
        }
    }

    pub fn pow(&self, k: u32) -> Perm {
        let mut out = Perm::identity(self.degree());
        for _ in 0..k {
            out = out.then(self);
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// First point not fixed.
    pub fn first_moved(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|&(i, &x)| i != x as usize).map(|(i, _)| i)
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            out.push(len);
        }
        out
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> BigUint {
        self.cycle_lengths()
            .into_iter()
            .fold(BigUint::one(), |acc, l| acc.lcm(&BigUint::from(l)))
    }

    /// Restriction to an invariant subset, relabelled by position in `points`.
    pub fn restrict(&self, points: &[usize]) -> Perm {
        let pos: std::collections::HashMap<usize, u32> =
            points.iter().enumerate().map(|(i, &p)| (p, i as u32)).collect();
        Perm::from_images(points.iter().map(|&p| pos[&self.apply(p)]).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_invert() {
        let p = Perm::from_images(vec![1, 2, 0, 4, 3]);
        assert!(p.then(&p.inverse()).is_identity());
        assert_eq!(p.order(), BigUint::from(6u8));
        assert!(p.pow(6).is_identity());
        assert!(!p.pow(3).is_identity());
        let q = Perm::from_images(vec![1, 0, 2, 3, 4]);
        // then: apply p, then q
        assert_eq!(p.then(&q).apply(0), q.apply(p.apply(0)));
    }

    #[test]
    #[should_panic]
    fn rejects_non_permutation() {
        Perm::from_images(vec![0, 0]);
    }
}
