//! Deterministic Schreier-Sims, used as an independent route to group
//! orders when the Cayley-graph closure is capped.

use num_bigint::BigUint;
use num_traits::One;

use super::perm::Perm;

struct Level {
    base: usize,
    gens: Vec<Perm>,
    /// transversal[b] maps the base point to b
    transversal: Vec<Option<Perm>>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Level {
        let mut transversal = vec![None; degree];
        transversal[base] = Some(Perm::identity(degree));
        Level {
            base,
            gens: Vec::new(),
            transversal,
        }
    }

    fn rebuild_orbit(&mut self) {
        let degree = self.transversal.len();
        let mut transversal: Vec<Option<Perm>> = vec![None; degree];
        transversal[self.base] = Some(Perm::identity(degree));
        let mut queue = vec![self.base];
        let mut head = 0;
        while head < queue.len() {
            let b = queue[head];
            head += 1;
            for s in &self.gens {
                let c = s.apply(b);
                if transversal[c].is_none() {
                    transversal[c] = Some(transversal[b].as_ref().unwrap().then(s));
                    queue.push(c);
                }
            }
        }
        self.transversal = transversal;
    }

    fn orbit(&self) -> Vec<usize> {
        (0..self.transversal.len())
            .filter(|&b| self.transversal[b].is_some())
            .collect()
    }
}

pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn new(degree: usize, generators: &[Perm]) -> StabilizerChain {
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
        };
        for g in generators {
            let (residue, level) = chain.sift(g.clone(), 0);
            if level < chain.levels.len() || !residue.is_identity() {
                chain.add_strong_generator(residue, 0, level);
                chain.close(level);
            }
        }
        chain
    }

    /// Strips `g` through levels `from..`; returns the residue and the level
    /// where stripping stopped (`levels.len()` if it went all the way).
    fn sift(&self, mut g: Perm, from: usize) -> (Perm, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let b = g.apply(level.base);
            match &level.transversal[b] {
                Some(u) => g = g.then(&u.inverse()),
                None => return (g, i),
            }
        }
        (g, self.levels.len())
    }

    fn add_strong_generator(&mut self, h: Perm, from: usize, to: usize) {
        for l in from..=to {
            if l == self.levels.len() {
                let base = h.first_moved().expect("residue must move a point");
                self.levels.push(Level::new(base, self.degree));
            }
            self.levels[l].gens.push(h.clone());
            self.levels[l].rebuild_orbit();
        }
    }

    /// Makes every level from `start` down to 0 satisfy the Schreier
    /// condition: each Schreier generator sifts through the levels below.
    fn close(&mut self, start: usize) {
        let mut i = start as isize;
        while i >= 0 {
            let l = i as usize;
            let mut restart = None;
            'scan: for b in self.levels[l].orbit() {
                for s_idx in 0..self.levels[l].gens.len() {
                    let level = &self.levels[l];
                    let s = &level.gens[s_idx];
                    let u_b = level.transversal[b].as_ref().unwrap();
                    let u_sb = level.transversal[s.apply(b)].as_ref().unwrap();
                    let schreier = u_b.then(s).then(&u_sb.inverse());
                    let (h, j) = self.sift(schreier, l + 1);
                    if j < self.levels.len() || !h.is_identity() {
                        self.add_strong_generator(h, l + 1, j);
                        restart = Some(j);
                        break 'scan;
                    }
                }
            }
            match restart {
                Some(j) => i = j as isize,
                None => i -= 1,
            }
        }
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .map(|l| BigUint::from(l.orbit().len()))
            .fold(BigUint::one(), |a, b| a * b)
    }

    pub fn contains(&self, g: &Perm) -> bool {
        let (residue, level) = self.sift(g.clone(), 0);
        level == self.levels.len() && residue.is_identity()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(n: u32) -> BigUint {
        (1..=n).map(BigUint::from).fold(BigUint::one(), |a, b| a * b)
    }

    #[test]
    fn symmetric_groups() {
        for n in 2..=9usize {
            let swap = Perm::from_images((0..n as u32).map(|i| match i { 0 => 1, 1 => 0, x => x }).collect());
            let cycle = Perm::from_images((0..n as u32).map(|i| (i + 1) % n as u32).collect());
            let chain = StabilizerChain::new(n, &[swap, cycle]);
            assert_eq!(chain.order(), factorial(n as u32));
        }
    }

    #[test]
    fn alternating_and_cyclic() {
        let c5 = Perm::from_images(vec![1, 2, 3, 4, 0]);
        assert_eq!(StabilizerChain::new(5, std::slice::from_ref(&c5)).order(), BigUint::from(5u8));
        let t = Perm::from_images(vec![1, 2, 0, 3, 4]);
        assert_eq!(StabilizerChain::new(5, &[c5, t]).order(), BigUint::from(60u8));
    }

    #[test]
    fn membership() {
        let a = Perm::from_images(vec![1, 0, 2, 3]);
        let b = Perm::from_images(vec![0, 1, 3, 2]);
        let chain = StabilizerChain::new(4, &[a.clone(), b.clone()]);
        assert_eq!(chain.order(), BigUint::from(4u8));
        assert!(chain.contains(&a.then(&b)));
        assert!(!chain.contains(&Perm::from_images(vec![2, 1, 0, 3])));
        assert_eq!(StabilizerChain::new(3, &[]).order(), BigUint::one());
    }
}
