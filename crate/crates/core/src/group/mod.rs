//! The group generated by the adjacent-swap involutions `sigma_i` acting on
//! the set of numberings of a fixed length.
//!
//! `sigma_i` exchanges the entries at positions `i` and `i + 1` when they are
//! incomparable and fixes the numbering otherwise. The group is represented
//! by the permutations the generators induce on the lexicographically
//! indexed path set.

mod perm;
mod stabchain;

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use num_bigint::BigUint;

pub use perm::Perm;
pub use stabchain::StabilizerChain;

use crate::error::{Error, Result};
use crate::idset::IdSet;
use crate::numbering::{enumerate_numberings_limited, PathNumbering};
use crate::poset::{Poset, PosetWindow};

pub const DEFAULT_PATH_LIMIT: usize = 100_000;
pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

/// `sigma_i`, `i >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Involution(usize);

impl Involution {
    pub fn new(index: usize) -> Result<Self> {
        if index == 0 {
            return Err(Error::SigmaOutOfRange { index, length: 0 });
        }
        Ok(Involution(index))
    }

    pub fn index(self) -> usize {
        self.0
    }

    pub fn apply(self, poset: &Poset, phi: &PathNumbering) -> Result<PathNumbering> {
        let i = self.0;
        if i + 1 >= phi.len() {
            return Err(Error::SigmaOutOfRange {
                index: i,
                length: phi.len(),
            });
        }
        if poset.lt(phi.get(i), phi.get(i + 1)) {
            return Ok(phi.clone());
        }
        let out = phi.swapped(i);
        debug_assert!(out.validate(poset).is_ok(), "swap broke a prefix ideal");
        Ok(out)
    }
}

pub fn apply_sigma(poset: &Poset, i: usize, phi: &PathNumbering) -> Result<PathNumbering> {
    Involution::new(i)?.apply(poset, phi)
}

/// Closure of `{phi}` under all `sigma_i` with `1 <= i <= len - 2`, computed
/// directly on numberings.
pub fn orbit(poset: &Poset, phi: &PathNumbering) -> Result<BTreeSet<PathNumbering>> {
    phi.validate(poset)?;
    let mut seen = BTreeSet::from([phi.clone()]);
    let mut queue = VecDeque::from([phi.clone()]);
    while let Some(p) = queue.pop_front() {
        for i in 1..p.len().saturating_sub(1) {
            let q = apply_sigma(poset, i, &p)?;
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    Ok(seen)
}

#[derive(Debug, Clone, Copy)]
pub struct GroupConfig {
    pub path_limit: usize,
    pub cap: usize,
}

impl Default for GroupConfig {
    fn default() -> Self {
        GroupConfig {
            path_limit: DEFAULT_PATH_LIMIT,
            cap: DEFAULT_GROUP_CAP,
        }
    }
}

/// Outcome of the breadth-first closure over the Cayley graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Closure {
    Complete { order: BigUint, diameter: usize },
    CapExceeded { visited: usize, radius: usize },
}

#[derive(Debug, Clone)]
pub struct GroupHandle {
    length: usize,
    poset_len: usize,
    paths: Vec<PathNumbering>,
    index: HashMap<PathNumbering, usize>,
    generators: Vec<Perm>,
    closure: Closure,
}

/// Enumerates all numberings of `length` positions, builds the permutation
/// of every `sigma_i` and closes the group breadth-first up to `config.cap`
/// elements.
pub fn generate_group(window: &PosetWindow, length: usize, config: GroupConfig) -> Result<GroupHandle> {
    let poset = &window.poset;
    let paths = enumerate_numberings_limited(window, length, config.path_limit)?;
    let index: HashMap<PathNumbering, usize> =
        paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut generators = Vec::new();
    for i in 1..length.saturating_sub(1) {
        let sigma = Involution(i);
        let images = paths
            .iter()
            .map(|p| sigma.apply(poset, p).map(|q| index[&q] as u32))
            .collect::<Result<Vec<_>>>()?;
        generators.push(Perm::from_images(images));
    }
    let closure = bfs_closure(paths.len(), &generators, config.cap);
    Ok(GroupHandle {
        length,
        poset_len: poset.len(),
        paths,
        index,
        generators,
        closure,
    })
}

fn bfs_closure(degree: usize, generators: &[Perm], cap: usize) -> Closure {
    let id = Perm::identity(degree);
    let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
    let mut layer = vec![id];
    let mut radius = 0;
    loop {
        let mut next = Vec::new();
        for g in &layer {
            for s in generators {
                let h = g.then(s);
                if !seen.contains(&h) {
                    if seen.len() >= cap {
                        return Closure::CapExceeded {
                            visited: seen.len(),
                            radius,
                        };
                    }
                    seen.insert(h.clone());
                    next.push(h);
                }
            }
        }
        if next.is_empty() {
            return Closure::Complete {
                order: BigUint::from(seen.len()),
                diameter: radius,
            };
        }
        radius += 1;
        layer = next;
    }
}

impl GroupHandle {
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn paths(&self) -> &[PathNumbering] {
        &self.paths
    }

    pub fn path_index(&self, p: &PathNumbering) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Generators in order `sigma_1, sigma_2, ...`.
    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn sigma(&self, i: usize) -> Result<&Perm> {
        i.checked_sub(1)
            .and_then(|k| self.generators.get(k))
            .ok_or(Error::GeneratorOutOfRange {
                index: i,
                max: self.generators.len(),
            })
    }

    pub fn closure(&self) -> &Closure {
        &self.closure
    }

    /// Exact order from the breadth-first closure, if it completed.
    pub fn order(&self) -> Option<&BigUint> {
        match &self.closure {
            Closure::Complete { order, .. } => Some(order),
            Closure::CapExceeded { .. } => None,
        }
    }

    /// Order via a stabilizer chain.
    pub fn stabilizer_chain_order(&self) -> BigUint {
        StabilizerChain::new(self.paths.len(), &self.generators).order()
    }

    /// Orbit of one path index under all generators, sorted.
    pub fn orbit_of(&self, start: usize) -> Vec<usize> {
        orbit_under(start, &self.generators.iter().collect::<Vec<_>>())
    }

    /// Orbit partition of the path set, each orbit sorted, orbits sorted by
    /// least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        partition_orbits(self.paths.len(), &self.generators.iter().collect::<Vec<_>>())
    }

    /// Path indices grouped by the endpoint ideal.
    pub fn fibers(&self) -> Vec<Vec<usize>> {
        let mut by_end: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for (i, p) in self.paths.iter().enumerate() {
            by_end.entry(p.endpoint(self.poset_len).to_ids()).or_default().push(i);
        }
        let mut fibers: Vec<Vec<usize>> = by_end.into_values().collect();
        fibers.sort();
        fibers
    }

    pub fn endpoint(&self, path: usize) -> IdSet {
        self.paths[path].endpoint(self.poset_len)
    }
}

fn orbit_under(start: usize, gens: &[&Perm]) -> Vec<usize> {
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.apply(x);
            if seen.insert(y) {
                stack.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

fn partition_orbits(degree: usize, gens: &[&Perm]) -> Vec<Vec<usize>> {
    let mut assigned = vec![false; degree];
    let mut out = Vec::new();
    for start in 0..degree {
        if assigned[start] {
            continue;
        }
        let orb = orbit_under(start, gens);
        for &x in &orb {
            assigned[x] = true;
        }
        out.push(orb);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RelationFamily {
    /// `sigma_i^2 = 1`
    Involutive,
    /// `(sigma_i sigma_j)^2 = 1` for `|i - j| > 1`
    FarCommute,
    /// `(sigma_i sigma_{i+1})^6 = 1`
    AdjacentHexic,
}

impl fmt::Display for RelationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RelationFamily::Involutive => "involution",
            RelationFamily::FarCommute => "far-commute",
            RelationFamily::AdjacentHexic => "adjacent-order-6",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub family: RelationFamily,
    pub i: usize,
    pub j: usize,
    /// First path moved by the relator, if any.
    pub witness: Option<usize>,
}

impl RelationCheck {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone, Default)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn violations(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.holds())
    }

    pub fn all_hold(&self) -> bool {
        self.violations().next().is_none()
    }

    pub fn family_holds(&self, family: RelationFamily) -> bool {
        self.checks.iter().filter(|c| c.family == family).all(RelationCheck::holds)
    }
}

fn first_moved(p: &Perm) -> Option<usize> {
    p.first_moved()
}

/// Checks the three relation families as permutation identities.
pub fn verify_relations(handle: &GroupHandle) -> RelationReport {
    let gens = handle.generators();
    let mut checks = Vec::new();
    for (a, g) in gens.iter().enumerate() {
        checks.push(RelationCheck {
            family: RelationFamily::Involutive,
            i: a + 1,
            j: a + 1,
            witness: first_moved(&g.then(g)),
        });
    }
    for a in 0..gens.len() {
        for b in a + 2..gens.len() {
            let prod = gens[a].then(&gens[b]);
            checks.push(RelationCheck {
                family: RelationFamily::FarCommute,
                i: a + 1,
                j: b + 1,
                witness: first_moved(&prod.then(&prod)),
            });
        }
    }
    for a in 0..gens.len().saturating_sub(1) {
        let prod = gens[a].then(&gens[a + 1]);
        checks.push(RelationCheck {
            family: RelationFamily::AdjacentHexic,
            i: a + 1,
            j: a + 2,
            witness: first_moved(&prod.pow(6)),
        });
    }
    RelationReport { checks }
}

/// How the two generators of a local group act, before any orbit analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorShape {
    BothTrivial,
    FirstTrivial,
    SecondTrivial,
    Generic,
}

/// Action type of `<sigma_i, sigma_{i+1}>` on one of its orbits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OrbitTag {
    Trivial,
    Z2Swap,
    /// `S_3` acting on three numberings; the product acts as a 3-cycle.
    ThreeCycleClass,
    /// Regular action of `S_3` on six numberings.
    S3Class,
    /// Product of order 6 on a single orbit.
    Order6DihedralClass,
    Unexpected { size: usize, image_order: usize },
}

impl OrbitTag {
    pub fn is_allowed(self) -> bool {
        !matches!(self, OrbitTag::Unexpected { .. })
    }
}

impl fmt::Display for OrbitTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitTag::Trivial => f.write_str("trivial"),
            OrbitTag::Z2Swap => f.write_str("Z2-swap"),
            OrbitTag::ThreeCycleClass => f.write_str("3-cycle-class"),
            OrbitTag::S3Class => f.write_str("S3-class"),
            OrbitTag::Order6DihedralClass => f.write_str("order-6-dihedral-class"),
            OrbitTag::Unexpected { size, image_order } => {
                write!(f, "unexpected(size={size},order={image_order})")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalGroupReport {
    pub i: usize,
    pub product_order: u64,
    pub group_order: u64,
    pub shape: GeneratorShape,
    pub orbit_types: BTreeMap<OrbitTag, usize>,
}

impl LocalGroupReport {
    /// Product order divides 6, the group order is one a dihedral group of
    /// that product order can have, and every orbit tag is a known kind.
    pub fn within_bounds(&self) -> bool {
        [1, 2, 3, 6].contains(&self.product_order)
            && [1, 2, 4, 6, 12].contains(&self.group_order)
            && self.orbit_types.keys().all(|t| t.is_allowed())
    }

    /// For two nontrivial generators the group is dihedral of order
    /// `2 * product_order`.
    pub fn dihedral_consistent(&self) -> bool {
        match self.shape {
            GeneratorShape::Generic => self.group_order == 2 * self.product_order,
            GeneratorShape::BothTrivial => self.group_order == 1,
            _ => self.group_order == 2,
        }
    }

    pub fn orbit_summary(&self) -> String {
        self.orbit_types
            .iter()
            .map(|(t, n)| format!("{t}:{n}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

const LOCAL_CAP: usize = 10_000;

fn small_order(degree: usize, gens: &[Perm]) -> usize {
    match bfs_closure(degree, gens, LOCAL_CAP) {
        Closure::Complete { order, .. } => order.try_into().unwrap_or(usize::MAX),
        Closure::CapExceeded { .. } => usize::MAX,
    }
}

/// Structure of `<sigma_i, sigma_{i+1}>`.
pub fn classify_local(handle: &GroupHandle, i: usize) -> Result<LocalGroupReport> {
    let a = handle.sigma(i)?.clone();
    let b = handle.sigma(i + 1)?.clone();
    let shape = match (a.is_identity(), b.is_identity()) {
        (true, true) => GeneratorShape::BothTrivial,
        (true, false) => GeneratorShape::FirstTrivial,
        (false, true) => GeneratorShape::SecondTrivial,
        (false, false) => GeneratorShape::Generic,
    };
    let product = a.then(&b);
    let product_order: u64 = product.order().try_into().unwrap_or(u64::MAX);
    let group_order = small_order(a.degree(), &[a.clone(), b.clone()]) as u64;

    let mut orbit_types = BTreeMap::new();
    for orb in partition_orbits(a.degree(), &[&a, &b]) {
        let ra = a.restrict(&orb);
        let rb = b.restrict(&orb);
        let local_product: u64 = ra.then(&rb).order().try_into().unwrap_or(u64::MAX);
        let image_order = small_order(orb.len(), &[ra, rb]);
        let tag = match (orb.len(), image_order) {
            (1, _) => OrbitTag::Trivial,
            (2, _) => OrbitTag::Z2Swap,
            _ if local_product == 6 => OrbitTag::Order6DihedralClass,
            (3, 6) => OrbitTag::ThreeCycleClass,
            (6, 6) => OrbitTag::S3Class,
            (size, image_order) => OrbitTag::Unexpected { size, image_order },
        };
        *orbit_types.entry(tag).or_insert(0) += 1;
    }
    Ok(LocalGroupReport {
        i,
        product_order,
        group_order,
        shape,
        orbit_types,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbering::enumerate_numberings;
    use crate::poset::{antichain, build_young_poset, chain};

    #[test]
    fn sigma_on_small_posets() {
        let anti = antichain(2).unwrap();
        let phi = PathNumbering::new(&anti.poset, vec![0, 1, 2]).unwrap();
        assert_eq!(apply_sigma(&anti.poset, 1, &phi).unwrap().elements(), &[0, 2, 1]);

        let ch = chain(2).unwrap();
        let phi = PathNumbering::new(&ch.poset, vec![0, 1, 2]).unwrap();
        assert_eq!(apply_sigma(&ch.poset, 1, &phi).unwrap(), phi);

        assert!(matches!(
            apply_sigma(&ch.poset, 2, &phi),
            Err(Error::SigmaOutOfRange { index: 2, length: 3 })
        ));
        assert!(apply_sigma(&ch.poset, 0, &phi).is_err());
    }

    #[test]
    fn sigma_fixes_other_positions() {
        let w = antichain(4).unwrap();
        for phi in enumerate_numberings(&w, 5).unwrap() {
            for i in 1..4 {
                let psi = apply_sigma(&w.poset, i, &phi).unwrap();
                for m in (0..5).filter(|&m| m != i && m != i + 1) {
                    assert_eq!(psi.get(m), phi.get(m));
                }
            }
        }
    }

    #[test]
    fn chain_group_is_trivial() {
        let h = generate_group(&chain(3).unwrap(), 4, GroupConfig::default()).unwrap();
        assert_eq!(h.paths().len(), 1);
        assert_eq!(h.order(), Some(&BigUint::from(1u8)));
        assert!(h.generators().iter().all(Perm::is_identity));
        assert!(verify_relations(&h).all_hold());
        let local = classify_local(&h, 1).unwrap();
        assert_eq!(local.product_order, 1);
        assert_eq!(local.group_order, 1);
        assert_eq!(local.shape, GeneratorShape::BothTrivial);
    }

    #[test]
    fn antichain3_is_s3() {
        let h = generate_group(&antichain(3).unwrap(), 4, GroupConfig::default()).unwrap();
        assert_eq!(h.paths().len(), 6);
        assert_eq!(h.order(), Some(&BigUint::from(6u8)));
        assert_eq!(h.stabilizer_chain_order(), BigUint::from(6u8));
        let local = classify_local(&h, 1).unwrap();
        assert_eq!(local.product_order, 3);
        assert_eq!(local.group_order, 6);
        assert_eq!(local.orbit_types, BTreeMap::from([(OrbitTag::S3Class, 1)]));
        assert!(local.within_bounds() && local.dihedral_consistent());
    }

    #[test]
    fn young_orbits() {
        let w = build_young_poset(&[2, 1]).unwrap();
        for phi in enumerate_numberings(&w, 4).unwrap() {
            assert_eq!(orbit(&w.poset, &phi).unwrap().len(), 2);
        }
        let w = build_young_poset(&[3, 2]).unwrap();
        let all: BTreeSet<_> = enumerate_numberings(&w, 6).unwrap().into_iter().collect();
        for phi in &all {
            assert_eq!(&orbit(&w.poset, phi).unwrap(), &all);
        }
        let c = chain(4).unwrap();
        let only = enumerate_numberings(&c, 5).unwrap().remove(0);
        assert_eq!(orbit(&c.poset, &only).unwrap().len(), 1);
    }

    #[test]
    fn handle_orbits_match_direct_orbits() {
        let w = build_young_poset(&[3, 1, 1]).unwrap();
        let h = generate_group(&w, 6, GroupConfig::default()).unwrap();
        for (idx, p) in h.paths().iter().enumerate() {
            let direct: Vec<usize> = orbit(&w.poset, p)
                .unwrap()
                .iter()
                .map(|q| h.path_index(q).unwrap())
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            assert_eq!(h.orbit_of(idx), direct);
        }
    }

    #[test]
    fn hook_shapes_act_as_symmetric_groups() {
        // [m,1]: sigma_1 is trivial and the others move (2,1) along
        // m positions, so |G| = m!.
        for (m, expected) in [(2u32, 2u32), (3, 6), (4, 24)] {
            let w = build_young_poset(&[m, 1]).unwrap();
            let h = generate_group(&w, m as usize + 2, GroupConfig::default()).unwrap();
            assert_eq!(h.paths().len(), m as usize);
            assert!(h.sigma(1).unwrap().is_identity());
            assert_eq!(h.order(), Some(&BigUint::from(expected)));
        }
    }

    #[test]
    fn cap_is_reported() {
        let h = generate_group(
            &antichain(4).unwrap(),
            5,
            GroupConfig {
                cap: 5,
                ..GroupConfig::default()
            },
        )
        .unwrap();
        assert!(matches!(h.closure(), Closure::CapExceeded { visited: 5, .. }));
        assert_eq!(h.order(), None);
        assert_eq!(h.stabilizer_chain_order(), BigUint::from(24u8));
    }

    #[test]
    fn path_limit() {
        let r = generate_group(
            &antichain(5).unwrap(),
            6,
            GroupConfig {
                path_limit: 100,
                ..GroupConfig::default()
            },
        );
        assert!(matches!(r, Err(Error::TooManyPaths { limit: 100 })));
    }

    #[test]
    fn sigma_lookup_bounds() {
        let h = generate_group(&antichain(3).unwrap(), 4, GroupConfig::default()).unwrap();
        assert!(h.sigma(0).is_err());
        assert!(h.sigma(3).is_err());
        assert!(classify_local(&h, 2).is_err());
    }
}
