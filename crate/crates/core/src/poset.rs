//! Finite posets with a reserved minimum, and finite windows of the
//! standard infinite families (Young diagrams, boxes of `Z_+^d`, chains,
//! antichains).

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::idset::IdSet;

/// The reserved id of the minimal element.
pub const ROOT: usize = 0;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    pub id: usize,
    pub coords: Option<Vec<u32>>,
}

/// A finite poset on ids `0..n` in which id 0 is the unique minimum.
///
/// `covers` is always the Hasse diagram (transitive reduction) of whatever
/// relation the poset was built from; `leq` is answered from precomputed
/// principal ideals.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    elements: Vec<Element>,
    covers: Vec<(usize, usize)>,
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
    down: Vec<IdSet>,
    by_coords: HashMap<Vec<u32>, usize>,
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset")
            .field("n", &self.len())
            .field("covers", &self.covers)
            .finish()
    }
}

impl Poset {
    /// Builds a poset from per-element coordinates and any generating set of
    /// strict relations `(lower, upper)`.
    pub fn new(coords: Vec<Option<Vec<u32>>>, relations: &[(usize, usize)]) -> Result<Self> {
        let n = coords.len();
        if n == 0 {
            return Err(Error::NonDenseIds(0));
        }
        for &(a, b) in relations {
            if a >= n {
                return Err(Error::DanglingId(a));
            }
            if b >= n {
                return Err(Error::DanglingId(b));
            }
        }
        let down = closure(n, relations)?;

        let mut by_coords = HashMap::new();
        for (id, c) in coords.iter().enumerate() {
            if let Some(c) = c {
                if by_coords.insert(c.clone(), id).is_some() {
                    return Err(Error::DuplicateCoords(c.clone()));
                }
            }
        }

        for (x, d) in down.iter().enumerate() {
            if !d.contains(ROOT) {
                return Err(Error::MultipleMinima(x));
            }
        }

        // Hasse diagram: the lower covers of b are the maximal elements of
        // its strict down-set.
        let mut lower = vec![Vec::new(); n];
        let mut upper = vec![Vec::new(); n];
        let mut covers = Vec::new();
        for b in 0..n {
            let mut strict = down[b].clone();
            strict.remove(b);
            let mut shadow = IdSet::new(n);
            for c in strict.iter() {
                let mut below_c = down[c].clone();
                below_c.remove(c);
                shadow.union_with(&below_c);
            }
            for a in strict.iter().filter(|&a| !shadow.contains(a)) {
                lower[b].push(a);
                upper[a].push(b);
                covers.push((a, b));
            }
        }
        covers.sort_unstable();
        for u in &mut upper {
            u.sort_unstable();
        }

        let elements = coords
            .into_iter()
            .enumerate()
            .map(|(id, coords)| Element { id, coords })
            .collect();
        Ok(Poset {
            elements,
            covers,
            lower,
            upper,
            down,
            by_coords,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, id: usize) -> &Element {
        &self.elements[id]
    }

    pub fn id_of(&self, coords: &[u32]) -> Option<usize> {
        self.by_coords.get(coords).copied()
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower[x]
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    /// `x <= y` in the order.
    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.down[y].contains(x)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    #[inline]
    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// Principal ideal `{y : y <= x}`.
    pub fn principal_ideal(&self, x: usize) -> &IdSet {
        &self.down[x]
    }

    pub fn incomparable_pairs(&self) -> usize {
        let n = self.len();
        (0..n)
            .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
            .filter(|&(x, y)| !self.comparable(x, y))
            .count()
    }

    pub fn empty_ideal(&self) -> IdSet {
        IdSet::from_ids(self.len(), [ROOT])
    }

    pub fn ideal_from_ids(&self, ids: &[usize]) -> Result<IdSet> {
        let mut s = IdSet::new(self.len());
        for &id in ids {
            if id >= self.len() {
                return Err(Error::UnknownElement(id));
            }
            s.insert(id);
        }
        Ok(s)
    }

    /// Checks that `set` contains the root and is downward closed.
    pub fn check_ideal(&self, set: &IdSet) -> Result<()> {
        if !set.contains(ROOT) {
            let witness = set.iter().next().unwrap_or(ROOT);
            return Err(Error::NotAnIdeal {
                element: witness,
                missing: ROOT,
            });
        }
        for x in set.iter() {
            if x >= self.len() {
                return Err(Error::UnknownElement(x));
            }
            if let Some(&missing) = self.lower[x].iter().find(|&&l| !set.contains(l)) {
                return Err(Error::NotAnIdeal {
                    element: x,
                    missing,
                });
            }
        }
        Ok(())
    }

    /// All elements outside `ideal` whose lower covers all lie in `ideal`,
    /// in increasing id order.
    pub fn addable_elements(&self, ideal: &IdSet) -> Result<Vec<usize>> {
        self.check_ideal(ideal)?;
        Ok(self.addable_unchecked(ideal))
    }

    pub(crate) fn addable_unchecked(&self, ideal: &IdSet) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| !ideal.contains(x) && self.lower[x].iter().all(|&l| ideal.contains(l)))
            .collect()
    }

    /// Size of a largest antichain inside `subset` (Dilworth via bipartite
    /// matching on the strict order).
    pub fn width_of(&self, subset: &IdSet) -> usize {
        let items = subset.to_ids();
        let k = items.len();
        let adj: Vec<Vec<usize>> = items
            .iter()
            .map(|&a| (0..k).filter(|&j| self.lt(a, items[j])).collect())
            .collect();
        let mut match_right: Vec<Option<usize>> = vec![None; k];
        let mut matched = 0;
        for left in 0..k {
            let mut seen = vec![false; k];
            if augment(left, &adj, &mut seen, &mut match_right) {
                matched += 1;
            }
        }
        k - matched
    }
}

fn augment(
    left: usize,
    adj: &[Vec<usize>],
    seen: &mut [bool],
    match_right: &mut [Option<usize>],
) -> bool {
    for &r in &adj[left] {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        if match_right[r].is_none_or(|other| augment(other, adj, seen, match_right)) {
            match_right[r] = Some(left);
            return true;
        }
    }
    false
}

/// Reflexive-transitive closure as principal down-sets; fails on cycles.
fn closure(n: usize, relations: &[(usize, usize)]) -> Result<Vec<IdSet>> {
    let mut preds = vec![Vec::new(); n];
    let mut succs = vec![Vec::new(); n];
    let mut indeg = vec![0usize; n];
    for &(a, b) in relations {
        if a == b {
            return Err(Error::Cycle(a));
        }
        preds[b].push(a);
        succs[a].push(b);
        indeg[b] += 1;
    }
    let mut order = Vec::with_capacity(n);
    let mut stack: Vec<usize> = (0..n).rev().filter(|&x| indeg[x] == 0).collect();
    while let Some(x) = stack.pop() {
        order.push(x);
        for &y in &succs[x] {
            indeg[y] -= 1;
            if indeg[y] == 0 {
                stack.push(y);
            }
        }
    }
    if order.len() < n {
        let stuck = (0..n).find(|&x| indeg[x] > 0).unwrap_or(0);
        return Err(Error::Cycle(stuck));
    }
    let mut down = vec![IdSet::new(n); n];
    for &x in &order {
        let mut d = IdSet::new(n);
        d.insert(x);
        for &p in &preds[x] {
            d.union_with(&down[p]);
        }
        down[x] = d;
    }
    Ok(down)
}

/// Which infinite family a window was cut from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    YoungDiagram(Vec<u32>),
    BoxZd(Vec<u32>),
    Chain(usize),
    Antichain(usize),
    ExplicitFile,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        match self {
            Family::YoungDiagram(p) => write!(f, "young:{}", join(p)),
            Family::BoxZd(b) => write!(f, "box:{}", join(b)),
            Family::Chain(n) => write!(f, "chain:{n}"),
            Family::Antichain(n) => write!(f, "antichain:{n}"),
            Family::ExplicitFile => write!(f, "file"),
        }
    }
}

/// A finite, downward-closed piece of a (possibly infinite) poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetWindow {
    pub family: Family,
    pub poset: Poset,
    pub growable: bool,
}

impl PosetWindow {
    /// Number of non-root elements; the deepest level of the ideal graph.
    pub fn depth(&self) -> usize {
        self.poset.len() - 1
    }

    /// A window of the same family containing every ideal with `depth`
    /// non-root elements. Returns a clone when already large enough.
    pub fn grown_to(&self, depth: usize) -> Result<PosetWindow> {
        if depth <= self.depth() && !matches!(self.family, Family::YoungDiagram(_) | Family::BoxZd(_)) {
            return Ok(self.clone());
        }
        match &self.family {
            Family::YoungDiagram(p) => {
                let len = p.len().max(depth);
                let grown: Vec<u32> = (0..len)
                    .map(|r| {
                        let stair = depth.saturating_sub(r) as u32;
                        p.get(r).copied().unwrap_or(0).max(stair)
                    })
                    .collect();
                if &grown == p {
                    Ok(self.clone())
                } else {
                    build_young_poset(&grown)
                }
            }
            Family::BoxZd(b) => {
                let grown: Vec<u32> = b.iter().map(|&x| x.max(depth as u32 + 1)).collect();
                if &grown == b {
                    Ok(self.clone())
                } else {
                    build_box_poset(&grown)
                }
            }
            Family::Chain(_) => chain(depth),
            Family::Antichain(_) => antichain(depth),
            Family::ExplicitFile => Err(Error::DepthTooLarge {
                requested: depth,
                available: self.depth(),
            }),
        }
    }
}

/// Cells of a Young diagram ordered componentwise, with the root adjoined
/// below cell (1,1). Cells get ids row-major starting at 1.
pub fn build_young_poset(partition: &[u32]) -> Result<PosetWindow> {
    if partition.is_empty()
        || partition.contains(&0)
        || partition.windows(2).any(|w| w[0] < w[1])
    {
        return Err(Error::InvalidPartition(partition.to_vec()));
    }
    let mut coords = vec![None];
    let mut ids: HashMap<(u32, u32), usize> = HashMap::new();
    for (r, &len) in partition.iter().enumerate() {
        for c in 1..=len {
            ids.insert((r as u32 + 1, c), coords.len());
            coords.push(Some(vec![r as u32 + 1, c]));
        }
    }
    let mut relations = vec![(ROOT, 1)];
    for (&(r, c), &id) in &ids {
        if let Some(&right) = ids.get(&(r, c + 1)) {
            relations.push((id, right));
        }
        if let Some(&below) = ids.get(&(r + 1, c)) {
            relations.push((id, below));
        }
    }
    Ok(PosetWindow {
        family: Family::YoungDiagram(partition.to_vec()),
        poset: Poset::new(coords, &relations)?,
        growable: true,
    })
}

/// Lattice points of the box `[1, b_1] x ... x [1, b_d]`, ordered
/// componentwise; the all-ones point is the root.
pub fn build_box_poset(bounds: &[u32]) -> Result<PosetWindow> {
    if bounds.is_empty() || bounds.contains(&0) {
        return Err(Error::InvalidBounds(bounds.to_vec()));
    }
    let d = bounds.len();
    let total: usize = bounds.iter().map(|&b| b as usize).product();
    // Mixed radix with the last axis fastest, so ids follow lexicographic
    // coordinate order.
    let mut strides = vec![1usize; d];
    for k in (0..d - 1).rev() {
        strides[k] = strides[k + 1] * bounds[k + 1] as usize;
    }
    let mut coords = Vec::with_capacity(total);
    let mut relations = Vec::new();
    for id in 0..total {
        let point: Vec<u32> = (0..d)
            .map(|k| (id / strides[k] % bounds[k] as usize) as u32 + 1)
            .collect();
        for k in 0..d {
            if point[k] < bounds[k] {
                relations.push((id, id + strides[k]));
            }
        }
        coords.push(Some(point));
    }
    Ok(PosetWindow {
        family: Family::BoxZd(bounds.to_vec()),
        poset: Poset::new(coords, &relations)?,
        growable: true,
    })
}

/// Root followed by `n` totally ordered elements; coordinates as in `Z_+^1`.
pub fn chain(n: usize) -> Result<PosetWindow> {
    let coords = (0..=n).map(|i| Some(vec![i as u32 + 1])).collect();
    let relations: Vec<_> = (0..n).map(|i| (i, i + 1)).collect();
    Ok(PosetWindow {
        family: Family::Chain(n),
        poset: Poset::new(coords, &relations)?,
        growable: true,
    })
}

/// Root with `n` pairwise incomparable elements above it.
pub fn antichain(n: usize) -> Result<PosetWindow> {
    let coords = vec![None; n + 1];
    let relations: Vec<_> = (1..=n).map(|i| (ROOT, i)).collect();
    Ok(PosetWindow {
        family: Family::Antichain(n),
        poset: Poset::new(coords, &relations)?,
        growable: true,
    })
}

/// Parses the line-based poset format:
///
/// ```text
/// # comment
/// el <id> [<c1> ... <cd>]
/// cov <lower> <upper>
/// ```
pub fn parse_poset(text: &str) -> Result<PosetWindow> {
    let mut declared: Vec<Option<Option<Vec<u32>>>> = Vec::new();
    let mut relations = Vec::new();
    let mut max_ref = None::<usize>;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: &str| Error::Parse {
            line: lineno + 1,
            msg: msg.to_string(),
        };
        let mut tokens = line.split_whitespace();
        let keyword = tokens.next().unwrap_or_default();
        let nums: Vec<usize> = tokens
            .map(|t| t.parse::<usize>().map_err(|_| err(&format!("bad integer {t:?}"))))
            .collect::<Result<_>>()?;
        match keyword {
            "el" => {
                let (&id, rest) = nums.split_first().ok_or_else(|| err("el needs an id"))?;
                if declared.len() <= id {
                    declared.resize(id + 1, None);
                }
                if declared[id].is_some() {
                    return Err(Error::DuplicateElement(id));
                }
                let coords = (!rest.is_empty()).then(|| rest.iter().map(|&c| c as u32).collect());
                declared[id] = Some(coords);
            }
            "cov" => {
                let [a, b] = nums[..] else {
                    return Err(err("cov needs exactly two ids"));
                };
                max_ref = max_ref.max(Some(a.max(b)));
                relations.push((a, b));
            }
            other => return Err(err(&format!("unknown keyword {other:?}"))),
        }
    }

    // Cycles are reported before dangling references.
    let span = declared.len().max(max_ref.map_or(0, |m| m + 1));
    closure(span, &relations)?;
    for &(a, b) in &relations {
        for id in [a, b] {
            if declared.get(id).is_none_or(Option::is_none) {
                return Err(Error::DanglingId(id));
            }
        }
    }
    if declared.is_empty() {
        return Err(Error::NonDenseIds(0));
    }
    let coords = declared
        .into_iter()
        .enumerate()
        .map(|(id, c)| c.ok_or(Error::NonDenseIds(id)))
        .collect::<Result<Vec<_>>>()?;
    Ok(PosetWindow {
        family: Family::ExplicitFile,
        poset: Poset::new(coords, &relations)?,
        growable: false,
    })
}

pub fn serialize_poset(window: &PosetWindow) -> String {
    let mut out = format!("# family {}\n", window.family);
    for e in window.poset.elements() {
        out.push_str(&format!("el {}", e.id));
        if let Some(c) = &e.coords {
            for x in c {
                out.push_str(&format!(" {x}"));
            }
        }
        out.push('\n');
    }
    for &(a, b) in window.poset.covers() {
        out.push_str(&format!("cov {a} {b}\n"));
    }
    out
}
