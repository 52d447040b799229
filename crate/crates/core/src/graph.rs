//! The graded graph of finite ideals of a poset window, with exact path
//! counts.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::idset::IdSet;
use crate::numbering::PathNumbering;
use crate::poset::{PosetWindow, ROOT};

/// Position of a vertex: `level` counts non-root elements of the ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId {
    pub level: usize,
    pub index: usize,
}

impl VertexId {
    pub const ROOT: VertexId = VertexId { level: 0, index: 0 };
}

#[derive(Debug, Clone)]
struct Vertex {
    ideal: IdSet,
    ids: Vec<usize>,
    /// (added element, index of target at the next level), by element
    up: Vec<(usize, usize)>,
    /// (removed element, index of source at the previous level)
    down: Vec<(usize, usize)>,
    dim: BigUint,
}

#[derive(Debug, Clone)]
pub struct GradedGraph {
    window: PosetWindow,
    levels: Vec<Vec<Vertex>>,
    lookup: HashMap<IdSet, VertexId>,
}

/// Builds all ideals with at most `depth` non-root elements. Growable
/// windows are enlarged first when `depth` exceeds them.
pub fn build_graph(window: &PosetWindow, depth: usize) -> Result<GradedGraph> {
    let window = if depth > window.depth() {
        if !window.growable {
            return Err(Error::DepthTooLarge {
                requested: depth,
                available: window.depth(),
            });
        }
        window.grown_to(depth)?
    } else {
        window.clone()
    };
    let poset = &window.poset;

    let root = poset.empty_ideal();
    let mut levels = vec![vec![Vertex {
        ids: root.to_ids(),
        ideal: root,
        up: Vec::new(),
        down: Vec::new(),
        dim: BigUint::one(),
    }]];
    for level in 0..depth {
        let mut children: Vec<IdSet> = Vec::new();
        let mut seen: HashMap<IdSet, ()> = HashMap::new();
        let mut raw_edges = Vec::new();
        for (vi, v) in levels[level].iter().enumerate() {
            for x in poset.addable_unchecked(&v.ideal) {
                let mut child = v.ideal.clone();
                child.insert(x);
                if seen.insert(child.clone(), ()).is_none() {
                    children.push(child.clone());
                }
                raw_edges.push((vi, x, child));
            }
        }
        let mut next: Vec<Vertex> = children
            .into_iter()
            .map(|ideal| Vertex {
                ids: ideal.to_ids(),
                ideal,
                up: Vec::new(),
                down: Vec::new(),
                dim: BigUint::zero(),
            })
            .collect();
        next.sort_by(|a, b| a.ids.cmp(&b.ids));
        let index: HashMap<&IdSet, usize> =
            next.iter().enumerate().map(|(i, v)| (&v.ideal, i)).collect();
        let resolved: Vec<(usize, usize, usize)> = raw_edges
            .iter()
            .map(|(vi, x, child)| (*vi, *x, index[child]))
            .collect();
        drop(index);
        for (vi, x, ti) in resolved {
            levels[level][vi].up.push((x, ti));
            next[ti].down.push((x, vi));
        }
        for t in &mut next {
            t.down.sort_unstable();
            t.dim = t.down.iter().map(|&(_, s)| &levels[level][s].dim).sum();
        }
        levels.push(next);
    }

    let mut lookup = HashMap::new();
    for (level, vs) in levels.iter().enumerate() {
        for (index, v) in vs.iter().enumerate() {
            lookup.insert(v.ideal.clone(), VertexId { level, index });
        }
    }
    Ok(GradedGraph {
        window,
        levels,
        lookup,
    })
}

impl GradedGraph {
    pub fn window(&self) -> &PosetWindow {
        &self.window
    }

    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level_len(&self, level: usize) -> usize {
        self.levels.get(level).map_or(0, Vec::len)
    }

    pub fn vertices(&self, level: usize) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.level_len(level)).map(move |index| VertexId { level, index })
    }

    pub fn all_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..=self.depth()).flat_map(|l| self.vertices(l))
    }

    fn vertex(&self, v: VertexId) -> Result<&Vertex> {
        self.levels
            .get(v.level)
            .and_then(|l| l.get(v.index))
            .ok_or(Error::UnknownVertex {
                level: v.level,
                index: v.index,
            })
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertex(v).is_ok()
    }

    pub fn ideal(&self, v: VertexId) -> Result<&IdSet> {
        Ok(&self.vertex(v)?.ideal)
    }

    /// Sorted ids of the ideal, root included.
    pub fn ideal_ids(&self, v: VertexId) -> Result<&[usize]> {
        Ok(&self.vertex(v)?.ids)
    }

    pub fn find(&self, ideal: &IdSet) -> Option<VertexId> {
        self.lookup.get(ideal).copied()
    }

    pub fn find_ids(&self, ids: &[usize]) -> Option<VertexId> {
        let mut set = self.window.poset.empty_ideal();
        for &id in ids {
            if id >= self.window.poset.len() {
                return None;
            }
            set.insert(id);
        }
        self.find(&set)
    }

    /// Vertex of a Young diagram, for windows whose elements are cells.
    pub fn find_shape(&self, shape: &[u32]) -> Option<VertexId> {
        let mut ids = vec![ROOT];
        for (r, &len) in shape.iter().enumerate() {
            for c in 1..=len {
                ids.push(self.window.poset.id_of(&[r as u32 + 1, c])?);
            }
        }
        self.find_ids(&ids)
    }

    /// Up-edges as (added element, target vertex).
    pub fn up_edges(&self, v: VertexId) -> Result<impl Iterator<Item = (usize, VertexId)> + '_> {
        let level = v.level + 1;
        Ok(self
            .vertex(v)?
            .up
            .iter()
            .map(move |&(x, index)| (x, VertexId { level, index })))
    }

    pub fn down_edges(&self, v: VertexId) -> Result<impl Iterator<Item = (usize, VertexId)> + '_> {
        let level = v.level.wrapping_sub(1);
        Ok(self
            .vertex(v)?
            .down
            .iter()
            .map(move |&(x, index)| (x, VertexId { level, index })))
    }

    /// Number of root-based paths ending at `v`.
    pub fn dimension(&self, v: VertexId) -> Result<&BigUint> {
        Ok(&self.vertex(v)?.dim)
    }

    /// Number of paths from `u` up to `v`; zero unless `u` is contained in `v`.
    pub fn up_dimension(&self, u: VertexId, v: VertexId) -> Result<BigUint> {
        let uv = self.vertex(u)?;
        let vv = self.vertex(v)?;
        if u.level > v.level || !uv.ideal.is_subset(&vv.ideal) {
            return Ok(BigUint::zero());
        }
        Ok(self.up_dimensions_to(v, u.level)?.remove(&u).unwrap_or_default())
    }

    /// `up_dimension(w, v)` for every `w` below `v` down to level
    /// `min_level`, by one descending sweep from `v`.
    pub fn up_dimensions_to(&self, v: VertexId, min_level: usize) -> Result<HashMap<VertexId, BigUint>> {
        self.vertex(v)?;
        let mut out = HashMap::from([(v, BigUint::one())]);
        let mut frontier: HashMap<usize, BigUint> = HashMap::from([(v.index, BigUint::one())]);
        for level in (min_level..v.level).rev() {
            let mut below: HashMap<usize, BigUint> = HashMap::new();
            for (&idx, count) in &frontier {
                for &(_, s) in &self.levels[level + 1][idx].down {
                    *below.entry(s).or_default() += count;
                }
            }
            for (&index, count) in &below {
                out.insert(VertexId { level, index }, count.clone());
            }
            frontier = below;
        }
        Ok(out)
    }

    /// The chain of ideals visited by a numbering.
    pub fn path_of(&self, numbering: &PathNumbering) -> Result<Vec<VertexId>> {
        let mut set = IdSet::new(self.window.poset.len());
        let mut out = Vec::with_capacity(numbering.len());
        for (pos, &x) in numbering.elements().iter().enumerate() {
            if x >= self.window.poset.len() {
                return Err(Error::UnknownElement(x));
            }
            set.insert(x);
            let v = self.find(&set).ok_or_else(|| {
                Error::InvalidNumbering(format!("prefix of length {} is not an ideal in the graph", pos + 1))
            })?;
            if v.level != pos {
                return Err(Error::InvalidNumbering(format!("element {x} repeated")));
            }
            out.push(v);
        }
        Ok(out)
    }

    /// Inverse of [`GradedGraph::path_of`].
    pub fn numbering_of(&self, path: &[VertexId]) -> Result<PathNumbering> {
        match path.first() {
            Some(&VertexId::ROOT) => {}
            _ => return Err(Error::InvalidNumbering("path must start at the root".into())),
        }
        let mut seq = vec![ROOT];
        for pair in path.windows(2) {
            let (from, to) = (pair[0], pair[1]);
            let x = self
                .up_edges(from)?
                .find(|&(_, t)| t == to)
                .map(|(x, _)| x)
                .ok_or_else(|| Error::InvalidNumbering(format!("no edge {from:?} -> {to:?}")))?;
            seq.push(x);
        }
        Ok(PathNumbering::from_vec_unchecked(seq))
    }

    /// `level,index,ideal,dim` rows; the ideal is space-separated ids.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("level,index,ideal,dim\n");
        for (level, vs) in self.levels.iter().enumerate() {
            for (index, v) in vs.iter().enumerate() {
                let ids: Vec<String> = v.ids.iter().map(usize::to_string).collect();
                out.push_str(&format!("{level},{index},{},{}\n", ids.join(" "), v.dim));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbering::enumerate_numberings;
    use crate::poset::{antichain, build_box_poset, build_young_poset, chain, parse_poset};

    /// Independent oracle: numberings ending at `v`, by exhaustive enumeration.
    fn brute_dim(g: &GradedGraph, v: VertexId) -> usize {
        let target = g.ideal(v).unwrap();
        enumerate_numberings(g.window(), v.level + 1)
            .unwrap()
            .iter()
            .filter(|p| &p.endpoint(g.window().poset.len()) == target)
            .count()
    }

    #[test]
    fn chain_dims() {
        let g = build_graph(&chain(4).unwrap(), 4).unwrap();
        for level in 0..=4 {
            assert_eq!(g.level_len(level), 1);
            assert_eq!(*g.dimension(VertexId { level, index: 0 }).unwrap(), BigUint::one());
        }
    }

    #[test]
    fn young_dims() {
        let g = build_graph(&build_young_poset(&[2, 1]).unwrap(), 3).unwrap();
        let top = g.find_shape(&[2, 1]).unwrap();
        assert_eq!(*g.dimension(top).unwrap(), BigUint::from(2u8));
        assert_eq!(*g.dimension(VertexId::ROOT).unwrap(), BigUint::one());

        let one = g.find_shape(&[1]).unwrap();
        assert_eq!(g.up_dimension(one, top).unwrap(), BigUint::from(2u8));
        assert_eq!(g.up_dimension(top, top).unwrap(), BigUint::one());
        assert_eq!(g.up_dimension(VertexId::ROOT, top).unwrap(), *g.dimension(top).unwrap());
        let row = g.find_shape(&[2]).unwrap();
        let col = g.find_shape(&[1, 1]).unwrap();
        assert_eq!(g.up_dimension(row, col).unwrap(), BigUint::zero());
    }

    #[test]
    fn grid_3x3_matches_enumeration_oracle() {
        let w = build_box_poset(&[3, 3]).unwrap();
        let g = build_graph(&w, 8).unwrap();
        let top = VertexId { level: 8, index: 0 };
        let oracle = enumerate_numberings(&w, 9).unwrap().len();
        assert_eq!(oracle, 42);
        assert_eq!(*g.dimension(top).unwrap(), BigUint::from(oracle));
    }

    #[test]
    fn dims_match_brute_force_everywhere() {
        let windows = [
            build_young_poset(&[3, 2]).unwrap(),
            build_young_poset(&[2, 2, 1]).unwrap(),
            build_box_poset(&[2, 2, 2]).unwrap(),
            antichain(4).unwrap(),
        ];
        for w in &windows {
            let g = build_graph(w, w.depth()).unwrap();
            for v in g.all_vertices() {
                assert_eq!(*g.dimension(v).unwrap(), BigUint::from(brute_dim(&g, v)), "{v:?}");
                let addable = w.poset.addable_elements(g.ideal(v).unwrap()).unwrap();
                let edges: Vec<usize> = g.up_edges(v).unwrap().map(|(x, _)| x).collect();
                if v.level < g.depth() {
                    assert_eq!(addable, edges);
                }
            }
        }
    }

    #[test]
    fn canonical_vertex_order() {
        let g = build_graph(&build_box_poset(&[3, 3]).unwrap(), 8).unwrap();
        for level in 0..=g.depth() {
            let ids: Vec<&[usize]> = g.vertices(level).map(|v| g.ideal_ids(v).unwrap()).collect();
            assert!(ids.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn path_round_trip() {
        let w = build_young_poset(&[3, 2]).unwrap();
        let g = build_graph(&w, 5).unwrap();
        for p in enumerate_numberings(&w, 6).unwrap() {
            let path = g.path_of(&p).unwrap();
            assert_eq!(path.len(), 6);
            assert_eq!(g.numbering_of(&path).unwrap(), p);
        }
        let c11 = w.poset.id_of(&[1, 1]).unwrap();
        let c12 = w.poset.id_of(&[1, 2]).unwrap();
        let seq = PathNumbering::from_vec_unchecked(vec![ROOT, c11, c12]);
        let path = g.path_of(&seq).unwrap();
        assert_eq!(path[1], g.find_shape(&[1]).unwrap());
        assert_eq!(path[2], g.find_shape(&[2]).unwrap());
        let bad = PathNumbering::from_vec_unchecked(vec![ROOT, c12]);
        assert!(g.path_of(&bad).is_err());
        assert!(g.numbering_of(&[VertexId::ROOT, VertexId { level: 2, index: 0 }]).is_err());
    }

    #[test]
    fn growth_and_errors() {
        let g = build_graph(&build_young_poset(&[1]).unwrap(), 4).unwrap();
        assert_eq!(g.level_len(4), 5);
        let f = parse_poset("el 0\nel 1\ncov 0 1").unwrap();
        assert!(matches!(build_graph(&f, 2), Err(Error::DepthTooLarge { .. })));
    }

    #[test]
    fn csv_dump() {
        let g = build_graph(&build_young_poset(&[2, 1]).unwrap(), 3).unwrap();
        let csv = g.to_csv();
        assert!(csv.starts_with("level,index,ideal,dim\n0,0,0,1\n1,0,0 1,1\n"));
        assert!(csv.ends_with("3,0,0 1 2 3,2\n"));
    }
}
