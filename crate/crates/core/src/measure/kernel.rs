//! Markov kernels on the graded graph: rows of exact transition
//! probabilities over up-edges.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{build_graph, GradedGraph, VertexId};
use crate::numbering::PathNumbering;
use crate::poset::parse_poset;
use crate::rng::{pick_weighted, SimRng};

#[derive(Debug, Clone, PartialEq)]
pub struct Transition {
    pub element: usize,
    pub target: VertexId,
    pub probability: BigRational,
}

#[derive(Debug, Clone)]
pub struct MarkovKernel {
    graph: Arc<GradedGraph>,
    rows: HashMap<VertexId, Vec<Transition>>,
    weights: HashMap<VertexId, Vec<f64>>,
}

fn ratio(num: &BigUint, den: &BigUint) -> BigRational {
    BigRational::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

impl MarkovKernel {
    /// Validates and freezes a kernel. Every row must use up-edges of the
    /// graph, have nonnegative entries and sum to exactly 1.
    pub fn new(graph: Arc<GradedGraph>, rows: HashMap<VertexId, Vec<Transition>>) -> Result<Self> {
        for (&v, row) in &rows {
            let edges: Vec<(usize, VertexId)> = graph.up_edges(v)?.collect();
            let mut sum = BigRational::zero();
            for t in row {
                if !edges.contains(&(t.element, t.target)) {
                    return Err(Error::InvalidMeasure(format!(
                        "transition from {v:?} adds {} which is not an up-edge",
                        t.element
                    )));
                }
                if t.probability < BigRational::zero() {
                    return Err(Error::InvalidMeasure(format!("negative probability in row {v:?}")));
                }
                sum += &t.probability;
            }
            if !sum.is_one() {
                return Err(Error::InvalidMeasure(format!("row {v:?} sums to {sum}")));
            }
        }
        let weights = rows
            .iter()
            .map(|(&v, row)| {
                let w = row.iter().map(|t| t.probability.to_f64().unwrap_or(0.0)).collect();
                (v, w)
            })
            .collect();
        Ok(MarkovKernel { graph, rows, weights })
    }

    pub fn graph(&self) -> &GradedGraph {
        &self.graph
    }

    pub fn row(&self, v: VertexId) -> Option<&[Transition]> {
        self.rows.get(&v).map(Vec::as_slice)
    }

    pub fn rows(&self) -> impl Iterator<Item = (VertexId, &[Transition])> {
        self.rows.iter().map(|(&v, r)| (v, r.as_slice()))
    }

    /// Longest walk from the root that never reaches a vertex without a row.
    pub fn max_steps(&self) -> usize {
        let mut steps = 0;
        let mut frontier = vec![VertexId::ROOT];
        while !frontier.is_empty() && frontier.iter().all(|v| self.rows.contains_key(v)) {
            let mut next: Vec<VertexId> = frontier
                .iter()
                .flat_map(|v| self.rows[v].iter().filter(|t| !t.probability.is_zero()).map(|t| t.target))
                .collect();
            next.sort();
            next.dedup();
            frontier = next;
            steps += 1;
        }
        steps
    }

    /// Probability of a numbering's first `len - 1` steps.
    pub fn path_probability(&self, p: &PathNumbering) -> Result<BigRational> {
        let vertices = self.graph.path_of(p)?;
        let mut prob = BigRational::one();
        for pair in vertices.windows(2) {
            let t = self
                .rows
                .get(&pair[0])
                .and_then(|row| row.iter().find(|t| t.target == pair[1]));
            match t {
                Some(t) => prob *= &t.probability,
                None => return Ok(BigRational::zero()),
            }
        }
        Ok(prob)
    }

    pub fn path_measure(&self, paths: &[PathNumbering]) -> Result<Vec<BigRational>> {
        paths.iter().map(|p| self.path_probability(p)).collect()
    }

    /// One walk of `steps` edges; returns the added elements in order.
    pub fn sample(&self, steps: usize, rng: &mut SimRng) -> Result<Vec<usize>> {
        let mut v = VertexId::ROOT;
        let mut out = Vec::with_capacity(steps);
        for _ in 0..steps {
            let row = self.rows.get(&v).ok_or_else(|| {
                Error::Incompatible(format!("walk reached {v:?}, which has no transition row"))
            })?;
            let t = &row[pick_weighted(rng, &self.weights[&v])];
            out.push(t.element);
            v = t.target;
        }
        Ok(out)
    }
}

/// The kernel of the measure that is uniform on all paths from the root to
/// `v`: `p(u -> w) = up_dimension(w, v) / up_dimension(u, v)`.
pub fn endpoint_measure(graph: Arc<GradedGraph>, v: VertexId) -> Result<MarkovKernel> {
    if !graph.contains(v) {
        return Err(Error::UnknownVertex {
            level: v.level,
            index: v.index,
        });
    }
    let toward = graph.up_dimensions_to(v, 0)?;
    if !toward.contains_key(&VertexId::ROOT) {
        return Err(Error::InvalidMeasure(format!("{v:?} is unreachable from the root")));
    }
    let mut rows = HashMap::new();
    for (&u, through_u) in &toward {
        if u.level == v.level {
            continue;
        }
        let row: Vec<Transition> = graph
            .up_edges(u)?
            .filter_map(|(element, target)| {
                toward.get(&target).map(|through_w| Transition {
                    element,
                    target,
                    probability: ratio(through_w, through_u),
                })
            })
            .collect();
        rows.insert(u, row);
    }
    MarkovKernel::new(graph, rows)
}

/// Reads a kernel file: poset lines (`el`, `cov`) followed by transition
/// rows `tr <ideal ids, comma-separated> <added id> <p/q>`.
pub fn parse_markov(text: &str) -> Result<MarkovKernel> {
    let mut poset_text = String::new();
    let mut raw_rows = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if let Some(rest) = line.strip_prefix("tr ") {
            let err = |msg: &str| Error::Parse {
                line: lineno + 1,
                msg: msg.to_string(),
            };
            let parts: Vec<&str> = rest.split_whitespace().collect();
            let [ideal, elem, prob] = parts[..] else {
                return Err(err("tr needs <ideal> <element> <probability>"));
            };
            let ids = ideal
                .split(',')
                .map(|t| t.parse::<usize>().map_err(|_| err("bad ideal id")))
                .collect::<Result<Vec<_>>>()?;
            let elem = elem.parse::<usize>().map_err(|_| err("bad element id"))?;
            let prob: BigRational = prob.parse().map_err(|_| err("probability must be p/q"))?;
            raw_rows.push((lineno + 1, ids, elem, prob));
        } else {
            poset_text.push_str(raw);
            poset_text.push('\n');
        }
    }
    let window = parse_poset(&poset_text)?;
    let deepest = raw_rows.iter().map(|(_, ids, _, _)| ids.len()).max().unwrap_or(1);
    let graph = Arc::new(build_graph(&window, deepest.min(window.depth()))?);
    let mut rows: HashMap<VertexId, Vec<Transition>> = HashMap::new();
    for (line, ids, element, probability) in raw_rows {
        let from = graph.find_ids(&ids).ok_or(Error::Parse {
            line,
            msg: "transition source is not an ideal".into(),
        })?;
        let target = graph
            .up_edges(from)?
            .find(|&(x, _)| x == element)
            .map(|(_, t)| t)
            .ok_or(Error::Parse {
                line,
                msg: format!("element {element} is not addable"),
            })?;
        rows.entry(from).or_default().push(Transition {
            element,
            target,
            probability,
        });
    }
    MarkovKernel::new(graph, rows)
}
