//! Young diagrams as growth states of the Young graph.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// A cell `(row, col)`, both 1-based.
pub type Cell = (u32, u32);

/// A Young diagram stored as weakly decreasing positive row lengths. The
/// empty diagram has no rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Diagram(Vec<u32>);

impl Diagram {
    pub fn new(rows: Vec<u32>) -> Result<Self> {
        if rows.contains(&0) || rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(rows));
        }
        Ok(Diagram(rows))
    }

    pub fn empty() -> Self {
        Diagram(Vec::new())
    }

    pub fn rows(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&r| r as usize).sum()
    }

    /// Cells that can be added, top row first.
    pub fn addable_cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.0.len() + 1);
        for (r, &len) in self.0.iter().enumerate() {
            if r == 0 || self.0[r - 1] > len {
                out.push((r as u32 + 1, len + 1));
            }
        }
        out.push((self.0.len() as u32 + 1, 1));
        out
    }

    /// Corner cells that can be removed, top row first.
    pub fn removable_cells(&self) -> Vec<Cell> {
        (0..self.0.len())
            .filter(|&r| self.0.get(r + 1).is_none_or(|&next| next < self.0[r]))
            .map(|r| (r as u32 + 1, self.0[r]))
            .collect()
    }

    /// The diagram with `cell` added; errors if the cell is not addable.
    pub fn with_cell(&self, cell: Cell) -> Result<Diagram> {
        if !self.addable_cells().contains(&cell) {
            return Err(Error::InvalidNumbering(format!("cell {cell:?} is not addable to {:?}", self.0)));
        }
        let mut rows = self.0.clone();
        let r = cell.0 as usize - 1;
        if r == rows.len() {
            rows.push(1);
        } else {
            rows[r] += 1;
        }
        Ok(Diagram(rows))
    }

    pub fn without_cell(&self, cell: Cell) -> Option<Diagram> {
        if !self.removable_cells().contains(&cell) {
            return None;
        }
        let mut rows = self.0.clone();
        let r = cell.0 as usize - 1;
        rows[r] -= 1;
        if rows[r] == 0 {
            rows.pop();
        }
        Some(Diagram(rows))
    }

    /// Column lengths (the conjugate diagram's rows).
    pub fn conjugate(&self) -> Diagram {
        let width = self.0.first().copied().unwrap_or(0);
        Diagram(
            (1..=width)
                .map(|c| self.0.iter().take_while(|&&len| len >= c).count() as u32)
                .collect(),
        )
    }

    /// Number of standard tableaux, by the hook-length formula.
    pub fn hook_dimension(&self) -> BigUint {
        let cols = self.conjugate();
        let mut hooks = BigUint::one();
        for (r, &len) in self.0.iter().enumerate() {
            for c in 0..len {
                let arm = len - c - 1;
                let leg = cols.0[c as usize] - r as u32 - 1;
                hooks *= arm + leg + 1;
            }
        }
        let mut fact = BigUint::one();
        for k in 2..=self.size() {
            fact *= k;
        }
        fact / hooks
    }
}

/// Content `col - row` of a cell.
pub fn content(cell: Cell) -> i64 {
    cell.1 as i64 - cell.0 as i64
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Diagram> {
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Diagram>) {
        if rest == 0 {
            out.push(Diagram(cur.clone()));
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            rec(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as u32, n as u32, &mut Vec::new(), &mut out);
    out
}

/// Dimensions of every diagram with at most `max_size` cells, by the
/// downward recursion `dim(lambda) = sum over removable corners`.
pub fn dimensions_by_recursion(max_size: usize) -> HashMap<Diagram, BigUint> {
    let mut dims = HashMap::from([(Diagram::empty(), BigUint::one())]);
    for n in 1..=max_size {
        for lambda in partitions(n) {
            let d: BigUint = lambda
                .removable_cells()
                .into_iter()
                .filter_map(|c| lambda.without_cell(c))
                .map(|mu| dims[&mu].clone())
                .sum();
            dims.insert(lambda, d);
        }
    }
    dims
}
