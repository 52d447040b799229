use crate::error::{Error, Result};
use crate::numbering::PathNumbering;
use crate::poset::{build_young_poset, PosetWindow, ROOT};
use crate::young::{Cell, Diagram};

/// A path in the Young graph, as the sequence of added cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthPath {
    cells: Vec<Cell>,
}

impl GrowthPath {
    pub fn new(cells: Vec<Cell>) -> Result<Self> {
        let p = GrowthPath { cells };
        p.validate()?;
        Ok(p)
    }

    pub(crate) fn from_cells_unchecked(cells: Vec<Cell>) -> Self {
        GrowthPath { cells }
    }

    /// Every added cell must be addable to the diagram grown so far.
    pub fn validate(&self) -> Result<()> {
        let mut shape = Diagram::empty();
        for &c in &self.cells {
            shape = shape.with_cell(c)?;
        }
        Ok(())
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn final_shape(&self) -> Diagram {
        let mut rows: Vec<u32> = Vec::new();
        for &(r, _) in &self.cells {
            let r = r as usize - 1;
            if r == rows.len() {
                rows.push(0);
            }
            rows[r] += 1;
        }
        Diagram::new(rows).expect("growth path keeps a partition")
    }

    /// Diagrams visited, starting from the empty one.
    pub fn shapes(&self) -> Vec<Diagram> {
        let mut out = vec![Diagram::empty()];
        for &c in &self.cells {
            let next = out.last().unwrap().with_cell(c).expect("validated path");
            out.push(next);
        }
        out
    }

    /// The path as a numbering of the Young window of its final shape.
    pub fn to_numbering(&self) -> Result<(PosetWindow, PathNumbering)> {
        let shape = self.final_shape();
        if shape.rows().is_empty() {
            return Err(Error::InvalidNumbering("empty growth path".into()));
        }
        let window = build_young_poset(shape.rows())?;
        let mut seq = vec![ROOT];
        for &(r, c) in &self.cells {
            seq.push(window.poset.id_of(&[r, c]).expect("cell inside final shape"));
        }
        let numbering = PathNumbering::new(&window.poset, seq)?;
        Ok((window, numbering))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_and_conversion() {
        let p = GrowthPath::new(vec![(1, 1), (2, 1), (1, 2)]).unwrap();
        assert_eq!(p.final_shape().rows(), &[2, 1]);
        assert_eq!(p.shapes().len(), 4);
        let (w, n) = p.to_numbering().unwrap();
        assert_eq!(n.len(), 4);
        n.validate(&w.poset).unwrap();
        assert!(GrowthPath::new(vec![(1, 1), (2, 2)]).is_err());
        assert!(GrowthPath::new(vec![(1, 2)]).is_err());
    }
}
