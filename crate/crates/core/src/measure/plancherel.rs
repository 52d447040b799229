//! The Plancherel growth process on the Young graph: from `lambda` with
//! `n` cells, move to `mu = lambda + one cell` with probability
//! `dim(mu) / ((n + 1) dim(lambda))`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::measure::growth::GrowthPath;
use crate::rng::{pick_weighted, replica_rng, SimRng};
use crate::young::{content, Cell, Diagram};

/// Exact transition row, dimensions from the hook-length formula.
pub fn plancherel_transition(lambda: &Diagram) -> Vec<(Diagram, BigRational)> {
    let n = lambda.size();
    let denom = BigInt::from(lambda.hook_dimension()) * BigInt::from(n + 1);
    lambda
        .addable_cells()
        .into_iter()
        .map(|c| {
            let mu = lambda.with_cell(c).expect("addable");
            let p = BigRational::new(BigInt::from(mu.hook_dimension()), denom.clone());
            (mu, p)
        })
        .collect()
}

/// Floating transition row over the addable cells of `rows`, in top-down
/// order. Uses the product over corner contents
/// `prod_j (x_k - y_j) / prod_{l != k} (x_k - x_l)`
/// where `x` are addable and `y` removable contents; this equals the
/// dimension ratio above.
pub fn plancherel_transition_f64(lambda: &Diagram) -> Vec<(Cell, f64)> {
    let addable = lambda.addable_cells();
    let removable = lambda.removable_cells();
    let mut out = Vec::with_capacity(addable.len());
    let weights = kerov_weights(&addable, &removable);
    for (c, w) in addable.into_iter().zip(weights) {
        out.push((c, w));
    }
    out
}

fn kerov_weights(addable: &[Cell], removable: &[Cell]) -> Vec<f64> {
    let xs: Vec<f64> = addable.iter().map(|&c| content(c) as f64).collect();
    let ys: Vec<f64> = removable.iter().map(|&c| content(c) as f64).collect();
    xs.iter()
        .enumerate()
        .map(|(k, &x)| {
            let num: f64 = ys.iter().map(|&y| x - y).product();
            let den: f64 = xs
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != k)
                .map(|(_, &xl)| x - xl)
                .product();
            num / den
        })
        .collect()
}

/// Growth state kept as row lengths; corners are rescanned each step.
struct Grower {
    rows: Vec<u32>,
    addable: Vec<Cell>,
    removable: Vec<Cell>,
}

impl Grower {
    fn new() -> Self {
        Grower {
            rows: Vec::new(),
            addable: Vec::new(),
            removable: Vec::new(),
        }
    }

    fn step(&mut self, rng: &mut SimRng) -> Cell {
        self.addable.clear();
        self.removable.clear();
        let r = self.rows.len();
        for i in 0..r {
            let len = self.rows[i];
            if i == 0 || self.rows[i - 1] > len {
                self.addable.push((i as u32 + 1, len + 1));
            }
            if i + 1 == r || self.rows[i + 1] < len {
                self.removable.push((i as u32 + 1, len));
            }
        }
        self.addable.push((r as u32 + 1, 1));
        let weights = kerov_weights(&self.addable, &self.removable);
        let cell = self.addable[pick_weighted(rng, &weights)];
        let row = cell.0 as usize - 1;
        if row == self.rows.len() {
            self.rows.push(1);
        } else {
            self.rows[row] += 1;
        }
        cell
    }
}

pub fn sample_plancherel_with(n_steps: usize, rng: &mut SimRng) -> GrowthPath {
    let mut g = Grower::new();
    let cells = (0..n_steps).map(|_| g.step(rng)).collect();
    GrowthPath::from_cells_unchecked(cells)
}

/// A Plancherel path of `n_steps` cells from the stream of `seed`.
pub fn sample_plancherel(n_steps: usize, seed: u64) -> GrowthPath {
    sample_plancherel_with(n_steps, &mut replica_rng(seed, 0))
}

#[cfg(test)]
mod tests {
    use num_traits::{One, ToPrimitive};

    use super::*;
    use crate::young::partitions;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn small_rows() {
        let row = plancherel_transition(&Diagram::empty());
        assert_eq!(row, vec![(Diagram::new(vec![1]).unwrap(), q(1, 1))]);
        let row = plancherel_transition(&Diagram::new(vec![1]).unwrap());
        assert_eq!(row.iter().map(|r| r.1.clone()).collect::<Vec<_>>(), vec![q(1, 2), q(1, 2)]);
        let row = plancherel_transition(&Diagram::new(vec![2]).unwrap());
        assert_eq!(row[0].0.rows(), &[3]);
        assert_eq!(row[0].1, q(1, 3));
        assert_eq!(row[1].0.rows(), &[2, 1]);
        assert_eq!(row[1].1, q(2, 3));
    }

    #[test]
    fn exact_rows_sum_to_one_and_float_rows_agree() {
        for n in 0..=12 {
            for lambda in partitions(n) {
                let exact = plancherel_transition(&lambda);
                let total: BigRational = exact.iter().map(|r| r.1.clone()).sum();
                assert!(total.is_one(), "{lambda:?}");
                let float = plancherel_transition_f64(&lambda);
                assert_eq!(exact.len(), float.len());
                for ((mu, p), (cell, f)) in exact.iter().zip(&float) {
                    assert_eq!(&lambda.with_cell(*cell).unwrap(), mu);
                    assert!((p.to_f64().unwrap() - f).abs() < 1e-12, "{lambda:?} {cell:?}");
                }
            }
        }
    }

    #[test]
    fn sampled_paths_are_valid_and_deterministic() {
        let a = sample_plancherel(300, 11);
        a.validate().unwrap();
        assert_eq!(a, sample_plancherel(300, 11));
        assert_ne!(a, sample_plancherel(300, 12));
        assert_eq!(sample_plancherel(1, 5).cells(), &[(1, 1)]);
    }

    #[test]
    fn second_step_is_fair() {
        let reps = 10_000;
        let right = (0..reps)
            .filter(|&s| sample_plancherel(2, s).cells()[1] == (1, 2))
            .count();
        let f = right as f64 / reps as f64;
        assert!((f - 0.5).abs() <= 0.02, "{f}");
    }
}
