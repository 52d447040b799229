//! Row insertion of i.i.d. letters from a finite alphabet, recording the
//! shape growth. Letter `a` (0-based) has probability `alpha[a]`.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};
use crate::measure::growth::GrowthPath;
use crate::rng::{replica_rng, SimRng};
use crate::young::Cell;

const ALPHA_SUM_TOL: f64 = 1e-9;

/// A probability vector with strictly positive entries.
#[derive(Debug, Clone, PartialEq)]
pub struct Alpha {
    probs: Vec<f64>,
    text: String,
}

impl Alpha {
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::InvalidAlpha("empty alphabet".into()));
        }
        if probs.iter().any(|&p| !(p > 0.0 && p.is_finite())) {
            return Err(Error::InvalidAlpha(format!("entries must be positive: {probs:?}")));
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > ALPHA_SUM_TOL {
            return Err(Error::InvalidAlpha(format!("entries sum to {sum}")));
        }
        let text = probs.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
        Ok(Alpha { probs, text })
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn alphabet_size(&self) -> usize {
        self.probs.len()
    }

    /// Two letters share a probability.
    pub fn has_ties(&self) -> bool {
        let mut sorted = self.probs.clone();
        sorted.sort_by(f64::total_cmp);
        sorted.windows(2).any(|w| w[0] == w[1])
    }

    fn draw(&self, rng: &mut SimRng) -> usize {
        let u: f64 = rng.random();
        let mut acc = 0.0;
        for (a, &p) in self.probs.iter().enumerate() {
            acc += p;
            if u < acc {
                return a;
            }
        }
        self.probs.len() - 1
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

impl FromStr for Alpha {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let probs = s
            .split(',')
            .map(|t| t.trim().parse::<f64>().map_err(|_| Error::InvalidAlpha(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        let mut a = Alpha::new(probs)?;
        a.text = s.trim().to_string();
        Ok(a)
    }
}

/// Insertion tableau over a `k`-letter alphabet. Rows are weakly
/// increasing, so each row is stored as per-letter counts.
#[derive(Debug, Clone)]
pub struct RowInsertion {
    letters: usize,
    rows: Vec<Vec<u32>>,
    lengths: Vec<u32>,
}

impl RowInsertion {
    pub fn new(letters: usize) -> Self {
        RowInsertion {
            letters,
            rows: Vec::new(),
            lengths: Vec::new(),
        }
    }

    /// Inserts `letter` and returns the cell added to the shape.
    pub fn insert(&mut self, mut letter: usize) -> Cell {
        let mut r = 0;
        loop {
            if r == self.rows.len() {
                self.rows.push(vec![0; self.letters]);
                self.lengths.push(0);
            }
            let row = &mut self.rows[r];
            match (letter + 1..self.letters).find(|&b| row[b] > 0) {
                Some(bumped) => {
                    row[bumped] -= 1;
                    row[letter] += 1;
                    letter = bumped;
                    r += 1;
                }
                None => {
                    row[letter] += 1;
                    self.lengths[r] += 1;
                    return (r as u32 + 1, self.lengths[r]);
                }
            }
        }
    }

    pub fn shape(&self) -> &[u32] {
        &self.lengths
    }
}

/// The growth path together with the inserted word.
pub fn sample_rsk_with_word(alpha: &Alpha, n_steps: usize, rng: &mut SimRng) -> (GrowthPath, Vec<usize>) {
    let mut t = RowInsertion::new(alpha.alphabet_size());
    let mut word = Vec::with_capacity(n_steps);
    let mut cells = Vec::with_capacity(n_steps);
    for _ in 0..n_steps {
        let a = alpha.draw(rng);
        word.push(a);
        cells.push(t.insert(a));
    }
    (GrowthPath::from_cells_unchecked(cells), word)
}

pub fn sample_rsk_thoma(alpha: &Alpha, n_steps: usize, seed: u64) -> GrowthPath {
    sample_rsk_with_word(alpha, n_steps, &mut replica_rng(seed, 0)).0
}
