//! Centrality of a measure on the numberings of one length: invariance
//! under every `sigma_i`, and uniformity on every endpoint fiber.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::group::GroupHandle;

/// Probability values that can be checked exactly or within a tolerance.
pub trait Weight: Clone {
    fn total(values: &[Self]) -> Self;
    fn is_unit(&self, tol: f64) -> bool;
    fn is_negative(&self, tol: f64) -> bool;
    fn close(&self, other: &Self, tol: f64) -> bool;
}

impl Weight for BigRational {
    fn total(values: &[Self]) -> Self {
        values.iter().fold(BigRational::zero(), |a, b| a + b)
    }
    fn is_unit(&self, _tol: f64) -> bool {
        self.is_one()
    }
    fn is_negative(&self, _tol: f64) -> bool {
        Signed::is_negative(self)
    }
    fn close(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }
}

impl Weight for f64 {
    fn total(values: &[Self]) -> Self {
        values.iter().sum()
    }
    fn is_unit(&self, tol: f64) -> bool {
        (self - 1.0).abs() <= tol
    }
    fn is_negative(&self, tol: f64) -> bool {
        *self < -tol
    }
    fn close(&self, other: &Self, tol: f64) -> bool {
        (self - other).abs() <= tol
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvarianceCheck {
    pub sigma: usize,
    /// A path whose mass differs from that of its image.
    pub witness: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralityReport {
    pub invariance: Vec<InvarianceCheck>,
    /// First endpoint fiber (as path indices) that is not uniform.
    pub non_uniform_fiber: Option<Vec<usize>>,
}

impl CentralityReport {
    /// Invariance under every generator.
    pub fn invariant(&self) -> bool {
        self.invariance.iter().all(|c| c.witness.is_none())
    }

    pub fn fiber_uniform(&self) -> bool {
        self.non_uniform_fiber.is_none()
    }

    pub fn is_central(&self) -> bool {
        self.invariant() && self.fiber_uniform()
    }

    /// First generator that moves mass.
    pub fn witness_generator(&self) -> Option<usize> {
        self.invariance.iter().find(|c| c.witness.is_some()).map(|c| c.sigma)
    }
}

/// `measure[k]` is the mass of `handle.paths()[k]`.
pub fn is_central<W: Weight>(handle: &GroupHandle, measure: &[W], tol: f64) -> Result<CentralityReport> {
    if measure.len() != handle.paths().len() {
        return Err(Error::InvalidMeasure(format!(
            "{} masses for {} paths",
            measure.len(),
            handle.paths().len()
        )));
    }
    if measure.iter().any(|w| w.is_negative(tol)) {
        return Err(Error::InvalidMeasure("negative mass".into()));
    }
    if !W::total(measure).is_unit(tol) {
        return Err(Error::InvalidMeasure("masses do not sum to 1".into()));
    }
    let invariance = handle
        .generators()
        .iter()
        .enumerate()
        .map(|(k, g)| InvarianceCheck {
            sigma: k + 1,
            witness: (0..measure.len()).find(|&p| !measure[p].close(&measure[g.apply(p)], tol)),
        })
        .collect();
    let non_uniform_fiber = handle
        .fibers()
        .into_iter()
        .find(|fiber| fiber.iter().any(|&p| !measure[p].close(&measure[fiber[0]], tol)));
    Ok(CentralityReport {
        invariance,
        non_uniform_fiber,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use num_bigint::BigInt;

    use super::*;
    use crate::graph::build_graph;
    use crate::group::{generate_group, GroupConfig};
    use crate::measure::kernel::endpoint_measure;
    use crate::poset::{build_young_poset, PosetWindow};

    fn setup(w: &PosetWindow, length: usize) -> GroupHandle {
        generate_group(w, length, GroupConfig::default()).unwrap()
    }

    #[test]
    fn uniform_on_all_paths_is_central() {
        let w = build_young_poset(&[3, 2]).unwrap();
        let h = setup(&w, 5);
        let n = h.paths().len();
        let m = vec![BigRational::new(BigInt::one(), BigInt::from(n)); n];
        assert!(is_central(&h, &m, 0.0).unwrap().is_central());
        let f = vec![1.0 / n as f64; n];
        assert!(is_central(&h, &f, 1e-12).unwrap().is_central());
    }

    #[test]
    fn endpoint_measure_central_and_perturbation_caught() {
        let w = build_young_poset(&[3, 2]).unwrap();
        let g = Arc::new(build_graph(&w, 5).unwrap());
        let top = g.find_shape(&[3, 2]).unwrap();
        let k = endpoint_measure(g, top).unwrap();
        let h = setup(&w, 6);
        let mut m = k.path_measure(h.paths()).unwrap();
        assert!(is_central(&h, &m, 0.0).unwrap().is_central());

        let eps = BigRational::new(1.into(), 10.into());
        m[0] += &eps;
        m[1] -= &eps;
        let r = is_central(&h, &m, 0.0).unwrap();
        assert!(!r.is_central());
        assert!(r.witness_generator().is_some());
        assert!(!r.fiber_uniform());
    }

    #[test]
    fn rejects_non_probability() {
        let w = build_young_poset(&[2, 1]).unwrap();
        let h = setup(&w, 4);
        assert!(is_central(&h, &[0.5], 0.0).is_err());
        assert!(is_central(&h, &[0.7, 0.7], 1e-12).is_err());
        assert!(is_central(&h, &[1.5, -0.5], 1e-12).is_err());
    }
}
