//! Monte Carlo estimates of the frequency `n^{-1} #{1 <= i <= n : phi(i) in I}`
//! over independent replicas. Position 0 (the root) is excluded from both
//! the count and the normalizer.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ideal::IdealSpec;
use crate::idset::IdSet;
use crate::measure::plancherel::sample_plancherel_with;
use crate::measure::rsk::sample_rsk_with_word;
use crate::measure::CentralMeasureSpec;
use crate::rng::replica_rng;

pub const DEFAULT_THRESHOLD: f64 = 3.0;

#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyReport {
    pub sampler: String,
    pub ideal: IdealSpec,
    pub n_steps: usize,
    pub replicas: usize,
    pub estimate: f64,
    pub stderr: f64,
    pub seed: u64,
    pub tied_alpha: bool,
}

impl FrequencyReport {
    pub const CSV_HEADER: &'static str = "sampler,ideal,n,replicas,estimate,stderr,seed";

    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            csv_field(&self.sampler),
            csv_field(&self.ideal.to_string()),
            self.n_steps,
            self.replicas,
            self.estimate,
            self.stderr,
            self.seed
        )
    }
}

pub(crate) fn csv_field(s: &str) -> String {
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

enum Membership {
    Coords,
    Sets(Vec<IdSet>),
}

fn prepare(spec: &CentralMeasureSpec, ideals: &[IdealSpec], n_steps: usize) -> Result<Membership> {
    match spec.kernel() {
        None => {
            for ideal in ideals {
                match ideal.dimension() {
                    _ if matches!(ideal, IdealSpec::FiniteSet(_)) => {
                        return Err(Error::Incompatible(format!(
                            "{ideal} names window ids, but {spec} grows its own Young window"
                        )))
                    }
                    Some(d) if d != 2 => {
                        return Err(Error::Incompatible(format!("{ideal} is not an ideal of Z_+^2")))
                    }
                    _ => {}
                }
            }
            Ok(Membership::Coords)
        }
        Some(kernel) => {
            let max = kernel.max_steps();
            if n_steps > max {
                return Err(Error::Incompatible(format!(
                    "{spec} supports at most {max} steps, asked for {n_steps}"
                )));
            }
            let poset = &kernel.graph().window().poset;
            let sets = ideals
                .iter()
                .map(|ideal| {
                    let set = ideal.materialize(poset)?;
                    poset.check_ideal(&set)?;
                    Ok(set)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Membership::Sets(sets))
        }
    }
}

fn replica_counts(
    spec: &CentralMeasureSpec,
    membership: &Membership,
    ideals: &[IdealSpec],
    n_steps: usize,
    seed: u64,
    replica: u64,
) -> Result<Vec<usize>> {
    let mut rng = replica_rng(seed, replica);
    let mut counts = vec![0usize; ideals.len()];
    match (spec, membership) {
        (CentralMeasureSpec::PlancherelYoung | CentralMeasureSpec::RskThoma(_), Membership::Coords) => {
            let path = match spec {
                CentralMeasureSpec::RskThoma(alpha) => sample_rsk_with_word(alpha, n_steps, &mut rng).0,
                _ => sample_plancherel_with(n_steps, &mut rng),
            };
            for &(r, c) in path.cells() {
                for (count, ideal) in counts.iter_mut().zip(ideals) {
                    if ideal.contains_coords(&[r, c]) == Some(true) {
                        *count += 1;
                    }
                }
            }
        }
        (_, Membership::Sets(sets)) => {
            let kernel = spec.kernel().expect("kernel-backed measure");
            for x in kernel.sample(n_steps, &mut rng)? {
                for (count, set) in counts.iter_mut().zip(sets) {
                    if set.contains(x) {
                        *count += 1;
                    }
                }
            }
        }
        _ => unreachable!("membership prepared for this spec"),
    }
    Ok(counts)
}

/// Estimates for several ideals on the same sampled paths. Replica `k`
/// uses the stream `seed + k`.
pub fn estimate_frequencies(
    spec: &CentralMeasureSpec,
    ideals: &[IdealSpec],
    n_steps: usize,
    replicas: usize,
    seed: u64,
) -> Result<Vec<FrequencyReport>> {
    if n_steps == 0 || replicas == 0 {
        return Err(Error::Incompatible("n and replicas must be positive".into()));
    }
    let membership = prepare(spec, ideals, n_steps)?;
    let per_replica = (0..replicas as u64)
        .into_par_iter()
        .map(|k| replica_counts(spec, &membership, ideals, n_steps, seed, k))
        .collect::<Result<Vec<_>>>()?;

    let reports = ideals
        .iter()
        .enumerate()
        .map(|(j, ideal)| {
            let values: Vec<f64> = per_replica.iter().map(|c| c[j] as f64 / n_steps as f64).collect();
            let (estimate, stderr) = mean_and_stderr(&values);
            FrequencyReport {
                sampler: spec.to_string(),
                ideal: ideal.clone(),
                n_steps,
                replicas,
                estimate,
                stderr,
                seed,
                tied_alpha: spec.tied_alpha(),
            }
        })
        .collect();
    Ok(reports)
}

pub fn estimate_frequency(
    spec: &CentralMeasureSpec,
    ideal: &IdealSpec,
    n_steps: usize,
    replicas: usize,
    seed: u64,
) -> Result<FrequencyReport> {
    Ok(estimate_frequencies(spec, std::slice::from_ref(ideal), n_steps, replicas, seed)?.remove(0))
}

fn mean_and_stderr(values: &[f64]) -> (f64, f64) {
    let r = values.len() as f64;
    let mean = values.iter().sum::<f64>() / r;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (r - 1.0);
    (mean, (var / r).sqrt())
}

#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub a: usize,
    pub b: usize,
    /// Largest separation over the one-dimensional ideals, in units of the
    /// combined standard error.
    pub max_separation: f64,
    pub distinguished: bool,
}

#[derive(Debug, Clone)]
pub struct ComparisonTable {
    pub samplers: Vec<String>,
    pub reports: Vec<Vec<FrequencyReport>>,
    pub pairs: Vec<Comparison>,
    pub threshold: f64,
}

fn one_dimensional(ideal: &IdealSpec) -> bool {
    matches!(ideal, IdealSpec::HookZ2 { .. } | IdealSpec::AxisRays(_))
}

/// Estimates every sampler on every ideal and flags pairs that no
/// one-dimensional ideal separates by more than `threshold` combined
/// standard errors. Sampler `s` uses base seed `seed + s * replicas`.
pub fn compare_frequency_profiles(
    samplers: &[CentralMeasureSpec],
    ideals: &[IdealSpec],
    n_steps: usize,
    replicas: usize,
    seed: u64,
    threshold: f64,
) -> Result<ComparisonTable> {
    if samplers.len() < 2 {
        return Err(Error::Incompatible("need at least two samplers".into()));
    }
    let family = samplers[0].family();
    if let Some(other) = samplers.iter().find(|s| s.family() != family) {
        return Err(Error::Incompatible(format!(
            "mixed poset families: {family} and {}",
            other.family()
        )));
    }
    if !ideals.iter().any(one_dimensional) {
        return Err(Error::Incompatible("no one-dimensional ideal supplied".into()));
    }
    let reports = samplers
        .iter()
        .enumerate()
        .map(|(s, spec)| {
            let base = seed.wrapping_add((s * replicas) as u64);
            estimate_frequencies(spec, ideals, n_steps, replicas, base)
        })
        .collect::<Result<Vec<_>>>()?;

    let mut pairs = Vec::new();
    for a in 0..samplers.len() {
        for b in a + 1..samplers.len() {
            let max_separation = ideals
                .iter()
                .enumerate()
                .filter(|(_, i)| one_dimensional(i))
                .map(|(j, _)| {
                    let (ra, rb) = (&reports[a][j], &reports[b][j]);
                    let diff = (ra.estimate - rb.estimate).abs();
                    let se = ra.stderr.hypot(rb.stderr);
                    if se > 0.0 {
                        diff / se
                    } else if diff > 0.0 {
                        f64::INFINITY
                    } else {
                        0.0
                    }
                })
                .fold(0.0, f64::max);
            pairs.push(Comparison {
                a,
                b,
                max_separation,
                distinguished: max_separation > threshold,
            });
        }
    }
    Ok(ComparisonTable {
        samplers: samplers.iter().map(|s| s.to_string()).collect(),
        reports,
        pairs,
        threshold,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::graph::build_graph;
    use crate::measure::endpoint_measure;
    use crate::poset::{antichain, build_young_poset};

    fn hook(rows: u32, cols: u32) -> IdealSpec {
        IdealSpec::HookZ2 { rows, cols }
    }

    #[test]
    fn full_is_exactly_one() {
        for spec in [CentralMeasureSpec::PlancherelYoung, CentralMeasureSpec::RskThoma("0.6,0.4".parse().unwrap())] {
            let r = estimate_frequency(&spec, &IdealSpec::Full, 200, 10, 1).unwrap();
            assert_eq!(r.estimate, 1.0);
            assert_eq!(r.stderr, 0.0);
        }
    }

    #[test]
    fn single_letter_is_first_row() {
        let spec = CentralMeasureSpec::RskThoma("1.0".parse().unwrap());
        let r = estimate_frequency(&spec, &hook(1, 0), 300, 5, 9).unwrap();
        assert_eq!(r.estimate, 1.0);
        let two = CentralMeasureSpec::RskThoma("0.7,0.3".parse().unwrap());
        assert_eq!(estimate_frequency(&two, &hook(2, 0), 300, 5, 9).unwrap().estimate, 1.0);
    }

    #[test]
    fn monotone_and_bounded_on_shared_paths() {
        let ideals = [hook(0, 0), hook(1, 0), hook(1, 1), hook(2, 1), hook(3, 3), IdealSpec::Full];
        let reports =
            estimate_frequencies(&CentralMeasureSpec::PlancherelYoung, &ideals, 400, 8, 3).unwrap();
        assert!(reports.windows(2).all(|w| w[0].estimate <= w[1].estimate));
        assert!(reports.iter().all(|r| (0.0..=1.0).contains(&r.estimate)));
        assert_eq!(reports[0].estimate, 0.0);
    }

    #[test]
    fn deterministic_given_seed() {
        let spec = CentralMeasureSpec::RskThoma("0.5,0.3,0.2".parse().unwrap());
        let a = estimate_frequency(&spec, &hook(1, 0), 500, 12, 42).unwrap();
        let b = estimate_frequency(&spec, &hook(1, 0), 500, 12, 42).unwrap();
        assert_eq!(a.to_csv_row(), b.to_csv_row());
        let c = estimate_frequency(&spec, &hook(1, 0), 500, 12, 43).unwrap();
        assert_ne!(a.estimate, c.estimate);
    }

    #[test]
    fn kernel_backed_estimates() {
        let w = build_young_poset(&[3, 2]).unwrap();
        let g = Arc::new(build_graph(&w, 5).unwrap());
        let top = g.find_shape(&[3, 2]).unwrap();
        let spec = CentralMeasureSpec::EndpointUniform {
            vertex: top,
            kernel: endpoint_measure(g, top).unwrap(),
        };
        // Every path ends at (3,2): three of five cells in row 1.
        let r = estimate_frequency(&spec, &hook(1, 0), 5, 4, 0).unwrap();
        assert_eq!(r.estimate, 0.6);
        assert!(estimate_frequency(&spec, &hook(1, 0), 6, 4, 0).is_err());
        assert!(estimate_frequency(&spec, &IdealSpec::FiniteSet(vec![0, 2]), 5, 4, 0).is_err());
        assert!(estimate_frequency(&spec, &IdealSpec::FiniteSet(vec![0, 1]), 5, 4, 0).is_ok());
    }

    #[test]
    fn incompatible_ideals() {
        let p = CentralMeasureSpec::PlancherelYoung;
        assert!(estimate_frequency(&p, &IdealSpec::FiniteSet(vec![0]), 10, 2, 0).is_err());
        assert!(estimate_frequency(&p, &IdealSpec::AxisRays(vec![1, 1, 1]), 10, 2, 0).is_err());
        assert!(estimate_frequency(&p, &IdealSpec::AxisRays(vec![0, 1]), 10, 2, 0).is_ok());

        let a = antichain(3).unwrap();
        let g = Arc::new(build_graph(&a, 3).unwrap());
        let v = crate::graph::VertexId { level: 3, index: 0 };
        let spec = CentralMeasureSpec::EndpointUniform {
            vertex: v,
            kernel: endpoint_measure(g, v).unwrap(),
        };
        assert!(matches!(
            estimate_frequency(&spec, &hook(1, 0), 3, 2, 0),
            Err(Error::MissingCoords { .. })
        ));
    }

    #[test]
    fn comparison_rules() {
        let p = CentralMeasureSpec::PlancherelYoung;
        assert!(compare_frequency_profiles(std::slice::from_ref(&p), &[hook(1, 0)], 10, 2, 0, 3.0).is_err());
        assert!(compare_frequency_profiles(&[p.clone(), p.clone()], &[IdealSpec::Full], 10, 2, 0, 3.0).is_err());

        let w = build_young_poset(&[2, 1]).unwrap();
        let g = Arc::new(build_graph(&w, 3).unwrap());
        let v = g.find_shape(&[2, 1]).unwrap();
        let e = CentralMeasureSpec::EndpointUniform {
            vertex: v,
            kernel: endpoint_measure(g, v).unwrap(),
        };
        assert!(matches!(
            compare_frequency_profiles(&[p, e], &[hook(1, 0)], 3, 2, 0, 3.0),
            Err(Error::Incompatible(_))
        ));
    }

    #[test]
    fn csv_quoting() {
        let r = FrequencyReport {
            sampler: "rsk:0.7,0.3".into(),
            ideal: hook(1, 0),
            n_steps: 10,
            replicas: 2,
            estimate: 0.5,
            stderr: 0.25,
            seed: 7,
            tied_alpha: false,
        };
        assert_eq!(r.to_csv_row(), "\"rsk:0.7,0.3\",\"hook:1,0\",10,2,0.5,0.25,7");
    }
}
