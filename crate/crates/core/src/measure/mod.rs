//! Central measures on path spaces: exact kernels on finite truncations,
//! Plancherel and RSK growth samplers, centrality checks and frequency
//! estimates.

mod centrality;
mod frequency;
mod growth;
mod kernel;
mod plancherel;
mod rsk;

use std::fmt;
use std::str::FromStr;

pub use centrality::{is_central, CentralityReport, InvarianceCheck, Weight};
pub use frequency::{
    compare_frequency_profiles, estimate_frequencies, estimate_frequency, Comparison,
    ComparisonTable, FrequencyReport, DEFAULT_THRESHOLD,
};
pub use growth::GrowthPath;
pub use kernel::{endpoint_measure, parse_markov, MarkovKernel, Transition};
pub use plancherel::{plancherel_transition, plancherel_transition_f64, sample_plancherel, sample_plancherel_with};
pub use rsk::{sample_rsk_thoma, sample_rsk_with_word, Alpha, RowInsertion};

use crate::error::{Error, Result};
use crate::graph::VertexId;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exactness {
    ExactRational,
    Sampled,
}

#[derive(Debug, Clone)]
pub enum CentralMeasureSpec {
    EndpointUniform { vertex: VertexId, kernel: MarkovKernel },
    PlancherelYoung,
    RskThoma(Alpha),
    ExplicitMarkov { name: String, kernel: MarkovKernel },
}

impl CentralMeasureSpec {
    pub fn exactness(&self) -> Exactness {
        match self {
            CentralMeasureSpec::EndpointUniform { .. } | CentralMeasureSpec::ExplicitMarkov { .. } => {
                Exactness::ExactRational
            }
            _ => Exactness::Sampled,
        }
    }

    pub fn kernel(&self) -> Option<&MarkovKernel> {
        match self {
            CentralMeasureSpec::EndpointUniform { kernel, .. }
            | CentralMeasureSpec::ExplicitMarkov { kernel, .. } => Some(kernel),
            _ => None,
        }
    }

    /// Label of the underlying poset family, for comparability checks.
    pub fn family(&self) -> String {
        match self.kernel() {
            Some(k) => k.graph().window().family.to_string(),
            None => "young-graph".to_string(),
        }
    }

    pub fn tied_alpha(&self) -> bool {
        matches!(self, CentralMeasureSpec::RskThoma(a) if a.has_ties())
    }
}

impl fmt::Display for CentralMeasureSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CentralMeasureSpec::EndpointUniform { vertex, .. } => {
                write!(f, "endpoint:{}:{}", vertex.level, vertex.index)
            }
            CentralMeasureSpec::PlancherelYoung => f.write_str("plancherel"),
            CentralMeasureSpec::RskThoma(a) => write!(f, "rsk:{a}"),
            CentralMeasureSpec::ExplicitMarkov { name, .. } => write!(f, "markov:{name}"),
        }
    }
}

/// A measure named on the command line, before any poset is attached:
/// `endpoint:<level>:<index>`, `plancherel`, `rsk:<a1,...>`, `markov:<file>`.
#[derive(Debug, Clone, PartialEq)]
pub enum MeasureSource {
    Endpoint(VertexId),
    Plancherel,
    Rsk(Alpha),
    Markov(String),
}

impl FromStr for MeasureSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidMeasure(format!("unrecognized measure {s:?}"));
        if s == "plancherel" {
            return Ok(MeasureSource::Plancherel);
        }
        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        match kind {
            "rsk" => Ok(MeasureSource::Rsk(rest.parse()?)),
            "markov" if !rest.is_empty() => Ok(MeasureSource::Markov(rest.to_string())),
            "endpoint" => parse_vertex(rest).map(MeasureSource::Endpoint),
            _ => Err(bad()),
        }
    }
}

/// `<level>:<index>`.
pub fn parse_vertex(s: &str) -> Result<VertexId> {
    let bad = || Error::InvalidMeasure(format!("vertex must be <level>:<index>, got {s:?}"));
    let (l, i) = s.split_once(':').ok_or_else(bad)?;
    Ok(VertexId {
        level: l.parse().map_err(|_| bad())?,
        index: i.parse().map_err(|_| bad())?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_sources() {
        assert_eq!("plancherel".parse::<MeasureSource>().unwrap(), MeasureSource::Plancherel);
        assert_eq!(
            "endpoint:3:0".parse::<MeasureSource>().unwrap(),
            MeasureSource::Endpoint(VertexId { level: 3, index: 0 })
        );
        assert!(matches!("rsk:0.7,0.3".parse::<MeasureSource>().unwrap(), MeasureSource::Rsk(_)));
        assert_eq!(
            "markov:k.txt".parse::<MeasureSource>().unwrap(),
            MeasureSource::Markov("k.txt".into())
        );
        for bad in ["", "endpoint:3", "rsk:0.9", "markov:", "uniform"] {
            assert!(bad.parse::<MeasureSource>().is_err(), "{bad}");
        }
    }
}
