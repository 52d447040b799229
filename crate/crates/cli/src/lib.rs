//! Command-line front end: build posets, inspect their ideal graphs, check
//! the involution relations, test measures for centrality and estimate
//! frequencies. Every command writes its resolved configuration as `# `
//! header lines, so an output file records how it was made.

mod commands;
mod source;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use posetsym_core::Error;

pub use source::{RunConfig, Source};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "posetsym", version, about = "Monotone numberings, their involution groups and central measures")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Csv => "csv",
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a poset with basic statistics.
    Poset {
        #[command(flatten)]
        source: Source,
    },
    /// Per-level table of ideals and their dimensions.
    Graph {
        #[command(flatten)]
        source: Source,
        /// Numbering length; the graph is built up to level depth - 1.
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Count (and optionally list) numberings of a given length.
    Paths {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long)]
        list: bool,
        #[arg(long, default_value_t = posetsym_core::group::DEFAULT_PATH_LIMIT)]
        path_cap: usize,
    },
    /// Generate the involution group, verify its relations and classify
    /// the local subgroups.
    Group {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        depth: Option<usize>,
        /// Only report the local subgroup <sigma_i, sigma_{i+1}> for this i.
        #[arg(long)]
        local: Option<usize>,
        #[arg(long, default_value_t = posetsym_core::group::DEFAULT_GROUP_CAP)]
        cap: usize,
        #[arg(long, default_value_t = posetsym_core::group::DEFAULT_PATH_LIMIT)]
        path_cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Centrality checks, path samples and frequency estimates.
    Measure {
        #[command(subcommand)]
        action: MeasureCommand,
    },
    /// Decide which samplers the frequency profile tells apart.
    Compare {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        depth: Option<usize>,
        /// Measure spec: plancherel, rsk:<a1,..>, endpoint:<l>:<i>, markov:<file>.
        #[arg(long = "sampler", required = true)]
        samplers: Vec<String>,
        #[arg(long = "ideal", required = true)]
        ideals: Vec<String>,
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, default_value_t = posetsym_core::measure::DEFAULT_THRESHOLD)]
        threshold: f64,
    },
}

#[derive(Debug, Subcommand)]
pub enum MeasureCommand {
    /// Exact centrality check of a kernel-backed measure.
    Check {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        depth: Option<usize>,
        #[command(flatten)]
        sampler: SamplerArgs,
    },
    /// Dump sampled paths, one per replica.
    Sample {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        depth: Option<usize>,
        #[command(flatten)]
        sampler: SamplerArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Frequency estimates as CSV.
    Freq {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        depth: Option<usize>,
        #[command(flatten)]
        sampler: SamplerArgs,
        #[arg(long = "ideal", required = true)]
        ideals: Vec<String>,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct SamplerArgs {
    #[arg(long)]
    pub plancherel: bool,
    /// Letter probabilities, e.g. 0.7,0.3.
    #[arg(long)]
    pub rsk: Option<String>,
    /// Uniform measure on paths to the vertex <level>:<index>.
    #[arg(long)]
    pub endpoint: Option<String>,
    /// Kernel file.
    #[arg(long)]
    pub markov: Option<PathBuf>,
}

impl SamplerArgs {
    fn spec_string(&self) -> String {
        if self.plancherel {
            "plancherel".into()
        } else if let Some(a) = &self.rsk {
            format!("rsk:{a}")
        } else if let Some(v) = &self.endpoint {
            format!("endpoint:{v}")
        } else if let Some(f) = &self.markov {
            format!("markov:{}", f.display())
        } else {
            unreachable!("clap requires one sampler")
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    /// Steps per replica; defaults to 1000, or the kernel's full length.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 10)]
    pub replicas: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Input(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => e.fmt(f),
            CliError::Input(msg) => f.write_str(msg),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::TooManyPaths { .. }) => EXIT_CAP,
            _ => EXIT_INPUT,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_INPUT,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let mut out = String::new();
    match commands::execute(&cli.command, &mut out) {
        Ok(code) => Outcome {
            code,
            stdout: out,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: out,
            stderr: format!("error: {e}\n"),
        },
    }
}
