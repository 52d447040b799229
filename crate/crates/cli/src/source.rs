use std::fs;
use std::path::PathBuf;

use clap::Args;
use posetsym_core::{antichain, build_box_poset, build_young_poset, chain, parse_poset, PosetWindow};

use crate::CliError;

/// Where the poset comes from. At most one flag; commands that need a poset
/// report an input error when none is given.
#[derive(Debug, Clone, Default, Args)]
#[group(multiple = false)]
pub struct Source {
    /// Young diagram rows, e.g. 3,2.
    #[arg(long, value_delimiter = ',')]
    pub young: Option<Vec<u32>>,
    /// Box bounds in Z_+^d, e.g. 3,3.
    #[arg(long = "box", value_delimiter = ',')]
    pub box_bounds: Option<Vec<u32>>,
    /// Chain with this many elements above the root.
    #[arg(long)]
    pub chain: Option<usize>,
    /// Antichain with this many elements above the root.
    #[arg(long)]
    pub antichain: Option<usize>,
    /// Poset file (`el` / `cov` lines).
    #[arg(long)]
    pub file: Option<PathBuf>,
}

impl Source {
    pub fn is_given(&self) -> bool {
        self.young.is_some()
            || self.box_bounds.is_some()
            || self.chain.is_some()
            || self.antichain.is_some()
            || self.file.is_some()
    }

    pub fn describe(&self) -> String {
        let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        if let Some(p) = &self.young {
            format!("young:{}", join(p))
        } else if let Some(b) = &self.box_bounds {
            format!("box:{}", join(b))
        } else if let Some(n) = self.chain {
            format!("chain:{n}")
        } else if let Some(n) = self.antichain {
            format!("antichain:{n}")
        } else if let Some(f) = &self.file {
            format!("file:{}", f.display())
        } else {
            "none".into()
        }
    }

    pub fn window(&self) -> Result<PosetWindow, CliError> {
        let w = if let Some(p) = &self.young {
            build_young_poset(p)?
        } else if let Some(b) = &self.box_bounds {
            build_box_poset(b)?
        } else if let Some(n) = self.chain {
            chain(n)?
        } else if let Some(n) = self.antichain {
            antichain(n)?
        } else if let Some(f) = &self.file {
            parse_poset(&read_file(f)?)?
        } else {
            return Err(CliError::Input(
                "no poset given (use --young, --box, --chain, --antichain or --file)".into(),
            ));
        };
        Ok(w)
    }

    /// The window together with the numbering length: `depth` if given,
    /// else the number of elements. Growable windows are enlarged so that
    /// every numbering of that length fits.
    pub fn window_for_length(&self, depth: Option<usize>) -> Result<(PosetWindow, usize), CliError> {
        let w = self.window()?;
        let length = depth.unwrap_or(w.poset.len());
        if length == 0 {
            return Err(CliError::Input("--depth must be at least 1".into()));
        }
        if length > w.poset.len() {
            return Ok((w.grown_to(length - 1)?, length));
        }
        Ok((w, length))
    }
}

pub(crate) fn read_file(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

/// The resolved settings of one run, echoed as `# key: value` lines.
#[derive(Debug, Clone, Default)]
pub struct RunConfig {
    entries: Vec<(String, String)>,
}

impl RunConfig {
    pub fn new(command: &str) -> Self {
        let mut c = RunConfig::default();
        c.set("posetsym", env!("CARGO_PKG_VERSION"));
        c.set("command", command);
        c
    }

    pub fn set(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.entries.push((key.to_string(), value.to_string()));
        self
    }

    pub fn header(&self) -> String {
        self.entries.iter().map(|(k, v)| format!("# {k}: {v}\n")).collect()
    }
}
