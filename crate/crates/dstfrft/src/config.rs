//! Run configuration: built-in defaults, overridden by a JSON file, then by
//! command-line flags.

use std::f64::consts::PI;
use std::path::Path;

use clap::Args;
use serde::{Deserialize, Serialize};

/// Fully resolved settings, embedded in every report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Config {
    /// Half-width of the square sampling domain.
    pub extent: f64,
    pub x_count: usize,
    /// Fractional-frequency samples per axis, over the same extent.
    pub a_count: usize,
    /// Offset samples.
    pub b_count: usize,
    pub directions: usize,
    pub alpha: Vec<f64>,
    pub window_width: f64,
    pub seed: u64,
    /// Worker threads, `0` for the rayon default.
    pub threads: usize,
    /// `direct`, `fast` or `ft`.
    pub path: String,
}

impl Config {
    /// Desk-scale grids shared by the quadrature identities.
    pub fn desk() -> Self {
        Self {
            extent: 6.0,
            x_count: 48,
            a_count: 48,
            b_count: 64,
            directions: 16,
            alpha: vec![PI / 3.0, PI / 4.0],
            window_width: 1.0,
            seed: 0,
            threads: 0,
            path: "fast".into(),
        }
    }

    /// The small grid on which the analysis paths are compared term by term.
    pub fn oracle() -> Self {
        Self { extent: 5.0, x_count: 32, a_count: 16, b_count: 16, directions: 8, ..Self::desk() }
    }

    pub fn apply(mut self, o: &Overrides) -> Self {
        macro_rules! set {
            ($($f:ident),*) => { $( if let Some(v) = &o.$f { self.$f = v.clone(); } )* };
        }
        set!(extent, x_count, a_count, directions, alpha, window_width, seed, threads, path);
        if let Some(b) = o.count {
            self.b_count = b;
        }
        self
    }

    /// `base`, then the file at `file` (if any), then `flags`.
    pub fn resolve(base: Self, file: Option<&Path>, flags: &Overrides) -> Result<Self, ConfigError> {
        Ok(base.apply(&Overrides::layered(file, flags)?))
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read config {0}")]
    Io(String),
    #[error("malformed config {0}")]
    Parse(String),
}

/// Optional settings; the same keys are accepted from flags and from the
/// JSON config file.
#[derive(Debug, Clone, Default, Args, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Overrides {
    /// Half-width of the sampling domain.
    #[arg(long)]
    pub extent: Option<f64>,
    /// Samples per spatial axis.
    #[arg(long)]
    pub x_count: Option<usize>,
    /// Fractional-frequency samples per axis.
    #[arg(long)]
    pub a_count: Option<usize>,
    /// Offset samples.
    #[arg(long, alias = "b-count")]
    #[serde(alias = "b_count")]
    pub count: Option<usize>,
    /// Number of uniform directions on the circle.
    #[arg(long)]
    pub directions: Option<usize>,
    /// Fractional order per axis, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub alpha: Option<Vec<f64>>,
    /// Gaussian window width.
    #[arg(long)]
    pub window_width: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Set from the global `--threads` flag.
    #[arg(skip)]
    pub threads: Option<usize>,
    /// Analysis path: direct, fast or ft.
    #[arg(long)]
    pub path: Option<String>,
}

impl Overrides {
    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Io(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| ConfigError::Parse(format!("{}: {e}", path.display())))
    }

    /// Fields of `top` where set, otherwise those of `self`.
    pub fn under(self, top: &Overrides) -> Self {
        macro_rules! pick {
            ($($f:ident),*) => { Self { $( $f: top.$f.clone().or(self.$f), )* } };
        }
        pick!(extent, x_count, a_count, count, directions, alpha, window_width, seed, threads, path)
    }

    /// The file's settings (if any) overridden by `flags`.
    pub fn layered(file: Option<&Path>, flags: &Overrides) -> Result<Self, ConfigError> {
        let base = match file {
            Some(p) => Self::load(p)?,
            None => Self::default(),
        };
        Ok(base.under(flags))
    }
}
