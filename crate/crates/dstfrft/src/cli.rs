//! Command-line front end.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use dstfrft_core::radon::{default_p_axis, radon_2d, uniform_angles};
use dstfrft_core::signals::{anisotropic_gaussian, chirp, gaussian, hermite, random_bandlimited};
use dstfrft_core::{
    analyze, frft_nd, synthesize, AxisGrid, DirectionalGrid, Error, FractionalOrder, FrftPath, SampledField, Window,
};

use crate::config::{Config, ConfigError, Overrides};
use crate::container::{self, ContainerError};
use crate::heatmap::write_pgm;
use crate::verify::{self, analysis_path, Identity, Inputs};

#[derive(Debug, Parser)]
#[command(name = "dstfrft", version, about = "Directional short-time fractional Fourier transforms")]
pub struct Cli {
    /// Worker threads, 0 for the default pool.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// JSON file with default settings; flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a test field.
    Gen(GenArgs),
    /// Fractional Fourier transform of a field onto its own grid.
    Frft(FrftArgs),
    /// Directional short-time fractional Fourier transform of a 2D field.
    Dstfrft(DstfrftArgs),
    /// Synthesis operator applied to a spectrum.
    Synth(SynthArgs),
    /// Radon transform of a 2D field.
    Radon(RadonArgs),
    /// Check a numerical identity and emit a JSON report.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Gaussian,
    Hermite,
    AnisotropicGaussian,
    #[value(name = "chirp2d")]
    Chirp2d,
    RandomBandlimited,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    pub kind: GenKind,
    /// Number of dimensions.
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    /// The grid samples `[-extent, extent)` with `x = 0` at index `count / 2`.
    #[arg(long, default_value_t = 12.0)]
    pub extent: f64,
    #[arg(long, default_value_t = 64)]
    pub count: usize,
    /// Hermite order per axis.
    #[arg(long, value_delimiter = ',', default_value = "0")]
    pub order: Vec<u32>,
    /// Gaussian width, or chirp envelope width.
    #[arg(long, default_value_t = 1.0)]
    pub width: f64,
    #[arg(long, value_delimiter = ',', default_value = "0.5,1.0")]
    pub widths: Vec<f64>,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub angle: f64,
    #[arg(long, value_delimiter = ',', default_value = "1.0,0.5", allow_hyphen_values = true)]
    pub wavevector: Vec<f64>,
    #[arg(long, default_value_t = 0.3, allow_hyphen_values = true)]
    pub rate: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FrftPathArg {
    Direct,
    Fast,
}

#[derive(Debug, Args)]
pub struct FrftArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Fractional order per axis, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub alpha: Vec<f64>,
    #[arg(long, value_enum, default_value = "fast")]
    pub path: FrftPathArg,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct DstfrftArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[command(flatten)]
    pub settings: Overrides,
    /// PGM image of |DS f| over (b, a_0) for the first direction and middle a_1.
    #[arg(long)]
    pub dump_heatmap: Option<PathBuf>,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Width of the Gaussian synthesis window.
    #[arg(long, default_value_t = 1.0)]
    pub window_width: f64,
    /// Width of the analysis window; when given the output is divided by
    /// the window inner product, giving the reconstruction.
    #[arg(long)]
    pub analysis_window_width: Option<f64>,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct RadonArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Number of uniform angles in `[0, 2 pi)`.
    #[arg(long, default_value_t = 16)]
    pub angles: usize,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub identity: Identity,
    #[command(flatten)]
    pub settings: Overrides,
    /// Field to compare (`invert`).
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Field compared against `--input` (`invert`).
    #[arg(long)]
    pub against: Option<PathBuf>,
    /// Where to write the JSON report; printed to stdout otherwise.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

/// Process exit status of a command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass = 0,
    ThresholdExceeded = 1,
    InvalidMath = 2,
    Io = 3,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Math(#[from] Error),
    #[error("{0}")]
    Container(#[from] ContainerError),
    #[error("{0}")]
    Config(#[from] ConfigError),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn status(&self) -> Status {
        match self {
            CliError::Math(_) | CliError::Usage(_) => Status::InvalidMath,
            CliError::Container(_) | CliError::Config(_) | CliError::Io(_) => Status::Io,
        }
    }
}

/// Runs the parsed command, printing diagnostics to stderr; returns the exit status.
pub fn run(cli: Cli) -> Status {
    let threads = cli.threads.unwrap_or(0);
    let result = if threads > 0 {
        match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            Ok(pool) => pool.install(|| dispatch(&cli)),
            Err(e) => Err(CliError::Usage(format!("cannot start {threads} threads: {e}"))),
        }
    } else {
        dispatch(&cli)
    };
    match result {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            e.status()
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Status, CliError> {
    let layered = |flags: &Overrides| -> Result<Overrides, CliError> {
        let mut o = Overrides::layered(cli.config.as_deref(), flags)?;
        if cli.threads.is_some() {
            o.threads = cli.threads;
        }
        Ok(o)
    };
    match &cli.command {
        Command::Gen(a) => gen(a),
        Command::Frft(a) => frft(a),
        Command::Dstfrft(a) => dstfrft(a, &layered(&a.settings)?),
        Command::Synth(a) => synth(a),
        Command::Radon(a) => radon(a),
        Command::Verify(a) => verify_cmd(a, &layered(&a.settings)?),
    }
}

fn pair<T: Copy>(v: &[T], name: &str) -> Result<[T; 2], CliError> {
    match v {
        [a, b] => Ok([*a, *b]),
        _ => Err(CliError::Usage(format!("--{name} takes two comma-separated values"))),
    }
}

fn gen(a: &GenArgs) -> Result<Status, CliError> {
    if !(1..=2).contains(&a.n) {
        return Err(CliError::Usage("--n must be 1 or 2".into()));
    }
    let axes = vec![AxisGrid::periodic(a.extent, a.count)?; a.n];
    let field = match a.kind {
        GenKind::Gaussian => gaussian(&axes, [0.0, 0.0], a.width)?,
        GenKind::Hermite => {
            let orders = [a.order.first().copied().unwrap_or(0), a.order.get(1).copied().unwrap_or(0)];
            hermite(&axes, orders)?
        }
        GenKind::AnisotropicGaussian => anisotropic_gaussian(&axes, pair(&a.widths, "widths")?, a.angle)?,
        GenKind::Chirp2d => chirp(&axes, a.width, pair(&a.wavevector, "wavevector")?, a.rate)?,
        GenKind::RandomBandlimited => random_bandlimited(&axes, a.seed)?,
    };
    container::write_field(&field, &a.out)?;
    Ok(Status::Pass)
}

fn frft(a: &FrftArgs) -> Result<Status, CliError> {
    let f = container::read_field(&a.input)?;
    let order = FractionalOrder::new(&a.alpha)?;
    let path = match a.path {
        FrftPathArg::Direct => FrftPath::Direct,
        FrftPathArg::Fast => FrftPath::Fast,
    };
    let out = frft_nd(&f, &order, None, path)?;
    container::write_field(&out, &a.out)?;
    Ok(Status::Pass)
}

/// Axes with the span of `axes` resampled to `count` points each.
fn resampled(axes: &[AxisGrid], count: usize) -> Result<Vec<AxisGrid>, Error> {
    if count < 2 {
        return Err(Error::InvalidGrid("axis needs at least two points"));
    }
    axes.iter().map(|x| AxisGrid::new(count, x.origin(), x.length() / (count - 1) as f64)).collect()
}

fn dstfrft(a: &DstfrftArgs, settings: &Overrides) -> Result<Status, CliError> {
    let cfg = Config::desk().apply(settings);
    let f = container::read_field(&a.input)?;
    if f.ndim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: f.ndim() }.into());
    }
    let a_axes = match settings.a_count {
        Some(m) => resampled(f.axes(), m)?,
        None => f.axes().to_vec(),
    };
    let psi = Window::gaussian(0.0, cfg.window_width)?;
    let order = FractionalOrder::new(&cfg.alpha)?;
    let half = dstfrft_core::directional::default_b_half_width(f.axes(), &psi);
    let grid = DirectionalGrid::new(cfg.directions, AxisGrid::symmetric(half, cfg.b_count)?, [a_axes[0], a_axes[1]])?;
    let spectrum = analyze(&f, &psi, &order, &grid, analysis_path(&cfg.path)?)?;
    container::write_spectrum(&spectrum, &a.out)?;
    if let Some(p) = &a.dump_heatmap {
        let (nb, m0, m1) = (grid.b_axis().count(), a_axes[0].count(), a_axes[1].count());
        let mags: Vec<f64> = (0..nb)
            .flat_map(|ib| (0..m0).map(move |i0| (ib, i0)))
            .map(|(ib, i0)| spectrum.slab(0, ib)[i0 * m1 + m1 / 2].norm())
            .collect();
        write_pgm(p, m0, nb, &mags).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
    }
    Ok(Status::Pass)
}

fn synth(a: &SynthArgs) -> Result<Status, CliError> {
    let spectrum = container::read_spectrum(&a.input)?;
    let eta = Window::gaussian(0.0, a.window_width)?;
    let out_axes = spectrum.grid().a_axes().to_vec();
    let mut field = synthesize(&spectrum, &eta, spectrum.order(), &out_axes)?;
    if let Some(w) = a.analysis_window_width {
        let c = dstfrft_core::dstfrft::window_inner(&eta, &Window::gaussian(0.0, w)?)?;
        field = field.map(|v| v / c)?;
    }
    container::write_field(&field, &a.out)?;
    Ok(Status::Pass)
}

fn radon(a: &RadonArgs) -> Result<Status, CliError> {
    let f = container::read_field(&a.input)?;
    let p = default_p_axis(f.axes())?;
    let sino = radon_2d(&f, &uniform_angles(a.angles), &p)?;
    container::write_sinogram(&sino, &a.out)?;
    Ok(Status::Pass)
}

fn read_optional(p: &Option<PathBuf>) -> Result<Option<SampledField>, CliError> {
    p.as_deref().map(|p: &Path| container::read_field(p)).transpose().map_err(Into::into)
}

fn verify_cmd(a: &VerifyArgs, settings: &Overrides) -> Result<Status, CliError> {
    let cfg = a.identity.defaults().apply(settings);
    let inputs = Inputs { input: read_optional(&a.input)?, against: read_optional(&a.against)? };
    let report = verify::run(a.identity, &cfg, &inputs)?;
    let text = report.to_json() + "\n";
    match &a.report {
        Some(p) => {
            std::fs::write(p, &text).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
            println!(
                "{}: rel_err {:.3e} (threshold {:.0e}) {}",
                report.identity,
                report.rel_err,
                report.threshold,
                if report.pass { "PASS" } else { "FAIL" }
            );
        }
        None => print!("{text}"),
    }
    Ok(if report.pass { Status::Pass } else { Status::ThresholdExceeded })
}
