//! Numerical identity checks behind `verify`.

use std::f64::consts::PI;
use std::time::Instant;

use clap::ValueEnum;
use dstfrft_core::directional::default_b_half_width;
use dstfrft_core::dstfrft::{
    desingularization_residual, isometry_residual, parseval_residual, reconstruct, transpose_residual,
    IdentityReport, ViaFtOptions,
};
use dstfrft_core::grid::rel_l2_error;
use dstfrft_core::radon::{fourier_slice, uniform_angles};
use dstfrft_core::signals::{anisotropic_gaussian, gaussian, random_bandlimited, random_spectrum};
use dstfrft_core::{
    analyze, analyze_direct, analyze_fast, analyze_via_ft, frft_nd, AnalysisPath, AxisGrid, Complex64,
    DirectionalGrid, Error, FractionalOrder, FrftPath, SampledField, Window,
};
use serde_json::json;

use crate::config::Config;
use crate::report::{directional_summary, field_summary, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    Parseval,
    Reconstruct,
    Transpose,
    Desing,
    Slice,
    Isometry,
    Invert,
    Paths,
    DstftReduction,
}

/// Fast-versus-direct bound checked alongside the `paths` report.
pub const FAST_PATH_THRESHOLD: f64 = 1e-7;
/// Number of seeded fields in the `invert` check.
pub const INVERT_SEEDS: u64 = 5;

impl Identity {
    pub fn name(self) -> &'static str {
        match self {
            Identity::Parseval => "parseval",
            Identity::Reconstruct => "reconstruct",
            Identity::Transpose => "transpose",
            Identity::Desing => "desing",
            Identity::Slice => "slice",
            Identity::Isometry => "isometry",
            Identity::Invert => "invert",
            Identity::Paths => "paths",
            Identity::DstftReduction => "dstft-reduction",
        }
    }

    pub fn threshold(self) -> f64 {
        match self {
            Identity::Parseval | Identity::Reconstruct | Identity::Desing | Identity::Isometry => 2e-2,
            Identity::Transpose | Identity::DstftReduction => 1e-10,
            Identity::Slice | Identity::Paths => 1e-3,
            Identity::Invert => 1e-7,
        }
    }

    pub fn defaults(self) -> Config {
        match self {
            Identity::Paths => Config::oracle(),
            Identity::DstftReduction => Config { alpha: vec![PI / 2.0, PI / 2.0], ..Config::oracle() },
            Identity::Slice => Config { x_count: 128, ..Config::desk() },
            Identity::Invert => Config { extent: 12.0, x_count: 256, ..Config::desk() },
            _ => Config::desk(),
        }
    }
}

pub fn analysis_path(name: &str) -> Result<AnalysisPath, Error> {
    match name {
        "direct" => Ok(AnalysisPath::Direct),
        "fast" => Ok(AnalysisPath::WindowedFrft),
        "ft" => Ok(AnalysisPath::FtSlice),
        _ => Err(Error::InvalidArgument("path must be one of direct, fast, ft")),
    }
}

/// Spatial axes, window, order and directional grid described by `cfg`.
pub struct Setup {
    pub x: [AxisGrid; 2],
    pub psi: Window,
    pub order: FractionalOrder,
    pub grid: DirectionalGrid,
}

impl Setup {
    pub fn new(cfg: &Config) -> Result<Self, Error> {
        let x = AxisGrid::symmetric(cfg.extent, cfg.x_count)?;
        let a = AxisGrid::symmetric(cfg.extent, cfg.a_count)?;
        let psi = Window::gaussian(0.0, cfg.window_width)?;
        let order = FractionalOrder::new(&cfg.alpha)?;
        let b = AxisGrid::symmetric(default_b_half_width(&[x, x], &psi), cfg.b_count)?;
        let grid = DirectionalGrid::new(cfg.directions, b, [a, a])?;
        Ok(Self { x: [x, x], psi, order, grid })
    }

    fn summary(&self) -> serde_json::Value {
        directional_summary(&self.x, &self.grid)
    }
}

/// Optional files for checks that compare stored fields.
#[derive(Debug, Default)]
pub struct Inputs {
    pub input: Option<SampledField>,
    pub against: Option<SampledField>,
}

fn real(v: f64) -> Complex64 {
    Complex64::new(v, 0.0)
}

fn l2(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn diff_l2(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm_sqr()).sum::<f64>().sqrt()
}

fn from_identity(id: Identity, r: IdentityReport, cfg: &Config, grid: serde_json::Value) -> Report {
    Report::with_errors(id.name(), r.lhs, r.rhs, r.abs_err, r.rel_err, id.threshold(), cfg, grid)
}

/// Array comparison reported as norms of both sides.
fn compare(id: Identity, lhs: &[Complex64], rhs: &[Complex64], cfg: &Config, grid: serde_json::Value) -> Report {
    let abs = diff_l2(lhs, rhs);
    let scale = l2(rhs);
    let rel = if scale > 0.0 { abs / scale } else { abs };
    Report::with_errors(id.name(), real(l2(lhs)), real(scale), abs, rel, id.threshold(), cfg, grid)
}

/// Runs `id` under `cfg` and stamps the wall-clock time.
pub fn run(id: Identity, cfg: &Config, inputs: &Inputs) -> Result<Report, Error> {
    let start = Instant::now();
    let mut report = evaluate(id, cfg, inputs)?;
    report.runtime_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(report)
}

fn evaluate(id: Identity, cfg: &Config, inputs: &Inputs) -> Result<Report, Error> {
    match id {
        Identity::Slice => return slice(cfg),
        Identity::Invert => return invert(cfg, inputs),
        _ => {}
    }
    let s = Setup::new(cfg)?;
    let x = &s.x[..];
    let report = match id {
        Identity::Parseval => {
            let f = gaussian(x, [0.0, 0.0], 1.0)?;
            let g = gaussian(x, [0.5, 0.3], 0.8)?;
            from_identity(id, parseval_residual(&f, &g, &s.psi, &s.psi, &s.order, &s.grid)?, cfg, s.summary())
        }
        Identity::Isometry => {
            let f = gaussian(x, [0.0, 0.0], 1.0)?;
            let r = isometry_residual(&f, &s.psi, &s.order, &s.grid)?;
            from_identity(id, r, cfg, s.summary()).detail("ratio", r.lhs.re / r.rhs.re)
        }
        Identity::Reconstruct => {
            let f = gaussian(x, [0.0, 0.0], 1.0)?;
            let r = reconstruct(&f, &s.psi, &s.psi, &s.order, &s.grid)?;
            compare(id, r.field.values(), f.values(), cfg, s.summary())
                .detail("window_inner", crate::report::ComplexValue::from(r.window_inner))
        }
        Identity::Transpose => {
            let f = random_bandlimited(x, cfg.seed)?;
            let phi = random_spectrum(&s.grid, &s.order, cfg.seed)?;
            from_identity(id, transpose_residual(&f, &s.psi, &s.order, &phi)?, cfg, s.summary())
        }
        Identity::Desing => {
            let f = gaussian(x, [0.0, 0.0], 1.0)?;
            let phi = gaussian(x, [0.3, 0.2], 0.7)?.map(|v| v * Complex64::new(0.6, 0.8))?;
            let r = desingularization_residual(&f, &phi, &s.psi, &s.psi, &s.order, &s.grid)?;
            from_identity(id, r, cfg, s.summary())
        }
        Identity::Paths => paths(&s, cfg)?,
        Identity::DstftReduction => {
            let f = random_bandlimited(x, cfg.seed)?;
            let got = analyze(&f, &s.psi, &s.order, &s.grid, analysis_path(&cfg.path)?)?;
            let expect = directional_stft(&f, cfg.window_width, &s.grid);
            compare(id, got.values(), &expect, cfg, s.summary())
        }
        Identity::Slice | Identity::Invert => unreachable!("handled above"),
    };
    Ok(report)
}

fn paths(s: &Setup, cfg: &Config) -> Result<Report, Error> {
    let f = random_bandlimited(&s.x, cfg.seed)?;
    let direct = analyze_direct(&f, &s.psi, &s.order, &s.grid)?;
    let fast = analyze_fast(&f, &s.psi, &s.order, &s.grid)?;
    let via = analyze_via_ft(&f, &s.psi, &s.order, &s.grid, &ViaFtOptions::default())?;
    let fast_err = diff_l2(fast.values(), direct.values()) / l2(direct.values()).max(f64::MIN_POSITIVE);
    let mut report = compare(Identity::Paths, via.values(), direct.values(), cfg, s.summary())
        .detail("fast_vs_direct", fast_err)
        .detail("fast_threshold", FAST_PATH_THRESHOLD);
    report.pass &= fast_err <= FAST_PATH_THRESHOLD;
    Ok(report)
}

fn slice(cfg: &Config) -> Result<Report, Error> {
    let id = Identity::Slice;
    let x = AxisGrid::symmetric(cfg.extent, cfg.x_count)?;
    let freqs = AxisGrid::symmetric(4.0, 41)?;
    let fields = [gaussian(&[x, x], [0.0, 0.0], 1.0)?, anisotropic_gaussian(&[x, x], [0.5, 1.0], 0.0)?];
    let (mut radon_side, mut fourier_side) = (Vec::new(), Vec::new());
    let mut worst = 0.0f64;
    for f in &fields {
        for theta in uniform_angles(cfg.directions) {
            let c = fourier_slice(f, theta, &freqs)?;
            worst = worst.max(c.residual);
            radon_side.extend(c.radon_side);
            fourier_side.extend(c.fourier_side);
        }
    }
    let abs = diff_l2(&radon_side, &fourier_side);
    let grid = json!({ "x": field_summary(&[x, x])["x"], "directions": cfg.directions, "frequencies": crate::report::axis_summary(&freqs) });
    Ok(Report::with_errors(id.name(), real(l2(&radon_side)), real(l2(&fourier_side)), abs, worst, id.threshold(), cfg, grid)
        .detail("aggregate_rel_err", abs / l2(&fourier_side)))
}

fn invert(cfg: &Config, inputs: &Inputs) -> Result<Report, Error> {
    let id = Identity::Invert;
    if let (Some(a), Some(b)) = (&inputs.input, &inputs.against) {
        if !a.same_grid(b) {
            return Err(Error::GridMismatch);
        }
        return Ok(compare(id, b.values(), a.values(), cfg, field_summary(a.axes())));
    }
    let order = FractionalOrder::new(&cfg.alpha)?;
    let x = vec![AxisGrid::symmetric(cfg.extent, cfg.x_count)?; order.ndim()];
    let mut worst: Option<(f64, f64, f64, f64)> = None;
    let mut per_seed = Vec::new();
    for seed in cfg.seed..cfg.seed + INVERT_SEEDS {
        let f = random_bandlimited(&x, seed)?;
        let fwd = frft_nd(&f, &order, None, FrftPath::Fast)?;
        let back = frft_nd(&fwd, &order.negated(), None, FrftPath::Fast)?;
        let rel = rel_l2_error(&back, &f)?;
        per_seed.push(rel);
        let abs = diff_l2(back.values(), f.values());
        if worst.is_none_or(|w| rel > w.3) {
            worst = Some((back.l2_norm(), f.l2_norm(), abs, rel));
        }
    }
    let (l, r, abs, rel) = worst.expect("at least one seed");
    Ok(Report::with_errors(id.name(), real(l), real(r), abs, rel, id.threshold(), cfg, field_summary(&x))
        .detail("per_seed_rel_err", per_seed))
}

/// Literal directional short-time Fourier sum
/// `(2 pi)^{-1} sum_x w f(x) exp(-(u.x - b)^2 / (2 s^2)) exp(-i x.xi)` over
/// the trapezoid weights of `f`, with unit-height Gaussian window of width `s`.
pub fn directional_stft(f: &SampledField, width: f64, grid: &DirectionalGrid) -> Vec<Complex64> {
    let axes = f.axes();
    let [a0, a1] = *grid.a_axes();
    let w0 = axes[0].trapezoid_weights();
    let w1 = axes[1].trapezoid_weights();
    let x0: Vec<f64> = axes[0].points().collect();
    let x1: Vec<f64> = axes[1].points().collect();
    let phase = |xs: &[f64], a: &AxisGrid| -> Vec<Vec<Complex64>> {
        a.points().map(|xi| xs.iter().map(|&x| Complex64::from_polar(1.0, -x * xi)).collect()).collect()
    };
    let e0 = phase(&x0, &a0);
    let e1 = phase(&x1, &a1);
    let mut out = Vec::with_capacity(grid.len());
    for u in grid.directions() {
        for b in grid.b_axis().points() {
            let windowed: Vec<Complex64> = (0..x0.len())
                .flat_map(|i| (0..x1.len()).map(move |j| (i, j)))
                .map(|(i, j)| {
                    let t = u[0] * x0[i] + u[1] * x1[j] - b;
                    f.values()[i * x1.len() + j] * (-0.5 * t * t / (width * width)).exp() * w0[i] * w1[j]
                })
                .collect();
            for r0 in &e0 {
                for r1 in &e1 {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for i in 0..x0.len() {
                        let mut row = Complex64::new(0.0, 0.0);
                        for j in 0..x1.len() {
                            row += windowed[i * x1.len() + j] * r1[j];
                        }
                        acc += row * r0[i];
                    }
                    out.push(acc / (2.0 * PI));
                }
            }
        }
    }
    out
}
