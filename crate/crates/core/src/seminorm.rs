//! Grid estimators of Schwartz seminorms on `R^n` and on the directional
//! parameter space, and continuity-ratio tables for the analysis and
//! synthesis maps.

use alloc::vec::Vec;

use crate::directional::{DirectionalGrid, DirectionalSpectrum};
use crate::dstfrft::{analyze_fast, synthesize};
use crate::error::{Error, Result};
use crate::fd::{differentiate, periodic_second_difference};
use crate::grid::{AxisGrid, SampledField};
use crate::math::{hypot, powi, sqrt, PI};
use crate::order::FractionalOrder;
use crate::window::Window;
use crate::Complex64;

/// Largest derivative order on `R^n`.
pub const MAX_RN_ORDER: u32 = 4;
/// Smallest direction count for the angular stencil.
pub const MIN_DIRECTIONS: usize = 8;

/// Parameters of the estimated seminorm.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeminormIndices {
    /// `rho_m(f) = sup_{x, |beta| <= m} (1 + |x|)^m |D^beta f(x)|`.
    Rn { m: u32 },
    /// `sup (1 + b^2)^{r/2} (1 + |a|^2)^{s/2} |D_a^l D_b^m Delta_u^k Phi|`.
    Y2n { s: u32, r: u32, l: [u32; 2], m: u32, k: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeminormReport {
    pub indices: SeminormIndices,
    pub value: f64,
    /// Number of grid points the supremum ranged over.
    pub points: usize,
}

pub fn seminorm_rn(f: &SampledField, m: u32) -> Result<SeminormReport> {
    if m > MAX_RN_ORDER {
        return Err(Error::InvalidArgument("seminorm order above 4"));
    }
    let axes = f.axes();
    let dims: Vec<usize> = axes.iter().map(AxisGrid::count).collect();
    let weight: Vec<f64> = (0..f.len())
        .map(|i| {
            let x = f.coords(i);
            let r = if f.ndim() == 1 { x[0].abs() } else { hypot(x[0], x[1]) };
            powi(1.0 + r, m as i32)
        })
        .collect();
    let mut best = 0.0f64;
    for beta in multi_indices(f.ndim(), m) {
        let mut d = f.values().to_vec();
        for (axis, &order) in beta.iter().enumerate() {
            d = differentiate(&d, &dims, axis, axes[axis].spacing(), order as usize)?;
        }
        for (v, w) in d.iter().zip(&weight) {
            best = best.max(v.norm() * w);
        }
    }
    Ok(SeminormReport { indices: SeminormIndices::Rn { m }, value: best, points: f.len() })
}

/// All `beta` with `|beta| <= m` in `ndim` variables.
fn multi_indices(ndim: usize, m: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    match ndim {
        1 => (0..=m).for_each(|a| out.push(alloc::vec![a])),
        _ => {
            for a in 0..=m {
                for b in 0..=(m - a) {
                    out.push(alloc::vec![a, b]);
                }
            }
        }
    }
    out
}

/// `rho_m` of `psi` sampled on `axis`.
pub fn window_seminorm(window: &Window, axis: AxisGrid, m: u32) -> Result<SeminormReport> {
    let field = SampledField::from_fn(alloc::vec![axis], |x| window.eval(x[0]))?;
    seminorm_rn(&field, m)
}

pub fn seminorm_y2n(phi: &DirectionalSpectrum, s: u32, r: u32, l: [u32; 2], m: u32, k: u32) -> Result<SeminormReport> {
    if k > 2 || m > 2 || l[0] + l[1] > 2 {
        return Err(Error::InvalidArgument("seminorm indices need k <= 2, m <= 2, |l| <= 2"));
    }
    let grid = phi.grid();
    if grid.direction_count() < MIN_DIRECTIONS {
        return Err(Error::TooFewDirections { found: grid.direction_count(), needed: MIN_DIRECTIONS });
    }
    let (b, a) = (grid.b_axis(), grid.a_axes());
    let dims = [grid.direction_count(), b.count(), a[0].count(), a[1].count()];
    let mut d = phi.values().to_vec();
    let dtheta = 2.0 * PI / dims[0] as f64;
    for _ in 0..k {
        d = periodic_second_difference(&d, &dims, 0, dtheta);
    }
    d = differentiate(&d, &dims, 1, b.spacing(), m as usize)?;
    d = differentiate(&d, &dims, 2, a[0].spacing(), l[0] as usize)?;
    d = differentiate(&d, &dims, 3, a[1].spacing(), l[1] as usize)?;
    let wb: Vec<f64> = b.points().map(|x| powi(sqrt(1.0 + x * x), r as i32)).collect();
    let wa: Vec<f64> = a[0]
        .points()
        .flat_map(|x| a[1].points().map(move |y| powi(sqrt(1.0 + x * x + y * y), s as i32)))
        .collect();
    let slab = grid.slab_len();
    let mut best = 0.0f64;
    for (i, v) in d.iter().enumerate() {
        let ib = (i / slab) % dims[1];
        best = best.max(v.norm() * wb[ib] * wa[i % slab]);
    }
    Ok(SeminormReport { indices: SeminormIndices::Y2n { s, r, l, m, k }, value: best, points: d.len() })
}

/// Target seminorm on the directional space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Y2nIndices {
    pub s: u32,
    pub r: u32,
    pub l: [u32; 2],
    pub m: u32,
    pub k: u32,
}

impl Y2nIndices {
    pub const ZERO: Self = Self { s: 0, r: 0, l: [0, 0], m: 0, k: 0 };

    pub fn of(&self, phi: &DirectionalSpectrum) -> Result<SeminormReport> {
        seminorm_y2n(phi, self.s, self.r, self.l, self.m, self.k)
    }
}

/// One tabulated ratio.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioRow {
    pub numerator: f64,
    pub denominator: [f64; 2],
    pub ratio: f64,
}

impl RatioRow {
    fn new(numerator: f64, denominator: [f64; 2]) -> Self {
        let ratio = if numerator == 0.0 { 0.0 } else { numerator / (denominator[0] * denominator[1]) };
        Self { numerator, denominator, ratio }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RatioTable {
    pub rows: Vec<RatioRow>,
}

impl RatioTable {
    pub fn max(&self) -> f64 {
        self.rows.iter().map(|r| r.ratio).fold(0.0, f64::max)
    }

    pub fn min(&self) -> f64 {
        self.rows.iter().map(|r| r.ratio).fold(f64::INFINITY, f64::min)
    }
}

/// Fixed grids and indices for continuity-ratio tables.
#[derive(Debug, Clone)]
pub struct ContinuityStudy {
    pub order: FractionalOrder,
    pub grid: DirectionalGrid,
    /// Sampling axis for window seminorms.
    pub window_axis: AxisGrid,
    pub target: Y2nIndices,
    /// Order of the seminorm applied to fields.
    pub v: u32,
    /// Order of the seminorm applied to windows.
    pub tau: u32,
}

impl ContinuityStudy {
    /// `rho(DS_psi f) / (rho_v(f) rho_tau(psi))`.
    pub fn analysis_row(&self, f: &SampledField, psi: &Window) -> Result<RatioRow> {
        let d = analyze_fast(f, psi, &self.order, &self.grid)?;
        let num = self.target.of(&d)?.value;
        let rf = seminorm_rn(f, self.v)?.value;
        let rp = window_seminorm(psi, self.window_axis, self.tau)?.value;
        Ok(RatioRow::new(num, [rf, rp]))
    }

    /// `rho_v((DS_psi)^* Phi) / (rho(Phi) rho_tau(psi))`, synthesizing onto
    /// `out`.
    pub fn synthesis_row(&self, phi: &DirectionalSpectrum, psi: &Window, out: &[AxisGrid]) -> Result<RatioRow> {
        let back = synthesize(phi, psi, &self.order, out)?;
        let num = seminorm_rn(&back, self.v)?.value;
        let rphi = self.target.of(phi)?.value;
        let rp = window_seminorm(psi, self.window_axis, self.tau)?.value;
        Ok(RatioRow::new(num, [rphi, rp]))
    }

    pub fn analysis_table(&self, cases: &[(SampledField, Window)]) -> Result<RatioTable> {
        let rows = cases.iter().map(|(f, w)| self.analysis_row(f, w)).collect::<Result<Vec<_>>>()?;
        Ok(RatioTable { rows })
    }

    /// Synthesis ratios with `Phi = DS_psi f` for each case.
    pub fn synthesis_table(&self, cases: &[(SampledField, Window)]) -> Result<RatioTable> {
        let rows = cases
            .iter()
            .map(|(f, w)| {
                let d = analyze_fast(f, w, &self.order, &self.grid)?;
                self.synthesis_row(&d, w, f.axes())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RatioTable { rows })
    }
}

/// Samples `f(theta, b, a)` scaled by `c`; convenience for constant probes.
pub fn constant_spectrum(grid: &DirectionalGrid, order: &FractionalOrder, c: Complex64) -> Result<DirectionalSpectrum> {
    DirectionalSpectrum::from_fn(grid.clone(), order.clone(), crate::directional::AnalysisPath::Direct, |_, _, _, _| c)
}
