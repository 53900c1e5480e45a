//! The parameter space `S^1 x R x R^2` of directions, offsets and
//! fractional frequencies, and spectra sampled on it.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::grid::{tensor_weights, AxisGrid};
use crate::math::{cos, hypot, sin, PI};
use crate::order::FractionalOrder;
use crate::window::Window;
use crate::Complex64;

/// Discretization of `S^1 x R x R^2`: `K` uniform directions
/// `u_j = (cos 2 pi j/K, sin 2 pi j/K)` with weight `1/K`, an offset axis
/// and a tensor grid of fractional frequencies.
#[derive(Debug, Clone, PartialEq)]
pub struct DirectionalGrid {
    directions: Vec<[f64; 2]>,
    b_axis: AxisGrid,
    a_axes: [AxisGrid; 2],
}

impl DirectionalGrid {
    pub fn new(direction_count: usize, b_axis: AxisGrid, a_axes: [AxisGrid; 2]) -> Result<Self> {
        if direction_count == 0 {
            return Err(Error::InvalidArgument("at least one direction is required"));
        }
        let directions = (0..direction_count)
            .map(|j| {
                let theta = 2.0 * PI * j as f64 / direction_count as f64;
                [cos(theta), sin(theta)]
            })
            .collect();
        Ok(Self { directions, b_axis, a_axes })
    }

    /// Offsets span `+-(R + 6 sigma)` where `R` is the largest `|x|` on the
    /// spatial grid and `sigma` the window width; the frequency grid mirrors
    /// the spatial grid.
    pub fn with_defaults(
        x_axes: &[AxisGrid],
        window: &Window,
        direction_count: usize,
        b_count: usize,
    ) -> Result<Self> {
        if x_axes.len() != 2 {
            return Err(Error::DimensionMismatch { expected: 2, found: x_axes.len() });
        }
        let half = default_b_half_width(x_axes, window);
        Self::new(direction_count, AxisGrid::symmetric(half, b_count)?, [x_axes[0], x_axes[1]])
    }

    pub fn direction_count(&self) -> usize {
        self.directions.len()
    }

    pub fn directions(&self) -> &[[f64; 2]] {
        &self.directions
    }

    pub fn angle(&self, j: usize) -> f64 {
        2.0 * PI * j as f64 / self.directions.len() as f64
    }

    /// Normalized sphere measure of one direction.
    pub fn sphere_weight(&self) -> f64 {
        1.0 / self.directions.len() as f64
    }

    pub fn b_axis(&self) -> &AxisGrid {
        &self.b_axis
    }

    pub fn a_axes(&self) -> &[AxisGrid; 2] {
        &self.a_axes
    }

    /// Number of `a` points per `(u, b)` slab.
    pub fn slab_len(&self) -> usize {
        self.a_axes[0].count() * self.a_axes[1].count()
    }

    pub fn slab_count(&self) -> usize {
        self.directions.len() * self.b_axis.count()
    }

    pub fn len(&self) -> usize {
        self.slab_count() * self.slab_len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn index(&self, j: usize, ib: usize, ia0: usize, ia1: usize) -> usize {
        ((j * self.b_axis.count() + ib) * self.a_axes[0].count() + ia0) * self.a_axes[1].count() + ia1
    }
}

/// `sqrt(max|x_0|^2 + max|x_1|^2) + 6 sigma`.
pub fn default_b_half_width(x_axes: &[AxisGrid], window: &Window) -> f64 {
    hypot(x_axes[0].max_abs(), x_axes[1].max_abs()) + 6.0 * window.effective_width()
}

/// Which computation produced a [`DirectionalSpectrum`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnalysisPath {
    Direct,
    WindowedFrft,
    FtSlice,
}

impl AnalysisPath {
    pub fn name(&self) -> &'static str {
        match self {
            AnalysisPath::Direct => "direct",
            AnalysisPath::WindowedFrft => "windowed_frft",
            AnalysisPath::FtSlice => "ft_slice",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "direct" => Some(AnalysisPath::Direct),
            "windowed_frft" => Some(AnalysisPath::WindowedFrft),
            "ft_slice" => Some(AnalysisPath::FtSlice),
            _ => None,
        }
    }
}

/// Values `Phi(u_j, b, a)` on a [`DirectionalGrid`], indexed
/// `(j, b, a_0, a_1)` row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DirectionalSpectrum {
    grid: DirectionalGrid,
    values: Vec<Complex64>,
    order: FractionalOrder,
    path: AnalysisPath,
}

impl DirectionalSpectrum {
    pub fn new(
        grid: DirectionalGrid,
        values: Vec<Complex64>,
        order: FractionalOrder,
        path: AnalysisPath,
    ) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::ShapeMismatch { expected: grid.len(), found: values.len() });
        }
        if let Some(index) = values.iter().position(|v| !(v.re.is_finite() && v.im.is_finite())) {
            return Err(Error::NonFinite { index });
        }
        if order.ndim() != 2 {
            return Err(Error::DimensionMismatch { expected: 2, found: order.ndim() });
        }
        Ok(Self { grid, values, order, path })
    }

    /// Samples `f(theta, u, b, a)` on the grid.
    pub fn from_fn<F>(grid: DirectionalGrid, order: FractionalOrder, path: AnalysisPath, f: F) -> Result<Self>
    where
        F: Fn(usize, [f64; 2], f64, [f64; 2]) -> Complex64,
    {
        let mut values = Vec::with_capacity(grid.len());
        for (j, u) in grid.directions().iter().enumerate() {
            for b in grid.b_axis().points() {
                for a0 in grid.a_axes()[0].points() {
                    for a1 in grid.a_axes()[1].points() {
                        values.push(f(j, *u, b, [a0, a1]));
                    }
                }
            }
        }
        Self::new(grid, values, order, path)
    }

    pub fn grid(&self) -> &DirectionalGrid {
        &self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    pub fn order(&self) -> &FractionalOrder {
        &self.order
    }

    pub fn path(&self) -> AnalysisPath {
        self.path
    }

    /// `a`-values for direction `j`, offset index `ib`.
    pub fn slab(&self, j: usize, ib: usize) -> &[Complex64] {
        let m = self.grid.slab_len();
        let s = j * self.grid.b_axis().count() + ib;
        &self.values[s * m..(s + 1) * m]
    }

    /// Same grid and order, new values.
    pub fn with_values(&self, values: Vec<Complex64>) -> Result<Self> {
        Self::new(self.grid.clone(), values, self.order.clone(), self.path)
    }

    pub fn map<F: Fn(Complex64) -> Complex64>(&self, f: F) -> Result<Self> {
        self.with_values(self.values.iter().map(|&v| f(v)).collect())
    }

    pub fn l2_norm_sqr(&self) -> f64 {
        inner_product_y(self, self).map(|z| z.re).unwrap_or(0.0)
    }
}

/// `(F, G) = sum_j (1/K) sum_b sum_a w_b w_a F conj(G)`.
pub fn inner_product_y(f: &DirectionalSpectrum, g: &DirectionalSpectrum) -> Result<Complex64> {
    pair_y(f, g, true)
}

/// `sum_j (1/K) sum_b sum_a w_b w_a F G` (no conjugation).
pub fn pairing_y(f: &DirectionalSpectrum, g: &DirectionalSpectrum) -> Result<Complex64> {
    pair_y(f, g, false)
}

fn pair_y(f: &DirectionalSpectrum, g: &DirectionalSpectrum, conjugate: bool) -> Result<Complex64> {
    if f.grid != g.grid {
        return Err(Error::GridMismatch);
    }
    let grid = &f.grid;
    let wb = grid.b_axis.trapezoid_weights();
    let wa = tensor_weights(&grid.a_axes);
    let mut total = Complex64::new(0.0, 0.0);
    for j in 0..grid.direction_count() {
        let mut per_dir = Complex64::new(0.0, 0.0);
        for (ib, &w_b) in wb.iter().enumerate() {
            let (x, y) = (f.slab(j, ib), g.slab(j, ib));
            let mut slab = Complex64::new(0.0, 0.0);
            for ((a, b), &w) in x.iter().zip(y).zip(&wa) {
                slab += if conjugate { a * b.conj() } else { a * b } * w;
            }
            per_dir += slab * w_b;
        }
        total += per_dir;
    }
    Ok(total * grid.sphere_weight())
}
