//! Uniform tensor grids, sampled fields and trapezoid quadrature.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::Complex64;

/// Uniform 1D grid `origin + i * spacing`, `0 <= i < count`.
///
/// Points are generated about the midpoint, `centre + (i - (count-1)/2) * spacing`,
/// so grids centred on zero are exactly antisymmetric.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisGrid {
    count: usize,
    centre: f64,
    spacing: f64,
}

impl AxisGrid {
    pub fn new(count: usize, origin: f64, spacing: f64) -> Result<Self> {
        if count < 2 {
            return Err(Error::InvalidGrid("axis needs at least two points"));
        }
        if !(spacing.is_finite() && spacing > 0.0) {
            return Err(Error::InvalidGrid("axis spacing must be positive and finite"));
        }
        if !origin.is_finite() {
            return Err(Error::InvalidGrid("axis origin must be finite"));
        }
        let centre = origin + Self::half_span(count) * spacing;
        Ok(Self { count, centre, spacing })
    }

    fn half_span(count: usize) -> f64 {
        0.5 * (count - 1) as f64
    }

    /// `count` points spanning `[-half_width, half_width]`.
    pub fn symmetric(half_width: f64, count: usize) -> Result<Self> {
        if !(half_width.is_finite() && half_width > 0.0) {
            return Err(Error::InvalidGrid("half width must be positive"));
        }
        if count < 2 {
            return Err(Error::InvalidGrid("axis needs at least two points"));
        }
        let spacing = 2.0 * half_width / (count - 1) as f64;
        Self::new(count, -half_width, spacing)?;
        Ok(Self { count, centre: 0.0, spacing })
    }

    /// Grid with midpoint `centre`; [`AxisGrid::centre`] returns it unchanged.
    pub fn centred(count: usize, centre: f64, spacing: f64) -> Result<Self> {
        Self::new(count, centre - Self::half_span(count) * spacing, spacing)?;
        Ok(Self { count, centre, spacing })
    }

    /// `count` points `-half_width + i * 2 half_width / count`, the periodic
    /// sampling of `[-half_width, half_width)`. For even `count` the point
    /// with index `count / 2` is exactly zero.
    pub fn periodic(half_width: f64, count: usize) -> Result<Self> {
        if !(half_width.is_finite() && half_width > 0.0) {
            return Err(Error::InvalidGrid("half width must be positive"));
        }
        if count < 2 {
            return Err(Error::InvalidGrid("axis needs at least two points"));
        }
        let spacing = 2.0 * half_width / count as f64;
        Ok(Self { count, centre: -0.5 * spacing, spacing })
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn origin(&self) -> f64 {
        self.point(0)
    }

    pub fn centre(&self) -> f64 {
        self.centre
    }

    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    #[inline]
    pub fn point(&self, i: usize) -> f64 {
        self.centre + (i as f64 - Self::half_span(self.count)) * self.spacing
    }

    pub fn last(&self) -> f64 {
        self.point(self.count - 1)
    }

    /// `(count - 1) * spacing`.
    pub fn length(&self) -> f64 {
        (self.count - 1) as f64 * self.spacing
    }

    /// Largest `|point|` on the axis.
    pub fn max_abs(&self) -> f64 {
        self.origin().abs().max(self.last().abs())
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.count).map(move |i| self.point(i))
    }

    /// Composite trapezoid weights.
    pub fn trapezoid_weights(&self) -> Vec<f64> {
        let mut w: Vec<f64> = (0..self.count).map(|_| self.spacing).collect();
        w[0] *= 0.5;
        w[self.count - 1] *= 0.5;
        w
    }
}

/// Complex samples on a 1D or 2D tensor grid, row-major (axis 0 slowest).
#[derive(Debug, Clone, PartialEq)]
pub struct SampledField {
    axes: Vec<AxisGrid>,
    values: Vec<Complex64>,
}

impl SampledField {
    pub fn new(axes: Vec<AxisGrid>, values: Vec<Complex64>) -> Result<Self> {
        if axes.is_empty() || axes.len() > 2 {
            return Err(Error::DimensionMismatch { expected: 2, found: axes.len() });
        }
        let expected: usize = axes.iter().map(AxisGrid::count).product();
        if values.len() != expected {
            return Err(Error::ShapeMismatch { expected, found: values.len() });
        }
        if let Some(index) = values.iter().position(|v| !(v.re.is_finite() && v.im.is_finite())) {
            return Err(Error::NonFinite { index });
        }
        Ok(Self { axes, values })
    }

    /// Samples `f` at every grid point; the closure receives the coordinates.
    pub fn from_fn<F>(axes: Vec<AxisGrid>, f: F) -> Result<Self>
    where
        F: Fn(&[f64]) -> Complex64,
    {
        let values = match axes.len() {
            1 => axes[0].points().map(|x| f(&[x])).collect(),
            2 => {
                let mut v = Vec::with_capacity(axes[0].count() * axes[1].count());
                for x0 in axes[0].points() {
                    for x1 in axes[1].points() {
                        v.push(f(&[x0, x1]));
                    }
                }
                v
            }
            n => return Err(Error::DimensionMismatch { expected: 2, found: n }),
        };
        Self::new(axes, values)
    }

    pub fn zeros(axes: Vec<AxisGrid>) -> Result<Self> {
        let n = axes.iter().map(AxisGrid::count).product();
        Self::new(axes, alloc::vec![Complex64::new(0.0, 0.0); n])
    }

    pub fn ndim(&self) -> usize {
        self.axes.len()
    }

    pub fn axes(&self) -> &[AxisGrid] {
        &self.axes
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Coordinates of the flat sample index `flat`.
    pub fn coords(&self, flat: usize) -> [f64; 2] {
        match self.axes.len() {
            1 => [self.axes[0].point(flat), 0.0],
            _ => {
                let n1 = self.axes[1].count();
                [self.axes[0].point(flat / n1), self.axes[1].point(flat % n1)]
            }
        }
    }

    pub fn same_grid(&self, other: &Self) -> bool {
        self.axes == other.axes
    }

    /// Applies `f` to every value, keeping the grid.
    pub fn map<F: Fn(Complex64) -> Complex64>(&self, f: F) -> Result<Self> {
        Self::new(self.axes.clone(), self.values.iter().map(|&v| f(v)).collect())
    }

    /// Pointwise `a * self + b * other`.
    pub fn lin_comb(&self, a: Complex64, other: &Self, b: Complex64) -> Result<Self> {
        if !self.same_grid(other) {
            return Err(Error::GridMismatch);
        }
        let values = self.values.iter().zip(&other.values).map(|(x, y)| a * x + b * y).collect();
        Self::new(self.axes.clone(), values)
    }

    /// `sqrt((f, f))`.
    pub fn l2_norm(&self) -> f64 {
        crate::math::sqrt(inner_product(self, self).map(|z| z.re).unwrap_or(0.0).max(0.0))
    }
}

/// Tensor-product trapezoid weights for an arbitrary list of axes.
pub fn tensor_weights(axes: &[AxisGrid]) -> Vec<f64> {
    let mut out = alloc::vec![1.0];
    for axis in axes {
        let w = axis.trapezoid_weights();
        out = out.iter().flat_map(|&a| w.iter().map(move |&b| a * b)).collect();
    }
    out
}

/// Trapezoid weights of the field's grid, in value order.
pub fn quadrature_weights(field: &SampledField) -> Vec<f64> {
    tensor_weights(field.axes())
}

/// `(f, g) = sum_i w_i f_i conj(g_i)`.
pub fn inner_product(f: &SampledField, g: &SampledField) -> Result<Complex64> {
    if !f.same_grid(g) {
        return Err(Error::GridMismatch);
    }
    let w = quadrature_weights(f);
    Ok(f
        .values
        .iter()
        .zip(&g.values)
        .zip(&w)
        .map(|((a, b), &w)| a * b.conj() * w)
        .sum())
}

/// Bilinear pairing `<f, g> = sum_i w_i f_i g_i` (no conjugation).
pub fn pairing(f: &SampledField, g: &SampledField) -> Result<Complex64> {
    if !f.same_grid(g) {
        return Err(Error::GridMismatch);
    }
    let w = quadrature_weights(f);
    Ok(f
        .values
        .iter()
        .zip(&g.values)
        .zip(&w)
        .map(|((a, b), &w)| a * b * w)
        .sum())
}

/// Relative L2 distance `||a - b|| / ||b||` with trapezoid weights.
pub fn rel_l2_error(a: &SampledField, b: &SampledField) -> Result<f64> {
    let diff = a.lin_comb(Complex64::new(1.0, 0.0), b, Complex64::new(-1.0, 0.0))?;
    let den = b.l2_norm();
    let num = diff.l2_norm();
    Ok(if den == 0.0 { num } else { num / den })
}
