//! One-dimensional analysis and synthesis windows with exact off-grid
//! evaluation.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::grid::AxisGrid;
use crate::math::{cis, exp, floor, sqrt};
use crate::Complex64;

/// Natural cubic spline through complex samples on a uniform axis, zero
/// outside the axis.
#[derive(Debug, Clone, PartialEq)]
pub struct CubicSpline {
    axis: AxisGrid,
    values: Vec<Complex64>,
    second: Vec<Complex64>,
}

impl CubicSpline {
    pub fn new(axis: AxisGrid, values: Vec<Complex64>) -> Result<Self> {
        let n = axis.count();
        if values.len() != n {
            return Err(Error::ShapeMismatch { expected: n, found: values.len() });
        }
        if let Some(index) = values.iter().position(|v| !(v.re.is_finite() && v.im.is_finite())) {
            return Err(Error::NonFinite { index });
        }
        let h = axis.spacing();
        let mut second = vec![Complex64::new(0.0, 0.0); n];
        if n > 2 {
            // Thomas solve of m_{i-1} + 4 m_i + m_{i+1} = 6 (y_{i+1} - 2 y_i + y_{i-1}) / h^2.
            let inner = n - 2;
            let mut diag = vec![4.0; inner];
            let mut rhs: Vec<Complex64> = (1..n - 1)
                .map(|i| (values[i + 1] - values[i] * 2.0 + values[i - 1]) * (6.0 / (h * h)))
                .collect();
            for i in 1..inner {
                let factor = 1.0 / diag[i - 1];
                diag[i] -= factor;
                let prev = rhs[i - 1];
                rhs[i] -= prev * factor;
            }
            second[inner] = rhs[inner - 1] / diag[inner - 1];
            for i in (0..inner - 1).rev() {
                second[i + 1] = (rhs[i] - second[i + 2]) / diag[i];
            }
        }
        Ok(Self { axis, values, second })
    }

    pub fn axis(&self) -> &AxisGrid {
        &self.axis
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn eval(&self, t: f64) -> Complex64 {
        let lo = self.axis.origin();
        let hi = self.axis.last();
        if !(t >= lo && t <= hi) {
            return Complex64::new(0.0, 0.0);
        }
        let h = self.axis.spacing();
        let n = self.axis.count();
        let i = (floor((t - lo) / h) as usize).min(n - 2);
        let u = (t - self.axis.point(i)) / h;
        let v = 1.0 - u;
        self.values[i] * v
            + self.values[i + 1] * u
            + (self.second[i] * (v * v * v - v) + self.second[i + 1] * (u * u * u - u)) * (h * h / 6.0)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum WindowShape {
    /// `exp(-(t - center)^2 / (2 width^2))`.
    Gaussian { center: f64, width: f64 },
    /// `H_m(t / width) exp(-t^2 / (2 width^2))` with physicists' Hermite `H_m`.
    Hermite { order: u32, width: f64 },
    Tabulated(CubicSpline),
}

/// A window `psi` in `S(R)`, optionally carrying a complex scale factor.
#[derive(Debug, Clone, PartialEq)]
pub struct Window {
    shape: WindowShape,
    scale: Complex64,
}

/// Physicists' Hermite polynomial `H_m(t)`.
pub fn hermite_poly(order: u32, t: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, 2.0 * t);
    if order == 0 {
        return prev;
    }
    for k in 1..order {
        let next = 2.0 * t * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

// 4-point Gauss-Legendre on [-1, 1].
const GL_NODES: [f64; 4] = [
    -0.861_136_311_594_052_6,
    -0.339_981_043_584_856_3,
    0.339_981_043_584_856_3,
    0.861_136_311_594_052_6,
];
const GL_WEIGHTS: [f64; 4] = [
    0.347_854_845_137_453_9,
    0.652_145_154_862_546_1,
    0.652_145_154_862_546_1,
    0.347_854_845_137_453_9,
];

fn integrate<F: Fn(f64) -> Complex64>(lo: f64, hi: f64, panels: usize, f: F) -> Complex64 {
    let h = (hi - lo) / panels as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for p in 0..panels {
        let mid = lo + (p as f64 + 0.5) * h;
        for (x, w) in GL_NODES.iter().zip(&GL_WEIGHTS) {
            acc += f(mid + 0.5 * h * x) * (0.5 * h * w);
        }
    }
    acc
}

impl Window {
    pub fn gaussian(center: f64, width: f64) -> Result<Self> {
        if !(width.is_finite() && width > 0.0 && center.is_finite()) {
            return Err(Error::InvalidArgument("gaussian window needs finite center and positive width"));
        }
        Ok(Self { shape: WindowShape::Gaussian { center, width }, scale: Complex64::new(1.0, 0.0) })
    }

    pub fn hermite(order: u32, width: f64) -> Result<Self> {
        if !(width.is_finite() && width > 0.0) {
            return Err(Error::InvalidArgument("hermite window needs positive width"));
        }
        if order > 16 {
            return Err(Error::InvalidArgument("hermite window order above 16"));
        }
        Ok(Self { shape: WindowShape::Hermite { order, width }, scale: Complex64::new(1.0, 0.0) })
    }

    pub fn tabulated(axis: AxisGrid, values: Vec<Complex64>) -> Result<Self> {
        Ok(Self {
            shape: WindowShape::Tabulated(CubicSpline::new(axis, values)?),
            scale: Complex64::new(1.0, 0.0),
        })
    }

    /// `c * psi`.
    pub fn scaled(&self, c: Complex64) -> Self {
        Self { shape: self.shape.clone(), scale: self.scale * c }
    }

    pub fn shape(&self) -> &WindowShape {
        &self.shape
    }

    pub fn scale(&self) -> Complex64 {
        self.scale
    }

    /// Exact value `psi(t)`.
    pub fn eval(&self, t: f64) -> Complex64 {
        let base = match &self.shape {
            WindowShape::Gaussian { center, width } => {
                let s = (t - center) / width;
                Complex64::new(exp(-0.5 * s * s), 0.0)
            }
            WindowShape::Hermite { order, width } => {
                let s = t / width;
                Complex64::new(hermite_poly(*order, s) * exp(-0.5 * s * s), 0.0)
            }
            WindowShape::Tabulated(spline) => spline.eval(t),
        };
        base * self.scale
    }

    /// Unitary Fourier transform `(2 pi)^{-1/2} int psi(t) e^{-i t xi} dt`.
    pub fn fourier(&self, xi: f64) -> Complex64 {
        let base = match &self.shape {
            WindowShape::Gaussian { center, width } => {
                let s = width * xi;
                cis(-center * xi) * (width * exp(-0.5 * s * s))
            }
            WindowShape::Hermite { order, width } => {
                let s = width * xi;
                // FT of h_m is (-i)^m h_m.
                let phase = match order % 4 {
                    0 => Complex64::new(1.0, 0.0),
                    1 => Complex64::new(0.0, -1.0),
                    2 => Complex64::new(-1.0, 0.0),
                    _ => Complex64::new(0.0, 1.0),
                };
                phase * (width * hermite_poly(*order, s) * exp(-0.5 * s * s))
            }
            WindowShape::Tabulated(spline) => {
                let (lo, hi) = (spline.axis().origin(), spline.axis().last());
                let panels = (spline.axis().count() - 1) * 2;
                integrate(lo, hi, panels, |t| spline.eval(t) * cis(-t * xi))
                    / sqrt(2.0 * crate::math::PI)
            }
        };
        base * self.scale
    }

    /// Interval outside of which the window is below roundoff.
    pub fn support_interval(&self) -> (f64, f64) {
        let (lo, hi, _) = self.support();
        (lo, hi)
    }

    /// Frequency beyond which `|psi^(xi)|` is negligible.
    pub fn frequency_reach(&self) -> f64 {
        match &self.shape {
            WindowShape::Gaussian { width, .. } => 9.0 / width,
            WindowShape::Hermite { order, width } => (sqrt(2.0 * *order as f64 + 1.0) + 9.0) / width,
            WindowShape::Tabulated(spline) => crate::math::PI / spline.axis().spacing(),
        }
    }

    /// Interval outside of which the window is below roundoff, plus a
    /// characteristic length used for quadrature panel sizes.
    fn support(&self) -> (f64, f64, f64) {
        match &self.shape {
            WindowShape::Gaussian { center, width } => {
                (center - 14.0 * width, center + 14.0 * width, *width)
            }
            WindowShape::Hermite { order, width } => {
                let reach = (sqrt(2.0 * *order as f64 + 1.0) + 14.0) * width;
                (-reach, reach, *width / (1.0 + sqrt(*order as f64)))
            }
            WindowShape::Tabulated(spline) => {
                let a = spline.axis();
                (a.origin(), a.last(), a.spacing() * 2.0)
            }
        }
    }

    /// Effective half-width used for default offset ranges.
    pub fn effective_width(&self) -> f64 {
        match &self.shape {
            WindowShape::Gaussian { width, .. } => *width,
            WindowShape::Hermite { order, width } => width * sqrt(2.0 * *order as f64 + 1.0),
            WindowShape::Tabulated(spline) => spline.axis().max_abs() / 6.0,
        }
    }

    /// `(self, other) = int self(t) conj(other(t)) dt`.
    pub fn inner(&self, other: &Window) -> Complex64 {
        let (a0, a1, ha) = self.support();
        let (b0, b1, hb) = other.support();
        let lo = a0.max(b0);
        let hi = a1.min(b1);
        if hi <= lo {
            return Complex64::new(0.0, 0.0);
        }
        let panel = 0.25 * ha.min(hb);
        let panels = (((hi - lo) / panel) as usize).clamp(16, 1 << 16);
        integrate(lo, hi, panels, |t| self.eval(t) * other.eval(t).conj())
    }

    pub fn l2_norm(&self) -> f64 {
        sqrt(self.inner(self).re.max(0.0))
    }
}
