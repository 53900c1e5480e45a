//! Fractional Fourier transform: quadrature oracle, chirp-z fast path,
//! separable n-dimensional driver, unitary Fourier transform and the
//! short-time fractional transform.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fft::ChirpZ;
use crate::grid::{tensor_weights, AxisGrid, SampledField};
use crate::math::{cis, sqrt, PI};
use crate::order::{AxisOrder, FractionalOrder};
use crate::window::Window;
use crate::Complex64;

/// How a quadrature sum against the chirp kernel is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrftPath {
    /// `O(N M)` literal trapezoid sum.
    Direct,
    /// Chirp modulation + Bluestein chirp-z + chirp demodulation.
    Fast,
}

/// One-dimensional transform
/// `out(xi) = A e^{i c xi^2/2} sum_k w_k f_k e^{i c x_k^2/2} e^{-i s x_k xi}`
/// covering both the FRFT (`A = C_alpha, c = cot, s = csc`) and the unitary
/// FT (`A = (2 pi)^{-1/2}, c = 0, s = 1`).
#[derive(Debug, Clone)]
pub struct ChirpTransform {
    input: AxisGrid,
    output: AxisGrid,
    amplitude: Complex64,
    chirp: f64,
    slope: f64,
    path: FrftPath,
    weights: Vec<f64>,
    pre: Vec<Complex64>,
    post: Vec<Complex64>,
    czt: Option<ChirpZ>,
}

impl ChirpTransform {
    pub fn new(
        input: AxisGrid,
        output: AxisGrid,
        amplitude: Complex64,
        chirp: f64,
        slope: f64,
        path: FrftPath,
    ) -> Result<Self> {
        let nyquist = PI / input.spacing();
        let required = slope.abs() * output.max_abs();
        if path == FrftPath::Fast && required > nyquist * (1.0 + 1e-9) {
            return Err(Error::Aliasing { required, nyquist });
        }
        Ok(Self::build(input, output, amplitude, chirp, slope, path))
    }

    /// Fast evaluation of the same quadrature sum without the band check;
    /// used where the sum itself, not a continuous transform, is wanted.
    pub(crate) fn quadrature(input: AxisGrid, output: AxisGrid, axis: &AxisOrder) -> Self {
        Self::build(input, output, axis.amplitude(), axis.cot(), axis.csc(), FrftPath::Fast)
    }

    fn build(
        input: AxisGrid,
        output: AxisGrid,
        amplitude: Complex64,
        chirp: f64,
        slope: f64,
        path: FrftPath,
    ) -> Self {
        let weights = input.trapezoid_weights();
        let (x0, xi0) = (input.origin(), output.origin());
        let (pre, post, czt) = match path {
            FrftPath::Direct => (Vec::new(), Vec::new(), None),
            FrftPath::Fast => {
                let pre = input
                    .points()
                    .zip(&weights)
                    .map(|(x, &w)| cis(0.5 * chirp * x * x - slope * (x - x0) * xi0) * w)
                    .collect();
                let post = output
                    .points()
                    .map(|xi| amplitude * cis(0.5 * chirp * xi * xi - slope * x0 * xi))
                    .collect();
                let phi = slope * input.spacing() * output.spacing();
                (pre, post, Some(ChirpZ::new(input.count(), output.count(), phi)))
            }
        };
        Self { input, output, amplitude, chirp, slope, path, weights, pre, post, czt }
    }

    /// Fractional transform of order `axis` between the two grids.
    pub fn fractional(
        input: AxisGrid,
        output: AxisGrid,
        axis: &AxisOrder,
        path: FrftPath,
    ) -> Result<Self> {
        Self::new(input, output, axis.amplitude(), axis.cot(), axis.csc(), path)
    }

    /// Unitary Fourier transform (`sign = -1`) or its inverse (`sign = +1`).
    pub fn fourier(input: AxisGrid, output: AxisGrid, sign: f64, path: FrftPath) -> Result<Self> {
        Self::new(input, output, Complex64::new(1.0 / sqrt(2.0 * PI), 0.0), 0.0, -sign, path)
    }

    pub fn input(&self) -> &AxisGrid {
        &self.input
    }

    pub fn output(&self) -> &AxisGrid {
        &self.output
    }

    pub fn path(&self) -> FrftPath {
        self.path
    }

    /// Transforms one line of samples.
    pub fn apply(&self, f: &[Complex64], out: &mut [Complex64]) {
        debug_assert_eq!(f.len(), self.input.count());
        debug_assert_eq!(out.len(), self.output.count());
        match &self.czt {
            Some(czt) => {
                let chirped: Vec<Complex64> =
                    f.iter().zip(&self.pre).map(|(a, b)| a * b).collect();
                czt.apply(&chirped, out);
                for (o, p) in out.iter_mut().zip(&self.post) {
                    *o *= p;
                }
            }
            None => {
                for (m, o) in out.iter_mut().enumerate() {
                    let xi = self.output.point(m);
                    let mut acc = Complex64::new(0.0, 0.0);
                    for (k, (v, &wk)) in f.iter().zip(&self.weights).enumerate() {
                        let x = self.input.point(k);
                        let phase = 0.5 * (x * x + xi * xi) * self.chirp - x * xi * self.slope;
                        acc += v * cis(phase) * wk;
                    }
                    *o = acc * self.amplitude;
                }
            }
        }
    }
}

/// Separable transform over a 1D or 2D grid: one [`ChirpTransform`] per axis.
#[derive(Debug, Clone)]
pub struct SeparablePlan {
    axes: Vec<ChirpTransform>,
}

impl SeparablePlan {
    pub fn new(axes: Vec<ChirpTransform>) -> Result<Self> {
        if axes.is_empty() || axes.len() > 2 {
            return Err(Error::DimensionMismatch { expected: 2, found: axes.len() });
        }
        Ok(Self { axes })
    }

    /// FRFT plan from `input` to `output` grids.
    pub fn fractional(
        input: &[AxisGrid],
        order: &FractionalOrder,
        output: &[AxisGrid],
        path: FrftPath,
    ) -> Result<Self> {
        let n = order.ndim();
        if input.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: input.len() });
        }
        if output.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: output.len() });
        }
        let axes = order
            .axes()
            .iter()
            .zip(input.iter().zip(output))
            .map(|(ax, (i, o))| ChirpTransform::fractional(*i, *o, ax, path))
            .collect::<Result<Vec<_>>>()?;
        Self::new(axes)
    }

    /// Unchecked fast plan of the quadrature sum (see [`ChirpTransform::quadrature`]).
    pub(crate) fn quadrature(input: &[AxisGrid], order: &FractionalOrder, output: &[AxisGrid]) -> Result<Self> {
        let n = order.ndim();
        if input.len() != n || output.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: input.len().min(output.len()) });
        }
        let axes = order
            .axes()
            .iter()
            .zip(input.iter().zip(output))
            .map(|(ax, (i, o))| ChirpTransform::quadrature(*i, *o, ax))
            .collect();
        Self::new(axes)
    }

    pub fn input_axes(&self) -> Vec<AxisGrid> {
        self.axes.iter().map(|a| *a.input()).collect()
    }

    pub fn output_axes(&self) -> Vec<AxisGrid> {
        self.axes.iter().map(|a| *a.output()).collect()
    }

    pub fn output_len(&self) -> usize {
        self.axes.iter().map(|a| a.output().count()).product()
    }

    /// Transforms row-major `values` on the input grid.
    pub fn apply(&self, values: &[Complex64]) -> Vec<Complex64> {
        let zero = Complex64::new(0.0, 0.0);
        match self.axes.as_slice() {
            [t] => {
                let mut out = vec![zero; t.output().count()];
                t.apply(values, &mut out);
                out
            }
            [t0, t1] => {
                let (n0, m0) = (t0.input().count(), t0.output().count());
                let (n1, m1) = (t1.input().count(), t1.output().count());
                // Rows first.
                let mut stage = vec![zero; n0 * m1];
                for r in 0..n0 {
                    t1.apply(&values[r * n1..(r + 1) * n1], &mut stage[r * m1..(r + 1) * m1]);
                }
                let mut out = vec![zero; m0 * m1];
                let mut col = vec![zero; n0];
                let mut res = vec![zero; m0];
                for c in 0..m1 {
                    for r in 0..n0 {
                        col[r] = stage[r * m1 + c];
                    }
                    t0.apply(&col, &mut res);
                    for r in 0..m0 {
                        out[r * m1 + c] = res[r];
                    }
                }
                out
            }
            _ => unreachable!("plan holds one or two axes"),
        }
    }
}

fn require_ndim(f: &SampledField, n: usize) -> Result<()> {
    if f.ndim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: f.ndim() });
    }
    Ok(())
}

fn frft_1d(f: &SampledField, alpha: f64, out: &AxisGrid, path: FrftPath) -> Result<SampledField> {
    require_ndim(f, 1)?;
    let order = FractionalOrder::new(&[alpha])?;
    let plan = ChirpTransform::fractional(f.axes()[0], *out, &order.axes()[0], path)?;
    let mut values = vec![Complex64::new(0.0, 0.0); out.count()];
    plan.apply(f.values(), &mut values);
    SampledField::new(vec![*out], values)
}

/// `F_alpha f(xi) = int f(x) K_alpha(x, xi) dx` by trapezoid quadrature at
/// every output point.
pub fn frft_1d_direct(f: &SampledField, alpha: f64, out: &AxisGrid) -> Result<SampledField> {
    frft_1d(f, alpha, out, FrftPath::Direct)
}

/// Same quadrature sum as [`frft_1d_direct`], evaluated through
/// `sqrt(2 pi) C e^{i xi^2 cot/2} FT[f e^{i x^2 cot/2}](xi csc)` with a
/// chirp-z transform for the scaled frequencies.
pub fn frft_1d_fast(f: &SampledField, alpha: f64, out: &AxisGrid) -> Result<SampledField> {
    frft_1d(f, alpha, out, FrftPath::Fast)
}

/// Separable FRFT `prod_k K_{alpha_k}` of a 1D or 2D field. `out` defaults
/// to the input grid.
pub fn frft_nd(
    f: &SampledField,
    order: &FractionalOrder,
    out: Option<&[AxisGrid]>,
    path: FrftPath,
) -> Result<SampledField> {
    require_ndim(f, order.ndim())?;
    let out_axes = out.map(<[AxisGrid]>::to_vec).unwrap_or_else(|| f.axes().to_vec());
    let plan = SeparablePlan::fractional(f.axes(), order, &out_axes, path)?;
    SampledField::new(out_axes, plan.apply(f.values()))
}

/// Unitary Fourier transform `(2 pi)^{-n/2} int f(x) e^{-i x.xi} dx` on the
/// requested frequency grid (default: the input grid).
pub fn fourier_transform(f: &SampledField, out: Option<&[AxisGrid]>) -> Result<SampledField> {
    let out_axes = out.map(<[AxisGrid]>::to_vec).unwrap_or_else(|| f.axes().to_vec());
    if out_axes.len() != f.ndim() {
        return Err(Error::DimensionMismatch { expected: f.ndim(), found: out_axes.len() });
    }
    let plans = f
        .axes()
        .iter()
        .zip(&out_axes)
        .map(|(i, o)| ChirpTransform::fourier(*i, *o, -1.0, FrftPath::Fast))
        .collect::<Result<Vec<_>>>()?;
    let plan = SeparablePlan::new(plans)?;
    SampledField::new(out_axes, plan.apply(f.values()))
}

/// Values of `S_psi^alpha f(b, a)` on `b_axes x a_axes`, stored with the
/// `b` multi-index slowest.
#[derive(Debug, Clone, PartialEq)]
pub struct ShortTimeSpectrum {
    pub b_axes: Vec<AxisGrid>,
    pub a_axes: Vec<AxisGrid>,
    pub values: Vec<Complex64>,
}

pub(crate) fn multi_points(axes: &[AxisGrid]) -> Vec<[f64; 2]> {
    match axes {
        [a] => a.points().map(|x| [x, 0.0]).collect(),
        [a, b] => a.points().flat_map(|x| b.points().map(move |y| [x, y])).collect(),
        _ => Vec::new(),
    }
}

/// Tensor window `prod_k psi(x_k - b_k)` evaluated on the field grid.
fn tensor_window(window: &Window, axes: &[AxisGrid], b: &[f64; 2]) -> Vec<Complex64> {
    let per_axis: Vec<Vec<Complex64>> = axes
        .iter()
        .enumerate()
        .map(|(k, ax)| ax.points().map(|x| window.eval(x - b[k])).collect())
        .collect();
    match per_axis.as_slice() {
        [w] => w.clone(),
        [w0, w1] => w0.iter().flat_map(|a| w1.iter().map(move |b| a * b)).collect(),
        _ => Vec::new(),
    }
}

/// `S_psi^alpha f(b, a) = int f(x) conj(psi)(x - b) K_alpha(x, a) dx` with
/// the n-dimensional window taken as the tensor power of `window`.
pub fn stfrft(
    f: &SampledField,
    window: &Window,
    order: &FractionalOrder,
    b_axes: &[AxisGrid],
    a_axes: &[AxisGrid],
) -> Result<ShortTimeSpectrum> {
    require_ndim(f, order.ndim())?;
    if b_axes.len() != f.ndim() {
        return Err(Error::DimensionMismatch { expected: f.ndim(), found: b_axes.len() });
    }
    let plan = SeparablePlan::fractional(f.axes(), order, a_axes, FrftPath::Fast)?;
    let bs = multi_points(b_axes);
    let slabs = crate::par::map_indices(bs.len(), |i| {
        let win = tensor_window(window, f.axes(), &bs[i]);
        let g: Vec<Complex64> = f.values().iter().zip(&win).map(|(v, w)| v * w.conj()).collect();
        plan.apply(&g)
    });
    Ok(ShortTimeSpectrum { b_axes: b_axes.to_vec(), a_axes: a_axes.to_vec(), values: slabs.concat() })
}

/// `(1/(eta, psi)^n) int int S(b, a) eta(w - b) K_{-alpha}(w, a) db da`.
pub fn stfrft_reconstruct(
    spectrum: &ShortTimeSpectrum,
    analysis: &Window,
    synthesis: &Window,
    order: &FractionalOrder,
    out: &[AxisGrid],
) -> Result<SampledField> {
    let n = order.ndim();
    if spectrum.b_axes.len() != n || out.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: out.len() });
    }
    let norm = synthesis.inner(analysis);
    let norm_n = (0..n).fold(Complex64::new(1.0, 0.0), |acc, _| acc * norm);
    if norm_n.norm() < 1e-8 {
        return Err(Error::NearOrthogonalWindows { inner: norm_n.norm() });
    }
    let plan = SeparablePlan::fractional(&spectrum.a_axes, &order.negated(), out, FrftPath::Fast)?;
    let bs = multi_points(&spectrum.b_axes);
    let wb = tensor_weights(&spectrum.b_axes);
    let m: usize = spectrum.a_axes.iter().map(AxisGrid::count).product();
    let mut acc = vec![Complex64::new(0.0, 0.0); plan.output_len()];
    for (i, b) in bs.iter().enumerate() {
        let back = plan.apply(&spectrum.values[i * m..(i + 1) * m]);
        let win = tensor_window(synthesis, out, b);
        for ((a, v), w) in acc.iter_mut().zip(&back).zip(&win) {
            *a += v * w * wb[i];
        }
    }
    let inv = Complex64::new(1.0, 0.0) / norm_n;
    SampledField::new(out.to_vec(), acc.into_iter().map(|v| v * inv).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::rel_l2_error;
    use crate::math::exp;

    fn gaussian_1d(axis: AxisGrid) -> SampledField {
        SampledField::from_fn(vec![axis], |x| Complex64::new(exp(-0.5 * x[0] * x[0]), 0.0))
            .unwrap()
    }

    #[test]
    fn fast_gaussian_is_invariant() {
        let axis = AxisGrid::symmetric(10.0, 512).unwrap();
        let f = gaussian_1d(axis);
        let fast = frft_1d_fast(&f, PI / 3.0, &axis).unwrap();
        let direct = frft_1d_direct(&f, PI / 3.0, &axis).unwrap();
        assert!(rel_l2_error(&fast, &f).unwrap() < 1e-8);
        assert!(rel_l2_error(&fast, &direct).unwrap() < 1e-10);
    }

    #[test]
    fn aliasing_is_reported() {
        let input = AxisGrid::symmetric(4.0, 16).unwrap();
        let out = AxisGrid::symmetric(40.0, 16).unwrap();
        let f = gaussian_1d(input);
        assert!(matches!(frft_1d_fast(&f, 1.0, &out), Err(Error::Aliasing { .. })));
        // The oracle has no band restriction.
        assert!(frft_1d_direct(&f, 1.0, &out).is_ok());
    }

    #[test]
    fn degenerate_order_propagates() {
        let axis = AxisGrid::symmetric(4.0, 16).unwrap();
        let f = gaussian_1d(axis);
        assert!(matches!(frft_1d_fast(&f, 0.0, &axis), Err(Error::DegenerateOrder { .. })));
        assert!(matches!(frft_1d_direct(&f, 1e-9, &axis), Err(Error::DegenerateOrder { .. })));
    }

    #[test]
    fn fourier_of_shifted_gaussian_has_phase() {
        let axis = AxisGrid::symmetric(12.0, 256).unwrap();
        let shift = 1.25;
        let f = SampledField::from_fn(vec![axis], |x| {
            Complex64::new(exp(-0.5 * (x[0] - shift) * (x[0] - shift)), 0.0)
        })
        .unwrap();
        let g = fourier_transform(&f, None).unwrap();
        let want =
            SampledField::from_fn(vec![axis], |xi| cis(-shift * xi[0]) * exp(-0.5 * xi[0] * xi[0]))
                .unwrap();
        assert!(rel_l2_error(&g, &want).unwrap() < 1e-9);
    }

    #[test]
    fn stfrft_of_zero_is_zero() {
        let axis = AxisGrid::symmetric(5.0, 32).unwrap();
        let f = SampledField::zeros(vec![axis]).unwrap();
        let w = Window::gaussian(0.0, 1.0).unwrap();
        let o = FractionalOrder::new(&[0.8]).unwrap();
        let b = AxisGrid::symmetric(6.0, 8).unwrap();
        let s = stfrft(&f, &w, &o, &[b], &[axis]).unwrap();
        assert!(s.values.iter().all(|v| *v == Complex64::new(0.0, 0.0)));
    }
}
