//! Directional short-time fractional Fourier transform
//!
//! `DS_psi^alpha f(u, b, a) = int f(x) conj(psi)(u.x - b) K_alpha(x, a) dx`
//!
//! for 2D fields, with three analysis paths, the synthesis operator
//! `(DS_psi^alpha)^*` and residual checks for the identities relating them.

use alloc::vec;
use alloc::vec::Vec;

use crate::directional::{inner_product_y, pairing_y, AnalysisPath, DirectionalGrid, DirectionalSpectrum};
use crate::error::{Error, Result};
use crate::fft::Fft;
use crate::frft::{frft_nd, ChirpTransform, FrftPath, SeparablePlan};
use crate::grid::{inner_product, pairing, quadrature_weights, rel_l2_error, tensor_weights, AxisGrid, SampledField};
use crate::interp::{cubic_weights, split};
use crate::math::{ceil, cis, hypot, sqrt, PI};
use crate::order::FractionalOrder;
use crate::par::map_indices;
use crate::window::Window;
use crate::Complex64;

/// Smallest admissible `|(eta, psi)|`.
pub const WINDOW_INNER_EPS: f64 = 1e-8;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

fn check_inputs(f: &SampledField, order: &FractionalOrder) -> Result<()> {
    if f.ndim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: f.ndim() });
    }
    if order.ndim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: order.ndim() });
    }
    Ok(())
}

/// `conj(psi)(u.x - b)` times the trapezoid weight, on the field grid.
fn windowed(f: &SampledField, window: &Window, u: [f64; 2], b: f64, weighted: bool) -> Vec<Complex64> {
    let axes = f.axes();
    let w = if weighted { tensor_weights(axes) } else { Vec::new() };
    let n1 = axes[1].count();
    f.values()
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let x0 = axes[0].point(i / n1);
            let x1 = axes[1].point(i % n1);
            let g = v * window.eval(u[0] * x0 + u[1] * x1 - b).conj();
            if weighted {
                g * w[i]
            } else {
                g
            }
        })
        .collect()
}

/// Dispatches to one of the analysis paths.
pub fn analyze(
    f: &SampledField,
    window: &Window,
    order: &FractionalOrder,
    grid: &DirectionalGrid,
    path: AnalysisPath,
) -> Result<DirectionalSpectrum> {
    match path {
        AnalysisPath::Direct => analyze_direct(f, window, order, grid),
        AnalysisPath::WindowedFrft => analyze_fast(f, window, order, grid),
        AnalysisPath::FtSlice => analyze_via_ft(f, window, order, grid, &ViaFtOptions::default()),
    }
}

/// Literal trapezoid quadrature at every `(u, b, a)`.
/// `O(K B M^2 N^2)`; meant for small grids.
pub fn analyze_direct(
    f: &SampledField,
    window: &Window,
    order: &FractionalOrder,
    grid: &DirectionalGrid,
) -> Result<DirectionalSpectrum> {
    check_inputs(f, order)?;
    let (xa, aa) = (f.axes(), grid.a_axes());
    let table = |k: usize| -> Vec<Complex64> {
        let ax = &order.axes()[k];
        let mut t = Vec::with_capacity(xa[k].count() * aa[k].count());
        for x in xa[k].points() {
            for a in aa[k].points() {
                t.push(ax.kernel(x, a));
            }
        }
        t
    };
    let (k0, k1) = (table(0), table(1));
    let (n0, n1) = (xa[0].count(), xa[1].count());
    let (m0, m1) = (aa[0].count(), aa[1].count());
    let nb = grid.b_axis().count();
    let slabs = map_indices(grid.slab_count(), |s| {
        let (j, ib) = (s / nb, s % nb);
        let g = windowed(f, window, grid.directions()[j], grid.b_axis().point(ib), true);
        let mut out = vec![ZERO; m0 * m1];
        for p in 0..m0 {
            for q in 0..m1 {
                let mut acc = ZERO;
                for i0 in 0..n0 {
                    for i1 in 0..n1 {
                        acc += g[i0 * n1 + i1] * k0[i0 * m0 + p] * k1[i1 * m1 + q];
                    }
                }
                out[p * m1 + q] = acc;
            }
        }
        out
    });
    DirectionalSpectrum::new(grid.clone(), slabs.concat(), order.clone(), AnalysisPath::Direct)
}

/// For each `(u, b)`, the fast FRFT of `f conj(psi)(u.x - b)` onto the
/// `a`-grid.
pub fn analyze_fast(
    f: &SampledField,
    window: &Window,
    order: &FractionalOrder,
    grid: &DirectionalGrid,
) -> Result<DirectionalSpectrum> {
    check_inputs(f, order)?;
    let plan = SeparablePlan::fractional(f.axes(), order, grid.a_axes(), FrftPath::Fast)?;
    let nb = grid.b_axis().count();
    let slabs = map_indices(grid.slab_count(), |s| {
        let (j, ib) = (s / nb, s % nb);
        plan.apply(&windowed(f, window, grid.directions()[j], grid.b_axis().point(ib), false))
    });
    DirectionalSpectrum::new(grid.clone(), slabs.concat(), order.clone(), AnalysisPath::WindowedFrft)
}

/// Discretization controls for [`analyze_via_ft`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ViaFtOptions {
    /// Zero-padding factor of the 2D FFT that tabulates the chirped
    /// spectrum before cubic interpolation along the slices.
    pub oversampling: usize,
    /// Ratio of the `xi`-grid period to the widest offset span that can
    /// carry signal.
    pub period_margin: f64,
}

impl Default for ViaFtOptions {
    fn default() -> Self {
        Self { oversampling: 16, period_margin: 1.25 }
    }
}

/// Periodic table of `G(xi) = sum_x w f e^{i c x^2/2} e^{-i (x - c0).xi}`
/// on the padded FFT frequency lattice.
struct ChirpedSpectrum {
    table: Vec<Complex64>,
    size: [usize; 2],
    step: [f64; 2],
    centre: [f64; 2],
}

impl ChirpedSpectrum {
    fn new(f: &SampledField, order: &FractionalOrder, oversampling: usize) -> Self {
        let axes = f.axes();
        let w = quadrature_weights(f);
        let mut size = [0usize; 2];
        let mut step = [0.0; 2];
        let mut centre = [0.0; 2];
        let mut shift = [0usize; 2];
        for k in 0..2 {
            size[k] = (axes[k].count() * oversampling.max(1)).next_power_of_two();
            step[k] = 2.0 * PI / (size[k] as f64 * axes[k].spacing());
            shift[k] = (axes[k].count() - 1) / 2;
            centre[k] = axes[k].point(shift[k]);
        }
        let (n1, p1) = (axes[1].count(), size[1]);
        let mut table = vec![ZERO; size[0] * size[1]];
        let (c0, c1) = (order.axes()[0].cot(), order.axes()[1].cot());
        for (i, (&v, &wi)) in f.values().iter().zip(&w).enumerate() {
            let (i0, i1) = (i / n1, i % n1);
            let (x0, x1) = (axes[0].point(i0), axes[1].point(i1));
            let r0 = (i0 + size[0] - shift[0]) % size[0];
            let r1 = (i1 + size[1] - shift[1]) % size[1];
            table[r0 * p1 + r1] = v * wi * cis(0.5 * (c0 * x0 * x0 + c1 * x1 * x1));
        }
        // Rows, then columns.
        let row = Fft::new(size[1]);
        for r in table.chunks_mut(p1) {
            row.forward(r);
        }
        let col = Fft::new(size[0]);
        let mut buf = vec![ZERO; size[0]];
        for c in 0..p1 {
            for r in 0..size[0] {
                buf[r] = table[r * p1 + c];
            }
            col.forward(&mut buf);
            for r in 0..size[0] {
                table[r * p1 + c] = buf[r];
            }
        }
        Self { table, size, step, centre }
    }

    /// `(2 pi)^{-1} sum_x w f e^{i c x^2/2} e^{-i x.xi}` by periodic bicubic
    /// interpolation of the table.
    fn eval(&self, xi: [f64; 2]) -> Complex64 {
        let (i0, t0) = split(xi[0] / self.step[0]);
        let (i1, t1) = split(xi[1] / self.step[1]);
        let (w0, w1) = (cubic_weights(t0), cubic_weights(t1));
        let (p0, p1) = (self.size[0] as isize, self.size[1] as isize);
        let mut acc = ZERO;
        for (a, wa) in w0.iter().enumerate() {
            let r = (i0 + a as isize - 1).rem_euclid(p0) as usize;
            let mut inner = ZERO;
            for (b, wb) in w1.iter().enumerate() {
                let c = (i1 + b as isize - 1).rem_euclid(p1) as usize;
                inner += self.table[r * self.size[1] + c] * *wb;
            }
            acc += inner * *wa;
        }
        acc * cis(-(self.centre[0] * xi[0] + self.centre[1] * xi[1])) / (2.0 * PI)
    }
}

/// Computes `sqrt(2 pi) int F(f K_alpha(., a))(xi u) conj(psi^)(xi) e^{i xi b} dxi`
/// with one padded 2D FFT shared by every `a`: the kernel's cross term
/// `e^{-i csc x.a}` is a frequency shift of the chirped field's spectrum.
/// The `xi`-integral is a trapezoid sum evaluated for all `b` at once by a
/// chirp-z transform.
pub fn analyze_via_ft(
    f: &SampledField,
    window: &Window,
    order: &FractionalOrder,
    grid: &DirectionalGrid,
    options: &ViaFtOptions,
) -> Result<DirectionalSpectrum> {
    check_inputs(f, order)?;
    let axes = f.axes();
    let (lo, hi) = window.support_interval();
    let span = grid.b_axis().max_abs() + hypot(axes[0].max_abs(), axes[1].max_abs()) + lo.abs().max(hi.abs());
    let period = options.period_margin.max(1.0) * span;
    let reach = window.frequency_reach();
    let half = ceil(reach * period / (2.0 * PI)) as usize;
    let xi_axis = AxisGrid::symmetric(reach, 2 * half + 1)?;
    let to_b = ChirpTransform::new(
        xi_axis,
        *grid.b_axis(),
        Complex64::new(sqrt(2.0 * PI), 0.0),
        0.0,
        -1.0,
        FrftPath::Fast,
    )?;
    let psi_hat: Vec<Complex64> = xi_axis.points().map(|xi| window.fourier(xi).conj()).collect();
    let table = ChirpedSpectrum::new(f, order, options.oversampling);

    let aa = grid.a_axes();
    let (o0, o1) = (&order.axes()[0], &order.axes()[1]);
    let amplitude = order.amplitude();
    let m1 = aa[1].count();
    let (nk, nb) = (grid.direction_count(), grid.b_axis().count());
    // One task per `a`: every direction and offset for that frequency.
    let per_a = map_indices(grid.slab_len(), |ia| {
        let a = [aa[0].point(ia / m1), aa[1].point(ia % m1)];
        let shift = [o0.csc() * a[0], o1.csc() * a[1]];
        let prefactor = amplitude * cis(0.5 * (o0.cot() * a[0] * a[0] + o1.cot() * a[1] * a[1]));
        let mut out = vec![ZERO; nk * nb];
        let mut line = vec![ZERO; xi_axis.count()];
        for (j, u) in grid.directions().iter().enumerate() {
            for (q, xi) in xi_axis.points().enumerate() {
                line[q] = table.eval([xi * u[0] + shift[0], xi * u[1] + shift[1]]) * psi_hat[q];
            }
            let dst = &mut out[j * nb..(j + 1) * nb];
            to_b.apply(&line, dst);
            for v in dst.iter_mut() {
                *v *= prefactor;
            }
        }
        out
    });
    let m = grid.slab_len();
    let mut values = vec![ZERO; grid.len()];
    for (ia, col) in per_a.iter().enumerate() {
        for (s, v) in col.iter().enumerate() {
            values[s * m + ia] = *v;
        }
    }
    DirectionalSpectrum::new(grid.clone(), values, order.clone(), AnalysisPath::FtSlice)
}

/// `(DS_psi^alpha)^* Phi (x) = sum_j (1/K) int int Phi(u_j, b, a) psi(x.u_j - b) K_{-alpha}(x, a) db da`
/// on `out` (the `a`-integral by the fast FRFT of order `-alpha`).
pub fn synthesize(
    spectrum: &DirectionalSpectrum,
    window: &Window,
    order: &FractionalOrder,
    out: &[AxisGrid],
) -> Result<SampledField> {
    if out.len() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: out.len() });
    }
    if order.ndim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: order.ndim() });
    }
    let grid = spectrum.grid();
    let plan = SeparablePlan::quadrature(grid.a_axes(), &order.negated(), out)?;
    let wb = grid.b_axis().trapezoid_weights();
    let n1 = out[1].count();
    let len = out[0].count() * n1;
    let per_direction = map_indices(grid.direction_count(), |j| {
        let u = grid.directions()[j];
        let proj: Vec<f64> = (0..len)
            .map(|i| u[0] * out[0].point(i / n1) + u[1] * out[1].point(i % n1))
            .collect();
        let mut acc = vec![ZERO; len];
        for (ib, &w) in wb.iter().enumerate() {
            let b = grid.b_axis().point(ib);
            let back = plan.apply(spectrum.slab(j, ib));
            for ((a, v), &p) in acc.iter_mut().zip(&back).zip(&proj) {
                *a += v * window.eval(p - b) * w;
            }
        }
        acc
    });
    let mut values = vec![ZERO; len];
    for dir in &per_direction {
        for (v, d) in values.iter_mut().zip(dir) {
            *v += d;
        }
    }
    let k = grid.sphere_weight();
    for v in values.iter_mut() {
        *v *= k;
    }
    SampledField::new(out.to_vec(), values)
}

/// Both sides of a discretized identity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityReport {
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub abs_err: f64,
    pub rel_err: f64,
}

impl IdentityReport {
    pub fn new(lhs: Complex64, rhs: Complex64) -> Self {
        let abs_err = (lhs - rhs).norm();
        let scale = rhs.norm();
        let rel_err = if scale > 0.0 { abs_err / scale } else { abs_err };
        Self { lhs, rhs, abs_err, rel_err }
    }
}

/// `(eta, psi)`, rejected when below [`WINDOW_INNER_EPS`].
pub fn window_inner(eta: &Window, psi: &Window) -> Result<Complex64> {
    let c = eta.inner(psi);
    if c.norm() < WINDOW_INNER_EPS {
        return Err(Error::NearOrthogonalWindows { inner: c.norm() });
    }
    Ok(c)
}

/// `(1/(eta, psi)) (DS_psi f, DS_eta g)_Y` against `(f, g)`.
pub fn parseval_residual(
    f: &SampledField,
    g: &SampledField,
    psi: &Window,
    eta: &Window,
    order: &FractionalOrder,
    grid: &DirectionalGrid,
) -> Result<IdentityReport> {
    let c = window_inner(eta, psi)?;
    let rhs = inner_product(f, g)?;
    let df = analyze_fast(f, psi, order, grid)?;
    let dg = analyze_fast(g, eta, order, grid)?;
    Ok(IdentityReport::new(inner_product_y(&df, &dg)? / c, rhs))
}

/// `||DS_psi f||^2_Y` against `||psi||^2 ||f||^2`.
pub fn isometry_residual(
    f: &SampledField,
    psi: &Window,
    order: &FractionalOrder,
    grid: &DirectionalGrid,
) -> Result<IdentityReport> {
    let d = analyze_fast(f, psi, order, grid)?;
    let lhs = d.l2_norm_sqr();
    let n = psi.l2_norm() * f.l2_norm();
    Ok(IdentityReport::new(Complex64::new(lhs, 0.0), Complex64::new(n * n, 0.0)))
}

/// Result of [`reconstruct`].
#[derive(Debug, Clone, PartialEq)]
pub struct Reconstruction {
    pub field: SampledField,
    pub window_inner: Complex64,
    pub rel_err: f64,
}

/// `(1/(eta, psi)) (DS_eta)^* DS_psi f` on the grid of `f`.
pub fn reconstruct(
    f: &SampledField,
    psi: &Window,
    eta: &Window,
    order: &FractionalOrder,
    grid: &DirectionalGrid,
) -> Result<Reconstruction> {
    let c = window_inner(eta, psi)?;
    let d = analyze_fast(f, psi, order, grid)?;
    let field = synthesize(&d, eta, order, f.axes())?.map(|v| v / c)?;
    let rel_err = rel_l2_error(&field, f)?;
    Ok(Reconstruction { field, window_inner: c, rel_err })
}

/// `int f conj((DS_psi)^* conj(Phi))` against `(DS_psi f) . Phi` summed
/// over the directional grid.
pub fn transpose_residual(
    f: &SampledField,
    psi: &Window,
    order: &FractionalOrder,
    spectrum: &DirectionalSpectrum,
) -> Result<IdentityReport> {
    let conj_phi = spectrum.map(|v| v.conj())?;
    let back = synthesize(&conj_phi, psi, order, f.axes())?;
    let lhs = inner_product(f, &back)?;
    let d = analyze_fast(f, psi, order, spectrum.grid())?;
    Ok(IdentityReport::new(lhs, pairing_y(&d, spectrum)?))
}

/// `(1/(eta, psi)) sum_u int <F_alpha(f conj(psi)(.u - b)), conj(DS_eta conj(phi))>_a db`
/// against `int f phi`. The windowed transforms are formed one `(u, b)` at
/// a time as fields.
pub fn desingularization_residual(
    f: &SampledField,
    phi: &SampledField,
    psi: &Window,
    eta: &Window,
    order: &FractionalOrder,
    grid: &DirectionalGrid,
) -> Result<IdentityReport> {
    check_inputs(f, order)?;
    let c = window_inner(eta, psi)?;
    let rhs = pairing(f, phi)?;
    let dphi = analyze_fast(&phi.map(|v| v.conj())?, eta, order, grid)?;
    let wb = grid.b_axis().trapezoid_weights();
    let wa = tensor_weights(grid.a_axes());
    let nb = grid.b_axis().count();
    let per_slab = map_indices(grid.slab_count(), |s| -> Result<Complex64> {
        let (j, ib) = (s / nb, s % nb);
        let u = grid.directions()[j];
        let b = grid.b_axis().point(ib);
        let cut = SampledField::new(f.axes().to_vec(), windowed(f, psi, u, b, false))?;
        let local = frft_nd(&cut, order, Some(grid.a_axes()), FrftPath::Fast)?;
        let mut acc = ZERO;
        for ((x, y), &w) in local.values().iter().zip(dphi.slab(j, ib)).zip(&wa) {
            acc += x * y.conj() * w;
        }
        Ok(acc * wb[ib])
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let mut total = ZERO;
    for j in 0..grid.direction_count() {
        let mut per_dir = ZERO;
        for ib in 0..nb {
            per_dir += per_slab[j * nb + ib];
        }
        total += per_dir;
    }
    Ok(IdentityReport::new(total * grid.sphere_weight() / c, rhs))
}
