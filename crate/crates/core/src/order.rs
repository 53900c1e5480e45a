//! Fractional orders and their per-axis kernel constants.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math::{cis, csqrt, sin, tan, PI};
use crate::Complex64;

/// Orders with `|sin(alpha)|` below this value are rejected.
pub const DEGENERACY_EPS: f64 = 1e-6;

/// Constants of the one-dimensional kernel
/// `K(x, xi) = C exp(i((x^2 + xi^2)/2 cot - x xi csc))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisOrder {
    alpha: f64,
    cot: f64,
    csc: f64,
    amplitude: Complex64,
}

impl AxisOrder {
    pub fn new(alpha: f64) -> Result<Self> {
        Self::checked(0, alpha)
    }

    fn checked(axis: usize, alpha: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha <= -PI || alpha >= PI {
            return Err(Error::OrderOutOfRange { axis, alpha });
        }
        let s = sin(alpha);
        if s.abs() < DEGENERACY_EPS {
            return Err(Error::DegenerateOrder { axis, alpha });
        }
        let cot = 1.0 / tan(alpha);
        let csc = 1.0 / s;
        let amplitude = csqrt(Complex64::new(1.0, -cot) / (2.0 * PI));
        Ok(Self { alpha, cot, csc, amplitude })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn cot(&self) -> f64 {
        self.cot
    }

    pub fn csc(&self) -> f64 {
        self.csc
    }

    /// `C_alpha = sqrt((1 - i cot alpha) / (2 pi))`, principal branch.
    pub fn amplitude(&self) -> Complex64 {
        self.amplitude
    }

    /// The same axis at order `-alpha`.
    pub fn negated(&self) -> Self {
        Self {
            alpha: -self.alpha,
            cot: -self.cot,
            csc: -self.csc,
            amplitude: self.amplitude.conj(),
        }
    }

    #[inline]
    pub fn kernel(&self, x: f64, xi: f64) -> Complex64 {
        self.amplitude * cis(0.5 * (x * x + xi * xi) * self.cot - x * xi * self.csc)
    }
}

/// The order vector `alpha = (alpha_1, ..., alpha_n)`, each axis in
/// `(-pi, pi)` and away from zero.
#[derive(Debug, Clone, PartialEq)]
pub struct FractionalOrder {
    axes: Vec<AxisOrder>,
}

impl FractionalOrder {
    pub fn new(alphas: &[f64]) -> Result<Self> {
        if alphas.is_empty() {
            return Err(Error::InvalidArgument("order needs at least one axis"));
        }
        let axes = alphas
            .iter()
            .enumerate()
            .map(|(k, &a)| AxisOrder::checked(k, a))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { axes })
    }

    /// `(pi/2, ..., pi/2)`: the ordinary Fourier transform.
    pub fn fourier(ndim: usize) -> Self {
        Self::new(&alloc::vec![PI / 2.0; ndim]).expect("pi/2 is nondegenerate")
    }

    pub fn ndim(&self) -> usize {
        self.axes.len()
    }

    pub fn axes(&self) -> &[AxisOrder] {
        &self.axes
    }

    pub fn alphas(&self) -> Vec<f64> {
        self.axes.iter().map(AxisOrder::alpha).collect()
    }

    pub fn negated(&self) -> Self {
        Self { axes: self.axes.iter().map(AxisOrder::negated).collect() }
    }

    /// `prod_k C_{alpha_k}`.
    pub fn amplitude(&self) -> Complex64 {
        self.axes.iter().map(AxisOrder::amplitude).product()
    }

    /// Eigenvalue `e^{-i m alpha}` of the Hermite function `h_m` on one axis.
    pub fn hermite_eigenvalue(alpha: f64, m: u32) -> Complex64 {
        cis(-(m as f64) * alpha)
    }
}

/// `K_alpha(x, xi) = prod_k K_{alpha_k}(x_k, xi_k)`.
pub fn kernel_eval(order: &FractionalOrder, x: &[f64], xi: &[f64]) -> Result<Complex64> {
    let n = order.ndim();
    if x.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: x.len() });
    }
    if xi.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: xi.len() });
    }
    Ok(order
        .axes()
        .iter()
        .zip(x.iter().zip(xi))
        .map(|(ax, (&x, &xi))| ax.kernel(x, xi))
        .product())
}
