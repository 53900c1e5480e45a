//! Scalar helpers that behave identically with and without `std`.

use crate::Complex64;

pub use core::f64::consts::PI;

pub const TAU: f64 = 2.0 * PI;

#[inline]
pub fn sin(x: f64) -> f64 {
    libm::sin(x)
}

#[inline]
pub fn cos(x: f64) -> f64 {
    libm::cos(x)
}

#[inline]
pub fn tan(x: f64) -> f64 {
    libm::tan(x)
}

#[inline]
pub fn exp(x: f64) -> f64 {
    libm::exp(x)
}

#[inline]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub fn hypot(x: f64, y: f64) -> f64 {
    libm::hypot(x, y)
}

#[inline]
pub fn powi(x: f64, n: i32) -> f64 {
    libm::pow(x, n as f64)
}

#[inline]
pub fn floor(x: f64) -> f64 {
    libm::floor(x)
}

#[inline]
pub fn ceil(x: f64) -> f64 {
    libm::ceil(x)
}

#[inline]
pub fn round(x: f64) -> f64 {
    libm::round(x)
}

/// `e^{i theta}`.
#[inline]
pub fn cis(theta: f64) -> Complex64 {
    let (s, c) = libm::sincos(theta);
    Complex64::new(c, s)
}

/// Principal square root of a complex number.
pub fn csqrt(z: Complex64) -> Complex64 {
    if z.re == 0.0 && z.im == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let r = hypot(z.re, z.im);
    if z.re >= 0.0 {
        let t = sqrt(0.5 * (r + z.re));
        Complex64::new(t, z.im / (2.0 * t))
    } else {
        let t = sqrt(0.5 * (r - z.re));
        let t = if z.im < 0.0 { -t } else { t };
        Complex64::new(z.im / (2.0 * t), t)
    }
}

/// Euclidean norm of a complex slice (no quadrature weights).
pub fn norm2(values: &[Complex64]) -> f64 {
    sqrt(values.iter().map(|v| v.norm_sqr()).sum::<f64>())
}

/// `||a - b|| / ||b||` over raw samples; returns the absolute difference
/// norm when `b` vanishes.
pub fn rel_l2(a: &[Complex64], b: &[Complex64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let diff = sqrt(a.iter().zip(b).map(|(x, y)| (x - y).norm_sqr()).sum::<f64>());
    let den = norm2(b);
    if den == 0.0 {
        diff
    } else {
        diff / den
    }
}
