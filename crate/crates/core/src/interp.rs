//! Cubic convolution (Keys, a = -1/2) weights.

use crate::math::floor;

/// Weights for the samples at offsets `-1, 0, 1, 2` from the cell start,
/// given the fractional position `t` in `[0, 1)`.
#[inline]
pub fn cubic_weights(t: f64) -> [f64; 4] {
    let t2 = t * t;
    let t3 = t2 * t;
    [
        -0.5 * t3 + t2 - 0.5 * t,
        1.5 * t3 - 2.5 * t2 + 1.0,
        -1.5 * t3 + 2.0 * t2 + 0.5 * t,
        0.5 * t3 - 0.5 * t2,
    ]
}

/// Splits a fractional index into its integer cell and in-cell offset.
#[inline]
pub fn split(r: f64) -> (isize, f64) {
    let i = floor(r);
    (i as isize, r - i)
}
