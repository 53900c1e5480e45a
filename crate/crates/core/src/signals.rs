//! Test fields on 1D or 2D grids.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::directional::{AnalysisPath, DirectionalGrid, DirectionalSpectrum};
use crate::error::{Error, Result};
use crate::grid::{AxisGrid, SampledField};
use crate::math::{cis, cos, exp, sin};
use crate::order::FractionalOrder;
use crate::window::hermite_poly;
use crate::Complex64;

fn coords(x: &[f64]) -> [f64; 2] {
    [x[0], x.get(1).copied().unwrap_or(0.0)]
}

/// `exp(-|x - c|^2 / (2 w^2))`.
pub fn gaussian(axes: &[AxisGrid], center: [f64; 2], width: f64) -> Result<SampledField> {
    if width.is_nan() || width <= 0.0 {
        return Err(Error::InvalidArgument("gaussian width must be positive"));
    }
    SampledField::from_fn(axes.to_vec(), |x| {
        let p = coords(x);
        let r2 = (p[0] - center[0]) * (p[0] - center[0]) + (p[1] - center[1]) * (p[1] - center[1]);
        Complex64::new(exp(-0.5 * r2 / (width * width)), 0.0)
    })
}

/// Tensor Hermite function `H_{m0}(x_0) H_{m1}(x_1) exp(-|x|^2/2)`; the
/// second index is ignored on 1D grids.
pub fn hermite(axes: &[AxisGrid], orders: [u32; 2]) -> Result<SampledField> {
    if orders[0] > 16 || orders[1] > 16 {
        return Err(Error::InvalidArgument("hermite order above 16"));
    }
    let one_d = axes.len() == 1;
    SampledField::from_fn(axes.to_vec(), |x| {
        let p = coords(x);
        let mut v = hermite_poly(orders[0], p[0]) * exp(-0.5 * p[0] * p[0]);
        if !one_d {
            v *= hermite_poly(orders[1], p[1]) * exp(-0.5 * p[1] * p[1]);
        }
        Complex64::new(v, 0.0)
    })
}

/// Gaussian with widths `(w0, w1)` along axes rotated by `angle`.
pub fn anisotropic_gaussian(axes: &[AxisGrid], widths: [f64; 2], angle: f64) -> Result<SampledField> {
    if !(widths[0] > 0.0 && widths[1] > 0.0) {
        return Err(Error::InvalidArgument("gaussian widths must be positive"));
    }
    let (c, s) = (cos(angle), sin(angle));
    SampledField::from_fn(axes.to_vec(), |x| {
        let p = coords(x);
        let r0 = (c * p[0] + s * p[1]) / widths[0];
        let r1 = (-s * p[0] + c * p[1]) / widths[1];
        Complex64::new(exp(-0.5 * (r0 * r0 + r1 * r1)), 0.0)
    })
}

/// Gaussian-enveloped chirp `exp(-|x|^2/(2 w^2)) exp(i (k.x + rate |x|^2 / 2))`.
pub fn chirp(axes: &[AxisGrid], width: f64, wavevector: [f64; 2], rate: f64) -> Result<SampledField> {
    if width.is_nan() || width <= 0.0 {
        return Err(Error::InvalidArgument("chirp envelope width must be positive"));
    }
    SampledField::from_fn(axes.to_vec(), |x| {
        let p = coords(x);
        let r2 = p[0] * p[0] + p[1] * p[1];
        cis(wavevector[0] * p[0] + wavevector[1] * p[1] + 0.5 * rate * r2) * exp(-0.5 * r2 / (width * width))
    })
}

/// Parameters of one packet of [`random_bandlimited`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Packet {
    pub amplitude: Complex64,
    pub center: [f64; 2],
    pub frequency: [f64; 2],
    pub width: f64,
}

/// Number of packets in [`random_bandlimited`].
pub const PACKETS: usize = 4;

/// Seeded packet parameters: centres and frequencies uniform in `[-2, 2]`,
/// widths in `[0.8, 1.25]`, amplitudes uniform in the unit square.
pub fn random_packets(seed: u64, ndim: usize) -> Vec<Packet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..PACKETS)
        .map(|_| {
            let mut pair = |lo: f64, hi: f64| {
                let a = rng.gen_range(lo..hi);
                let b = rng.gen_range(lo..hi);
                if ndim == 1 {
                    [a, 0.0]
                } else {
                    [a, b]
                }
            };
            let amplitude = {
                let [re, im] = pair(-1.0, 1.0);
                Complex64::new(re, if ndim == 1 { 0.0 } else { im })
            };
            let center = pair(-2.0, 2.0);
            let frequency = pair(-2.0, 2.0);
            let width = rng.gen_range(0.8..1.25);
            Packet { amplitude, center, frequency, width }
        })
        .collect()
}

/// Sum of [`PACKETS`] seeded Gaussian wave packets
/// `A exp(-|x - c|^2/(2 w^2)) exp(i omega.x)`.
pub fn random_bandlimited(axes: &[AxisGrid], seed: u64) -> Result<SampledField> {
    let packets = random_packets(seed, axes.len());
    SampledField::from_fn(axes.to_vec(), |x| {
        let p = coords(x);
        packets
            .iter()
            .map(|k| {
                let d = [p[0] - k.center[0], p[1] - k.center[1]];
                let env = exp(-0.5 * (d[0] * d[0] + d[1] * d[1]) / (k.width * k.width));
                k.amplitude * cis(k.frequency[0] * p[0] + k.frequency[1] * p[1]) * env
            })
            .sum()
    })
}

/// Spectrum with independent entries uniform in the unit square, tagged
/// with the direct path.
pub fn random_spectrum(grid: &DirectionalGrid, order: &FractionalOrder, seed: u64) -> Result<DirectionalSpectrum> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let values = (0..grid.len()).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
    DirectionalSpectrum::new(grid.clone(), values, order.clone(), AnalysisPath::Direct)
}
