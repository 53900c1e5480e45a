//! Directional short-time fractional Fourier transform (DSTFRFT) and the
//! transforms it is built from: the fractional Fourier transform, the
//! short-time fractional transform and the planar Radon transform.
//!
//! The crate is `no_std` (with `alloc`). Enable `parallel` to spread the
//! per-direction and per-offset work over a rayon pool; every output
//! element is produced by the same serial reduction either way, so results
//! are bit-identical for any thread count.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod directional;
pub mod dstfrft;
pub mod error;
pub mod fd;
pub mod fft;
pub mod frft;
pub mod grid;
pub mod interp;
pub mod math;
pub mod order;
pub mod radon;
pub mod seminorm;
pub mod signals;
mod par;
pub mod window;

pub use num_complex::Complex64;

pub use directional::{inner_product_y, AnalysisPath, DirectionalGrid, DirectionalSpectrum};
pub use dstfrft::{analyze, analyze_direct, analyze_fast, analyze_via_ft, synthesize};
pub use error::{Error, Result};
pub use frft::{fourier_transform, frft_1d_direct, frft_1d_fast, frft_nd, stfrft, FrftPath};
pub use grid::{inner_product, quadrature_weights, AxisGrid, SampledField};
pub use order::{kernel_eval, FractionalOrder};
pub use window::Window;
