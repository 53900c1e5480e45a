//! Power-of-two FFT and a Bluestein chirp-z evaluator for arbitrary
//! frequency spacings.

use alloc::vec;
use alloc::vec::Vec;

use crate::math::{cis, PI};
use crate::Complex64;

/// Iterative radix-2 FFT of a fixed power-of-two length.
#[derive(Debug, Clone)]
pub struct Fft {
    len: usize,
    twiddles: Vec<Complex64>,
    bitrev: Vec<u32>,
}

impl Fft {
    /// Plans a transform of length `len`, which must be a power of two.
    pub fn new(len: usize) -> Self {
        assert!(len.is_power_of_two(), "fft length must be a power of two");
        let twiddles = (0..len / 2)
            .map(|k| cis(-2.0 * PI * k as f64 / len as f64))
            .collect();
        let bits = len.trailing_zeros();
        let bitrev = (0..len as u32)
            .map(|i| if bits == 0 { 0 } else { i.reverse_bits() >> (32 - bits) })
            .collect();
        Self { len, twiddles, bitrev }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// In-place `X_k = sum_j x_j e^{-2 pi i jk/n}`.
    pub fn forward(&self, data: &mut [Complex64]) {
        self.run(data, false);
    }

    /// In-place `x_j = sum_k X_k e^{+2 pi i jk/n}` (unnormalized).
    pub fn inverse(&self, data: &mut [Complex64]) {
        self.run(data, true);
    }

    fn run(&self, data: &mut [Complex64], inverse: bool) {
        assert_eq!(data.len(), self.len);
        let n = self.len;
        for i in 0..n {
            let j = self.bitrev[i] as usize;
            if j > i {
                data.swap(i, j);
            }
        }
        let mut half = 1;
        while half < n {
            let stride = n / (2 * half);
            for start in (0..n).step_by(2 * half) {
                for k in 0..half {
                    let w = self.twiddles[k * stride];
                    let w = if inverse { w.conj() } else { w };
                    let a = data[start + k];
                    let b = data[start + k + half] * w;
                    data[start + k] = a + b;
                    data[start + k + half] = a - b;
                }
            }
            half *= 2;
        }
    }
}

/// Plan for `X_m = sum_{k<n} x_k e^{-i phi k m}`, `m < out_len`, evaluated
/// with Bluestein's identity `km = (k^2 + m^2 - (m-k)^2)/2`.
#[derive(Debug, Clone)]
pub struct ChirpZ {
    in_len: usize,
    out_len: usize,
    pre: Vec<Complex64>,
    post: Vec<Complex64>,
    kernel: Vec<Complex64>,
    fft: Fft,
}

impl ChirpZ {
    pub fn new(in_len: usize, out_len: usize, phi: f64) -> Self {
        assert!(in_len > 0 && out_len > 0);
        let len = (in_len + out_len - 1).next_power_of_two();
        let fft = Fft::new(len);
        let chirp = |k: usize| {
            let k = k as f64;
            cis(-0.5 * phi * k * k)
        };
        let pre: Vec<_> = (0..in_len).map(chirp).collect();
        let post: Vec<_> = (0..out_len).map(chirp).collect();
        // h_j = e^{+i phi j^2 / 2} for j in (-(n-1))..m, wrapped.
        let mut kernel = vec![Complex64::new(0.0, 0.0); len];
        for (m, slot) in kernel.iter_mut().enumerate().take(out_len) {
            *slot = chirp(m).conj();
        }
        for k in 1..in_len {
            kernel[len - k] = chirp(k).conj();
        }
        fft.forward(&mut kernel);
        let scale = 1.0 / len as f64;
        for v in &mut kernel {
            *v *= scale;
        }
        Self { in_len, out_len, pre, post, kernel, fft }
    }

    pub fn in_len(&self) -> usize {
        self.in_len
    }

    pub fn out_len(&self) -> usize {
        self.out_len
    }

    /// Evaluates the transform of `input` into `output`.
    pub fn apply(&self, input: &[Complex64], output: &mut [Complex64]) {
        assert_eq!(input.len(), self.in_len);
        assert_eq!(output.len(), self.out_len);
        let mut work = vec![Complex64::new(0.0, 0.0); self.fft.len()];
        for ((w, x), p) in work.iter_mut().zip(input).zip(&self.pre) {
            *w = x * p;
        }
        self.fft.forward(&mut work);
        for (w, h) in work.iter_mut().zip(&self.kernel) {
            *w *= h;
        }
        self.fft.inverse(&mut work);
        for ((o, w), p) in output.iter_mut().zip(&work).zip(&self.post) {
            *o = w * p;
        }
    }
}
