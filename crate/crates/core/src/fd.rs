//! Finite-difference stencils on uniform grids.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::Complex64;

/// Weights `c_k` with `f^{(d)}(z) ~ sum_k c_k f(x_k)` (Fornberg's recursion).
pub fn fornberg(z: f64, nodes: &[f64], d: usize) -> Vec<f64> {
    let n = nodes.len();
    let mut c = vec![vec![0.0; d + 1]; n];
    let mut c1 = 1.0;
    let mut c4 = nodes[0] - z;
    c[0][0] = 1.0;
    for i in 1..n {
        let mn = i.min(d);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = nodes[i] - z;
        for j in 0..i {
            let c3 = nodes[i] - nodes[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[i][k] = c1 * (k as f64 * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                }
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for k in (1..=mn).rev() {
                c[j][k] = (c4 * c[j][k] - k as f64 * c[j][k - 1]) / c3;
            }
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    c.into_iter().map(|row| row[d]).collect()
}

/// Fourth-order accurate `d`-th derivative stencils for every node of an
/// `n`-point grid: central where they fit, shifted one-sided otherwise.
#[derive(Debug, Clone)]
pub struct Stencils {
    starts: Vec<usize>,
    weights: Vec<Vec<f64>>,
}

impl Stencils {
    pub fn new(n: usize, spacing: f64, d: usize) -> Result<Self> {
        if d == 0 {
            return Ok(Self { starts: (0..n).collect(), weights: vec![vec![1.0]; n] });
        }
        let half = (d + 3) / 2;
        let central = 2 * half + 1;
        let sided = d + 4;
        let needed = central.max(sided);
        if n < needed {
            return Err(Error::GridTooCoarse { points: n, needed });
        }
        let scale = libm::pow(spacing, -(d as f64));
        let stencil = |start: usize, len: usize, at: usize| -> Vec<f64> {
            let nodes: Vec<f64> = (start..start + len).map(|k| k as f64).collect();
            fornberg(at as f64, &nodes, d).into_iter().map(|w| w * scale).collect()
        };
        let inner = stencil(0, central, half);
        let mut starts = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        for i in 0..n {
            if i >= half && i + half < n {
                starts.push(i - half);
                weights.push(inner.clone());
            } else {
                let start = i.saturating_sub(sided / 2).min(n - sided);
                starts.push(start);
                weights.push(stencil(start, sided, i));
            }
        }
        Ok(Self { starts, weights })
    }

    /// Applies the stencil along a strided line.
    pub fn apply_line(&self, line: &[Complex64], out: &mut [Complex64]) {
        for (i, o) in out.iter_mut().enumerate() {
            let s = self.starts[i];
            *o = self.weights[i].iter().enumerate().map(|(k, w)| line[s + k] * *w).sum();
        }
    }
}

/// `d`-th derivative of a row-major array along `axis`.
pub fn differentiate(values: &[Complex64], dims: &[usize], axis: usize, spacing: f64, d: usize) -> Result<Vec<Complex64>> {
    if d == 0 {
        return Ok(values.to_vec());
    }
    let n = dims[axis];
    let stencils = Stencils::new(n, spacing, d)?;
    let inner: usize = dims[axis + 1..].iter().product();
    let outer: usize = dims[..axis].iter().product();
    let mut out = vec![Complex64::new(0.0, 0.0); values.len()];
    let mut line = vec![Complex64::new(0.0, 0.0); n];
    let mut res = vec![Complex64::new(0.0, 0.0); n];
    for o in 0..outer {
        for i in 0..inner {
            let base = o * n * inner + i;
            for k in 0..n {
                line[k] = values[base + k * inner];
            }
            stencils.apply_line(&line, &mut res);
            for k in 0..n {
                out[base + k * inner] = res[k];
            }
        }
    }
    Ok(out)
}

/// Second difference along a periodic `axis`, `(f_{j+1} - 2 f_j + f_{j-1}) / h^2`.
pub fn periodic_second_difference(values: &[Complex64], dims: &[usize], axis: usize, spacing: f64) -> Vec<Complex64> {
    let n = dims[axis];
    let inner: usize = dims[axis + 1..].iter().product();
    let outer: usize = dims[..axis].iter().product();
    let h2 = spacing * spacing;
    let mut out = vec![Complex64::new(0.0, 0.0); values.len()];
    for o in 0..outer {
        for i in 0..inner {
            let at = |k: usize| values[o * n * inner + (k % n) * inner + i];
            for k in 0..n {
                out[o * n * inner + k * inner + i] = (at(k + 1) - at(k) * 2.0 + at(k + n - 1)) / h2;
            }
        }
    }
    out
}
