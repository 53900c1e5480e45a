use std::f64::consts::PI;

use dstfrft_core::radon::*;
use dstfrft_core::signals::{anisotropic_gaussian, gaussian};
use dstfrft_core::*;

fn axis(half: f64, n: usize) -> AxisGrid {
    AxisGrid::symmetric(half, n).unwrap()
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

#[test]
fn gaussian_line_integrals() {
    let x = axis(6.0, 128);
    let f = gaussian(&[x, x], [0.0, 0.0], 1.0).unwrap();
    let p = default_p_axis(f.axes()).unwrap();
    let s = radon_2d(&f, &uniform_angles(16), &p).unwrap();
    let mut worst = 0.0f64;
    for j in 0..16 {
        for (i, v) in s.row(j).iter().enumerate() {
            let q = p.point(i);
            let exact = (2.0 * PI).sqrt() * (-0.5 * q * q).exp();
            worst = worst.max((v - c(exact)).norm());
        }
    }
    assert!(worst < 1e-4, "worst abs error {worst:e}");
}

#[test]
fn radial_sinogram_is_direction_independent() {
    let x = axis(6.0, 256);
    let f = gaussian(&[x, x], [0.0, 0.0], 1.0).unwrap();
    let p = default_p_axis(f.axes()).unwrap();
    let s = radon_2d(&f, &uniform_angles(16), &p).unwrap();
    let row0 = s.row(0).to_vec();
    let scale = row0.iter().map(|v| v.norm()).fold(0.0, f64::max);
    for j in 1..16 {
        let dev = s.row(j).iter().zip(&row0).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
        assert!(dev / scale < 1e-6, "direction {j}: {:e}", dev / scale);
    }
}

#[test]
fn mass_is_conserved() {
    let x = axis(6.0, 128);
    let f = anisotropic_gaussian(&[x, x], [0.5, 1.0], 0.3).unwrap();
    let mass: Complex64 = f.values().iter().zip(quadrature_weights(&f)).map(|(v, w)| v * w).sum();
    let p = default_p_axis(f.axes()).unwrap();
    let s = radon_2d(&f, &uniform_angles(8), &p).unwrap();
    let wp = p.trapezoid_weights();
    for j in 0..8 {
        let m: Complex64 = s.row(j).iter().zip(&wp).map(|(v, w)| v * w).sum();
        assert!((m - mass).norm() / mass.norm() < 1e-6);
    }
}

#[test]
fn slice_theorem_gaussian_families() {
    let x = axis(6.0, 128);
    let freqs = axis(4.0, 41);
    let iso = gaussian(&[x, x], [0.0, 0.0], 1.0).unwrap();
    let aniso = anisotropic_gaussian(&[x, x], [0.5, 1.0], 0.0).unwrap();
    for theta in uniform_angles(16) {
        let r = fourier_slice_residual(&iso, theta, &freqs).unwrap();
        assert!(r < 1e-4, "gaussian theta={theta} residual {r:e}");
        let r = fourier_slice_residual(&aniso, theta, &freqs).unwrap();
        assert!(r < 1e-3, "anisotropic theta={theta} residual {r:e}");
    }
    // Orientation: the slices along e1 and e2 differ, and follow the
    // closed form f^(xi) = (w0 w1) exp(-(w0^2 xi0^2 + w1^2 xi1^2)/2).
    let s1 = fourier_slice(&aniso, 0.0, &freqs).unwrap();
    let s2 = fourier_slice(&aniso, PI / 2.0, &freqs).unwrap();
    let gap: f64 = s1.fourier_side.iter().zip(&s2.fourier_side).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
    assert!(gap > 0.1);
    for (k, w) in freqs.points().enumerate() {
        let e1 = (2.0 * PI).sqrt() * 0.5 * (-0.5 * 0.25 * w * w).exp();
        let e2 = (2.0 * PI).sqrt() * 0.5 * (-0.5 * w * w).exp();
        assert!((s1.fourier_side[k] - c(e1)).norm() < 1e-8);
        assert!((s2.fourier_side[k] - c(e2)).norm() < 1e-8);
    }
}

#[test]
fn bilinear_rule_is_available() {
    let x = axis(6.0, 128);
    let f = gaussian(&[x, x], [0.0, 0.0], 1.0).unwrap();
    let p = default_p_axis(f.axes()).unwrap();
    let a = radon_2d_with(&f, &[0.3], &p, LineInterpolation::Bilinear).unwrap();
    let b = radon_2d(&f, &[0.3], &p).unwrap();
    let dev = a.values().iter().zip(b.values()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
    assert!(dev > 0.0 && dev < 1e-2);
}

#[test]
fn back_projection() {
    let out = axis(3.0, 25);
    let p = axis(6.0, 61);
    let ones = Sinogram::new(uniform_angles(12), p, vec![c(1.0); 12 * 61]).unwrap();
    let r = dual_radon(&ones, &[out, out]).unwrap();
    assert!(r.values().iter().all(|v| (v - c(1.0)).norm() < 1e-14));

    // A bump in direction 0 back-projects onto the line x.u_0 = 0.
    let mut bump = vec![c(0.0); 12 * 61];
    bump[30] = c(1.0);
    let ridge = dual_radon(&Sinogram::new(uniform_angles(12), p, bump.clone()).unwrap(), &[out, out]).unwrap();
    for i in 0..ridge.len() {
        let x = ridge.coords(i);
        let v = ridge.values()[i].re;
        if x[0].abs() < 1e-12 {
            assert!((v - 1.0 / 12.0).abs() < 1e-14);
        } else if x[0].abs() >= p.spacing() {
            assert_eq!(v, 0.0);
        }
    }

    // Linearity.
    let other: Vec<Complex64> = (0..12 * 61).map(|k| c((k as f64 * 0.37).sin())).collect();
    let s1 = Sinogram::new(uniform_angles(12), p, bump.clone()).unwrap();
    let s2 = Sinogram::new(uniform_angles(12), p, other.clone()).unwrap();
    let (a, b) = (Complex64::new(0.5, -1.0), Complex64::new(2.0, 0.25));
    let combo: Vec<Complex64> = bump.iter().zip(&other).map(|(x, y)| a * x + b * y).collect();
    let lhs = dual_radon(&Sinogram::new(uniform_angles(12), p, combo).unwrap(), &[out, out]).unwrap();
    let rhs = dual_radon(&s1, &[out, out]).unwrap().lin_comb(a, &dual_radon(&s2, &[out, out]).unwrap(), b).unwrap();
    let dev = lhs.values().iter().zip(rhs.values()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
    assert!(dev < 1e-14);
}
