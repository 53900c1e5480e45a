use std::f64::consts::PI;

use dstfrft_core::dstfrft::analyze_fast;
use dstfrft_core::seminorm::*;
use dstfrft_core::signals::{gaussian, random_bandlimited};
use dstfrft_core::*;
use proptest::prelude::*;

fn axis(half: f64, n: usize) -> AxisGrid {
    AxisGrid::symmetric(half, n).unwrap()
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Golden-section maximum of a unimodal `f` on `[a, b]`.
fn golden_max(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let r = (5f64.sqrt() - 1.0) / 2.0;
    for _ in 0..200 {
        let x1 = b - r * (b - a);
        let x2 = a + r * (b - a);
        if f(x1) < f(x2) {
            a = x1;
        } else {
            b = x2;
        }
    }
    f(0.5 * (a + b))
}

#[test]
fn gaussian_first_order_seminorm() {
    let sup0 = golden_max(|x| (1.0 + x) * (-0.5 * x * x).exp(), 0.0, 2.0);
    let sup1 = golden_max(|x| (1.0 + x) * x * (-0.5 * x * x).exp(), 0.0, 3.0);
    let expect = sup0.max(sup1);
    assert!((expect - 1.33673).abs() < 1e-5);
    let x = axis(10.0, 2001);
    let f = gaussian(&[x], [0.0, 0.0], 1.0).unwrap();
    assert!((seminorm_rn(&f, 0).unwrap().value - 1.0).abs() < 1e-12);
    let r = seminorm_rn(&f, 1).unwrap();
    assert!((r.value - expect).abs() < 1e-3, "{} vs {expect}", r.value);
    assert_eq!(r.indices, SeminormIndices::Rn { m: 1 });
}

#[test]
fn seminorms_grow_with_order() {
    let x = axis(6.0, 49);
    let f = random_bandlimited(&[x, x], 3).unwrap();
    let values: Vec<f64> = (0..=4).map(|m| seminorm_rn(&f, m).unwrap().value).collect();
    for w in values.windows(2) {
        assert!(w[0] <= w[1], "{values:?}");
    }
}

#[test]
fn stencil_needs_points() {
    let x = axis(1.0, 6);
    let f = gaussian(&[x], [0.0, 0.0], 1.0).unwrap();
    assert!(matches!(seminorm_rn(&f, 3), Err(Error::GridTooCoarse { .. })));
}

fn small_grid(k: usize) -> DirectionalGrid {
    let b = axis(3.0, 13);
    let a = axis(2.0, 9);
    DirectionalGrid::new(k, b, [a, a]).unwrap()
}

#[test]
fn constant_spectrum_seminorms() {
    let g = small_grid(8);
    let o = FractionalOrder::fourier(2);
    let phi = constant_spectrum(&g, &o, c(0.6, -0.8)).unwrap();
    assert!((seminorm_y2n(&phi, 0, 0, [0, 0], 0, 0).unwrap().value - 1.0).abs() < 1e-15);
    assert!(seminorm_y2n(&phi, 0, 0, [0, 0], 0, 1).unwrap().value < 1e-10);
    assert!(seminorm_y2n(&phi, 1, 1, [1, 1], 2, 2).unwrap().value < 1e-10);
    assert!(seminorm_y2n(&phi, 0, 0, [0, 0], 3, 0).is_err());
}

#[test]
fn angular_stencil_consistency() {
    for k in [8usize, 16, 32] {
        let g = small_grid(k);
        let o = FractionalOrder::fourier(2);
        let profile = |b: f64, a: [f64; 2]| (-0.3 * b * b - 0.2 * (a[0] * a[0] + a[1] * a[1])).exp();
        let phi =
            DirectionalSpectrum::from_fn(g.clone(), o.clone(), AnalysisPath::Direct, |j, _, b, a| {
                c(g.angle(j).cos() * profile(b, a), 0.0)
            })
            .unwrap();
        let lap = seminorm_y2n(&phi, 0, 0, [0, 0], 0, 1).unwrap().value;
        let plain = seminorm_y2n(&phi, 0, 0, [0, 0], 0, 0).unwrap().value;
        // Delta_u (cos theta g) = -cos theta g, so both sups agree up to the stencil error.
        let h = 2.0 * PI / k as f64;
        assert!((lap - plain).abs() <= h * h, "K={k}: {lap} vs {plain}");
    }
}

#[test]
fn stfrft_spectrum_seminorm_is_stable() {
    let o = FractionalOrder::new(&[PI / 2.0, PI / 3.0]).unwrap();
    let psi = Window::gaussian(0.0, 1.0).unwrap();
    let value = |n: usize, m: usize, b: usize| {
        let x = axis(7.0, n);
        let a = axis(7.0, m);
        let half = dstfrft_core::directional::default_b_half_width(&[x, x], &psi);
        let g = DirectionalGrid::new(8, axis(half, b), [a, a]).unwrap();
        let f = gaussian(&[x, x], [0.0, 0.0], 1.0).unwrap();
        seminorm_y2n(&analyze_fast(&f, &psi, &o, &g).unwrap(), 1, 1, [0, 0], 0, 0).unwrap().value
    };
    let coarse = value(65, 33, 33);
    let fine = value(129, 65, 65);
    assert!(coarse.is_finite() && coarse > 0.0);
    assert!((coarse / fine - 1.0).abs() <= 0.05, "{coarse} vs {fine}");
}

#[test]
fn zero_field_has_zero_ratio() {
    let x = axis(5.0, 33);
    let o = FractionalOrder::new(&[PI / 2.0, PI / 2.0]).unwrap();
    let psi = Window::gaussian(0.0, 1.0).unwrap();
    let grid = DirectionalGrid::with_defaults(&[x, x], &psi, 8, 17).unwrap();
    let study = ContinuityStudy { order: o, grid, window_axis: axis(8.0, 161), target: Y2nIndices::ZERO, v: 0, tau: 0 };
    let row = study.analysis_row(&SampledField::zeros(vec![x, x]).unwrap(), &psi).unwrap();
    assert_eq!(row.ratio, 0.0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn field_seminorm_is_homogeneous(seed in 0u64..1000, m in 0u32..=3, e in -4i32..4) {
        let x = axis(5.0, 41);
        let f = random_bandlimited(&[x, x], seed).unwrap();
        let base = seminorm_rn(&f, m).unwrap().value;
        // Power-of-two scalings are exact in floating point.
        let s = 2f64.powi(e);
        let scaled = seminorm_rn(&f.map(|v| v * s).unwrap(), m).unwrap().value;
        prop_assert_eq!(scaled, s * base);
        let k = c(0.3, -1.7);
        let general = seminorm_rn(&f.map(|v| v * k).unwrap(), m).unwrap().value;
        prop_assert!((general - k.norm() * base).abs() <= 1e-14 * general);
    }

    #[test]
    fn spectrum_seminorm_is_homogeneous(re in -3.0f64..3.0, im in -3.0f64..3.0, k in 0u32..=2, m in 0u32..=2) {
        let g = small_grid(8);
        let o = FractionalOrder::fourier(2);
        let phi = DirectionalSpectrum::from_fn(g.clone(), o, AnalysisPath::Direct, |j, u, b, a| {
            c((-(b - u[0]) * (b - u[0]) - a[0] * a[0]).exp(), (j as f64 * 0.3 - a[1]).sin() * (-b * b).exp())
        }).unwrap();
        let z = c(re, im);
        let base = seminorm_y2n(&phi, 1, 1, [1, 0], m, k).unwrap().value;
        let scaled = seminorm_y2n(&phi.map(|v| v * z).unwrap(), 1, 1, [1, 0], m, k).unwrap().value;
        prop_assert!((scaled - z.norm() * base).abs() <= 1e-13 * (1.0 + scaled));
    }
}
