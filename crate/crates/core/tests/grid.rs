use dstfrft_core::grid::{rel_l2_error, tensor_weights};
use dstfrft_core::*;
use proptest::prelude::*;

#[test]
fn gaussian_norm() {
    let x = AxisGrid::symmetric(8.0, 256).unwrap();
    let f = SampledField::from_fn(vec![x], |p| Complex64::new((-0.5 * p[0] * p[0]).exp(), 0.0)).unwrap();
    let ip = inner_product(&f, &f).unwrap();
    assert!((ip.re - std::f64::consts::PI.sqrt()).abs() < 1e-8);
    let zero = SampledField::zeros(vec![x]).unwrap();
    assert_eq!(inner_product(&f, &zero).unwrap(), Complex64::new(0.0, 0.0));
}

#[test]
fn field_validation() {
    let x = AxisGrid::symmetric(1.0, 4).unwrap();
    assert!(matches!(
        SampledField::new(vec![x, x], vec![Complex64::new(0.0, 0.0); 15]),
        Err(Error::ShapeMismatch { expected: 16, found: 15 })
    ));
    let mut v = vec![Complex64::new(0.0, 0.0); 16];
    v[5] = Complex64::new(f64::NAN, 0.0);
    assert_eq!(SampledField::new(vec![x, x], v), Err(Error::NonFinite { index: 5 }));
    assert!(SampledField::new(vec![x, x, x], vec![Complex64::new(0.0, 0.0); 64]).is_err());
    assert!(AxisGrid::new(1, 0.0, 1.0).is_err());
    assert!(AxisGrid::new(3, 0.0, -1.0).is_err());
}

#[test]
fn symmetric_axes_are_antisymmetric() {
    for (half, n) in [(6.0, 64), (12.0, 48), (0.7, 9)] {
        let a = AxisGrid::symmetric(half, n).unwrap();
        for i in 0..n {
            assert_eq!(a.point(i), -a.point(n - 1 - i));
        }
        let b = AxisGrid::new(n, a.origin(), a.spacing()).unwrap();
        assert_eq!(a, b);
    }
}

proptest! {
    #[test]
    fn trapezoid_is_exact_on_bilinear(
        n0 in 2usize..40, n1 in 2usize..40,
        o0 in -5.0f64..5.0, o1 in -5.0f64..5.0,
        h0 in 0.01f64..1.0, h1 in 0.01f64..1.0,
        c in prop::array::uniform4(-3.0f64..3.0),
    ) {
        let a0 = AxisGrid::new(n0, o0, h0).unwrap();
        let a1 = AxisGrid::new(n1, o1, h1).unwrap();
        let f = SampledField::from_fn(vec![a0, a1], |x| {
            Complex64::new(c[0] + c[1] * x[0] + c[2] * x[1] + c[3] * x[0] * x[1], 0.0)
        }).unwrap();
        let w = tensor_weights(&[a0, a1]);
        let total: f64 = f.values().iter().zip(&w).map(|(v, w)| v.re * w).sum();
        let (p0, q0, p1, q1) = (a0.origin(), a0.last(), a1.origin(), a1.last());
        let exact = c[0] * (q0 - p0) * (q1 - p1)
            + c[1] * 0.5 * (q0 * q0 - p0 * p0) * (q1 - p1)
            + c[2] * 0.5 * (q1 * q1 - p1 * p1) * (q0 - p0)
            + c[3] * 0.25 * (q0 * q0 - p0 * p0) * (q1 * q1 - p1 * p1);
        let scale = (c[0].abs() + c[1].abs() + c[2].abs() + c[3].abs()) * (1.0 + p0.abs().max(q0.abs())).powi(2) * (1.0 + p1.abs().max(q1.abs())).powi(2) * (q0 - p0) * (q1 - p1);
        prop_assert!((total - exact).abs() <= 1e-12 * scale);
        let wsum: f64 = w.iter().sum();
        prop_assert!((wsum - (q0 - p0) * (q1 - p1)).abs() <= 1e-12 * (q0 - p0) * (q1 - p1));
    }

    #[test]
    fn rel_error_of_identical_fields_is_zero(n in 2usize..30) {
        let a = AxisGrid::symmetric(2.0, n).unwrap();
        let f = SampledField::from_fn(vec![a], |x| Complex64::new(x[0].cos(), x[0])).unwrap();
        prop_assert_eq!(rel_l2_error(&f, &f).unwrap(), 0.0);
    }
}

#[test]
fn periodic_axes_hold_zero() {
    let a = AxisGrid::periodic(12.0, 64).unwrap();
    assert_eq!(a.point(32), 0.0);
    assert_eq!(a.origin(), -12.0);
    assert_eq!(a.spacing(), 0.375);
    assert!((a.last() - (12.0 - 0.375)).abs() < 1e-14);
    assert!(AxisGrid::periodic(0.0, 8).is_err());
}
