use hypotrochoid_core::algebra::{int, rat};
use hypotrochoid_core::geometry::HypotrochoidSpec;
use hypotrochoid_core::testkit::*;
use num_complex::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn inverse_series_equals_operator_prediction_through_fourth_order() {
    for k in 2..=3 {
        for w in [int(0), rat(-3, 2)] {
            let ok = symbolic_inverse_check(k, &w, 4).unwrap();
            assert_eq!(ok, vec![true; 4], "k={k} w={w}");
        }
    }
}

#[test]
fn fourier_modes_match_coefficients() {
    let w = c(0.3, -0.1);
    for f in [
        AnalyticFunctional::evaluation_at(c(1.0, 0.8)),
        AnalyticFunctional::log_derivative_at(c(-0.7, 1.1)),
        AnalyticFunctional::schwarzian_at(c(1.3, 0.2)),
    ] {
        for (k, m) in [(2, 1), (3, 1), (2, 2)] {
            let spec = HypotrochoidSpec::new(k, w, 1e-2, 0.0, 1.5).unwrap();
            let want = analytic_coefficients(&f, k, w, m).unwrap()[m as usize];
            let got = fourier_extract(&f, &spec, m, 256).unwrap();
            assert!((got - want).norm() < 1e-8 * want.norm().max(1.0), "{:?} k={k} m={m}", f.kind);
        }
    }
}

#[test]
fn fourier_at_high_mode_degrades_gracefully() {
    // km = 6 at ε = 1e-2 divides round-off by 1e-12
    let f = AnalyticFunctional::evaluation_at(c(1.0, 0.8));
    let w = c(0.3, -0.1);
    let spec = HypotrochoidSpec::new(3, w, 1e-2, 0.0, 1.5).unwrap();
    let want = analytic_coefficients(&f, 3, w, 2).unwrap()[2];
    let err = (fourier_extract(&f, &spec, 2, 256).unwrap() - want).norm();
    assert!(err < 1e-3 && err > 1e-12);
}

#[test]
fn holomorphic_sector_is_pure() {
    // no e^{+kmiθ}-conjugate modes: projecting onto e^{+ikθ} gives nothing
    let f = AnalyticFunctional::evaluation_at(c(1.0, 0.8));
    let w = c(0.0, 0.0);
    let k = 2;
    let eps: f64 = 0.05;
    let n = 128;
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..n {
        let theta = std::f64::consts::TAU * j as f64 / n as f64;
        let s = HypotrochoidSpec::new(k, w, eps, theta, 1.5).unwrap();
        acc += Complex64::cis(f64::from(k) * theta) * (deformed_value(&f, &s).unwrap() - f.z0);
    }
    assert!((acc / n as f64).norm() / eps.powi(2) < 1e-12);
}

#[test]
fn residual_decay_exponents() {
    let grid: Vec<f64> = (0..5).map(|i| 0.25 * 2f64.powf(-0.5 * f64::from(i))).collect();
    for f in [
        AnalyticFunctional::evaluation_at(c(1.0, 0.5)),
        AnalyticFunctional::log_derivative_at(c(1.0, 0.5)),
    ] {
        for k in 2..=3u32 {
            for m in 0..=2u32 {
                let r = expansion_residual(&f, k, c(0.0, 0.0), 0.4, 1.5, m, &grid).unwrap();
                assert!((r.slope - r.expected_slope).abs() < 0.2, "{:?} k={k} M={m}: {}", f.kind, r.slope);
            }
        }
    }
}

#[test]
fn report_serializes() {
    let f = AnalyticFunctional::evaluation_at(c(1.0, 0.5));
    let r = expansion_residual(&f, 2, c(0.0, 0.0), 0.0, 1.5, 1, &[0.2, 0.1]).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["functional"]["kind"], "evaluation_at");
    assert_eq!(v["residuals"].as_array().unwrap().len(), 2);
    assert!(r.table().contains("slope"));
}
