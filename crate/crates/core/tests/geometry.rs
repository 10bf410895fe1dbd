use std::f64::consts::TAU;

use hypotrochoid_core::geometry::*;
use num_complex::Complex64;

fn spec(k: u32, b: f64) -> HypotrochoidSpec {
    HypotrochoidSpec::new(k, Complex64::new(0.25, -0.5), 1.0, 0.6, b).unwrap()
}

#[test]
fn simplicity_brackets_the_cusp_threshold() {
    for k in 2..=6 {
        let b_star = cusp_threshold(k).b_star;
        assert!(simplicity_check(&spec(k, 1.05 * b_star), 4096).unwrap(), "k={k} above");
        assert!(!simplicity_check(&spec(k, 0.95 * b_star), 4096).unwrap(), "k={k} below");
    }
}

#[test]
fn below_threshold_arms_cross_for_k_at_least_three() {
    for k in 3..=6 {
        let b = 0.95 * cusp_threshold(k).b_star;
        let pts = sample_curve(&spec(k, b), 4096).unwrap().positions();
        assert!(!self_intersections(&pts).is_empty(), "k={k}");
    }
}

#[test]
fn map_is_conformal_outside_the_disk() {
    for k in 2..=6 {
        let s = spec(k, 1.1 * cusp_threshold(k).b_star);
        for r in [1.0, 1.3, 3.0] {
            for j in 0..200 {
                let z = s.w + r * s.b * s.eps * Complex64::cis(TAU * j as f64 / 200.0);
                assert!(map_derivative(&s, z).unwrap().norm() > 1e-3);
            }
        }
    }
}

#[test]
fn circle_image_over_ten_thousand_points() {
    for k in 2..=6 {
        let s = spec(k, 1.4);
        let worst = (0..10_000)
            .map(|j| {
                let a = TAU * j as f64 / 10_000.0;
                let z = s.w + s.b * s.eps * Complex64::cis(s.theta + a);
                (map_eval(&s, z).unwrap() - curve_point(&s, a)).norm()
            })
            .fold(0.0, f64::max);
        assert!(worst < 1e-12, "k={k}: {worst}");
    }
}

#[test]
fn figure_panels_export() {
    let dir = std::env::temp_dir().join(format!("hypotrochoid-geom-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for k in 2..=5 {
        let s = HypotrochoidSpec::new(k, Complex64::new(0.0, 0.0), 1.0, 0.0, 1.2 * cusp_threshold(k).b_star).unwrap();
        let path = dir.join(format!("panel_k{k}.svg"));
        export_curve(&s, CurveFormat::Svg, 512, &path).unwrap();
        assert!(std::fs::read_to_string(&path).unwrap().starts_with("<?xml"));
    }
    std::fs::remove_dir_all(&dir).unwrap();
}
