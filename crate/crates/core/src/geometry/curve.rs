use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{domain, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct HypotrochoidSpec {
    pub k: u32,
    pub w: Complex64,
    pub eps: f64,
    pub theta: f64,
    pub b: f64,
}

impl HypotrochoidSpec {
    /// Validates the parameters. `b` below the cusp threshold is allowed so
    /// that degenerate curves can be probed. `θ` is reduced mod 2π.
    pub fn new(k: u32, w: Complex64, eps: f64, theta: f64, b: f64) -> Result<Self> {
        if k < 2 {
            return domain(format!("k = {k} < 2"));
        }
        if !(eps.is_finite() && eps > 0.0) {
            return domain(format!("eps = {eps} must be positive"));
        }
        if !(b.is_finite() && b > 0.0) {
            return domain(format!("b = {b} must be positive"));
        }
        if !theta.is_finite() || !w.re.is_finite() || !w.im.is_finite() {
            return domain("non-finite theta or w");
        }
        Ok(Self { k, w, eps, theta: theta.rem_euclid(TAU), b })
    }

    /// `u = εe^{iθ}`.
    pub fn u(&self) -> Complex64 {
        Complex64::from_polar(self.eps, self.theta)
    }

    /// Largest modulus of `z - w` on the curve.
    pub fn radius(&self) -> f64 {
        self.eps * (self.b + self.b.powi(1 - self.k as i32))
    }

    pub fn is_above_threshold(&self) -> bool {
        self.b > cusp_threshold(self.k).b_star
    }
}

pub fn curve_point(spec: &HypotrochoidSpec, alpha: f64) -> Complex64 {
    let k = spec.k as i32;
    let shape = spec.b * Complex64::cis(alpha) + spec.b.powi(1 - k) * Complex64::cis((1 - k) as f64 * alpha);
    spec.w + spec.u() * shape
}

/// `dz/dα`.
pub fn curve_tangent(spec: &HypotrochoidSpec, alpha: f64) -> Complex64 {
    let k = spec.k as i32;
    let kf = f64::from(spec.k);
    let inner = spec.b * Complex64::cis(alpha) - (kf - 1.0) * spec.b.powi(1 - k) * Complex64::cis((1 - k) as f64 * alpha);
    Complex64::i() * spec.u() * inner
}

/// `g(z) = z + u^k / (z - w)^{k-1}`.
pub fn map_eval(spec: &HypotrochoidSpec, z: Complex64) -> Result<Complex64> {
    let d = z - spec.w;
    if d == Complex64::new(0.0, 0.0) {
        return Err(Error::Pole(format!("g at its center {}", spec.w)));
    }
    let k = spec.k as i32;
    Ok(z + spec.u().powi(k) / d.powi(k - 1))
}

/// `g'(z) = 1 - (k-1) u^k / (z - w)^k`.
pub fn map_derivative(spec: &HypotrochoidSpec, z: Complex64) -> Result<Complex64> {
    let d = z - spec.w;
    if d == Complex64::new(0.0, 0.0) {
        return Err(Error::Pole(format!("g' at its center {}", spec.w)));
    }
    let k = spec.k as i32;
    Ok(1.0 - f64::from(spec.k - 1) * spec.u().powi(k) / d.powi(k))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CuspThreshold {
    pub b_star: f64,
    pub cusp_angles: Vec<f64>,
}

pub fn cusp_threshold(k: u32) -> CuspThreshold {
    assert!(k >= 2, "cusp threshold needs k >= 2");
    let kf = f64::from(k);
    CuspThreshold {
        b_star: (kf - 1.0).powf(1.0 / kf),
        cusp_angles: (0..k).map(|j| TAU * f64::from(j) / kf).collect(),
    }
}

/// Samples on the uniform grid `α_j = 2πj/n`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CurveSamples {
    pub points: Vec<(f64, Complex64)>,
}

impl CurveSamples {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn positions(&self) -> Vec<Complex64> {
        self.points.iter().map(|p| p.1).collect()
    }
}

pub fn sample_curve(spec: &HypotrochoidSpec, n: usize) -> Result<CurveSamples> {
    if n < 3 {
        return domain(format!("need at least 3 samples, got {n}"));
    }
    let points = (0..n)
        .map(|j| {
            let a = TAU * j as f64 / n as f64;
            (a, curve_point(spec, a))
        })
        .collect();
    Ok(CurveSamples { points })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn spec(k: u32, b: f64) -> HypotrochoidSpec {
        HypotrochoidSpec::new(k, Complex64::new(0.0, 0.0), 1.0, 0.0, b).unwrap()
    }

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-14
    }

    #[test]
    fn curve_examples() {
        assert!(close(curve_point(&spec(2, 2.0), 0.0), Complex64::new(2.5, 0.0)));
        assert!(close(curve_point(&spec(2, 2.0), FRAC_PI_2), Complex64::new(0.0, 1.5)));
        assert!(close(curve_point(&spec(3, 2.0), 0.0), Complex64::new(2.25, 0.0)));
    }

    #[test]
    fn map_examples() {
        let s = spec(2, 2.0);
        assert!(close(map_eval(&s, Complex64::new(2.0, 0.0)).unwrap(), Complex64::new(2.5, 0.0)));
        let far = Complex64::new(1e9, -3e8);
        assert!((map_eval(&s, far).unwrap() - far).norm() < 1e-8);
        assert!(matches!(map_eval(&s, s.w), Err(Error::Pole(_))));
    }

    #[test]
    fn circle_image() {
        for k in 2..=6 {
            let s = HypotrochoidSpec::new(k, Complex64::new(0.3, -0.7), 0.8, 1.1, 1.7).unwrap();
            for j in 0..500 {
                let a = TAU * j as f64 / 500.0;
                let z = s.w + s.b * s.eps * Complex64::cis(s.theta + a);
                assert!((map_eval(&s, z).unwrap() - curve_point(&s, a)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn tangent_is_derivative() {
        let s = HypotrochoidSpec::new(4, Complex64::new(1.0, 2.0), 0.5, 0.3, 1.6).unwrap();
        let h = 1e-6;
        for a in [0.0, 0.7, 2.9] {
            let fd = (curve_point(&s, a + h) - curve_point(&s, a - h)) / (2.0 * h);
            assert!((fd - curve_tangent(&s, a)).norm() < 1e-8);
        }
    }

    #[test]
    fn thresholds() {
        assert_eq!(cusp_threshold(2).b_star, 1.0);
        assert!((cusp_threshold(3).b_star - 2f64.powf(1.0 / 3.0)).abs() < 1e-15);
        assert_eq!(cusp_threshold(4).cusp_angles.len(), 4);
        for k in 2..=6 {
            let t = cusp_threshold(k);
            let s = spec(k, t.b_star);
            for &a in &t.cusp_angles {
                assert!(curve_tangent(&s, a).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn equivariance() {
        let base = spec(5, 1.5);
        let s = HypotrochoidSpec::new(5, Complex64::new(-2.0, 0.5), 0.3, 0.9, 1.5).unwrap();
        for a in [0.0, 1.0, 4.0] {
            let expect = s.w + s.u() * curve_point(&base, a);
            assert!((curve_point(&s, a) - expect).norm() < 1e-14);
        }
    }

    #[test]
    fn rejects_bad_specs() {
        let o = Complex64::new(0.0, 0.0);
        assert!(HypotrochoidSpec::new(1, o, 1.0, 0.0, 2.0).is_err());
        assert!(HypotrochoidSpec::new(2, o, 0.0, 0.0, 2.0).is_err());
        assert!(HypotrochoidSpec::new(2, o, 1.0, 0.0, -1.0).is_err());
        assert!(HypotrochoidSpec::new(2, o, 1.0, f64::NAN, 2.0).is_err());
    }
}
