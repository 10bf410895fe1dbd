use std::f64::consts::TAU;

use num_complex::Complex64;

use super::curve::{sample_curve, HypotrochoidSpec};

const SAMPLES_PER_ARM: usize = 256;

fn nearest(set: &[Complex64], p: Complex64) -> f64 {
    set.iter().map(|q| (q - p).norm()).fold(f64::INFINITY, f64::min)
}

/// Checks rotation by `2π/k` about `w` and reflection across the line through
/// `w` at angle `θ`, each as a set map on a sampled curve.
pub fn dk_symmetry_check(spec: &HypotrochoidSpec, tolerance: f64) -> bool {
    let n = SAMPLES_PER_ARM * spec.k as usize;
    let pts = match sample_curve(spec, n) {
        Ok(s) => s.positions(),
        Err(_) => return false,
    };
    let rot = Complex64::cis(TAU / f64::from(spec.k));
    let mirror = Complex64::cis(2.0 * spec.theta);
    pts.iter().all(|&p| {
        let d = p - spec.w;
        nearest(&pts, spec.w + rot * d) <= tolerance && nearest(&pts, spec.w + mirror * d.conj()) <= tolerance
    })
}
