use std::cmp::Ordering;
use std::f64::consts::TAU;

use num_complex::Complex64;
use num_traits::{Signed, Zero};

use super::curve::{cusp_threshold, sample_curve, HypotrochoidSpec};
use crate::algebra::Rational;
use crate::error::{domain, Result};

const ORIENT_ERR: f64 = (3.0 + 16.0 * f64::EPSILON) * f64::EPSILON;

/// Sign of the cross product `(b - a) × (c - a)`. Floating point when the
/// determinant clears its error bound, exact rational arithmetic otherwise.
fn orient(a: Complex64, b: Complex64, c: Complex64) -> Ordering {
    let l = (b.re - a.re) * (c.im - a.im);
    let r = (b.im - a.im) * (c.re - a.re);
    let det = l - r;
    if det.abs() > ORIENT_ERR * (l.abs() + r.abs()) {
        return det.partial_cmp(&0.0).unwrap();
    }
    let q = |x: f64| Rational::from_float(x).expect("finite coordinate");
    let exact = (q(b.re) - q(a.re)) * (q(c.im) - q(a.im)) - (q(b.im) - q(a.im)) * (q(c.re) - q(a.re));
    if exact.is_zero() {
        Ordering::Equal
    } else if exact.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

fn within(a: Complex64, b: Complex64, p: Complex64) -> bool {
    p.re >= a.re.min(b.re) && p.re <= a.re.max(b.re) && p.im >= a.im.min(b.im) && p.im <= a.im.max(b.im)
}

/// Closed segments `pq` and `rs` share a point.
fn segments_meet(p: Complex64, q: Complex64, r: Complex64, s: Complex64) -> bool {
    let o1 = orient(p, q, r);
    let o2 = orient(p, q, s);
    let o3 = orient(r, s, p);
    let o4 = orient(r, s, q);
    if o1 != o2 && o3 != o4 && o1 != Ordering::Equal && o2 != Ordering::Equal && o3 != Ordering::Equal && o4 != Ordering::Equal {
        return true;
    }
    (o1 == Ordering::Equal && within(p, q, r))
        || (o2 == Ordering::Equal && within(p, q, s))
        || (o3 == Ordering::Equal && within(r, s, p))
        || (o4 == Ordering::Equal && within(r, s, q))
}

/// Pairs `(i, j)` of non-adjacent edges of the closed polyline that meet.
/// Edge `i` joins vertex `i` to vertex `i + 1 mod n`.
pub fn self_intersections(points: &[Complex64]) -> Vec<(usize, usize)> {
    let n = points.len();
    let edge = |i: usize| (points[i], points[(i + 1) % n]);
    let mut order: Vec<usize> = (0..n).collect();
    let lo = |i: usize| edge(i).0.re.min(edge(i).1.re);
    let hi = |i: usize| edge(i).0.re.max(edge(i).1.re);
    order.sort_by(|&a, &b| lo(a).total_cmp(&lo(b)).then(a.cmp(&b)));
    let mut active: Vec<usize> = Vec::new();
    let mut hits = Vec::new();
    for &i in &order {
        let x = lo(i);
        active.retain(|&j| hi(j) >= x);
        let (p, q) = edge(i);
        for &j in &active {
            let gap = i.abs_diff(j);
            if gap <= 1 || gap == n - 1 {
                continue;
            }
            let (r, s) = edge(j);
            if p.im.max(q.im) < r.im.min(s.im) || r.im.max(s.im) < p.im.min(q.im) {
                continue;
            }
            if segments_meet(p, q, r, s) {
                hits.push((i.min(j), i.max(j)));
            }
        }
        active.push(i);
    }
    hits.sort_unstable();
    hits
}

/// Winding number of the closed polyline about `c`, or `None` when a vertex
/// coincides with `c`.
pub fn winding_number(points: &[Complex64], c: Complex64) -> Option<i64> {
    let mut total = 0.0;
    for i in 0..points.len() {
        let a = points[i] - c;
        let b = points[(i + 1) % points.len()] - c;
        if a.is_zero() || b.is_zero() {
            return None;
        }
        total += (b / a).arg();
    }
    Some((total / TAU).round() as i64)
}

/// True when the sampled polyline has no self-intersection and winds once
/// positively about `w`. A curve exactly at the cusp threshold is reported
/// as not simple.
pub fn simplicity_check(spec: &HypotrochoidSpec, n_samples: usize) -> Result<bool> {
    if n_samples < 64 {
        return domain(format!("simplicity check needs at least 64 samples, got {n_samples}"));
    }
    let b_star = cusp_threshold(spec.k).b_star;
    if (spec.b - b_star).abs() <= 1e-12 * b_star {
        return Ok(false);
    }
    let pts = sample_curve(spec, n_samples)?.positions();
    Ok(winding_number(&pts, spec.w) == Some(1) && self_intersections(&pts).is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(k: u32, b: f64) -> HypotrochoidSpec {
        HypotrochoidSpec::new(k, Complex64::new(0.0, 0.0), 1.0, 0.0, b).unwrap()
    }

    #[test]
    fn examples() {
        assert!(simplicity_check(&spec(2, 1.5), 256).unwrap());
        assert!(simplicity_check(&spec(3, 1.3), 1024).unwrap());
        assert!(!simplicity_check(&spec(3, 1.1), 1024).unwrap());
        assert!(simplicity_check(&spec(3, 1.3), 32).is_err());
    }

    #[test]
    fn threshold_is_not_simple() {
        for k in 2..=6 {
            assert!(!simplicity_check(&spec(k, cusp_threshold(k).b_star), 256).unwrap());
        }
    }

    #[test]
    fn reversed_ellipse_winds_negatively() {
        let pts = sample_curve(&spec(2, 0.9), 256).unwrap().positions();
        assert!(self_intersections(&pts).is_empty());
        assert_eq!(winding_number(&pts, Complex64::new(0.0, 0.0)), Some(-1));
    }

    #[test]
    fn orientation_is_exact_on_collinear_points() {
        let a = Complex64::new(0.1, 0.1);
        let b = Complex64::new(0.3, 0.3);
        let c = Complex64::new(0.7, 0.7);
        assert_eq!(orient(a, b, c), Ordering::Equal);
        assert_eq!(orient(a, b, Complex64::new(0.7, 0.7000000000000001)), Ordering::Greater);
    }

    #[test]
    fn crossing_square() {
        let bow = [
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 1.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 1.0),
        ];
        assert_eq!(self_intersections(&bow), vec![(0, 2)]);
        let square = [
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(1.0, 1.0),
            Complex64::new(0.0, 1.0),
        ];
        assert!(self_intersections(&square).is_empty());
    }
}
