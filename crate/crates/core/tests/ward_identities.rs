use hypotrochoid_core::algebra::{int, CPoly, PointRational};
use hypotrochoid_core::virasoro::{descendant, PBWVector};
use hypotrochoid_core::ward::{sphere_correlator, Insertion};

fn insert(states: &[PBWVector]) -> Vec<Insertion> {
    states.iter().enumerate().map(|(i, s)| Insertion::new(s.clone(), format!("w{i}"))).collect()
}

/// `Σ_i w_i^p ∂_i f + p Σ_i h_i w_i^(p-1) f`, the global generator `L_{p-1}`.
fn global(f: &PointRational, weights: &[i64], p: u32) -> PointRational {
    let n = weights.len();
    let mut out = PointRational::zero(n);
    for (i, &h) in weights.iter().enumerate() {
        let mut wp = PointRational::one(n);
        for _ in 0..p {
            wp = wp.mul(&PointRational::var(n, i));
        }
        out = out.add(&wp.mul(&f.derivative(i)));
        if p > 0 {
            let mut wq = PointRational::one(n);
            for _ in 1..p {
                wq = wq.mul(&PointRational::var(n, i));
            }
            out = out.add(&wq.mul(f).scale(&CPoly::constant(int(p as i64 * h))));
        }
    }
    out
}

#[test]
fn translation_and_dilation_for_descendants() {
    let t22 = descendant(2, 2).unwrap();
    let cases = [
        vec![PBWVector::mode(2), PBWVector::mode(3), PBWVector::mode(3)],
        vec![t22, PBWVector::mode(2), PBWVector::mode(4)],
        vec![PBWVector::mode(4), PBWVector::mode(2), PBWVector::mode(2), PBWVector::mode(2)],
    ];
    for states in cases {
        let weights: Vec<i64> = states.iter().map(|s| s.homogeneous_weight().unwrap()).collect();
        let f = sphere_correlator(&insert(&states)).unwrap();
        assert!(!f.is_zero());
        assert!(global(&f, &weights, 0).is_zero(), "translation {weights:?}");
        assert!(global(&f, &weights, 1).is_zero(), "dilation {weights:?}");
    }
}

#[test]
fn special_conformal_for_quasi_primaries() {
    // T = L_{-2}|0> is quasi-primary; L_{-3}|0> = ∂T is not
    for n in 2..=4 {
        let states = vec![PBWVector::mode(2); n];
        let f = sphere_correlator(&insert(&states)).unwrap();
        assert!(global(&f, &vec![2; n], 2).is_zero(), "{n} stress tensors");
    }
    let states = [PBWVector::mode(3), PBWVector::mode(2), PBWVector::mode(2)];
    let f = sphere_correlator(&insert(&states)).unwrap();
    assert!(!global(&f, &[3, 2, 2], 2).is_zero());
}
