use std::collections::BTreeMap;

use hypotrochoid_core::algebra::{int, rat, CPoly, Rational};
use hypotrochoid_core::virasoro::*;

fn word(w: &[i32]) -> PBWVector {
    normal_order(&[(w.to_vec(), CPoly::one())])
}

fn sym(k: u32, m: u32, d: u32) -> DescendantSymbol {
    DescendantSymbol { k, m, derivative_order: d }
}

fn combo(nz: &mut Normalizer, terms: &[(DescendantSymbol, Rational)]) -> PBWVector {
    terms
        .iter()
        .fold(PBWVector::zero(), |acc, (s, c)| acc.add(&s.vector_with(nz).scale_rational(c)))
}

#[test]
fn adjacent_modes_identity() {
    let mut nz = Normalizer::new();
    for k in 2..=6u32 {
        let k64 = k as i64;
        let target = word(&[-(k as i32) - 1, -(k as i32)]);
        let f = rat(1, 2 * (k64 - 1));
        let rhs = combo(&mut nz, &[(sym(k, 2, 1), f.clone()), (sym(2 * k + 1, 1, 0), -f * int(2 * k64 * (k64 - 1)))]);
        assert_eq!(rhs, target, "k = {k}");
    }
}

#[test]
fn gap_two_identity() {
    let mut nz = Normalizer::new();
    for k in 2..=6u32 {
        let k64 = k as i64;
        let target = word(&[-(k as i32) - 2, -(k as i32)]);
        let f = rat(1, 2 * k64 * (k64 - 1));
        let rhs = combo(
            &mut nz,
            &[
                (sym(k, 2, 2), f.clone()),
                (sym(k + 1, 2, 0), -f.clone() * int(2 * (k64 - 1) * (k64 - 1))),
                (sym(2 * k + 2, 1, 0), -f * int(2 * k64 * (k64 - 1) * (k64 + 1))),
            ],
        );
        assert_eq!(rhs, target, "k = {k}");
    }
}

#[test]
fn solver_matches_identities() {
    let mut nz = Normalizer::new();
    for k in 2..=5u32 {
        let t = word(&[-(k as i32) - 1, -(k as i32)]);
        let sol = hypotrochoid_basis_solve_with(&mut nz, &t, 16).unwrap();
        assert_eq!(sol.reconstruct(&mut nz).unwrap(), t);
        let map: BTreeMap<_, _> = sol.terms().unwrap().iter().cloned().collect();
        assert!(map.values().all(|c| c.as_constant().is_some()));
    }
}
