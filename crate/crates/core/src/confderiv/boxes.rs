use std::collections::HashMap;

use num_traits::One;

use super::direction::{DirectionPoly, Monomial};
use super::operator::{OperatorSum, WittNormalizer};
use crate::algebra::{c_coeff, enumerate_compositions, factorial, int, Rational};
use crate::error::{domain, Result};

/// `□^(m)` along `h`.
pub fn derive_box(m: i64) -> Result<OperatorSum> {
    derive_box_along(&DirectionPoly::h(), m)
}

/// `□^(m)` with every argument of the multilinear recursion set to `u`.
pub fn derive_box_along(u: &DirectionPoly, m: i64) -> Result<OperatorSum> {
    if m < 0 {
        return domain(format!("operator order must be >= 0, got {m}"));
    }
    if m == 0 {
        return Ok(OperatorSum::identity());
    }
    let args = vec![u.clone(); m as usize];
    Ok(box_multilinear(&args, &mut HashMap::new()))
}

/// Intermediate operator with `args[0] = h_m` (leftmost) down to `h_1`:
/// `∇_{h_m} B(h_{m-1}..h_1) - Σ_j B(.., h_{j+1} ∂h_j, ..)`.
fn box_multilinear(args: &[DirectionPoly], memo: &mut HashMap<Vec<DirectionPoly>, OperatorSum>) -> OperatorSum {
    if args.len() == 1 {
        return OperatorSum::from_directions(args);
    }
    if let Some(v) = memo.get(args) {
        return v.clone();
    }
    let head = OperatorSum::from_directions(&args[..1]);
    let mut out = head.compose(&box_multilinear(&args[1..], memo));
    for t in 0..args.len() - 1 {
        let mut merged = args[..t].to_vec();
        merged.push(args[t].mul(&args[t + 1].derivative()));
        merged.extend_from_slice(&args[t + 2..]);
        out = out.sub(&box_multilinear(&merged, memo));
    }
    memo.insert(args.to_vec(), out.clone());
    out
}

/// `□̃^(m)` along `h`.
pub fn derive_tbox(m: i64) -> Result<OperatorSum> {
    derive_tbox_along(&DirectionPoly::h(), m)
}

/// `□̃^(m)` with arguments `u` and auxiliary factor `y = ∂h/h`. This is the
/// inverse-map expansion when `u` is a constant multiple of `h`.
pub fn derive_tbox_along(u: &DirectionPoly, m: i64) -> Result<OperatorSum> {
    if m < 0 {
        return domain(format!("operator order must be >= 0, got {m}"));
    }
    if m == 0 {
        return Ok(OperatorSum::identity());
    }
    // A cell holding n original arguments carries y^{n-1} u^n.
    let cells = vec![u.clone(); m as usize];
    Ok(tbox_cells(&cells, &mut HashMap::new()))
}

fn merge_with_y(a: &DirectionPoly, b: &DirectionPoly) -> DirectionPoly {
    // y a b with y = ∂h/h
    let dh = DirectionPoly::from(Monomial::new(vec![0, 1]));
    a.mul(b).mul(&dh).div_h()
}

fn tbox_cells(cells: &[DirectionPoly], memo: &mut HashMap<Vec<DirectionPoly>, OperatorSum>) -> OperatorSum {
    if cells.len() == 1 {
        return OperatorSum::from_directions(cells).scale(&int(-1));
    }
    if let Some(v) = memo.get(cells) {
        return v.clone();
    }
    let head = OperatorSum::from_directions(&cells[..1]).scale(&int(-1));
    let mut out = head.compose(&tbox_cells(&cells[1..], memo));
    for t in 0..cells.len() - 1 {
        let mut merged = cells[..t].to_vec();
        merged.push(merge_with_y(&cells[t], &cells[t + 1]));
        merged.extend_from_slice(&cells[t + 2..]);
        out = out.sub(&tbox_cells(&merged, memo));
    }
    memo.insert(cells.to_vec(), out.clone());
    out
}

/// `(-1)^m Σ_λ C_λ ∇_{h(∂h)^{λ_j-1}} ... ∇_{h(∂h)^{λ_1-1}}`.
pub fn tbox_closed(m: i64) -> Result<OperatorSum> {
    if m < 1 {
        return domain(format!("closed form needs m >= 1, got {m}"));
    }
    let sign = if m % 2 == 0 { int(1) } else { int(-1) };
    let mut out = OperatorSum::zero();
    for lambda in enumerate_compositions(m)? {
        let word: Vec<Monomial> = lambda.parts().iter().rev().map(|&p| Monomial::h_dh_pow(p - 1)).collect();
        out.add_term(word, c_coeff(&lambda) * &sign);
    }
    Ok(out)
}

/// For each order `1..=max_order`, the Witt normal form of
/// `Σ_{m+m'=r} □^(m) □̃^(m') / (m! m'!)`. All entries vanish when the two
/// expansions are mutually inverse.
pub fn composition_check(max_order: i64) -> Result<Vec<OperatorSum>> {
    if max_order < 1 {
        return domain(format!("composition check needs order >= 1, got {max_order}"));
    }
    let boxes: Vec<OperatorSum> = (0..=max_order).map(derive_box).collect::<Result<_>>()?;
    let tboxes: Vec<OperatorSum> = (0..=max_order).map(derive_tbox).collect::<Result<_>>()?;
    let mut nz = WittNormalizer::new();
    let mut out = Vec::new();
    for r in 1..=max_order as usize {
        let mut total = OperatorSum::zero();
        for m in 0..=r {
            let f = Rational::one() / Rational::from_integer(factorial(m as u64) * factorial((r - m) as u64));
            total = total.add(&boxes[m].compose(&tboxes[r - m]).scale(&f));
        }
        out.push(nz.normal_form(&total));
    }
    Ok(out)
}

/// For each order `1..=max_order`, whether `□̃^(m)` equals the antipode
/// of `□^(m)` (reverse every word, sign `(-1)^{length}`) in Witt normal
/// form. On reversal-symmetric forms this is the rule "flip the sign of
/// every single derivative".
pub fn sign_flip_report(max_order: i64) -> Result<Vec<bool>> {
    let mut nz = WittNormalizer::new();
    (1..=max_order)
        .map(|m| {
            let a = nz.normal_form(&derive_box(m)?.antipode());
            Ok(a == nz.normal_form(&derive_tbox(m)?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::confderiv::witt_normal_form;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn op(terms: &[(&[&[u32]], i64)]) -> OperatorSum {
        let mut s = OperatorSum::zero();
        for (w, c) in terms {
            s.add_term(w.iter().map(|e| m(e)).collect(), int(*c));
        }
        s
    }

    const H: &[u32] = &[1];
    const HDH: &[u32] = &[1, 1];
    const HDH2: &[u32] = &[1, 2];
    const H2D2H: &[u32] = &[2, 0, 1];

    #[test]
    fn low_orders() {
        assert_eq!(derive_box(0).unwrap(), OperatorSum::identity());
        assert_eq!(derive_box(1).unwrap(), op(&[(&[H], 1)]));
        assert_eq!(derive_tbox(1).unwrap(), op(&[(&[H], -1)]));
        assert_eq!(derive_box(2).unwrap(), op(&[(&[H, H], 1), (&[HDH], -1)]));
        assert_eq!(derive_tbox(2).unwrap(), op(&[(&[H, H], 1), (&[HDH], 1)]));
        assert_eq!(
            derive_box(3).unwrap(),
            op(&[(&[H, H, H], 1), (&[H, HDH], -2), (&[HDH, H], -1), (&[HDH2], 2), (&[H2D2H], 1)])
        );
        assert_eq!(
            derive_tbox(3).unwrap(),
            op(&[(&[H, H, H], -1), (&[H, HDH], -2), (&[HDH, H], -1), (&[HDH2], -2)])
        );
        assert!(derive_box(-1).is_err());
        assert!(tbox_closed(0).is_err());
    }

    #[test]
    fn closed_form_matches_recursion() {
        for order in 1..=6 {
            assert_eq!(derive_tbox(order).unwrap(), tbox_closed(order).unwrap(), "m = {order}");
        }
    }

    #[test]
    fn symmetrized_third_order() {
        let sym = op(&[(&[H, H, H], 1), (&[HDH2], 2)])
            .add(&op(&[(&[H, HDH], 1), (&[HDH, H], 1)]).scale(&rat(-3, 2)))
            .add(&op(&[(&[H2D2H], 1)]).scale(&rat(1, 2)));
        assert_eq!(witt_normal_form(&sym), witt_normal_form(&derive_box(3).unwrap()));
        let tsym = op(&[(&[H, H, H], -1), (&[HDH2], -2)])
            .add(&op(&[(&[H, HDH], 1), (&[HDH, H], 1)]).scale(&rat(-3, 2)))
            .add(&op(&[(&[H2D2H], 1)]).scale(&rat(-1, 2)));
        assert_eq!(witt_normal_form(&tsym), witt_normal_form(&derive_tbox(3).unwrap()));
    }

    #[test]
    fn composition_vanishes() {
        for (r, res) in composition_check(5).unwrap().iter().enumerate() {
            assert!(res.is_zero(), "order {}: {res}", r + 1);
        }
    }

    #[test]
    fn sign_flip_at_low_order() {
        for order in 1..=3 {
            let a = witt_normal_form(&derive_box(order).unwrap().antipode());
            assert_eq!(a, witt_normal_form(&derive_tbox(order).unwrap()));
        }
    }

    #[test]
    fn multilinear_scaling() {
        for a in [2i64, 3] {
            let u = DirectionPoly::h().scale(&int(a));
            for order in 1..=4 {
                let f = int(a.pow(order as u32));
                assert_eq!(derive_box_along(&u, order).unwrap(), derive_box(order).unwrap().scale(&f));
                assert_eq!(derive_tbox_along(&u, order).unwrap(), derive_tbox(order).unwrap().scale(&f));
            }
        }
    }
}
