use super::functional::{tbox_value, FunctionalKind};
use crate::algebra::{factorial, falling_factorial, rat, Rational};
use crate::error::{Error, Result};
use crate::ward::{Jet, MapExpr, Scalar, SymFn};

/// Series in `δ = u^k` of the solution `y` of `y + δ y^{1-k} = x`, the
/// preimage of `w + x` under `g_{k,w}` measured from `w`. Computed by
/// fixed-point iteration `y ← x - δ y^{1-k}` on truncated series, each
/// pass fixing one more coefficient.
pub fn lagrange_series<F: Scalar>(k: u32, x: &F, order: usize) -> Result<Jet<F>> {
    if x.is_zero() {
        return Err(Error::Pole("inverse series at the center".into()));
    }
    let mut y = Jet::constant(x.clone(), order);
    for _ in 0..order {
        let p = y.powi(1 - k as i32)?;
        let mut next = vec![x.clone()];
        next.extend(p.coeffs()[..order].iter().map(F::neg));
        y = Jet::from_coeffs(next);
    }
    Ok(y)
}

/// `(-1)^m (m - km)_{m-1} / m!`: the coefficient of `δ^m x^{1-km}` in the
/// inverse series.
pub fn lagrange_coefficient(k: u32, m: u32) -> Rational {
    if m == 0 {
        return rat(1, 1);
    }
    let ff = falling_factorial(i64::from(m) - i64::from(k) * i64::from(m), m - 1);
    let c = Rational::new(ff, factorial(u64::from(m)));
    if m.is_multiple_of(2) { c } else { -c }
}

/// Compares, for `1 <= m <= m_max`, the `δ^m` coefficient of the inverse
/// series with `□̃^{(m)}[ĥ_{k,w}] ev / m!`, both as exact functions of a
/// symbolic `z₀` and with `w` fixed to the given rational.
pub fn symbolic_inverse_check(k: u32, w: &Rational, m_max: u32) -> Result<Vec<bool>> {
    let z0 = SymFn::w();
    let x = z0.sub(&SymFn::constant(w.clone()));
    let series = lagrange_series(k, &x, m_max as usize)?;
    (1..=m_max)
        .map(|m| {
            let predicted = tbox_value(FunctionalKind::EvaluationAt, &z0, m, k, MapExpr::rational(w.clone()))?;
            let scaled = series.coeff(m as usize).mul(&SymFn::constant(Rational::from(factorial(u64::from(m)))));
            Ok(scaled == predicted)
        })
        .collect()
}
