use super::jet::Jet;
use super::mapexpr::MapExpr;
use super::scalar::Scalar;
use crate::algebra::{factorial, int, Rational};
use crate::error::{Error, Result};

/// `{s,w}` from the Taylor coefficients `a_1, a_2, a_3` of `s` at `w`:
/// `6 a_3 / a_1 - 6 (a_2 / a_1)^2`.
pub fn schwarzian_from_jet<F: Scalar>(jet: &Jet<F>) -> Result<F> {
    let a1 = jet.coeff(1);
    let singular = || Error::Singular(format!("derivative vanishes at {:?}", jet.value()));
    let r3 = jet.coeff(3).div(&a1).ok_or_else(singular)?;
    let r2 = jet.coeff(2).div(&a1).ok_or_else(singular)?;
    let six = F::from_i64(6);
    Ok(six.mul(&r3).sub(&six.mul(&r2).mul(&r2)))
}

/// `{s,w} = s'''/s' - (3/2)(s''/s')^2`.
pub fn schwarzian<F: Scalar>(s: &MapExpr, w: &F) -> Result<F> {
    schwarzian_from_jet(&s.jet_at(w, 3)?)
}

/// `[{s,w}, ∂_w{s,w}, ..., ∂_w^n{s,w}]`.
pub fn schwarzian_derivatives<F: Scalar>(s: &MapExpr, w: &F, n: usize) -> Result<Vec<F>> {
    let jet = s.jet_at(w, n + 3)?;
    let d1 = jet.derivative().truncate(n);
    let d2 = jet.derivative().derivative().truncate(n);
    let d3 = jet.derivative().derivative().derivative().truncate(n);
    let inv = d1.recip().map_err(|_| Error::Singular(format!("derivative vanishes at {w:?}")))?;
    let r2 = d2.mul(&inv);
    let sch = d3.mul(&inv).sub(&r2.mul(&r2).scale(&F::from_rational(&Rational::new(3.into(), 2.into()))));
    Ok((0..=n).map(|k| sch.derivative_value(k)).collect())
}

/// `⟨T_{k,1}(w)⟩` in the domain uniformized by `s`, divided by `c`:
/// `(1/12) (1/(k-2)!) ∂_w^{k-2} {s,w}`.
pub fn one_point_tk1<F: Scalar>(s: &MapExpr, k: u32, w: &F) -> Result<F> {
    if k < 2 {
        return Err(Error::Domain(format!("T[k,1] needs k >= 2, got {k}")));
    }
    let d = schwarzian_derivatives(s, w, (k - 2) as usize)?;
    let f = int(1) / (int(12) * Rational::from_integer(factorial((k - 2) as u64)));
    Ok(d[(k - 2) as usize].mul(&F::from_rational(&f)))
}

/// Both sides of `g'(w)^2 {s∘g^{-1}, g(w)} + {g,w} = {s,w}`.
#[derive(Clone, Debug)]
pub struct TransformationSides<F> {
    pub lhs: F,
    pub rhs: F,
}

pub fn transformation_sides<F: Scalar>(s: &MapExpr, g: &MapExpr, w: &F) -> Result<TransformationSides<F>> {
    let gj = g.jet_at(w, 3)?;
    let ginv = gj.revert(w)?;
    let s_after = s.eval_jet(&ginv)?;
    let pulled = schwarzian_from_jet(&s_after)?;
    let dg = gj.coeff(1);
    let lhs = dg.mul(&dg).mul(&pulled).add(&schwarzian_from_jet(&gj)?);
    let rhs = schwarzian(s, w)?;
    Ok(TransformationSides { lhs, rhs })
}

/// Exact for exact fields, within `tol` (relative) for floats.
pub fn transformation_check<F: Scalar>(s: &MapExpr, g: &MapExpr, w: &F, tol: f64) -> Result<bool> {
    let sides = transformation_sides(s, g, w)?;
    Ok(sides.lhs.close_to(&sides.rhs, tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::ward::SymFn;
    use num_complex::Complex64;

    fn z() -> MapExpr {
        MapExpr::z()
    }

    #[test]
    fn examples() {
        let w = SymFn::w();
        let mob = MapExpr::mobius(int(2), int(1), int(1), int(3));
        assert_eq!(schwarzian(&mob, &w).unwrap(), SymFn::zero());
        let sq = schwarzian(&z().pow(2), &w).unwrap();
        let expect = SymFn::from_rational(&rat(-3, 2)).div(&w.mul(&w)).unwrap();
        assert_eq!(sq, expect);
        assert_eq!(schwarzian(&z().exp(), &w).unwrap(), SymFn::from_rational(&rat(-1, 2)));
        assert!(schwarzian(&z().pow(2), &Complex64::new(0.0, 0.0)).is_err());
    }

    #[test]
    fn one_point_functions() {
        let w = SymFn::w();
        assert_eq!(one_point_tk1(&z().exp(), 2, &w).unwrap(), SymFn::from_rational(&rat(-1, 24)));
        assert_eq!(one_point_tk1(&z().exp(), 3, &w).unwrap(), SymFn::zero());
        for k in 2..6 {
            assert_eq!(one_point_tk1(&z(), k, &w).unwrap(), SymFn::zero());
        }
        // z^2: {s,w} = -3/(2w^2), so the k = 3 value is (1/12) * 3 / w^3
        let v = one_point_tk1(&z().pow(2), 3, &w).unwrap();
        assert_eq!(v, SymFn::from_rational(&rat(1, 4)).div(&w.mul(&w).mul(&w)).unwrap());
    }

    #[test]
    fn transformation_law() {
        let w = SymFn::w();
        let mob = MapExpr::mobius(int(1), int(2), int(-1), int(3));
        for s in [z(), z().exp(), z().pow(3)] {
            assert!(transformation_check(&s, &mob, &w, 0.0).unwrap());
            assert!(transformation_check(&s, &z().pow(2), &w, 0.0).unwrap());
        }
        let p = Complex64::new(1.0, 1.0);
        for g in [z().pow(2), z().exp()] {
            for s in [z(), z().exp()] {
                assert!(transformation_check(&s, &g, &p, 1e-12).unwrap());
            }
        }
        assert!(transformation_check(&z(), &z().exp(), &Complex64::new(0.5, 0.0), 1e-12).unwrap());
        assert!(transformation_check(&z(), &z().pow(2), &Complex64::new(0.0, 0.0), 1e-12).is_err());
    }
}
