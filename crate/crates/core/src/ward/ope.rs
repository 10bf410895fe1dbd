use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{binomial, CPoly, Rational};
use crate::error::{domain, Result};
use crate::virasoro::{hypotrochoid_basis_solve_with, BasisSolution, Normalizer, PBWVector};

/// Coefficient field of one power of `(x - y)` in an operator product.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum OpeCoefficient {
    /// A multiple of the identity.
    Identity(CPoly),
    Fields { state: PBWVector, basis: BasisSolution },
}

/// `T_{k,1}(x) T_{k',1}(y) = Σ_n C(-n-2, k-2) (L_n T_{k',1})(y) (x-y)^{-n-k}`,
/// keyed by pole order `n + k`. The whole singular part is returned plus
/// `depth` regular orders `0, -1, ...`. States beyond `weight_cap` are
/// kept but reported as not representable.
pub fn ope_tk1(k: u32, kp: u32, depth: u32, weight_cap: u32) -> Result<BTreeMap<i32, OpeCoefficient>> {
    if k < 2 || kp < 2 {
        return domain(format!("OPE needs k, k' >= 2, got {k}, {kp}"));
    }
    let (k, kp) = (k as i32, kp as i32);
    let mut nz = Normalizer::new();
    let b = PBWVector::mode(kp);
    let mut out = BTreeMap::new();
    let lowest = 1 - depth as i32;
    for order in (lowest..=k + kp).rev() {
        let n = order - k;
        let coeff: Rational = binomial((-n - 2) as i64, (k - 2) as u32);
        let state = nz.apply(n, &b).scale_rational(&coeff);
        if state.is_zero() {
            continue;
        }
        let entry = match state.homogeneous_weight() {
            Some(0) => OpeCoefficient::Identity(state.vacuum_coeff()),
            Some(w) if w > weight_cap as i64 => {
                OpeCoefficient::Fields { state, basis: BasisSolution::NotRepresentable }
            }
            _ => {
                let basis = hypotrochoid_basis_solve_with(&mut nz, &state, weight_cap)?;
                OpeCoefficient::Fields { state, basis }
            }
        };
        out.insert(order, entry);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};
    use crate::virasoro::DescendantSymbol;

    #[test]
    fn stress_tensor_ope() {
        let ope = ope_tk1(2, 2, 0, 16).unwrap();
        assert_eq!(ope[&4], OpeCoefficient::Identity(CPoly::c().scale(&rat(1, 2))));
        assert!(!ope.contains_key(&3));
        let sym = |k, m| DescendantSymbol { k, m, derivative_order: 0 };
        match &ope[&2] {
            OpeCoefficient::Fields { basis, .. } => {
                assert_eq!(basis.terms().unwrap(), &[(sym(2, 1), CPoly::constant(int(2)))])
            }
            other => panic!("{other:?}"),
        }
        // L_{-1} T = L_{-3} 1 = T_{3,1} = ∂T_{2,1}
        match &ope[&1] {
            OpeCoefficient::Fields { basis, .. } => assert_eq!(basis.terms().unwrap(), &[(sym(3, 1), CPoly::one())]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn regular_terms() {
        let ope = ope_tk1(2, 2, 1, 16).unwrap();
        // pole order 0: L_{-2} L_{-2} 1
        match &ope[&0] {
            OpeCoefficient::Fields { state, basis } => {
                assert_eq!(state.homogeneous_weight(), Some(4));
                assert!(basis.terms().is_some());
            }
            other => panic!("{other:?}"),
        }
    }
}
