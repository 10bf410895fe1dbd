use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::descendant::DescendantSymbol;
use super::pbw::{ModeWord, Normalizer, PBWVector};
use crate::algebra::{CPoly, Rational};
use crate::error::{domain, Result};

/// Outcome of expressing a vector through `∂^d T_{k,m}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum BasisSolution {
    Representable {
        terms: Vec<(DescendantSymbol, CPoly)>,
        /// Whether the candidates at this weight are linearly independent.
        unique: bool,
    },
    NotRepresentable,
}

impl BasisSolution {
    pub fn terms(&self) -> Option<&[(DescendantSymbol, CPoly)]> {
        match self {
            BasisSolution::Representable { terms, .. } => Some(terms),
            BasisSolution::NotRepresentable => None,
        }
    }

    /// Reassembles the vector from the combination.
    pub fn reconstruct(&self, nz: &mut Normalizer) -> Option<PBWVector> {
        let terms = self.terms()?;
        let mut out = PBWVector::zero();
        for (s, c) in terms {
            out = out.add(&s.vector_with(nz).scale(c));
        }
        Some(out)
    }

    pub fn display(&self) -> String {
        let Some(ts) = self.terms() else {
            return "not representable".into();
        };
        if ts.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (sym, c)) in ts.iter().enumerate() {
            let (neg, coeff) = match c.as_constant() {
                Some(r) => {
                    let mag = r.abs();
                    let text = if mag.is_one() {
                        String::new()
                    } else if mag.is_integer() {
                        format!("{mag} ")
                    } else {
                        format!("({mag}) ")
                    };
                    (r.is_negative(), text)
                }
                None => (false, format!("({c}) ")),
            };
            match (idx, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&format!("{coeff}{sym}"));
        }
        out
    }
}

/// Every `∂^d T_{k,m}` of weight `w`, in solve priority: fewer derivatives
/// first, then longer descendants, then smaller `k`. `∂^d T_{k,1}` with
/// `d > 0` is left out since it is a multiple of `T_{k+d,1}`.
pub fn candidates(w: u32) -> Vec<DescendantSymbol> {
    let mut out = Vec::new();
    for k in 2..=w {
        for m in 1..=w / k {
            let d = w - k * m;
            if m == 1 && d > 0 {
                continue;
            }
            out.push(DescendantSymbol { k, m, derivative_order: d });
        }
    }
    out.sort_by_key(|s| (s.derivative_order, std::cmp::Reverse(s.m), s.k));
    out
}

/// Solves `target = Σ a_s ∂^d T_{k,m}` exactly.
///
/// The candidate vectors never involve `c`, so the system over the field
/// of rational functions of `c` splits into one rational system per power
/// of `c` in the target, and the coefficients come out as polynomials.
pub fn hypotrochoid_basis_solve(target: &PBWVector, weight_cap: u32) -> Result<BasisSolution> {
    hypotrochoid_basis_solve_with(&mut Normalizer::new(), target, weight_cap)
}

pub fn hypotrochoid_basis_solve_with(
    nz: &mut Normalizer,
    target: &PBWVector,
    weight_cap: u32,
) -> Result<BasisSolution> {
    if target.is_zero() {
        return Ok(BasisSolution::Representable { terms: Vec::new(), unique: true });
    }
    let Some(w) = target.homogeneous_weight() else {
        return domain("target is not homogeneous in L0-weight");
    };
    if w > weight_cap as i64 {
        return domain(format!("target weight {w} exceeds the cap {weight_cap}"));
    }
    if w < 2 {
        return Ok(BasisSolution::NotRepresentable);
    }
    let cands = candidates(w as u32);
    let vecs: Vec<PBWVector> = cands.iter().map(|s| s.vector_with(nz)).collect();

    let mut rows: BTreeMap<ModeWord, usize> = BTreeMap::new();
    for v in vecs.iter().chain(std::iter::once(target)) {
        for (word, _) in v.terms() {
            let n = rows.len();
            rows.entry(word.clone()).or_insert(n);
        }
    }
    let ndeg = target.terms().filter_map(|(_, c)| c.degree()).max().unwrap_or(0) + 1;
    let ncols = cands.len();
    let mut mat = vec![vec![Rational::zero(); ncols + ndeg]; rows.len()];
    for (j, v) in vecs.iter().enumerate() {
        for (word, c) in v.terms() {
            mat[rows[word]][j] = c.coeff(0);
        }
    }
    for (word, c) in target.terms() {
        for d in 0..ndeg {
            mat[rows[word]][ncols + d] = c.coeff(d);
        }
    }

    let pivots = rref(&mut mat, ncols);
    for row in mat.iter().skip(pivots.len()) {
        if row[ncols..].iter().any(|x| !x.is_zero()) {
            return Ok(BasisSolution::NotRepresentable);
        }
    }
    let mut terms = Vec::new();
    for (r, &col) in pivots.iter().enumerate() {
        let coeff = CPoly::from_coeffs(mat[r][ncols..].to_vec());
        if !coeff.is_zero() {
            terms.push((cands[col], coeff));
        }
    }
    Ok(BasisSolution::Representable { terms, unique: pivots.len() == ncols })
}

/// Row-reduces the first `ncols` columns in place; returns the pivot
/// column of each leading row.
fn rref(mat: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..mat.len()).find(|&i| !mat[i][col].is_zero()) else {
            continue;
        };
        mat.swap(r, p);
        let inv = Rational::from_integer(1.into()) / &mat[r][col];
        for x in mat[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..mat.len() {
            if i != r && !mat[i][col].is_zero() {
                let f = mat[i][col].clone();
                let (src, dst) = if i < r {
                    let (a, b) = mat.split_at_mut(r);
                    (&b[0], &mut a[i])
                } else {
                    let (a, b) = mat.split_at_mut(i);
                    (&a[r], &mut b[0])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    *d -= &f * s;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == mat.len() {
            break;
        }
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat, DEFAULT_WEIGHT_CAP};
    use crate::virasoro::{descendant, normal_order};

    fn sym(k: u32, m: u32, d: u32) -> DescendantSymbol {
        DescendantSymbol { k, m, derivative_order: d }
    }

    fn as_map(sol: &BasisSolution) -> BTreeMap<DescendantSymbol, Rational> {
        sol.terms()
            .unwrap()
            .iter()
            .map(|(s, c)| (*s, c.as_constant().expect("c-independent")))
            .collect()
    }

    #[test]
    fn square_of_mode() {
        for k in 2..=5u32 {
            let t = normal_order(&[(vec![-(k as i32); 2], CPoly::one())]);
            let sol = hypotrochoid_basis_solve(&t, DEFAULT_WEIGHT_CAP).unwrap();
            let expect: BTreeMap<_, _> =
                [(sym(k, 2, 0), int(1)), (sym(2 * k, 1, 0), int(1 - k as i64))].into_iter().collect();
            assert_eq!(as_map(&sol), expect);
        }
    }

    #[test]
    fn cube_of_stress_tensor() {
        let t = normal_order(&[(vec![-2, -2, -2], CPoly::one())]);
        let sol = hypotrochoid_basis_solve(&t, DEFAULT_WEIGHT_CAP).unwrap();
        let expect: BTreeMap<_, _> = [
            (sym(2, 3, 0), int(1)),
            (sym(2, 2, 2), rat(-3, 4)),
            (sym(3, 2, 0), rat(3, 2)),
            (sym(6, 1, 0), int(3)),
        ]
        .into_iter()
        .collect();
        assert_eq!(as_map(&sol), expect);
    }

    #[test]
    fn reconstruction_closure() {
        let mut nz = Normalizer::new();
        for k in 2..=6 {
            for m in 1..=3 {
                let t = descendant(k, m).unwrap();
                let sol = hypotrochoid_basis_solve_with(&mut nz, &t, 18).unwrap();
                let expect: BTreeMap<_, _> = [(sym(k as u32, m as u32, 0), int(1))].into_iter().collect();
                assert_eq!(as_map(&sol), expect, "T[{k},{m}]");
            }
        }
    }

    #[test]
    fn cap_and_homogeneity() {
        let t = descendant(6, 3).unwrap();
        assert!(hypotrochoid_basis_solve(&t, 16).is_err());
        let mixed = PBWVector::mode(2).add(&PBWVector::mode(3));
        assert!(hypotrochoid_basis_solve(&mixed, 16).is_err());
    }

    #[test]
    fn c_dependent_target() {
        let t = PBWVector::mode(4).scale(&CPoly::c());
        let sol = hypotrochoid_basis_solve(&t, 16).unwrap();
        assert_eq!(sol.terms().unwrap(), &[(sym(4, 1, 0), CPoly::c())]);
    }
}
