use num_complex::Complex64;

use crate::algebra::Rational;
use crate::ward::Scalar;

/// Multilinear polynomial in nilpotent parameters `t_1, t_2, ...` with
/// `t_i^2 = 0`. Entry `mask` is the coefficient of `Π_{i ∈ mask} t_i`.
/// Shorter coefficient vectors are padded with zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct Multi<F> {
    coeffs: Vec<F>,
}

impl<F: Scalar> Multi<F> {
    pub fn constant(a: F) -> Self {
        Multi { coeffs: vec![a] }
    }

    /// The parameter `t_i`, counting from zero.
    pub fn param(i: usize) -> Self {
        let mut coeffs = vec![F::zero(); 1 << (i + 1)];
        coeffs[1 << i] = F::one();
        Multi { coeffs }
    }

    pub fn coeff(&self, mask: usize) -> F {
        self.coeffs.get(mask).cloned().unwrap_or_else(F::zero)
    }

    fn nilpotent(&self) -> Self {
        let mut n = self.clone();
        n.coeffs[0] = F::zero();
        n
    }

    fn depth(&self) -> u32 {
        self.coeffs.len().trailing_zeros()
    }

    fn zip(&self, o: &Self, f: impl Fn(&F, &F) -> F) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Multi { coeffs: (0..n).map(|i| f(&self.coeff(i), &o.coeff(i))).collect() }
    }

    fn scale(&self, a: &F) -> Self {
        Multi { coeffs: self.coeffs.iter().map(|c| c.mul(a)).collect() }
    }

    /// `Σ_i a_i n^i` with `n` nilpotent, truncated where `n^i` vanishes.
    fn series(n: &Self, a: impl Fn(u32) -> F) -> Self {
        let mut out = Self::constant(a(0));
        let mut pw = Self::constant(F::one());
        for i in 1..=n.depth() {
            pw = pw.mul(n);
            out = out.add(&pw.scale(&a(i)));
        }
        out
    }
}

impl<F: Scalar> Scalar for Multi<F> {
    fn zero() -> Self {
        Self::constant(F::zero())
    }
    fn one() -> Self {
        Self::constant(F::one())
    }
    fn from_rational(r: &Rational) -> Self {
        Self::constant(F::from_rational(r))
    }
    fn from_complex(z: Complex64) -> Option<Self> {
        F::from_complex(z).map(Self::constant)
    }
    fn add(&self, o: &Self) -> Self {
        self.zip(o, F::add)
    }
    fn sub(&self, o: &Self) -> Self {
        self.zip(o, F::sub)
    }
    fn mul(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut out = vec![F::zero(); n];
        for (a, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in o.coeffs.iter().enumerate() {
                if a & b == 0 && !y.is_zero() {
                    out[a | b] = out[a | b].add(&x.mul(y));
                }
            }
        }
        Multi { coeffs: out }
    }
    fn div(&self, o: &Self) -> Option<Self> {
        let inv0 = F::one().div(&o.coeffs[0])?;
        let q = o.nilpotent().scale(&inv0);
        let recip = Self::series(&q, |i| if i % 2 == 0 { inv0.clone() } else { inv0.neg() });
        Some(self.mul(&recip))
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(F::is_zero)
    }
    fn exp(&self) -> Option<Self> {
        let e0 = self.coeffs[0].exp()?;
        let mut fact = F::one();
        let mut inv_fact = vec![F::one()];
        for i in 1..=self.depth() {
            fact = fact.mul(&F::from_i64(i64::from(i)));
            inv_fact.push(F::one().div(&fact)?);
        }
        Some(Self::series(&self.nilpotent(), |i| inv_fact[i as usize].clone()).scale(&e0))
    }
    fn ln(&self) -> Option<Self> {
        let l0 = self.coeffs[0].ln()?;
        let inv0 = F::one().div(&self.coeffs[0])?;
        let q = self.nilpotent().scale(&inv0);
        let mut out = Self::series(&q, |i| {
            if i == 0 {
                F::zero()
            } else {
                let s = F::one().div(&F::from_i64(i64::from(i))).expect("nonzero index");
                if i % 2 == 1 { s } else { s.neg() }
            }
        });
        out.coeffs[0] = l0;
        Some(out)
    }
    fn close_to(&self, o: &Self, tol: f64) -> bool {
        let n = self.coeffs.len().max(o.coeffs.len());
        (0..n).all(|i| self.coeff(i).close_to(&o.coeff(i), tol))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    type M = Multi<Rational>;

    #[test]
    fn parameters_are_nilpotent() {
        let t = M::param(1);
        assert!(t.mul(&t).is_zero());
        let s = M::param(0).add(&t);
        assert_eq!(s.mul(&s).coeff(3), int(2));
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = M::constant(int(3)).add(&M::param(0)).add(&M::param(2).scale(&rat(1, 2)));
        let b = M::constant(int(-2)).add(&M::param(1).scale(&int(5))).add(&M::param(0).mul(&M::param(2)));
        let q = a.div(&b).unwrap();
        assert!(q.mul(&b).close_to(&a, 0.0));
    }

    #[test]
    fn exp_and_ln_on_nilpotents() {
        let x = Multi::<Complex64>::constant(Complex64::new(0.4, 0.1))
            .add(&Multi::param(0))
            .add(&Multi::param(1).mul(&Multi::param(0)));
        let back = x.exp().unwrap().ln().unwrap();
        assert!(back.close_to(&x, 1e-14));
    }
}
