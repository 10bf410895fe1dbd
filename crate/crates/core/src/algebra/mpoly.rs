use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::cpoly::CPoly;
use super::rational::Rational;

/// Commutative coefficient ring for [`MPoly`].
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_rational(r: Rational) -> Self;
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
}

impl Ring for CPoly {
    fn zero() -> Self {
        CPoly::zero()
    }
    fn one() -> Self {
        CPoly::one()
    }
    fn is_zero(&self) -> bool {
        CPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(r: Rational) -> Self {
        CPoly::constant(r)
    }
}

/// Coefficient rings that are fields.
pub trait FieldOps: Ring {
    fn field_div(&self, o: &Self) -> Self;
}

impl FieldOps for Rational {
    fn field_div(&self, o: &Self) -> Self {
        self / o
    }
}

/// Sparse multivariate polynomial in a fixed number of variables.
#[derive(Clone, PartialEq)]
pub struct MPoly<R: Ring> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, R>,
}

impl<R: Ring> MPoly<R> {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, r: R) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], r);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, R::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, R::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &R)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, coeff: R) {
        debug_assert_eq!(exps.len(), self.nvars);
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(c) => {
                let s = c.add(&coeff);
                if s.is_zero() {
                    self.terms.remove(&exps);
                } else {
                    *c = s;
                }
            }
            None => {
                self.terms.insert(exps, coeff);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, r: &R) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.mul(r));
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_term(e2, c.mul(&R::from_rational(Rational::from_integer(e[i].into()))));
        }
        out
    }

    /// Constant term when the polynomial has no variable dependence.
    pub fn as_constant(&self) -> Option<R> {
        match self.terms.len() {
            0 => Some(R::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Exact quotient by `(x_i - x_j)` if it divides, else `None`.
    pub fn div_by_difference(&self, i: usize, j: usize) -> Option<Self> {
        // Each part homogeneous in (x_i, x_j) with the other exponents fixed is
        // divided on its own: for sum_a c_a x_i^a x_j^(s-a), the quotient
        // coefficients satisfy q_(a-1) = c_a + q_a and c_0 = -q_0.
        if self.terms.is_empty() {
            return None;
        }
        let mut parts: BTreeMap<(Vec<u32>, u32), BTreeMap<u32, R>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            rest[i] = 0;
            rest[j] = 0;
            parts.entry((rest, e[i] + e[j])).or_default().insert(e[i], c.clone());
        }
        let mut quotient = Self::zero(self.nvars);
        for ((rest, s), coeffs) in parts {
            if s == 0 {
                return None;
            }
            let mut q = R::zero();
            for a in (1..=s).rev() {
                if let Some(c) = coeffs.get(&a) {
                    q = q.add(c);
                }
                if !q.is_zero() {
                    let mut e = rest.clone();
                    e[i] = a - 1;
                    e[j] = s - a;
                    quotient.terms.insert(e, q.clone());
                }
            }
            let c0 = coeffs.get(&0).cloned().unwrap_or_else(R::zero);
            if !c0.add(&q).is_zero() {
                return None;
            }
        }
        Some(quotient)
    }

    /// Lex-leading term.
    pub fn leading(&self) -> Option<(&Vec<u32>, &R)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / d` if `d` divides `self`, by division on
    /// lex-leading terms. Only meaningful over a field of coefficients.
    pub fn div_exact(&self, d: &Self) -> Option<Self>
    where
        R: FieldOps,
    {
        let (de, dc) = d.leading()?;
        let (de, dc) = (de.clone(), dc.clone());
        let mut r = self.clone();
        let mut q = Self::zero(self.nvars);
        while let Some((re, rc)) = r.leading() {
            if re.iter().zip(&de).any(|(a, b)| a < b) {
                return None;
            }
            let e: Vec<u32> = re.iter().zip(&de).map(|(a, b)| a - b).collect();
            let c = rc.field_div(&dc);
            let mut t = Self::zero(self.nvars);
            t.add_term(e, c);
            q = q.add(&t);
            r = r.sub(&t.mul(d));
        }
        Some(q)
    }

    /// Substitutes every variable and folds into the coefficient ring.
    pub fn eval(&self, values: &[R]) -> R {
        let mut acc = R::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (v, &k) in values.iter().zip(e) {
                for _ in 0..k {
                    t = t.mul(v);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> MPoly<S> {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }
}

impl<R: Ring> fmt::Debug for MPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};
    use proptest::prelude::*;

    type P = MPoly<Rational>;

    #[test]
    fn exact_division() {
        let x = P::var(2, 0);
        let y = P::var(2, 1);
        let a = x.mul(&y).add(&P::constant(2, int(2)));
        let b = x.sub(&y.mul(&y)).add(&P::constant(2, rat(1, 3)));
        assert_eq!(a.mul(&b).div_exact(&b), Some(a.clone()));
        assert_eq!(a.mul(&b).div_exact(&a), Some(b.clone()));
        assert!(a.div_exact(&b).is_none());
    }

    #[test]
    fn synthetic_division_by_difference() {
        let x = P::var(2, 0);
        let y = P::var(2, 1);
        let d = x.sub(&y);
        let n = d.mul(&d).mul(&x.add(&P::constant(2, int(3))));
        let q = n.div_by_difference(0, 1).unwrap();
        assert_eq!(q.mul(&d), n);
        assert!(x.add(&y).div_by_difference(0, 1).is_none());
        assert!(P::constant(2, int(1)).div_by_difference(0, 1).is_none());
    }

    fn arb_poly() -> impl Strategy<Value = P> {
        prop::collection::vec(((0u32..3, 0u32..3), -9i64..9), 0..5).prop_map(|ts| {
            let mut p = P::zero(2);
            for ((a, b), c) in ts {
                p.add_term(vec![a, b], rat(c, 2));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.add(&b).sub(&b), a.clone());
        }

        #[test]
        fn leibniz(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!(
                a.mul(&b).derivative(0),
                a.derivative(0).mul(&b).add(&a.mul(&b.derivative(0)))
            );
        }
    }
}
