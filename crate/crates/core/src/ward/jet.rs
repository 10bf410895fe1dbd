use super::scalar::Scalar;
use crate::algebra::int;
use crate::error::{Error, Result};

/// Truncated Taylor series `Σ_{n<=N} a_n t^n`.
#[derive(Clone, Debug)]
pub struct Jet<F> {
    coeffs: Vec<F>,
}

impl<F: Scalar> Jet<F> {
    pub fn constant(a: F, order: usize) -> Self {
        let mut coeffs = vec![F::zero(); order + 1];
        coeffs[0] = a;
        Jet { coeffs }
    }

    /// The jet of the identity at `x0`: `x0 + t`.
    pub fn variable(x0: F, order: usize) -> Self {
        let mut j = Self::constant(x0, order);
        if order >= 1 {
            j.coeffs[1] = F::one();
        }
        j
    }

    pub fn from_coeffs(coeffs: Vec<F>) -> Self {
        assert!(!coeffs.is_empty(), "a jet has at least a constant term");
        Jet { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> F {
        self.coeffs.get(n).cloned().unwrap_or_else(F::zero)
    }

    pub fn value(&self) -> &F {
        &self.coeffs[0]
    }

    /// `n!` times the `n`-th coefficient.
    pub fn derivative_value(&self, n: usize) -> F {
        let mut f = F::one();
        for i in 2..=n {
            f = f.mul(&F::from_i64(i as i64));
        }
        self.coeff(n).mul(&f)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        Jet { coeffs: (0..=n).map(|i| self.coeffs[i].add(&o.coeffs[i])).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        Jet { coeffs: (0..=n).map(|i| self.coeffs[i].sub(&o.coeffs[i])).collect() }
    }

    pub fn neg(&self) -> Self {
        Jet { coeffs: self.coeffs.iter().map(F::neg).collect() }
    }

    pub fn scale(&self, a: &F) -> Self {
        Jet { coeffs: self.coeffs.iter().map(|c| c.mul(a)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        let coeffs = (0..=n)
            .map(|i| (0..=i).fold(F::zero(), |acc, j| acc.add(&self.coeffs[j].mul(&o.coeffs[i - j]))))
            .collect();
        Jet { coeffs }
    }

    pub fn recip(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        let b0 = F::one().div(a0).ok_or_else(|| Error::Pole("reciprocal of a jet vanishing at its base point".into()))?;
        let mut b = vec![b0.clone()];
        for n in 1..=self.order() {
            let s = (1..=n).fold(F::zero(), |acc, j| acc.add(&self.coeffs[j].mul(&b[n - j])));
            b.push(s.mul(&b0).neg());
        }
        Ok(Jet { coeffs: b })
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.recip()?))
    }

    pub fn powi(&self, n: i32) -> Result<Self> {
        let base = if n < 0 { self.recip()? } else { self.clone() };
        let mut out = Self::constant(F::one(), self.order());
        let mut sq = base;
        let mut e = n.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&sq);
            }
            sq = sq.mul(&sq);
            e >>= 1;
        }
        Ok(out)
    }

    pub fn exp(&self) -> Result<Self> {
        let b0 = self.coeffs[0]
            .exp()
            .ok_or_else(|| Error::Unsupported(format!("exp of {:?} leaves the value field", self.coeffs[0])))?;
        let mut b = vec![b0];
        for n in 1..=self.order() {
            let s = (1..=n).fold(F::zero(), |acc, j| {
                acc.add(&F::from_i64(j as i64).mul(&self.coeffs[j]).mul(&b[n - j]))
            });
            b.push(s.mul(&F::from_rational(&(int(1) / int(n as i64)))));
        }
        Ok(Jet { coeffs: b })
    }

    pub fn ln(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        let b0 = a0
            .ln()
            .ok_or_else(|| Error::Unsupported(format!("log of {a0:?} leaves the value field")))?;
        let inv = F::one().div(a0).ok_or_else(|| Error::Singular("log at zero".into()))?;
        let mut b = vec![b0];
        for n in 1..=self.order() {
            let s = (1..n).fold(F::zero(), |acc, j| {
                acc.add(&F::from_i64(j as i64).mul(&b[j]).mul(&self.coeffs[n - j]))
            });
            let t = self.coeffs[n].sub(&s.mul(&F::from_rational(&(int(1) / int(n as i64)))));
            b.push(t.mul(&inv));
        }
        Ok(Jet { coeffs: b })
    }

    /// `d/dt`; the order drops by one.
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::constant(F::zero(), 0);
        }
        Jet { coeffs: (1..=self.order()).map(|n| self.coeffs[n].mul(&F::from_i64(n as i64))).collect() }
    }

    pub fn truncate(&self, order: usize) -> Self {
        Jet { coeffs: self.coeffs[..=order.min(self.order())].to_vec() }
    }

    /// Evaluates the series at a small increment: `Σ a_n δ^n`.
    pub fn eval_series(&self, delta: &F) -> F {
        self.coeffs.iter().rev().fold(F::zero(), |acc, a| acc.mul(delta).add(a))
    }

    /// Given the jet of `g` at `w` (coefficients in `t`, with `t` the
    /// displacement from `w`), returns the jet of `g^{-1}` at `g(w)`,
    /// with constant term `w`.
    pub fn revert(&self, w: &F) -> Result<Self> {
        let n = self.order();
        let b1 = self.coeff(1);
        let inv_b1 = F::one().div(&b1).ok_or_else(|| Error::Domain("map is not invertible: zero derivative".into()))?;
        // T(u) = Σ_{i>=1} d_i u^i with G(T(u)) = u, G(t) = g(w + t) - g(w)
        let mut d = vec![F::zero(); n + 1];
        if n >= 1 {
            d[1] = inv_b1.clone();
        }
        for m in 2..=n {
            let t = Jet { coeffs: d.clone() };
            let mut gt = Self::constant(F::zero(), n);
            let mut pw = t.clone();
            for i in 1..=n {
                gt = gt.add(&pw.scale(&self.coeff(i)));
                pw = pw.mul(&t);
            }
            d[m] = gt.coeff(m).mul(&inv_b1).neg();
        }
        d[0] = w.clone();
        Ok(Jet { coeffs: d })
    }

    /// `Σ_n self_n (inner - inner_0)^n`: composes a jet taken at
    /// `inner_0` with an inner jet.
    pub fn compose(&self, inner: &Self) -> Self {
        let n = inner.order();
        let mut shift = inner.clone();
        shift.coeffs[0] = F::zero();
        let mut out = Self::constant(F::zero(), n);
        let mut pw = Self::constant(F::one(), n);
        for k in 0..=self.order().min(n) {
            out = out.add(&pw.scale(&self.coeffs[k]));
            pw = pw.mul(&shift);
        }
        out
    }
}
