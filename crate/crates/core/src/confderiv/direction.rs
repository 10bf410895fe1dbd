use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{int, Rational};

/// Monomial `prod_a (∂^a h)^{e_a}`, stored as the exponent vector with no
/// trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// `h (∂h)^n`.
    pub fn h_dh_pow(n: u32) -> Self {
        Self::new(vec![1, n])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, a: usize) -> u32 {
        self.0.get(a).copied().unwrap_or(0)
    }

    /// Number of factors of `h` and its derivatives.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Total number of derivatives, `Σ a e_a`.
    pub fn derivative_weight(&self) -> u32 {
        self.0.iter().enumerate().map(|(a, &e)| a as u32 * e).sum()
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        Self::new((0..n).map(|a| self.exponent(a) + o.exponent(a)).collect())
    }

    /// Symbol name of `∂^a h` used in JSON dumps.
    pub fn symbol(a: usize) -> String {
        format!("H{a}")
    }

    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(a, &e)| (Self::symbol(a), e.into()))
            .collect();
        serde_json::Value::Object(map)
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree()
            .cmp(&o.degree())
            .then(self.derivative_weight().cmp(&o.derivative_weight()))
            .then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (a, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let base = match a {
                0 => "h".to_string(),
                1 => "∂h".to_string(),
                a => format!("∂^{a}h"),
            };
            match (e, a) {
                (1, _) => write!(f, "{base}")?,
                (e, 0) => write!(f, "{base}^{e}")?,
                (e, _) => write!(f, "({base})^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Differential polynomial in `h` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DirectionPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl DirectionPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    /// The direction `h` itself.
    pub fn h() -> Self {
        Self::monomial(Monomial::new(vec![1]), Rational::one())
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&int(-1)))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * r);
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    /// Formal derivative `∂`, by the Leibniz rule on `∂^a h -> ∂^{a+1} h`.
    pub fn derivative(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            for (a, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let mut exps = m.0.clone();
                exps[a] -= 1;
                if exps.len() <= a + 1 {
                    exps.resize(a + 2, 0);
                }
                exps[a + 1] += 1;
                out.add_term(Monomial::new(exps), c * int(e as i64));
            }
        }
        out
    }

    /// Divides by `h`; every monomial must contain `h`.
    pub fn div_h(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            assert!(m.exponent(0) > 0, "{m} is not divisible by h");
            let mut exps = m.0.clone();
            exps[0] -= 1;
            out.add_term(Monomial::new(exps), c.clone());
        }
        out
    }

    /// Witt bracket of directions, `μ ∂ν - ν ∂μ`.
    pub fn witt_bracket(&self, o: &Self) -> Self {
        self.mul(&o.derivative()).sub(&o.mul(&self.derivative()))
    }
}

impl From<Monomial> for DirectionPoly {
    fn from(m: Monomial) -> Self {
        Self::monomial(m, Rational::one())
    }
}

impl fmt::Display for DirectionPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| if c.is_one() { m.to_string() } else { format!("({c}){m}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for DirectionPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
