use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::boxes::derive_tbox;
use super::operator::OperatorSum;
use crate::algebra::{falling_factorial, CPoly, Rational};
use crate::error::{domain, Result};
use crate::virasoro::ModeWord;

/// `Δ[h_{ℓ_1,w}] ... Δ[h_{ℓ_j,w}]` as the label list.
pub type DeltaWord = Vec<i32>;

/// Linear combination of [`DeltaWord`]s. `conjugate` marks the
/// antiholomorphic sector `Δ̄`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct DeltaSum {
    terms: BTreeMap<DeltaWord, Rational>,
    conjugate: bool,
}

impl DeltaSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, w: DeltaWord, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DeltaWord, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &[i32]) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_conjugate(&self) -> bool {
        self.conjugate
    }

    /// `Δ <-> Δ̄`; coefficients are real so they are unchanged.
    pub fn conjugated(&self) -> Self {
        DeltaSum { terms: self.terms.clone(), conjugate: !self.conjugate }
    }

    /// `Δ[h_ℓ] -> L_ℓ` with word order kept; only defined on the
    /// holomorphic sector.
    pub fn to_mode_words(&self) -> Result<Vec<(ModeWord, CPoly)>> {
        if self.conjugate {
            return domain("the antiholomorphic sector has no holomorphic mode image");
        }
        Ok(self.terms.iter().map(|(w, c)| (w.clone(), CPoly::constant(c.clone()))).collect())
    }
}

impl fmt::Display for DeltaSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let d = if self.conjugate { "Δ̄" } else { "Δ" };
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let word: String = w.iter().map(|l| format!("{d}[h_{{{l}}}]")).collect();
                if c.is_one() {
                    word
                } else {
                    format!("({c}) {word}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for DeltaSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Substitutes `h = (z - w)^{1-k}` into a holomorphic operator. A monomial
/// `prod (∂^a h)^{e_a}` becomes `κ (z-w)^p = -κ h_{p-1,w}` with
/// `h_{ℓ,w}(z) = -(z-w)^{ℓ+1}`.
pub fn specialize_operator(op: &OperatorSum, k: i64) -> Result<DeltaSum> {
    if k < 2 {
        return domain(format!("hypotrochoid directions need k >= 2, got {k}"));
    }
    let mut out = DeltaSum::zero();
    for (w, c) in op.terms() {
        let mut coeff = c.clone();
        let mut labels = Vec::with_capacity(w.len());
        for m in w {
            let mut power = 0i64;
            for (a, &e) in m.exponents().iter().enumerate() {
                let ff = Rational::from_integer(falling_factorial(1 - k, a as u32));
                for _ in 0..e {
                    coeff *= &ff;
                }
                power += e as i64 * (1 - k - a as i64);
            }
            coeff = -coeff;
            labels.push((power - 1) as i32);
        }
        out.add_term(labels, coeff);
    }
    Ok(out)
}

/// `□̃^(m)` along the hypotrochoid direction of order `k`, in the
/// holomorphic sector.
pub fn specialize_hypotrochoid(m: i64, k: i64) -> Result<DeltaSum> {
    if m < 1 {
        return domain(format!("order must be >= 1, got {m}"));
    }
    specialize_operator(&derive_tbox(m)?, k)
}
