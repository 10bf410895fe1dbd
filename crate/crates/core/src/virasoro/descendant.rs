use std::fmt;

use serde::{Deserialize, Serialize};

use super::pbw::{ModeWord, Normalizer, PBWVector};
use crate::algebra::{c_coeff, enumerate_compositions, int, CPoly, Rational};
use crate::error::{domain, Result};

/// `∂^d T_{k,m}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DescendantSymbol {
    pub k: u32,
    pub m: u32,
    pub derivative_order: u32,
}

impl DescendantSymbol {
    pub fn new(k: u32, m: u32, derivative_order: u32) -> Result<Self> {
        if k < 2 || m < 1 {
            return domain(format!("T[{k},{m}] needs k >= 2 and m >= 1"));
        }
        Ok(DescendantSymbol { k, m, derivative_order })
    }

    pub fn weight(&self) -> u32 {
        self.k * self.m + self.derivative_order
    }

    pub fn vector_with(&self, nz: &mut Normalizer) -> PBWVector {
        let mut v = descendant_with(nz, self.k as i32, self.m as i32).expect("validated symbol");
        for _ in 0..self.derivative_order {
            v = nz.apply(-1, &v);
        }
        v
    }

    pub fn vector(&self) -> PBWVector {
        self.vector_with(&mut Normalizer::new())
    }
}

impl fmt::Display for DescendantSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.derivative_order {
            0 => write!(f, "T[{},{}]", self.k, self.m),
            1 => write!(f, "d T[{},{}]", self.k, self.m),
            d => write!(f, "d^{d} T[{},{}]", self.k, self.m),
        }
    }
}

fn check_km(k: i32, m: i32) -> Result<()> {
    if k < 2 {
        return domain(format!("descendant needs k >= 2, got {k}"));
    }
    if m < 1 {
        return domain(format!("descendant needs m >= 1, got {m}"));
    }
    Ok(())
}

/// The defining sum of `T_{k,m}` before normal ordering: one word per
/// composition, `λ = (λ_1..λ_j)` giving `L_{-kλ_j} ... L_{-kλ_1}`.
pub fn descendant_words(k: i32, m: i32) -> Result<Vec<(ModeWord, Rational)>> {
    check_km(k, m)?;
    let mut out = Vec::new();
    for lambda in enumerate_compositions(m as i64)? {
        let parts = lambda.parts();
        let mut coeff = c_coeff(&lambda);
        for _ in 0..(m as usize - parts.len()) {
            coeff *= int(k as i64 - 1);
        }
        let word: ModeWord = parts.iter().rev().map(|&p| -k * p as i32).collect();
        out.push((word, coeff));
    }
    Ok(out)
}

/// `T_{k,m}` as a canonical vector.
pub fn descendant(k: i32, m: i32) -> Result<PBWVector> {
    descendant_with(&mut Normalizer::new(), k, m)
}

pub fn descendant_with(nz: &mut Normalizer, k: i32, m: i32) -> Result<PBWVector> {
    let words = descendant_words(k, m)?;
    let input: Vec<(ModeWord, CPoly)> = words.into_iter().map(|(w, c)| (w, CPoly::constant(c))).collect();
    Ok(nz.normal_order(&input))
}
