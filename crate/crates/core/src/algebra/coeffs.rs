//! The composition coefficients `C_λ`.
//!
//! Two independent recursions are provided: one on the weight alone
//! ([`c_coeff`]) and one simultaneously on weight and length
//! ([`c_coeff_alt`]). They must agree on every composition.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::compositions::Composition;
use super::rational::{factorial, Rational};

pub const DEFAULT_WEIGHT_CAP: u32 = 16;

/// Memo tables for both recursions. Entries are only stored for
/// compositions of weight at most `weight_cap`; heavier ones are computed
/// on the fly.
pub struct CoeffTable {
    weight_cap: u32,
    by_weight: RwLock<HashMap<Vec<u32>, BigInt>>,
    by_length: RwLock<HashMap<Vec<u32>, BigInt>>,
}

impl Default for CoeffTable {
    fn default() -> Self {
        Self::new(DEFAULT_WEIGHT_CAP)
    }
}

impl CoeffTable {
    pub fn new(weight_cap: u32) -> Self {
        CoeffTable {
            weight_cap,
            by_weight: RwLock::new(HashMap::new()),
            by_length: RwLock::new(HashMap::new()),
        }
    }

    pub fn weight_cap(&self) -> u32 {
        self.weight_cap
    }

    pub fn memo_len(&self) -> usize {
        self.by_weight.read().unwrap().len() + self.by_length.read().unwrap().len()
    }

    /// `C_λ = δ_{λ_j,1} C_{(λ_1..λ_{j-1})} + Σ_i (λ_i - 1) C_{(.., λ_i - 1, ..)}`, `C_(1) = 1`.
    pub fn c_coeff(&self, lambda: &Composition) -> Rational {
        Rational::from_integer(self.weight_rec(lambda.parts()))
    }

    /// The weight-and-length recursion with `C_(n) = (n-1)!`.
    pub fn c_coeff_alt(&self, lambda: &Composition) -> Rational {
        Rational::from_integer(self.length_rec(lambda.parts()))
    }

    fn lookup(&self, table: &RwLock<HashMap<Vec<u32>, BigInt>>, parts: &[u32]) -> Option<BigInt> {
        table.read().unwrap().get(parts).cloned()
    }

    fn store(&self, table: &RwLock<HashMap<Vec<u32>, BigInt>>, parts: &[u32], v: &BigInt) {
        if parts.iter().sum::<u32>() <= self.weight_cap {
            table.write().unwrap().insert(parts.to_vec(), v.clone());
        }
    }

    fn weight_rec(&self, parts: &[u32]) -> BigInt {
        if parts == [1] {
            return BigInt::one();
        }
        if let Some(v) = self.lookup(&self.by_weight, parts) {
            return v;
        }
        let j = parts.len();
        let mut total = BigInt::zero();
        if parts[j - 1] == 1 && j > 1 {
            total += self.weight_rec(&parts[..j - 1]);
        }
        let mut reduced = parts.to_vec();
        for i in 0..j {
            if parts[i] > 1 {
                reduced[i] -= 1;
                total += BigInt::from(parts[i] - 1) * self.weight_rec(&reduced);
                reduced[i] += 1;
            }
        }
        self.store(&self.by_weight, parts, &total);
        total
    }

    fn length_rec(&self, parts: &[u32]) -> BigInt {
        let j = parts.len();
        if j == 1 {
            return factorial(parts[0] as u64 - 1);
        }
        if let Some(v) = self.lookup(&self.by_length, parts) {
            return v;
        }
        let head = &parts[..j - 1];
        let mut ell: Vec<u32> = vec![1; j - 1];
        let mut total = BigInt::zero();
        loop {
            // ℓ_j = 1 is implicit for the last part.
            let steps: u32 = head.iter().zip(&ell).map(|(l, e)| l - e).sum::<u32>() + (parts[j - 1] - 1);
            let mut num = factorial(steps as u64) * factorial(parts[j - 1] as u64 - 1);
            let mut den = factorial(parts[j - 1] as u64 - 1);
            for (&l, &e) in head.iter().zip(&ell) {
                num *= factorial(l as u64 - 1);
                den *= factorial((l - e) as u64) * factorial(e as u64 - 1);
            }
            total += num / den * self.length_rec(&ell);
            // next ℓ tuple in odometer order
            let mut pos = 0;
            loop {
                if pos == ell.len() {
                    self.store(&self.by_length, parts, &total);
                    return total;
                }
                if ell[pos] < head[pos] {
                    ell[pos] += 1;
                    break;
                }
                ell[pos] = 1;
                pos += 1;
            }
        }
    }
}

fn default_table() -> &'static CoeffTable {
    static TABLE: OnceLock<CoeffTable> = OnceLock::new();
    TABLE.get_or_init(CoeffTable::default)
}

/// `C_λ` via the weight recursion, memoized in a shared default table.
pub fn c_coeff(lambda: &Composition) -> Rational {
    default_table().c_coeff(lambda)
}

/// `C_λ` via the weight-and-length recursion.
pub fn c_coeff_alt(lambda: &Composition) -> Rational {
    default_table().c_coeff_alt(lambda)
}
