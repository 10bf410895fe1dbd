use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};

use super::direction::{DirectionPoly, Monomial};
use crate::algebra::{int, Rational};

/// `∇_{d_1} ∇_{d_2} ...`, each entry a single monomial direction.
pub type NablaWord = Vec<Monomial>;

/// Linear combination of [`NablaWord`]s.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct OperatorSum {
    terms: BTreeMap<NablaWord, Rational>,
}

impl OperatorSum {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The identity operator (empty word).
    pub fn identity() -> Self {
        Self::word(Vec::new(), Rational::one())
    }

    pub fn word(w: NablaWord, c: Rational) -> Self {
        let mut s = Self::zero();
        s.add_term(w, c);
        s
    }

    /// `∇_{d_1} ... ∇_{d_j}` for arbitrary directions, expanded multilinearly.
    pub fn from_directions(dirs: &[DirectionPoly]) -> Self {
        let mut acc = Self::identity();
        for d in dirs {
            let mut next = Self::zero();
            for (w, c) in &acc.terms {
                for (m, a) in d.terms() {
                    let mut w2 = w.clone();
                    w2.push(m.clone());
                    next.add_term(w2, c * a);
                }
            }
            acc = next;
        }
        acc
    }

    pub fn add_term(&mut self, w: NablaWord, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NablaWord, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &[Monomial]) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
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

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&int(-1)))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * r);
        }
        out
    }

    /// Operator composition: `self` applied after `o`, i.e. word concatenation.
    pub fn compose(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                let mut w = w1.clone();
                w.extend(w2.iter().cloned());
                out.add_term(w, c1 * c2);
            }
        }
        out
    }

    /// Reverses every word and multiplies by `(-1)^{length}`; the antipode
    /// of the enveloping algebra. On a reversal-symmetric form this flips
    /// the sign of every single-derivative operator.
    pub fn antipode(&self) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let sign = if w.len() % 2 == 0 { c.clone() } else { -c };
            out.add_term(w.iter().rev().cloned().collect(), sign);
        }
        out
    }

    /// Average of each word with its reversal.
    pub fn reversal_symmetrized(&self) -> Self {
        let mut out = Self::zero();
        let half = Rational::new(1.into(), 2.into());
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * &half);
            out.add_term(w.iter().rev().cloned().collect(), c * &half);
        }
        out
    }

    /// Largest word length.
    pub fn order(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    /// JSON form: `[{"coeff": "p/q", "word": [{"H0": 1, "H1": 1}, ...]}, ...]`.
    pub fn to_json(&self) -> serde_json::Value {
        let list: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(w, c)| {
                serde_json::json!({
                    "coeff": format!("{}/{}", c.numer(), c.denom()),
                    "word": w.iter().map(Monomial::to_json).collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::Value::Array(list)
    }
}

pub(crate) fn format_nabla_word(w: &[Monomial]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let parts: Vec<String> = w.iter().map(|m| m.to_string()).collect();
    format!("∇_{{{}}}", parts.join(","))
}

impl fmt::Display for OperatorSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // longer words first, as in the usual displays
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then(a.0.cmp(b.0)));
        for (i, (w, c)) in terms.into_iter().enumerate() {
            let neg = *c < Rational::zero();
            let mag = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let word = format_nabla_word(w);
            if mag.is_one() {
                write!(f, "{word}")?;
            } else if mag.is_integer() {
                write!(f, "{mag}{word}")?;
            } else {
                write!(f, "({mag}){word}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for OperatorSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Rewrites `∇_μ ∇_ν -> ∇_ν ∇_μ + ∇_{μ∂ν - ν∂μ}` until every word has
/// nondecreasing monomials.
#[derive(Default)]
pub struct WittNormalizer {
    memo: HashMap<NablaWord, OperatorSum>,
}

impl WittNormalizer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn normal_form(&mut self, s: &OperatorSum) -> OperatorSum {
        let mut out = OperatorSum::zero();
        for (w, c) in &s.terms {
            let nf = self.word(w);
            for (w2, c2) in &nf.terms {
                out.add_term(w2.clone(), c2 * c);
            }
        }
        out
    }

    fn word(&mut self, w: &[Monomial]) -> OperatorSum {
        let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) else {
            return OperatorSum::word(w.to_vec(), Rational::one());
        };
        if let Some(v) = self.memo.get(w) {
            return v.clone();
        }
        let mut swapped = w.to_vec();
        swapped.swap(i, i + 1);
        let mut out = self.word(&swapped);
        let br = DirectionPoly::from(w[i].clone()).witt_bracket(&w[i + 1].clone().into());
        for (m, a) in br.terms() {
            let mut shorter = w[..i].to_vec();
            shorter.push(m.clone());
            shorter.extend_from_slice(&w[i + 2..]);
            let nf = self.word(&shorter);
            for (w2, c2) in &nf.terms {
                out.add_term(w2.clone(), c2 * a);
            }
        }
        self.memo.insert(w.to_vec(), out.clone());
        out
    }
}

pub fn witt_normal_form(s: &OperatorSum) -> OperatorSum {
    WittNormalizer::new().normal_form(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn commutator_example() {
        let s = OperatorSum::word(vec![m(&[1, 1]), m(&[1])], int(1))
            .sub(&OperatorSum::word(vec![m(&[1]), m(&[1, 1])], int(1)));
        assert_eq!(witt_normal_form(&s), OperatorSum::word(vec![m(&[2, 0, 1])], int(-1)));
        let hh = OperatorSum::word(vec![m(&[1]), m(&[1])], int(1));
        assert_eq!(witt_normal_form(&hh), hh);
    }

    #[test]
    fn normal_form_is_idempotent() {
        let s = OperatorSum::word(vec![m(&[1, 2]), m(&[1, 1]), m(&[1]), m(&[2, 0, 1])], int(3));
        let nf = witt_normal_form(&s);
        assert_eq!(witt_normal_form(&nf), nf);
        for (w, _) in nf.terms() {
            assert!(w.windows(2).all(|p| p[0] <= p[1]));
        }
    }

    #[test]
    fn json_dump() {
        let s = OperatorSum::word(vec![m(&[1]), m(&[1, 1])], int(-2));
        assert_eq!(
            s.to_json().to_string(),
            r#"[{"coeff":"-2/1","word":[{"H0":1},{"H0":1,"H1":1}]}]"#
        );
    }
}
