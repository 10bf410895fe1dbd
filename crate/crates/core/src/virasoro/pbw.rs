use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{int, rat, CPoly, Rational};

/// A word `L_{n_1} ... L_{n_j}` applied to the vacuum; the rightmost mode
/// acts first. The empty word is the vacuum itself.
pub type ModeWord = Vec<i32>;

/// `[L_m, L_n] = (m - n) L_{m+n} + (c/12) m (m^2 - 1) δ_{m+n,0}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Bracket {
    /// Index `m + n` of the mode in the result.
    pub mode: i32,
    /// Coefficient `m - n` on `L_{m+n}`.
    pub coefficient: Rational,
    /// Coefficient of the central element.
    pub central: CPoly,
}

pub fn vir_bracket(m: i32, n: i32) -> Bracket {
    let central = if m + n == 0 {
        let m = m as i64;
        CPoly::c().scale(&rat(m * (m * m - 1), 12))
    } else {
        CPoly::zero()
    };
    Bracket { mode: m + n, coefficient: int((m - n) as i64), central }
}

/// Whether the word is in the canonical PBW order: every mode `<= -2` and
/// nondecreasing left to right.
pub fn is_canonical(word: &[i32]) -> bool {
    word.iter().all(|&n| n <= -2) && word.windows(2).all(|p| p[0] <= p[1])
}

/// L0-weight of a word acting on the vacuum.
pub fn word_weight(word: &[i32]) -> i64 {
    -word.iter().map(|&n| n as i64).sum::<i64>()
}

/// Vector in the vacuum Virasoro module, expanded on canonical words.
#[derive(Clone, PartialEq, Default)]
pub struct PBWVector {
    terms: BTreeMap<ModeWord, CPoly>,
}

impl PBWVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn vacuum() -> Self {
        Self::monomial(Vec::new(), CPoly::one())
    }

    /// `coeff * word |0>`. The word must already be canonical.
    pub fn monomial(word: ModeWord, coeff: CPoly) -> Self {
        assert!(is_canonical(&word), "non-canonical word {word:?}");
        let mut v = Self::zero();
        v.add_term(word, coeff);
        v
    }

    /// `L_{-k} |0>` for `k >= 2`.
    pub fn mode(k: i32) -> Self {
        Self::monomial(vec![-k], CPoly::one())
    }

    pub(crate) fn add_term(&mut self, word: ModeWord, coeff: CPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&word) {
            Some(c) => {
                *c += &coeff;
                if c.is_zero() {
                    self.terms.remove(&word);
                }
            }
            None => {
                self.terms.insert(word, coeff);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ModeWord, &CPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, word: &[i32]) -> CPoly {
        self.terms.get(word).cloned().unwrap_or_else(CPoly::zero)
    }

    /// Coefficient of the vacuum.
    pub fn vacuum_coeff(&self) -> CPoly {
        self.coeff(&[])
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&CPoly::constant(int(-1))))
    }

    pub fn scale(&self, c: &CPoly) -> Self {
        let mut out = Self::zero();
        for (w, a) in &self.terms {
            out.add_term(w.clone(), a * c);
        }
        out
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&CPoly::constant(r.clone()))
    }

    /// The L0-weight, if the vector is homogeneous and nonzero.
    pub fn homogeneous_weight(&self) -> Option<i64> {
        let mut ws = self.terms.keys().map(|w| word_weight(w));
        let first = ws.next()?;
        ws.all(|w| w == first).then_some(first)
    }

    pub fn weights(&self) -> Vec<i64> {
        let mut ws: Vec<i64> = self.terms.keys().map(|w| word_weight(w)).collect();
        ws.sort_unstable();
        ws.dedup();
        ws
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.json_terms()).expect("serializable")
    }

    fn json_terms(&self) -> Vec<JsonTerm> {
        self.terms
            .iter()
            .map(|(w, c)| JsonTerm { word: w.clone(), coeff: c.clone() })
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    word: Vec<i32>,
    coeff: CPoly,
}

/// JSON form: `[{"word": [modes...], "coeff": {"<degree>": "p/q"}}, ...]`.
impl Serialize for PBWVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.json_terms().serialize(s)
    }
}

impl<'de> Deserialize<'de> for PBWVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<JsonTerm>::deserialize(d)?;
        let input: Vec<(ModeWord, CPoly)> = terms.into_iter().map(|t| (t.word, t.coeff)).collect();
        Ok(normal_order(&input))
    }
}

pub(crate) fn format_word(word: &[i32]) -> String {
    if word.is_empty() {
        return "1".into();
    }
    let mut out = String::new();
    let mut i = 0;
    while i < word.len() {
        let mut j = i;
        while j < word.len() && word[j] == word[i] {
            j += 1;
        }
        out.push_str(&format!("L_{{{}}}", word[i]));
        if j - i > 1 {
            out.push_str(&format!("^{}", j - i));
        }
        i = j;
    }
    out.push_str(" 1");
    out
}

impl fmt::Display for PBWVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // longest words first
        let mut terms: Vec<(&ModeWord, &CPoly)> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then(a.0.cmp(b.0)));
        for (idx, (w, c)) in terms.into_iter().enumerate() {
            let (neg, mag) = match c.as_constant() {
                Some(r) if r < Rational::zero() => (true, CPoly::constant(-r)),
                _ => (false, c.clone()),
            };
            if idx > 0 {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            } else if neg {
                write!(f, "-")?;
            }
            let word = format_word(w);
            match mag.as_constant() {
                Some(r) if r.is_one() => write!(f, "{word}")?,
                Some(r) if r.is_integer() => write!(f, "{r} {word}")?,
                _ => write!(f, "({mag}) {word}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PBWVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PBW[{self}]")
    }
}

/// Applies Virasoro modes to canonical vectors, caching the action on
/// canonical words. One instance can be reused across many computations.
#[derive(Default)]
pub struct Normalizer {
    cache: HashMap<(i32, ModeWord), PBWVector>,
}

impl Normalizer {
    pub fn new() -> Self {
        Self::default()
    }

    /// `L_n v` in canonical form.
    pub fn apply(&mut self, n: i32, v: &PBWVector) -> PBWVector {
        let mut out = PBWVector::zero();
        for (w, c) in &v.terms {
            let img = self.apply_to_word(n, w);
            for (w2, c2) in &img.terms {
                out.add_term(w2.clone(), c2 * c);
            }
        }
        out
    }

    /// Applies a word (rightmost mode first) to a canonical vector.
    pub fn apply_word(&mut self, word: &[i32], v: &PBWVector) -> PBWVector {
        word.iter().rev().fold(v.clone(), |acc, &n| self.apply(n, &acc))
    }

    fn apply_to_word(&mut self, n: i32, word: &[i32]) -> PBWVector {
        let key = (n, word.to_vec());
        if let Some(v) = self.cache.get(&key) {
            return v.clone();
        }
        let result = match word.first() {
            None if n >= -1 => PBWVector::zero(),
            None => PBWVector::monomial(vec![n], CPoly::one()),
            Some(&w0) if n <= w0 => {
                let mut w = Vec::with_capacity(word.len() + 1);
                w.push(n);
                w.extend_from_slice(word);
                PBWVector::monomial(w, CPoly::one())
            }
            Some(&w0) => {
                // L_n L_{w0} R = L_{w0} (L_n R) + [L_n, L_{w0}] R
                let rest = &word[1..];
                let inner = self.apply_to_word(n, rest);
                let mut out = self.apply(w0, &inner);
                let br = vir_bracket(n, w0);
                if !br.coefficient.is_zero() {
                    let t = self.apply_to_word(br.mode, rest);
                    out = out.add(&t.scale_rational(&br.coefficient));
                }
                if !br.central.is_zero() {
                    out.add_term(rest.to_vec(), br.central.clone());
                }
                out
            }
        };
        self.cache.insert(key, result.clone());
        result
    }

    pub fn normal_order(&mut self, input: &[(ModeWord, CPoly)]) -> PBWVector {
        let mut out = PBWVector::zero();
        for (w, c) in input {
            let v = self.apply_word(w, &PBWVector::vacuum());
            out = out.add(&v.scale(c));
        }
        out
    }
}

/// Brings an arbitrary combination of mode words to canonical PBW form.
pub fn normal_order(input: &[(ModeWord, CPoly)]) -> PBWVector {
    Normalizer::new().normal_order(input)
}

/// `L_{-1} v`, which realizes `d/dw` on the corresponding fields.
pub fn l_minus_one_derivative(v: &PBWVector) -> PBWVector {
    Normalizer::new().apply(-1, v)
}

/// Bilinear form with `L_n` adjoint to `L_{-n}` and `<1,1> = 1`.
pub fn shapovalov(u: &PBWVector, v: &PBWVector) -> CPoly {
    let mut nz = Normalizer::new();
    shapovalov_with(&mut nz, u, v)
}

pub fn shapovalov_with(nz: &mut Normalizer, u: &PBWVector, v: &PBWVector) -> CPoly {
    let mut total = CPoly::zero();
    for (w, a) in &u.terms {
        // (L_{a1}..L_{aj})^† = L_{-aj}..L_{-a1}; L_{-a1} acts first.
        let mut acc = v.clone();
        for &n in w {
            acc = nz.apply(-n, &acc);
        }
        total += &(&acc.vacuum_coeff() * a);
    }
    total
}
