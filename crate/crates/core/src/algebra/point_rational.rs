use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use super::cpoly::CPoly;
use super::mpoly::MPoly;
use super::rational::{int, Rational};

/// Rational function of point labels `w_0 .. w_{p-1}` with [`CPoly`]
/// coefficients.
///
/// The denominator is kept factored as `prod_{i<j} (w_i - w_j)^{e_ij}`,
/// which is all that vacuum correlators of identity descendants ever
/// need. Canonical form divides out every difference factor that divides
/// the numerator, so the reduced representation is unique; equality is
/// still decided by cross-multiplication.
#[derive(Clone)]
pub struct PointRational {
    num: MPoly<CPoly>,
    den: BTreeMap<(usize, usize), u32>,
}

impl PointRational {
    pub fn zero(nvars: usize) -> Self {
        PointRational { num: MPoly::zero(nvars), den: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, CPoly::one())
    }

    pub fn constant(nvars: usize, c: CPoly) -> Self {
        PointRational { num: MPoly::constant(nvars, c), den: BTreeMap::new() }
    }

    pub fn from_poly(num: MPoly<CPoly>) -> Self {
        PointRational { num, den: BTreeMap::new() }
    }

    /// `num / Π (w_a - w_b)^{e}` over pairs `a < b`, canonicalized.
    pub fn from_parts(num: MPoly<CPoly>, den: BTreeMap<(usize, usize), u32>) -> Self {
        assert!(den.keys().all(|&(a, b)| a < b), "denominator pairs must be ordered");
        PointRational { num, den: den.into_iter().filter(|&(_, e)| e > 0).collect() }.canonical()
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::from_poly(MPoly::var(nvars, i))
    }

    /// `(w_i - w_j)^{-n}` for `i != j`.
    pub fn inverse_difference_power(nvars: usize, i: usize, j: usize, n: u32) -> Self {
        assert_ne!(i, j, "difference of a point with itself");
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        let sign = if i > j && n % 2 == 1 { -1 } else { 1 };
        let mut den = BTreeMap::new();
        if n > 0 {
            den.insert((a, b), n);
        }
        PointRational { num: MPoly::constant(nvars, CPoly::constant(int(sign))), den }
    }

    /// `(w_i - w_j)^n` for any integer `n`.
    pub fn difference_power(nvars: usize, i: usize, j: usize, n: i64) -> Self {
        if n < 0 {
            return Self::inverse_difference_power(nvars, i, j, n.unsigned_abs() as u32);
        }
        let d = MPoly::<CPoly>::var(nvars, i).sub(&MPoly::var(nvars, j));
        Self::from_poly(d.pow(n as u32))
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn numerator(&self) -> &MPoly<CPoly> {
        &self.num
    }

    pub fn denominator_factors(&self) -> &BTreeMap<(usize, usize), u32> {
        &self.den
    }

    pub fn denominator(&self) -> MPoly<CPoly> {
        den_poly(self.nvars(), &self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Constant value (a `CPoly`) when there is no point dependence.
    pub fn as_constant(&self) -> Option<CPoly> {
        let r = self.clone().canonical();
        if r.den.is_empty() {
            r.num.as_constant()
        } else {
            None
        }
    }

    /// Divides out every difference factor that divides the numerator.
    pub fn canonical(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        let keys: Vec<(usize, usize)> = self.den.keys().copied().collect();
        for (i, j) in keys {
            while self.den.get(&(i, j)).copied().unwrap_or(0) > 0 {
                match self.num.div_by_difference(i, j) {
                    Some(q) => {
                        self.num = q;
                        let e = self.den.get_mut(&(i, j)).unwrap();
                        *e -= 1;
                        if *e == 0 {
                            self.den.remove(&(i, j));
                        }
                    }
                    None => break,
                }
            }
        }
        self
    }

    fn with_den(&self, target: &BTreeMap<(usize, usize), u32>) -> MPoly<CPoly> {
        let mut extra = BTreeMap::new();
        for (&k, &e) in target {
            let have = self.den.get(&k).copied().unwrap_or(0);
            if e > have {
                extra.insert(k, e - have);
            }
        }
        self.num.mul(&den_poly(self.nvars(), &extra))
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let mut den = self.den.clone();
        for (&k, &e) in &o.den {
            let slot = den.entry(k).or_insert(0);
            *slot = (*slot).max(e);
        }
        let num = self.with_den(&den).add(&o.with_den(&den));
        PointRational { num, den }.canonical()
    }

    pub fn neg(&self) -> Self {
        PointRational { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut den = self.den.clone();
        for (&k, &e) in &o.den {
            *den.entry(k).or_insert(0) += e;
        }
        PointRational { num: self.num.mul(&o.num), den }.canonical()
    }

    pub fn scale(&self, c: &CPoly) -> Self {
        PointRational { num: self.num.scale(c), den: self.den.clone() }.canonical()
    }

    /// Partial derivative with respect to `w_i`.
    pub fn derivative(&self, i: usize) -> Self {
        let nv = self.nvars();
        // d/dw_i (N / prod d^e) = (N_i * prod_{pairs at i} d - N * sum e_k s_k prod_{others} d) / (D * prod_{pairs at i} d)
        let touching: Vec<((usize, usize), u32)> = self
            .den
            .iter()
            .filter(|((a, b), _)| *a == i || *b == i)
            .map(|(&k, &e)| (k, e))
            .collect();
        let diff = |(a, b): (usize, usize)| MPoly::<CPoly>::var(nv, a).sub(&MPoly::var(nv, b));
        let mut all = MPoly::one(nv);
        for &(k, _) in &touching {
            all = all.mul(&diff(k));
        }
        let mut num = self.num.derivative(i).mul(&all);
        for (idx, &(k, e)) in touching.iter().enumerate() {
            // d/dw_i (w_a - w_b) = +1 if i == a, -1 if i == b
            let sign = if k.0 == i { 1 } else { -1 };
            let mut others = MPoly::one(nv);
            for (jdx, &(k2, _)) in touching.iter().enumerate() {
                if jdx != idx {
                    others = others.mul(&diff(k2));
                }
            }
            let factor = CPoly::constant(int(-(e as i64) * sign));
            num = num.add(&self.num.mul(&others).scale(&factor));
        }
        let mut den = self.den.clone();
        for &(k, _) in &touching {
            *den.get_mut(&k).unwrap() += 1;
        }
        PointRational { num, den }.canonical()
    }

    /// Renames variables: variable `i` becomes `map[i]` in a space of `nvars`.
    pub fn relabel(&self, map: &[usize], nvars: usize) -> Self {
        let mut num = MPoly::zero(nvars);
        for (e, c) in self.num.terms() {
            let mut e2 = vec![0; nvars];
            for (i, &k) in e.iter().enumerate() {
                e2[map[i]] += k;
            }
            num.add_term(e2, c.clone());
        }
        // a bijective relabelling keeps the form canonical; only orientations flip
        let mut den = BTreeMap::new();
        let mut odd = false;
        for (&(a, b), &e) in &self.den {
            let (a2, b2) = (map[a], map[b]);
            if a2 > b2 {
                odd ^= e % 2 == 1;
            }
            *den.entry((a2.min(b2), a2.max(b2))).or_insert(0) += e;
        }
        let out = PointRational { num, den };
        let injective = (0..self.nvars()).all(|i| (0..i).all(|j| map[i] != map[j]));
        let out = if injective { out } else { out.canonical() };
        if odd {
            out.neg()
        } else {
            out
        }
    }

    /// Evaluates at rational points and central charge; `None` at a pole.
    pub fn eval(&self, points: &[Rational], c: &Rational) -> Option<Rational> {
        let vals: Vec<Rational> = points.to_vec();
        let num = self.num.map_coeffs(|p| p.eval(c)).eval(&vals);
        let mut den = Rational::from_integer(1.into());
        for (&(a, b), &e) in &self.den {
            let d = &points[a] - &points[b];
            if Zero::is_zero(&d) {
                return None;
            }
            for _ in 0..e {
                den *= &d;
            }
        }
        Some(num / den)
    }

    pub fn display_with(&self, names: &[String]) -> String {
        let num = poly_to_string(&self.num, names);
        if self.den.is_empty() {
            return num;
        }
        let den: Vec<String> = self
            .den
            .iter()
            .map(|(&(a, b), &e)| {
                let base = format!("({} - {})", names[a], names[b]);
                if e == 1 {
                    base
                } else {
                    format!("{base}^{e}")
                }
            })
            .collect();
        let num = if self.num.len() == 1 { num } else { format!("({num})") };
        if den.len() == 1 {
            format!("{num} / {}", den[0])
        } else {
            format!("{num} / ({})", den.join(" "))
        }
    }
}

fn den_poly(nvars: usize, den: &BTreeMap<(usize, usize), u32>) -> MPoly<CPoly> {
    let mut out = MPoly::one(nvars);
    for (&(a, b), &e) in den {
        let d = MPoly::<CPoly>::var(nvars, a).sub(&MPoly::var(nvars, b));
        out = out.mul(&d.pow(e));
    }
    out
}

pub fn poly_to_string(p: &MPoly<CPoly>, names: &[String]) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (e, c) in p.terms() {
        let mono: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(i, &k)| if k == 1 { names[i].clone() } else { format!("{}^{k}", names[i]) })
            .collect();
        let coeff = match c.as_constant() {
            Some(r) if mono.is_empty() => r.to_string(),
            Some(r) if r == int(1) => String::new(),
            Some(r) if r == int(-1) => "-".into(),
            Some(r) if r.is_negative() || !r.is_integer() => format!("({r})*"),
            Some(r) => format!("{r}*"),
            None => format!("({c})*"),
        };
        let coeff = match (mono.is_empty(), c.as_constant(), p.len()) {
            (true, None, 1) => c.to_string(),
            (true, None, _) => format!("({c})"),
            _ => coeff,
        };
        parts.push(format!("{coeff}{}", mono.join("*")));
    }
    parts.join(" + ")
}

// Values are kept canonical (no difference factor of the denominator divides
// the numerator), and that form is unique.
impl PartialEq for PointRational {
    fn eq(&self, o: &Self) -> bool {
        self.den == o.den && self.num == o.num
    }
}

impl fmt::Debug for PointRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars()).map(|i| format!("w{i}")).collect();
        write!(f, "{}", self.display_with(&names))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn derivative_of_inverse_power() {
        // d/dx (x - y)^{-4} = -4 (x - y)^{-5}
        let f = PointRational::inverse_difference_power(2, 0, 1, 4);
        let df = f.derivative(0);
        let expect = PointRational::inverse_difference_power(2, 0, 1, 5).scale(&CPoly::constant(int(-4)));
        assert_eq!(df, expect);
        // and d/dy gives +4 (x - y)^{-5}
        assert_eq!(f.derivative(1), expect.neg());
    }

    #[test]
    fn canonical_cancels_common_factor() {
        let d = PointRational::difference_power(2, 0, 1, 1);
        let inv = PointRational::inverse_difference_power(2, 0, 1, 3);
        let r = d.mul(&inv);
        assert_eq!(r.denominator_factors().get(&(0, 1)), Some(&2));
        assert_eq!(r, PointRational::inverse_difference_power(2, 0, 1, 2));
    }

    #[test]
    fn reversed_difference_sign() {
        let a = PointRational::inverse_difference_power(2, 1, 0, 1);
        let b = PointRational::inverse_difference_power(2, 0, 1, 1);
        assert_eq!(a, b.neg());
        let pts = [rat(3, 1), rat(1, 1)];
        assert_eq!(a.eval(&pts, &int(0)), Some(rat(-1, 2)));
    }

    #[test]
    fn relabel_flips_orientation() {
        let f = PointRational::inverse_difference_power(3, 0, 2, 3).mul(&PointRational::var(3, 1));
        let g = f.relabel(&[2, 0, 1], 3);
        let expect = PointRational::inverse_difference_power(3, 2, 1, 3).mul(&PointRational::var(3, 0));
        assert_eq!(g, expect);
        assert_ne!(g, f);
    }

    #[test]
    fn sum_over_common_denominator() {
        // 1/(x-y) + 1/(y-x) = 0
        let a = PointRational::inverse_difference_power(2, 0, 1, 1);
        let b = PointRational::inverse_difference_power(2, 1, 0, 1);
        assert!(a.add(&b).is_zero());
    }
}
