use std::fmt;

use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};

use crate::algebra::{int, MPoly, Rational};

/// Field of values that jets, map expressions and the Schwarzian calculus
/// are evaluated over.
pub trait Scalar: Clone + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: &Rational) -> Self;
    /// `None` when the field cannot hold a floating-point constant.
    fn from_complex(z: Complex64) -> Option<Self>;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self {
        Self::zero().sub(self)
    }
    /// `None` when `o` is zero.
    fn div(&self, o: &Self) -> Option<Self>;
    fn is_zero(&self) -> bool;
    /// `None` when the result leaves the field.
    fn exp(&self) -> Option<Self>;
    fn ln(&self) -> Option<Self>;
    /// Exact equality for exact fields; relative tolerance for floats.
    fn close_to(&self, o: &Self, tol: f64) -> bool;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&int(n))
    }
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_rational(r: &Rational) -> Self {
        Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0)
    }
    fn from_complex(z: Complex64) -> Option<Self> {
        Some(z)
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
    fn div(&self, o: &Self) -> Option<Self> {
        (*o != Complex64::new(0.0, 0.0)).then(|| self / o)
    }
    fn is_zero(&self) -> bool {
        *self == Complex64::new(0.0, 0.0)
    }
    fn exp(&self) -> Option<Self> {
        Some(Complex64::exp(*self))
    }
    fn ln(&self) -> Option<Self> {
        (!Scalar::is_zero(self)).then(|| Complex64::ln(*self))
    }
    fn close_to(&self, o: &Self, tol: f64) -> bool {
        (self - o).norm() <= tol * (1.0 + o.norm())
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn from_complex(_: Complex64) -> Option<Self> {
        None
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
    fn div(&self, o: &Self) -> Option<Self> {
        (!Zero::is_zero(o)).then(|| self / o)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn exp(&self) -> Option<Self> {
        Zero::is_zero(self).then(One::one)
    }
    fn ln(&self) -> Option<Self> {
        One::is_one(self).then(Zero::zero)
    }
    fn close_to(&self, o: &Self, _tol: f64) -> bool {
        self == o
    }
}

/// Exact function of a symbolic point `w`: a polynomial in `w` and
/// `E = e^w` over a product of polynomial factors, all with rational
/// coefficients.
///
/// Factors are kept monic in their lex-leading term and distinct; a factor
/// that divides the numerator is cancelled on construction. This keeps
/// the representation small without a multivariate gcd.
#[derive(Clone)]
pub struct SymFn {
    num: MPoly<Rational>,
    den: Vec<(MPoly<Rational>, u32)>,
}

const W: usize = 0;
const E: usize = 1;
/// Integer multiples `n w` for which `exp`/`ln` stay inside the field.
const EXP_RANGE: i64 = 8;

type Poly = MPoly<Rational>;

fn monic(p: &Poly) -> (Poly, Rational) {
    let lead = p.leading().map(|(_, c)| c.clone()).expect("nonzero factor");
    (p.scale(&(<Rational as One>::one() / &lead)), lead)
}

impl SymFn {
    fn poly(num: Poly) -> Self {
        SymFn { num, den: Vec::new() }
    }

    /// The point `w` itself.
    pub fn w() -> Self {
        Self::poly(MPoly::var(2, W))
    }

    /// `e^w`.
    pub fn exp_w() -> Self {
        Self::poly(MPoly::var(2, E))
    }

    pub fn constant(r: Rational) -> Self {
        Self::poly(MPoly::constant(2, r))
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.den.is_empty() {
            self.num.as_constant()
        } else {
            None
        }
    }

    fn den_poly(&self) -> Poly {
        self.den.iter().fold(MPoly::one(2), |acc, (f, e)| acc.mul(&f.pow(*e)))
    }

    /// Multiplies in `q^{-e}`, splitting `q` over the existing factors.
    fn push_factor(&mut self, q: &Poly, e: u32) {
        if let Some(c) = q.as_constant() {
            let inv = <Rational as One>::one() / c;
            for _ in 0..e {
                self.num = self.num.scale(&inv);
            }
            return;
        }
        let mut q = q.clone();
        for (f, fe) in self.den.iter_mut() {
            while let Some(r) = q.div_exact(f) {
                q = r;
                *fe += e;
                if q.as_constant().is_some() {
                    break;
                }
            }
        }
        if let Some(c) = q.as_constant() {
            self.push_factor(&MPoly::constant(2, c), e);
            return;
        }
        let (m, lead) = monic(&q);
        self.push_factor(&MPoly::constant(2, lead), e);
        self.den.push((m, e));
    }

    fn reduced(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        for (f, e) in self.den.iter_mut() {
            while *e > 0 {
                match self.num.div_exact(f) {
                    Some(q) => {
                        self.num = q;
                        *e -= 1;
                    }
                    None => break,
                }
            }
        }
        self.den.retain(|(_, e)| *e > 0);
        self.den.sort_by(|a, b| a.0.leading().map(|t| t.0).cmp(&b.0.leading().map(|t| t.0)));
        self
    }

    /// `Some(n)` if the function equals `n w` for a small integer `n`.
    fn as_multiple_of_w(&self) -> Option<i64> {
        if !self.den.is_empty() {
            return None;
        }
        (-EXP_RANGE..=EXP_RANGE).find(|&n| self.num == MPoly::var(2, W).scale(&int(n)))
    }

    /// Numeric value at a complex point.
    pub fn eval(&self, w: Complex64) -> Complex64 {
        let e = w.exp();
        let ev = |p: &Poly| {
            p.terms().fold(Complex64::new(0.0, 0.0), |acc, (ex, c)| {
                acc + Complex64::from_rational(c) * w.powu(ex[W]) * e.powu(ex[E])
            })
        };
        ev(&self.num) / ev(&self.den_poly())
    }
}

fn poly_str(p: &Poly) -> String {
    let names = ["w".to_string(), "e^w".to_string()];
    let cp = p.map_coeffs(|c| crate::algebra::CPoly::constant(c.clone()));
    crate::algebra::poly_to_string(&cp, &names)
}

impl fmt::Display for SymFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", poly_str(&self.num));
        }
        let den: Vec<String> = self
            .den
            .iter()
            .map(|(p, e)| if *e == 1 { format!("({})", poly_str(p)) } else { format!("({})^{e}", poly_str(p)) })
            .collect();
        write!(f, "({}) / {}", poly_str(&self.num), den.join(" "))
    }
}

impl fmt::Debug for SymFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl PartialEq for SymFn {
    fn eq(&self, o: &Self) -> bool {
        self.num.mul(&o.den_poly()) == o.num.mul(&self.den_poly())
    }
}

impl Scalar for SymFn {
    fn zero() -> Self {
        Self::constant(Zero::zero())
    }
    fn one() -> Self {
        Self::constant(One::one())
    }
    fn from_rational(r: &Rational) -> Self {
        Self::constant(r.clone())
    }
    fn from_complex(_: Complex64) -> Option<Self> {
        None
    }
    fn add(&self, o: &Self) -> Self {
        if o.num.is_zero() {
            return self.clone();
        }
        if self.num.is_zero() {
            return o.clone();
        }
        // least common multiple over the factor lists
        let mut den: Vec<(Poly, u32)> = self.den.clone();
        for (f, e) in &o.den {
            match den.iter_mut().find(|(g, _)| g == f) {
                Some((_, ge)) => *ge = (*ge).max(*e),
                None => den.push((f.clone(), *e)),
            }
        }
        let lift = |x: &SymFn| {
            den.iter().fold(x.num.clone(), |acc, (f, e)| {
                let have = x.den.iter().find(|(g, _)| g == f).map(|(_, ge)| *ge).unwrap_or(0);
                acc.mul(&f.pow(e - have))
            })
        };
        let num = lift(self).add(&lift(o));
        SymFn { num, den }.reduced()
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn neg(&self) -> Self {
        SymFn { num: self.num.neg(), den: self.den.clone() }
    }
    fn mul(&self, o: &Self) -> Self {
        let mut out = SymFn { num: self.num.mul(&o.num), den: self.den.clone() };
        for (f, e) in &o.den {
            out.push_factor(f, *e);
        }
        out.reduced()
    }
    fn div(&self, o: &Self) -> Option<Self> {
        if o.num.is_zero() {
            return None;
        }
        let mut num = self.num.clone();
        for (f, e) in &o.den {
            num = num.mul(&f.pow(*e));
        }
        let mut out = SymFn { num, den: self.den.clone() };
        match out.num.div_exact(&o.num) {
            Some(q) => out.num = q,
            None => out.push_factor(&o.num, 1),
        }
        Some(out.reduced())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn exp(&self) -> Option<Self> {
        if self.num.is_zero() {
            return Some(Self::one());
        }
        let n = self.as_multiple_of_w()?;
        let e = Self::exp_w();
        let mut out = Self::one();
        for _ in 0..n.abs() {
            out = out.mul(&e);
        }
        if n < 0 {
            out = Self::one().div(&out)?;
        }
        Some(out)
    }
    fn ln(&self) -> Option<Self> {
        (-EXP_RANGE..=EXP_RANGE).find_map(|n| {
            let candidate = Self::w().mul(&Self::from_i64(n));
            (candidate.exp()? == *self).then_some(candidate)
        })
    }
    fn close_to(&self, o: &Self, _tol: f64) -> bool {
        self == o
    }
}
