use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::Zero;

use super::jet::Jet;
use super::scalar::Scalar;
use crate::algebra::{int, Rational};
use crate::error::{Error, Result};

/// Expression tree in one complex variable `z`.
#[derive(Clone, Debug, PartialEq)]
pub enum MapExpr {
    Var,
    Const(Rational),
    /// Complex constant; only numeric fields can evaluate it.
    ConstC(f64, f64),
    Add(Box<MapExpr>, Box<MapExpr>),
    Sub(Box<MapExpr>, Box<MapExpr>),
    Mul(Box<MapExpr>, Box<MapExpr>),
    Div(Box<MapExpr>, Box<MapExpr>),
    Pow(Box<MapExpr>, i32),
    Exp(Box<MapExpr>),
    Log(Box<MapExpr>),
    /// `outer(inner(z))`.
    Compose(Box<MapExpr>, Box<MapExpr>),
}

use MapExpr as M;

impl MapExpr {
    pub fn z() -> Self {
        M::Var
    }

    pub fn rational(r: Rational) -> Self {
        M::Const(r)
    }

    pub fn int(n: i64) -> Self {
        M::Const(int(n))
    }

    pub fn complex(z: Complex64) -> Self {
        M::ConstC(z.re, z.im)
    }

    pub fn pow(self, n: i32) -> Self {
        M::Pow(Box::new(self), n)
    }

    pub fn exp(self) -> Self {
        M::Exp(Box::new(self))
    }

    pub fn log(self) -> Self {
        M::Log(Box::new(self))
    }

    pub fn compose(self, inner: MapExpr) -> Self {
        M::Compose(Box::new(self), Box::new(inner))
    }

    /// `(a z + b) / (c z + d)`.
    pub fn mobius(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        (M::Const(a) * M::Var + M::Const(b)) / (M::Const(c) * M::Var + M::Const(d))
    }

    /// Jet of the expression along the given jet of `z`.
    pub fn eval_jet<F: Scalar>(&self, x: &Jet<F>) -> Result<Jet<F>> {
        let n = x.order();
        Ok(match self {
            M::Var => x.clone(),
            M::Const(r) => Jet::constant(F::from_rational(r), n),
            M::ConstC(re, im) => {
                let v = F::from_complex(Complex64::new(*re, *im))
                    .ok_or_else(|| Error::Unsupported("complex constant in an exact field".into()))?;
                Jet::constant(v, n)
            }
            M::Add(a, b) => a.eval_jet(x)?.add(&b.eval_jet(x)?),
            M::Sub(a, b) => a.eval_jet(x)?.sub(&b.eval_jet(x)?),
            M::Mul(a, b) => a.eval_jet(x)?.mul(&b.eval_jet(x)?),
            M::Div(a, b) => a.eval_jet(x)?.div(&b.eval_jet(x)?)?,
            M::Pow(a, k) => a.eval_jet(x)?.powi(*k)?,
            M::Exp(a) => a.eval_jet(x)?.exp()?,
            M::Log(a) => a.eval_jet(x)?.ln()?,
            M::Compose(outer, inner) => outer.eval_jet(&inner.eval_jet(x)?)?,
        })
    }

    /// Jet of order `order` at the point `w`.
    pub fn jet_at<F: Scalar>(&self, w: &F, order: usize) -> Result<Jet<F>> {
        self.eval_jet(&Jet::variable(w.clone(), order))
    }

    pub fn eval<F: Scalar>(&self, w: &F) -> Result<F> {
        Ok(self.jet_at(w, 0)?.value().clone())
    }

    /// Symbolic derivative in `z`.
    pub fn derivative(&self) -> MapExpr {
        match self {
            M::Var => M::int(1),
            M::Const(_) | M::ConstC(..) => M::int(0),
            M::Add(a, b) => a.derivative() + b.derivative(),
            M::Sub(a, b) => a.derivative() - b.derivative(),
            M::Mul(a, b) => a.derivative() * (**b).clone() + (**a).clone() * b.derivative(),
            M::Div(a, b) => {
                (a.derivative() * (**b).clone() - (**a).clone() * b.derivative()) / (**b).clone().pow(2)
            }
            M::Pow(_, 0) => M::int(0),
            M::Pow(a, k) => M::int(*k as i64) * (**a).clone().pow(k - 1) * a.derivative(),
            M::Exp(a) => self.clone() * a.derivative(),
            M::Log(a) => a.derivative() / (**a).clone(),
            M::Compose(outer, inner) => outer.derivative().compose((**inner).clone()) * inner.derivative(),
        }
        .simplified()
    }

    /// Folds the trivial identities `0 + e`, `1 e`, `0 e`, `e^1`.
    pub fn simplified(self) -> MapExpr {
        let is = |e: &MapExpr, v: i64| matches!(e, M::Const(r) if *r == int(v));
        match self {
            M::Add(a, b) => {
                let (a, b) = (a.simplified(), b.simplified());
                match (&a, &b) {
                    (M::Const(x), M::Const(y)) => M::Const(x + y),
                    _ if is(&a, 0) => b,
                    _ if is(&b, 0) => a,
                    _ => a + b,
                }
            }
            M::Sub(a, b) => {
                let (a, b) = (a.simplified(), b.simplified());
                match (&a, &b) {
                    (M::Const(x), M::Const(y)) => M::Const(x - y),
                    _ if is(&b, 0) => a,
                    _ => a - b,
                }
            }
            M::Mul(a, b) => {
                let (a, b) = (a.simplified(), b.simplified());
                match (&a, &b) {
                    (M::Const(x), M::Const(y)) => M::Const(x * y),
                    _ if is(&a, 0) || is(&b, 0) => M::int(0),
                    _ if is(&a, 1) => b,
                    _ if is(&b, 1) => a,
                    _ => a * b,
                }
            }
            M::Div(a, b) => {
                let (a, b) = (a.simplified(), b.simplified());
                match (&a, &b) {
                    (M::Const(x), M::Const(y)) if !Zero::is_zero(y) => M::Const(x / y),
                    _ if is(&a, 0) => M::int(0),
                    _ if is(&b, 1) => a,
                    _ => a / b,
                }
            }
            M::Pow(a, k) => {
                let a = a.simplified();
                match k {
                    0 => M::int(1),
                    1 => a,
                    _ => a.pow(k),
                }
            }
            M::Exp(a) => a.simplified().exp(),
            M::Log(a) => a.simplified().log(),
            M::Compose(o, i) => o.simplified().compose(i.simplified()),
            e => e,
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $v:ident) => {
        impl $tr for MapExpr {
            type Output = MapExpr;
            fn $m(self, rhs: MapExpr) -> MapExpr {
                M::$v(Box::new(self), Box::new(rhs))
            }
        }
    };
}
binop!(Add, add, Add);
binop!(Sub, sub, Sub);
binop!(Mul, mul, Mul);
binop!(Div, div, Div);

impl Neg for MapExpr {
    type Output = MapExpr;
    fn neg(self) -> MapExpr {
        M::int(0) - self
    }
}

impl fmt::Display for MapExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            M::Var => write!(f, "z"),
            M::Const(r) if r.is_integer() && *r >= <Rational as Zero>::zero() => write!(f, "{r}"),
            M::Const(r) => write!(f, "({r})"),
            M::ConstC(re, im) => write!(f, "({re}{im:+}i)"),
            M::Add(a, b) => write!(f, "({a} + {b})"),
            M::Sub(a, b) => write!(f, "({a} - {b})"),
            M::Mul(a, b) => write!(f, "{a}*{b}"),
            M::Div(a, b) => write!(f, "{a}/{b}"),
            M::Pow(a, k) => write!(f, "{a}^{k}"),
            M::Exp(a) => write!(f, "exp({a})"),
            M::Log(a) => write!(f, "log({a})"),
            M::Compose(o, i) => write!(f, "({o})∘({i})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn cx(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn symbolic_and_jet_derivatives_agree() {
        let exprs = [
            M::z().pow(3) / (M::z() + M::int(2)),
            (M::z() * M::z()).exp(),
            (M::z() + M::int(3)).log() * M::z(),
            M::z().exp().compose(M::z().pow(2) - M::z()),
            M::mobius(int(1), int(2), int(3), int(5)),
        ];
        let w = cx(0.4, 0.3);
        for e in &exprs {
            let jet = e.jet_at(&w, 4).unwrap();
            let mut d = e.clone();
            for n in 1..=3 {
                d = d.derivative();
                let a = d.eval(&w).unwrap();
                let b = jet.derivative_value(n);
                assert!((a - b).norm() < 1e-10 * (1.0 + b.norm()), "{e}: order {n}");
            }
        }
    }

    #[test]
    fn pole_is_reported() {
        let e = M::int(1) / M::z();
        assert!(e.eval(&cx(0.0, 0.0)).is_err());
        assert!(e.eval(&rat(0, 1)).is_err());
        assert_eq!(e.eval(&rat(2, 1)).unwrap(), rat(1, 2));
    }
}
