use num_complex::Complex64;
use serde::Serialize;

use super::multi::Multi;
use crate::confderiv::{derive_tbox, Monomial};
use crate::error::{domain, Error, Result};
use crate::ward::{schwarzian_from_jet, Jet, MapExpr, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FunctionalKind {
    EvaluationAt,
    LogDerivativeAt,
    SchwarzianAt,
}

impl FunctionalKind {
    /// Jet order the functional reads from the map.
    pub fn order(self) -> usize {
        match self {
            Self::EvaluationAt => 0,
            Self::LogDerivativeAt => 1,
            Self::SchwarzianAt => 3,
        }
    }
}

impl std::str::FromStr for FunctionalKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "eval" | "evaluation" => Ok(Self::EvaluationAt),
            "logder" | "log-derivative" => Ok(Self::LogDerivativeAt),
            "schwarzian" => Ok(Self::SchwarzianAt),
            other => domain(format!("unknown functional '{other}'")),
        }
    }
}

/// `g ↦ g(z₀)`, `g ↦ log ∂g(z₀)` or `g ↦ {g, z₀}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AnalyticFunctional {
    pub kind: FunctionalKind,
    pub z0: Complex64,
}

impl AnalyticFunctional {
    pub fn evaluation_at(z0: Complex64) -> Self {
        Self { kind: FunctionalKind::EvaluationAt, z0 }
    }

    pub fn log_derivative_at(z0: Complex64) -> Self {
        Self { kind: FunctionalKind::LogDerivativeAt, z0 }
    }

    pub fn schwarzian_at(z0: Complex64) -> Self {
        Self { kind: FunctionalKind::SchwarzianAt, z0 }
    }
}

/// Reads the functional off the jet of the map at `z₀`.
pub fn functional_from_jet<F: Scalar>(kind: FunctionalKind, jet: &Jet<F>) -> Result<F> {
    match kind {
        FunctionalKind::EvaluationAt => Ok(jet.value().clone()),
        FunctionalKind::LogDerivativeAt => {
            let d = jet.coeff(1);
            if d.is_zero() {
                return Err(Error::Singular(format!("derivative vanishes at {:?}", jet.value())));
            }
            d.ln().ok_or_else(|| Error::Unsupported("logarithm outside the field".into()))
        }
        FunctionalKind::SchwarzianAt => schwarzian_from_jet(jet),
    }
}

pub fn functional_eval(f: &AnalyticFunctional, g: &MapExpr) -> Result<Complex64> {
    functional_from_jet(f.kind, &g.jet_at(&f.z0, f.kind.order())?)
}

/// `∇_{d_1} ⋯ ∇_{d_j} f` at the identity map, with `f` read at `z0`.
///
/// The derivative is the coefficient of `t_1⋯t_j` in `f(φ_j ∘ ⋯ ∘ φ_1)`,
/// `φ_i = id + t_i d_i` with nilpotent `t_i`: the first direction acts on
/// the map innermost.
pub fn nabla_at<F: Scalar>(kind: FunctionalKind, z0: &F, directions: &[MapExpr]) -> Result<F> {
    let order = kind.order();
    let mut map: Jet<Multi<F>> = Jet::variable(Multi::constant(z0.clone()), order);
    for (i, d) in directions.iter().enumerate() {
        let push = d.eval_jet(&map)?;
        let t = Jet::constant(Multi::param(i), order);
        map = map.add(&push.mul(&t));
    }
    let full = (1usize << directions.len()) - 1;
    Ok(functional_from_jet(kind, &map)?.coeff(full))
}

pub fn functional_nabla(f: &AnalyticFunctional, directions: &[MapExpr]) -> Result<Complex64> {
    nabla_at(f.kind, &f.z0, directions)
}

/// `ĥ_{k,w}(z) = (z - w)^{1-k}`.
pub fn hat_h(k: u32, w: MapExpr) -> MapExpr {
    (MapExpr::z() - w).pow(1 - k as i32).simplified()
}

/// The direction `Π_a (∂^a h)^{e_a}` of a monomial in the derivatives of `h`.
pub fn direction_expr(m: &Monomial, h: &MapExpr) -> MapExpr {
    let mut out = MapExpr::int(1);
    let mut der = h.clone();
    for &e in m.exponents() {
        if e > 0 {
            out = out * der.clone().pow(e as i32);
        }
        der = der.derivative();
    }
    out.simplified()
}

/// `□̃^{(m)}[ĥ_{k,w}] f` at the identity, from the operator calculus.
pub fn tbox_value<F: Scalar>(kind: FunctionalKind, z0: &F, m: u32, k: u32, w: MapExpr) -> Result<F> {
    let h = hat_h(k, w);
    let op = derive_tbox(i64::from(m))?;
    let mut total = F::zero();
    for (word, c) in op.terms() {
        let dirs: Vec<MapExpr> = word.iter().map(|mono| direction_expr(mono, &h)).collect();
        total = total.add(&nabla_at(kind, z0, &dirs)?.mul(&F::from_rational(c)));
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{falling_factorial, int, rat, Rational};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn evaluations() {
        let two = c(2.0, 0.0);
        assert_eq!(functional_eval(&AnalyticFunctional::evaluation_at(two), &MapExpr::z()).unwrap(), two);
        let mob = MapExpr::mobius(int(2), int(1), int(1), int(3));
        let s = functional_eval(&AnalyticFunctional::schwarzian_at(c(0.5, 0.2)), &mob).unwrap();
        assert!(s.norm() < 1e-13);
        let eps: f64 = 0.3;
        let g = MapExpr::z() + MapExpr::complex(c(eps * eps, 0.0)) / MapExpr::z();
        let v = functional_eval(&AnalyticFunctional::evaluation_at(two), &g).unwrap();
        assert!((v - (2.0 + eps * eps / 2.0)).norm() < 1e-15);
        let flat = MapExpr::z().pow(2);
        let err = functional_eval(&AnalyticFunctional::log_derivative_at(c(0.0, 0.0)), &flat);
        assert!(matches!(err, Err(Error::Singular(_))));
    }

    #[test]
    fn first_variations() {
        let z0 = int(3);
        let h = MapExpr::z().pow(4) + MapExpr::int(2) * MapExpr::z();
        let ev = nabla_at(FunctionalKind::EvaluationAt, &z0, std::slice::from_ref(&h)).unwrap();
        assert_eq!(ev, h.eval(&z0).unwrap());
        let sch = nabla_at(FunctionalKind::SchwarzianAt, &z0, std::slice::from_ref(&h)).unwrap();
        assert_eq!(sch, int(24 * 3));
        let ld = nabla_at(FunctionalKind::LogDerivativeAt, &z0, std::slice::from_ref(&h)).unwrap();
        assert_eq!(ld, h.derivative().eval(&z0).unwrap());
    }

    #[test]
    fn second_variation_of_evaluation() {
        // ∇_{a}∇_{b} ev = a · ∂b
        let a = MapExpr::z().pow(2);
        let b = MapExpr::z().pow(3);
        let z0 = rat(1, 2);
        let v = nabla_at(FunctionalKind::EvaluationAt, &z0, &[a, b]).unwrap();
        assert_eq!(v, rat(1, 4) * rat(3, 4));
    }

    #[test]
    fn hat_h_value() {
        let z0 = Complex64::new(1.5, 0.5);
        let w = Complex64::new(0.25, -0.25);
        for k in 2..=4u32 {
            let v = functional_nabla(&AnalyticFunctional::evaluation_at(z0), &[hat_h(k, MapExpr::complex(w))]).unwrap();
            assert!((v - (z0 - w).powi(1 - k as i32)).norm() < 1e-14);
        }
    }

    #[test]
    fn tbox_on_evaluation_is_monomial_in_the_distance() {
        // □̃^{(m)}[ĥ] ev = (-1)^m (m - km)_{m-1} x^{1-km}
        for k in 2..=3u32 {
            for m in 1..=3u32 {
                let ff = falling_factorial(i64::from(m) - i64::from(k * m), m - 1);
                let cm = Rational::from(if m % 2 == 0 { ff } else { -ff });
                for x in [int(2), rat(-1, 3)] {
                    let v = tbox_value(FunctionalKind::EvaluationAt, &x, m, k, MapExpr::int(0)).unwrap();
                    assert_eq!(v, &cm * x.pow(1 - (k * m) as i32), "k={k} m={m}");
                }
            }
        }
    }
}
