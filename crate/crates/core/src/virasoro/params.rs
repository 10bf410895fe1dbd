use std::f64::consts::PI;

use serde::Serialize;

use crate::algebra::{int, rat, Rational};
use crate::error::{domain, Result};

/// Which of the equivalent parameters is given.
#[derive(Clone, Debug, PartialEq)]
pub enum ParamInput {
    Kappa(f64),
    /// Exact κ; the central charge is then also exact.
    KappaExact(Rational),
    N(f64),
    Y(f64),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ModelParams {
    pub kappa: f64,
    pub n: f64,
    pub y: f64,
    pub c: f64,
    #[serde(serialize_with = "ser_opt_rational")]
    pub c_exact: Option<Rational>,
}

fn ser_opt_rational<S: serde::Serializer>(r: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&r.to_string()),
        None => s.serialize_none(),
    }
}

const SLACK: f64 = 1e-12;

/// `c = (6 - κ)(3κ - 8) / (2κ)`.
pub fn central_charge_exact(kappa: &Rational) -> Rational {
    (int(6) - kappa) * (int(3) * kappa - int(8)) / (int(2) * kappa)
}

fn from_kappa(kappa: f64) -> Result<ModelParams> {
    if !(kappa.is_finite() && (8.0 / 3.0 - SLACK..=4.0 + SLACK).contains(&kappa)) {
        return domain(format!("kappa = {kappa} outside [8/3, 4]"));
    }
    let y = 1.0 - 2.0 / kappa;
    Ok(ModelParams {
        kappa,
        n: -2.0 * (2.0 * PI * y).cos(),
        y,
        c: (6.0 - kappa) * (3.0 * kappa - 8.0) / (2.0 * kappa),
        c_exact: None,
    })
}

pub fn kappa_c_map(input: ParamInput) -> Result<ModelParams> {
    match input {
        ParamInput::Kappa(k) => from_kappa(k),
        ParamInput::KappaExact(k) => {
            if k < rat(8, 3) || k > int(4) {
                return domain(format!("kappa = {k} outside [8/3, 4]"));
            }
            let mut p = from_kappa(crate::algebra::rational_to_f64(&k))?;
            let c = central_charge_exact(&k);
            p.c = crate::algebra::rational_to_f64(&c);
            p.c_exact = Some(c);
            Ok(p)
        }
        ParamInput::Y(y) => {
            if !(y.is_finite() && (0.25 - SLACK..=0.5 + SLACK).contains(&y)) {
                return domain(format!("y = {y} outside [1/4, 1/2]"));
            }
            let mut p = from_kappa((2.0 / (1.0 - y)).clamp(8.0 / 3.0, 4.0))?;
            p.y = y;
            Ok(p)
        }
        ParamInput::N(n) => {
            if !(n.is_finite() && (-SLACK..=2.0 + SLACK).contains(&n)) {
                return domain(format!("n = {n} outside [0, 2]"));
            }
            let y = (-n.clamp(0.0, 2.0) / 2.0).acos() / (2.0 * PI);
            let mut p = kappa_c_map(ParamInput::Y(y))?;
            p.n = n;
            Ok(p)
        }
    }
}
