use std::f64::consts::TAU;
use std::fmt::Write as _;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use super::functional::{functional_eval, functional_from_jet, tbox_value, AnalyticFunctional};
use crate::algebra::factorial;
use crate::error::{domain, Error, Result};
use crate::geometry::{map_derivative, map_eval, HypotrochoidSpec};
use crate::ward::MapExpr;

const MAX_NEWTON: usize = 64;

/// `g_{k,w,ε,θ}` as an expression.
pub fn map_expr(spec: &HypotrochoidSpec) -> MapExpr {
    let uk = spec.u().powi(spec.k as i32);
    MapExpr::z() + MapExpr::complex(uk) * (MapExpr::z() - MapExpr::complex(spec.w)).pow(1 - spec.k as i32)
}

/// Preimage of `z0` under `g_{k,w,ε,θ}` outside the disk `|ζ - w| > bε`.
/// Newton iteration seeded at `z0`; a step that does not reduce the
/// residual is halved along its ray.
pub fn invert_map(spec: &HypotrochoidSpec, z0: Complex64) -> Result<Complex64> {
    let mut zeta = z0;
    let mut resid = (map_eval(spec, zeta)? - z0).norm();
    for _ in 0..MAX_NEWTON {
        let r = map_eval(spec, zeta)? - z0;
        let d = map_derivative(spec, zeta)?;
        if d.norm() == 0.0 {
            return Err(Error::Numeric(format!("critical point of g hit at {zeta}")));
        }
        let mut step = r / d;
        let mut next = zeta - step;
        let mut next_resid = (map_eval(spec, next)? - z0).norm();
        let mut halvings = 0;
        while next_resid > resid && halvings < 40 {
            step *= 0.5;
            next = zeta - step;
            next_resid = (map_eval(spec, next)? - z0).norm();
            halvings += 1;
        }
        zeta = next;
        resid = next_resid;
        if step.norm() <= 4.0 * f64::EPSILON * zeta.norm().max(1.0) {
            if (zeta - spec.w).norm() <= spec.b * spec.eps {
                return domain(format!("preimage {zeta} of {z0} lies inside the disk of radius b·eps"));
            }
            return Ok(zeta);
        }
    }
    Err(Error::Numeric(format!(
        "inverse of g at {z0} did not converge in {MAX_NEWTON} iterations (last iterate {zeta}, residual {resid:e})"
    )))
}

/// `f(g^{-1}_{k,w,ε,θ})`: Newton inversion, then the jet of the inverse
/// from reversion of the jet of `g` at the preimage.
pub fn deformed_value(f: &AnalyticFunctional, spec: &HypotrochoidSpec) -> Result<Complex64> {
    let zeta = invert_map(spec, f.z0)?;
    let jet = map_expr(spec).jet_at(&zeta, f.kind.order().max(1))?;
    functional_from_jet(f.kind, &jet.revert(&zeta)?)
}

/// `[f(id), □̃^{(1)}[ĥ_{k,w}] f, ..., □̃^{(M)}[ĥ_{k,w}] f]`.
pub fn analytic_coefficients(f: &AnalyticFunctional, k: u32, w: Complex64, max_order: u32) -> Result<Vec<Complex64>> {
    let mut out = vec![functional_eval(f, &MapExpr::z())?];
    for m in 1..=max_order {
        out.push(tbox_value(f.kind, &f.z0, m, k, MapExpr::complex(w))?);
    }
    Ok(out)
}

fn fact(m: u32) -> f64 {
    num_traits::ToPrimitive::to_f64(&factorial(u64::from(m))).unwrap()
}

#[derive(Clone, Debug, Serialize)]
pub struct ExpansionReport {
    pub functional: AnalyticFunctional,
    pub k: u32,
    pub w: Complex64,
    pub theta: f64,
    pub b: f64,
    pub max_order: u32,
    pub coefficients: Vec<Complex64>,
    pub eps: Vec<f64>,
    pub residuals: Vec<f64>,
    /// Least-squares slope of `log residual` against `log ε`.
    pub slope: f64,
    pub expected_slope: f64,
}

impl ExpansionReport {
    pub fn table(&self) -> String {
        let mut out = format!("{:>14} {:>14}\n", "eps", "residual");
        for (e, r) in self.eps.iter().zip(&self.residuals) {
            writeln!(out, "{e:>14.6e} {r:>14.6e}").unwrap();
        }
        writeln!(out, "slope {:.4} (expected {:.1})", self.slope, self.expected_slope).unwrap();
        out
    }
}

fn fit_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let pts: Vec<(f64, f64)> = xs.iter().zip(ys).filter(|(_, &y)| y > 0.0).map(|(&x, &y)| (x.ln(), y.ln())).collect();
    if pts.len() < 2 {
        return f64::NAN;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

/// Residual of the truncated expansion `Σ_{m<=M} u^{km}/m! □̃^{(m)}[ĥ] f`
/// against `f(g^{-1})` on a strictly decreasing ε grid.
pub fn expansion_residual(
    f: &AnalyticFunctional,
    k: u32,
    w: Complex64,
    theta: f64,
    b: f64,
    max_order: u32,
    eps_grid: &[f64],
) -> Result<ExpansionReport> {
    if max_order > 4 {
        return domain(format!("expansion order {max_order} > 4"));
    }
    if eps_grid.len() < 2 || eps_grid.windows(2).any(|p| p[1] >= p[0]) {
        return domain("eps grid must have at least two strictly decreasing entries");
    }
    let coefficients = analytic_coefficients(f, k, w, max_order)?;
    let residuals = eps_grid
        .par_iter()
        .map(|&eps| {
            let spec = HypotrochoidSpec::new(k, w, eps, theta, b)?;
            if (f.z0 - w).norm() <= spec.radius() {
                return domain(format!("z0 = {} is not outside the curve at eps = {eps}", f.z0));
            }
            let actual = deformed_value(f, &spec)?;
            let uk = spec.u().powi(k as i32);
            let predicted = coefficients
                .iter()
                .enumerate()
                .map(|(m, a)| uk.powi(m as i32) * a / fact(m as u32))
                .sum::<Complex64>();
            Ok((actual - predicted).norm())
        })
        .collect::<Result<Vec<f64>>>()?;
    let slope = fit_slope(eps_grid, &residuals);
    Ok(ExpansionReport {
        functional: *f,
        k,
        w,
        theta: theta.rem_euclid(TAU),
        b,
        max_order,
        coefficients,
        eps: eps_grid.to_vec(),
        residuals,
        slope,
        expected_slope: f64::from(k * (max_order + 1)),
    })
}

/// `(m!/ε^{km}) (1/n_θ) Σ_j e^{-kmiθ_j} f(g^{-1}_{k,w,ε,θ_j})` on the uniform
/// grid `θ_j = 2πj/n_θ`; the `θ` of `spec` is ignored. `f(id)` is subtracted
/// before summing and restored for `m = 0`.
pub fn fourier_extract(f: &AnalyticFunctional, spec: &HypotrochoidSpec, m: u32, n_theta: usize) -> Result<Complex64> {
    if n_theta < 64 {
        return domain(format!("n_theta = {n_theta} < 64"));
    }
    if (f.z0 - spec.w).norm() <= spec.radius() {
        return domain(format!("z0 = {} is not outside the curve", f.z0));
    }
    let base = functional_eval(f, &MapExpr::z())?;
    let mode = f64::from(spec.k * m);
    let terms = (0..n_theta)
        .into_par_iter()
        .map(|j| {
            let theta = TAU * j as f64 / n_theta as f64;
            let s = HypotrochoidSpec { theta, ..*spec };
            Ok(Complex64::cis(-mode * theta) * (deformed_value(f, &s)? - base))
        })
        .collect::<Result<Vec<Complex64>>>()?;
    let mean = terms.iter().sum::<Complex64>() / n_theta as f64;
    let out = mean * fact(m) / spec.eps.powf(mode);
    Ok(if m == 0 { out + base } else { out })
}
