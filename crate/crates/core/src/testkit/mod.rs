//! Numerical confrontation of `f(g^{-1}_{k,w,ε,θ})` with its predicted
//! expansion in `u^k`, for explicit functionals of conformal maps.

mod expansion;
mod functional;
mod lagrange;
mod multi;

pub use expansion::{
    analytic_coefficients, deformed_value, expansion_residual, fourier_extract, invert_map, map_expr, ExpansionReport,
};
pub use functional::{
    direction_expr, functional_eval, functional_from_jet, functional_nabla, hat_h, nabla_at, tbox_value,
    AnalyticFunctional, FunctionalKind,
};
pub use lagrange::{lagrange_coefficient, lagrange_series, symbolic_inverse_check};
pub use multi::Multi;
