//! The vacuum Virasoro module: normal ordering, the descendants `T_{k,m}`,
//! the bilinear form and re-expression in terms of `∂^d T_{k,m}`.

mod basis;
mod descendant;
mod params;
mod pbw;

pub use basis::{candidates, hypotrochoid_basis_solve, hypotrochoid_basis_solve_with, BasisSolution};
pub use descendant::{descendant, descendant_with, descendant_words, DescendantSymbol};
pub use params::{central_charge_exact, kappa_c_map, ModelParams, ParamInput};
pub use pbw::{
    is_canonical, l_minus_one_derivative, normal_order, shapovalov, shapovalov_with, vir_bracket, word_weight,
    Bracket, ModeWord, Normalizer, PBWVector,
};
