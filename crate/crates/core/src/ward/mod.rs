//! Sphere correlators of vacuum descendants, the Schwarzian calculus on
//! explicit conformal maps and the singular OPE of `T_{k,1}` fields.

mod insertion;
mod jet;
mod mapexpr;
mod ope;
mod scalar;
mod schwarzian;
mod diffsum;
mod sphere;

pub use insertion::parse_insertions;
pub use jet::Jet;
pub use mapexpr::MapExpr;
pub use ope::{ope_tk1, OpeCoefficient};
pub use scalar::{Scalar, SymFn};
pub use schwarzian::{
    one_point_tk1, schwarzian, schwarzian_derivatives, schwarzian_from_jet, transformation_check,
    transformation_sides, TransformationSides,
};
pub use sphere::{permutation_invariance, sphere_correlator, Insertion, SphereEngine};
