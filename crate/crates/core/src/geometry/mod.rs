//! Hypotrochoid curves `w + εe^{iθ}(b e^{iα} + b^{1-k} e^{(1-k)iα})`, the
//! conformal map whose circle image they are, and their numeric checks.

mod curve;
mod export;
mod simplicity;
mod symmetry;

pub use curve::{cusp_threshold, curve_point, curve_tangent, map_derivative, map_eval, sample_curve, CurveSamples, CuspThreshold, HypotrochoidSpec};
pub use export::{curve_csv, curve_svg, export_curve, CurveFormat};
pub use simplicity::{self_intersections, simplicity_check, winding_number};
pub use symmetry::dk_symmetry_check;
