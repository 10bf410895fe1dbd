//! Conformal-derivative operators: the expansion coefficients of
//! `f(id + εh)` and `f((id + εh)^{-1})`, Witt normal forms and the
//! hypotrochoid specialization.

mod boxes;
mod direction;
mod operator;
mod specialize;

pub use boxes::{
    composition_check, derive_box, derive_box_along, derive_tbox, derive_tbox_along, sign_flip_report,
    tbox_closed,
};
pub use direction::{DirectionPoly, Monomial};
pub use operator::{witt_normal_form, NablaWord, OperatorSum, WittNormalizer};
pub use specialize::{specialize_hypotrochoid, specialize_operator, DeltaSum, DeltaWord};
