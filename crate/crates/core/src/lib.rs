pub mod algebra;
pub mod checks;
pub mod confderiv;
pub mod error;
pub mod geometry;
pub mod testkit;
pub mod virasoro;
pub mod ward;

pub use error::{Error, Result};
