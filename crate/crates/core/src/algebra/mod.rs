//! Exact bivariate polynomial arithmetic in `u`, `v` and the restricted
//! rational functions `N * (uv)^s / prod ((uv)^m - 1)` that carry stringy
//! E-functions.

mod bipoly;
mod parse;
mod qpoly;
mod render;
mod stringy;

pub use bipoly::BiPoly;
pub use parse::{parse_expression, parse_polynomial};
pub use qpoly::QPoly;
pub use stringy::StringyRational;

pub(crate) use bipoly::rat;
pub(crate) use render::{power, write_terms};
