//! Exact computation of stringy E-functions of hypersurfaces with Brieskorn
//! singularities.
//!
//! The crate evaluates the closed formula for the contribution of a Brieskorn
//! singularity `x_1^a_1 + .. + x_d^a_d`, an independent Newton polyhedron
//! route through the Hodge-specialized local zeta function and its residue at
//! `T = uv`, and stringy E-functions assembled from log-resolution strata.
//! All arithmetic is over arbitrary-precision rationals.

pub mod algebra;
pub mod brieskorn;
pub mod error;
pub mod hodge;
pub mod newtonzeta;
pub mod resolution;
pub mod sextic;
mod subset;

pub use algebra::{BiPoly, QPoly, StringyRational};
pub use brieskorn::{BrieskornData, Classification};
pub use error::{Error, Result};
pub use hodge::{HodgePolynomial, VarietyKind, WeightSystem};
pub use newtonzeta::{SimplicialCone, SupportSet, ZetaExpression};
pub use resolution::{Component, Mode, ResolutionData};
pub use subset::Subset;
