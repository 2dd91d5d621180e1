//! The sextic sixfold `Y = {x_1^5 z + x_2^5 z + x_3^6 + .. + x_7^6 = 0}` in `P^7`.
//!
//! `Y` has one singular point at the origin of the chart `z != 0`, locally
//! `x_1^5 + x_2^5 + x_3^6 + .. + x_7^6`, and five at infinity, each locally
//! `x_1^2 + x_2^2 + x_3^6 + .. + x_7^6`. Its stringy E-function is the sum of the
//! contributions of these points and the Hodge-Deligne polynomial of the smooth
//! locus.

use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{BiPoly, StringyRational};
use crate::brieskorn::contribution;
use crate::error::Result;
use crate::hodge::{diagonal_face_hodge, fermat_hodge, projective_cone};

pub const DIMENSION: u32 = 6;
pub const ORIGIN_EXPONENTS: [u64; 7] = [5, 5, 6, 6, 6, 6, 6];
pub const INFINITY_EXPONENTS: [u64; 7] = [2, 2, 6, 6, 6, 6, 6];
pub const POINTS_AT_INFINITY: i64 = 5;

#[derive(Clone, Debug)]
pub struct SexticParts {
    /// Contribution of the singular point at the origin.
    pub origin: StringyRational,
    /// Contribution of one singular point at infinity.
    pub infinity: StringyRational,
    /// `H` of the hyperplane section at infinity minus its singular points.
    pub smooth_at_infinity: BiPoly,
    /// `H` of the affine chart minus the origin.
    pub smooth_affine: BiPoly,
}

impl SexticParts {
    pub fn compute() -> Result<Self> {
        let origin = contribution(&ORIGIN_EXPONENTS)?;
        let infinity = contribution(&INFINITY_EXPONENTS)?;
        // The part at infinity is the double projective cone over the Fermat threefold of degree 6.
        let at_infinity = projective_cone(&projective_cone(&fermat_hodge(3, 6)));
        let smooth_at_infinity = at_infinity.poly - BiPoly::integer(POINTS_AT_INFINITY);
        let smooth_affine = diagonal_face_hodge(&ORIGIN_EXPONENTS)?.poly - BiPoly::one();
        Ok(Self { origin, infinity, smooth_at_infinity, smooth_affine })
    }

    pub fn stringy_e_function(&self) -> StringyRational {
        self.origin.clone()
            + self.infinity.scale(&BigRational::from_integer(POINTS_AT_INFINITY.into()))
            + StringyRational::from_poly(&self.smooth_at_infinity + &self.smooth_affine)
    }
}

/// `E_st(Y)` assembled from the closed-form contributions.
pub fn stringy_e_function() -> Result<StringyRational> {
    Ok(SexticParts::compute()?.stringy_e_function())
}

/// Coefficient `b_{i,j}` of `u^i v^j` in the power series of `E_st(Y)`.
pub fn series_coefficient(e: &StringyRational, i: u32, j: u32) -> Result<BigRational> {
    Ok(e.series_coefficients(i + j)?.get(&(i, j)).cloned().unwrap_or_else(BigRational::zero))
}
