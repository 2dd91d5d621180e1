//! Published closed forms transcribed verbatim (up to notation) for golden tests.
#![allow(dead_code)]

use stringy_core::algebra::parse_expression;
use stringy_core::StringyRational;

/// Contribution of the singular point at the origin, `x_1^5 + x_2^5 + x_3^6 + .. + x_7^6`.
/// The published display writes one monomial as `v^7v^8`; it is `u^7v^8` by the
/// evident `u <-> v` symmetry of the bracket.
pub const CONTRIBUTION_ORIGIN: &str = "(uv-1)/((uv)^7-1) * ( 5(uv)^10+(uv)^9+7(uv)^8+3(uv)^7+9(uv)^6+4(uv)^5+8(uv)^4 \
    +2(uv)^3+6(uv)^2+uv+1 -5u^9v^6-5u^6v^9 -255u^8v^7 -255u^7v^8-5u^8v^5 \
    -5u^5v^8 -255u^7v^6 -255u^6v^7-5u^7v^4-5u^4v^7 -255u^6v^5 - \
    255u^5v^6 -5u^6v^3 -5u^3v^6-255u^5v^4 -255u^4v^5 -20u^4v-20uv^4-1020u^3v^2-1020u^2v^3 )";

/// Contribution of a singular point at infinity, `x_1^2 + x_2^2 + x_3^6 + .. + x_7^6`.
pub const CONTRIBUTION_INFINITY: &str = "(uv-1)/((uv)^5-1) * ( 5(uv)^5+(uv)^4+(uv)^3+(uv)^2+uv+1 \
    -5u^4v-5uv^4 -255u^3v^2 - 255u^2v^3 )";

/// Smooth part at infinity.
pub const PART_AT_INFINITY: &str = "(uv)^5+(uv)^4+(uv)^3+(uv)^2+uv -4 -5u^5v^2-5u^2v^5-255u^4v^3-255u^3v^4";

/// Affine part minus the singular point.
pub const AFFINE_PART: &str = "(uv)^6-1-(uv-1)(20u^4v+20uv^4+1020u^3v^2+1020u^2v^3)";

/// Stringy E-function of the whole sextic sixfold.
pub const STRINGY_E_FUNCTION: &str = "1/(((uv)^5-1)((uv)^7-1)) * ( (uv)^18+(uv)^17+6(uv)^16-3(uv)^15 \
    +7(uv)^14 +21(uv)^13-20(uv)^12-12(uv)^11+6(uv)^10-14(uv)^9 +6(uv)^8 \
    -12(uv)^7 -20(uv)^6+21(uv)^5+7(uv)^4-3(uv)^3+6(uv)^2+uv+1 \
    -25(u^17v^14 +u^14v^17+u^4v+uv^4) -1275(u^16v^15+u^15v^16+u^3v^2+u^2v^3) \
    +20(u^16v^13 +u^13v^16+u^5v^2+u^2v^5)+ 1020(u^15v^14+u^14v^15+u^4v^3+u^3v^4) \
    -5(u^15v^12 +u^12v^15+u^6v^3+u^3v^6) -255(u^14v^13+u^13v^14+u^5v^4+u^4v^5) \
    +10(u^11v^8 +u^8v^11+u^10v^7+u^7v^10) + 510(u^10v^9+u^9v^10+u^9v^8+u^8v^9) )";

pub fn parse(text: &str) -> StringyRational {
    parse_expression(text).unwrap_or_else(|e| panic!("transcription does not parse: {e}"))
}
