use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::bipoly::{rat, BiPoly};
use crate::error::{Error, Result};

/// Univariate Laurent polynomial with rational coefficients.
///
/// Used for polynomials in `q = uv` (such as the `p_J`) and for plain
/// univariate work in an auxiliary variable `t`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    terms: BTreeMap<i64, BigRational>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigRational::one(), 0)
    }

    pub fn monomial(c: BigRational, e: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    /// `x^e`
    pub fn power(e: i64) -> Self {
        Self::monomial(BigRational::one(), e)
    }

    pub fn from_int_coeffs(coeffs: &[(i64, i64)]) -> Self {
        let mut p = Self::zero();
        for &(e, c) in coeffs {
            p.add_term(e, rat(c));
        }
        p
    }

    pub fn add_term(&mut self, e: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&i64, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: i64) -> BigRational {
        self.terms.get(&e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn low_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// No negative exponents.
    pub fn is_polynomial(&self) -> bool {
        self.low_degree().is_none_or(|e| e >= 0)
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.terms.values().next_back()
    }

    pub fn shift(&self, by: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e + by, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, x)| (e, x * c)).collect(),
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.terms.iter().fold(BigRational::zero(), |acc, (&e, c)| {
            let p = if e >= 0 {
                num_traits::pow(x.clone(), e as usize)
            } else {
                num_traits::pow(x.recip(), (-e) as usize)
            };
            acc + c * p
        })
    }

    /// Dense coefficient list `[c_0, c_1, ..]` of a polynomial.
    pub fn dense_coefficients(&self) -> Option<Vec<BigRational>> {
        if !self.is_polynomial() {
            return None;
        }
        let Some(deg) = self.degree() else {
            return Some(Vec::new());
        };
        Some((0..=deg).map(|e| self.coeff(e)).collect())
    }

    /// Embedding `q^m -> u^m v^m`; `None` if a negative exponent is present.
    pub fn to_bipoly(&self) -> Option<BiPoly> {
        if !self.is_polynomial() {
            return None;
        }
        Some(BiPoly::from_terms(
            self.terms.iter().map(|(&e, c)| ((e as u32, e as u32), c.clone())),
        ))
    }

    /// Polynomial division with remainder; both operands must be polynomials.
    pub fn div_rem(&self, divisor: &QPoly) -> Result<(QPoly, QPoly)> {
        let (Some(dd), Some(dc)) = (divisor.degree(), divisor.leading_coeff().cloned()) else {
            return Err(Error::InvalidInput("division by the zero polynomial".into()));
        };
        if !self.is_polynomial() || !divisor.is_polynomial() {
            return Err(Error::InvalidInput("polynomial division needs nonnegative exponents".into()));
        }
        let mut rem = self.clone();
        let mut quo = QPoly::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.coeff(rd) / &dc;
            let s = rd - dd;
            for (&e, x) in &divisor.terms {
                rem.add_term(e + s, -(x * &c));
            }
            quo.add_term(s, c);
        }
        Ok((quo, rem))
    }

    /// Exact quotient of Laurent polynomials.
    pub fn exact_div(&self, divisor: &QPoly) -> Result<QPoly> {
        let (Some(a), Some(b)) = (self.low_degree(), divisor.low_degree()) else {
            if divisor.is_zero() {
                return Err(Error::InvalidInput("division by the zero polynomial".into()));
            }
            return Ok(QPoly::zero());
        };
        let (quo, rem) = self.shift(-a).div_rem(&divisor.shift(-b))?;
        if !rem.is_zero() {
            return Err(Error::NonExactDivision);
        }
        Ok(quo.shift(a - b))
    }

    /// Monic greatest common divisor of two polynomials.
    pub fn gcd(&self, other: &QPoly) -> Result<QPoly> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        match a.leading_coeff().cloned() {
            Some(lc) => Ok(a.scale(&lc.recip())),
            None => Ok(QPoly::zero()),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(QPoly::one(), |acc, _| &acc * self)
    }
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub<&QPoly> for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        self.scale(&-BigRational::one())
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(self, rhs: QPoly) -> QPoly {
        &self + &rhs
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(self, rhs: QPoly) -> QPoly {
        &self - &rhs
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_division() {
        // (1 - t^4) / (1 - t) = 1 + t + t^2 + t^3
        let n = QPoly::from_int_coeffs(&[(0, 1), (4, -1)]);
        let d = QPoly::from_int_coeffs(&[(0, 1), (1, -1)]);
        let q = n.exact_div(&d).unwrap();
        assert_eq!(q, QPoly::from_int_coeffs(&[(0, 1), (1, 1), (2, 1), (3, 1)]));
    }

    #[test]
    fn laurent_exact_division() {
        let n = QPoly::from_int_coeffs(&[(-3, 1), (-1, -1)]);
        let d = QPoly::from_int_coeffs(&[(-2, 1), (-1, 1)]);
        // t^-3 (1 - t^2) / (t^-2 (1 + t)) = t^-1 (1 - t)
        assert_eq!(n.exact_div(&d).unwrap(), QPoly::from_int_coeffs(&[(-1, 1), (0, -1)]));
    }

    #[test]
    fn gcd_is_monic() {
        let a = QPoly::from_int_coeffs(&[(0, -2), (2, 2)]); // 2(t^2 - 1)
        let b = QPoly::from_int_coeffs(&[(0, 3), (1, -3)]); // -3(t - 1)
        assert_eq!(a.gcd(&b).unwrap(), QPoly::from_int_coeffs(&[(0, -1), (1, 1)]));
    }

    #[test]
    fn embedding_into_bipoly() {
        let p = QPoly::from_int_coeffs(&[(0, 1), (2, 3)]);
        assert_eq!(p.to_bipoly().unwrap(), BiPoly::from_int_terms(&[(0, 0, 1), (2, 2, 3)]));
        assert!(QPoly::power(-1).to_bipoly().is_none());
    }
}
