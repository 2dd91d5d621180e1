use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::qpoly::QPoly;
use crate::error::{Error, Result};

/// Sparse polynomial in `u`, `v` with exact rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigRational>,
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn integer(c: i64) -> Self {
        Self::constant(rat(c))
    }

    pub fn monomial(c: BigRational, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        Self { terms }
    }

    pub fn u() -> Self {
        Self::monomial(BigRational::one(), 1, 0)
    }

    pub fn v() -> Self {
        Self::monomial(BigRational::one(), 0, 1)
    }

    /// `(uv)^m`
    pub fn q_pow(m: u32) -> Self {
        Self::monomial(BigRational::one(), m, m)
    }

    /// `(uv)^m - 1`
    pub fn q_pow_minus_one(m: u32) -> Self {
        Self::q_pow(m) - Self::one()
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), BigRational)>,
    {
        let mut p = Self::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    /// Builds a polynomial from integer coefficients.
    pub fn from_int_terms(terms: &[(u32, u32, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(i, j, c)| ((i, j), rat(c))))
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&(u32, u32), &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigRational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&k, x)| (k, x * c)).collect(),
        }
    }

    /// Multiplies by `(uv)^m`.
    pub fn mul_q_pow(&self, m: u32) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(i, j), c)| ((i + m, j + m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Leading term under graded lexicographic order with `u > v`.
    fn leading(&self) -> Option<((u32, u32), &BigRational)> {
        self.terms
            .iter()
            .max_by_key(|(&(i, j), _)| (i + j, i))
            .map(|(&k, c)| (k, c))
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Runs multivariate division with respect to graded lex order (`u > v`)
    /// and fails with [`Error::NonExactDivision`] if any remainder is left.
    pub fn exact_div(&self, divisor: &BiPoly) -> Result<BiPoly> {
        let ((di, dj), dc) = match divisor.leading() {
            Some((k, c)) => (k, c.clone()),
            None => return Err(Error::InvalidInput("division by the zero polynomial".into())),
        };
        let mut rem = self.clone();
        let mut quotient = BiPoly::zero();
        while let Some(((ri, rj), rc)) = rem.leading() {
            if ri < di || rj < dj {
                return Err(Error::NonExactDivision);
            }
            let c = rc / &dc;
            let (si, sj) = (ri - di, rj - dj);
            for (&(i, j), x) in &divisor.terms {
                rem.add_term(i + si, j + sj, -(x * &c));
            }
            quotient.add_term(si, sj, c);
        }
        Ok(quotient)
    }

    pub fn eval(&self, u: &BigRational, v: &BigRational) -> BigRational {
        self.terms.iter().fold(BigRational::zero(), |acc, (&(i, j), c)| {
            acc + c * num_traits::pow(u.clone(), i as usize) * num_traits::pow(v.clone(), j as usize)
        })
    }

    /// Substitutes `u = v = t`.
    pub fn diagonal(&self) -> QPoly {
        let mut p = QPoly::zero();
        for (&(i, j), c) in &self.terms {
            p.add_term(i as i64 + j as i64, c.clone());
        }
        p
    }

    /// Interprets a polynomial in `uv` alone as a polynomial in `q = uv`.
    pub fn as_q_poly(&self) -> Option<QPoly> {
        let mut p = QPoly::zero();
        for (&(i, j), c) in &self.terms {
            if i != j {
                return None;
            }
            p.add_term(i as i64, c.clone());
        }
        Some(p)
    }

    pub fn swap_uv(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect(),
        }
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Checks `(-1)^(i+j) c_{i,j} >= 0`, returning the first violating monomial.
    pub fn alternating_sign_violation(&self) -> Option<(u32, u32)> {
        self.terms
            .iter()
            .find(|(&(i, j), c)| {
                let c = if (i + j) % 2 == 0 { (*c).clone() } else { -(*c).clone() };
                c.is_negative()
            })
            .map(|(&k, _)| k)
    }
}

impl From<QPoly> for BiPoly {
    /// Embeds the nonnegative part via `q^m -> u^m v^m`; panics on negative exponents.
    fn from(p: QPoly) -> Self {
        p.to_bipoly().expect("QPoly with negative exponents cannot be embedded")
    }
}

impl AddAssign<&BiPoly> for BiPoly {
    fn add_assign(&mut self, rhs: &BiPoly) {
        for (&(i, j), c) in &rhs.terms {
            self.add_term(i, j, c.clone());
        }
    }
}

impl SubAssign<&BiPoly> for BiPoly {
    fn sub_assign(&mut self, rhs: &BiPoly) {
        for (&(i, j), c) in &rhs.terms {
            self.add_term(i, j, -c.clone());
        }
    }
}

impl Add<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: &BiPoly) -> BiPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<BiPoly> for &BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}
