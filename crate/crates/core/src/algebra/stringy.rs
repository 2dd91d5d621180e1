use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::bipoly::{rat, BiPoly};
use super::qpoly::QPoly;
use crate::error::{Error, Result};

/// Rational function `numerator * (uv)^q_shift / prod_m ((uv)^m - 1)`.
///
/// Values are never reduced to lowest terms; compare them with
/// [`StringyRational::cross_equal`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StringyRational {
    numerator: BiPoly,
    /// Sorted multiset of exponents `m >= 1`.
    denominators: Vec<u32>,
    q_shift: i64,
}

impl StringyRational {
    pub fn new(numerator: BiPoly, mut denominators: Vec<u32>, q_shift: i64) -> Self {
        assert!(
            denominators.iter().all(|&m| m >= 1),
            "denominator factors (uv)^m - 1 need m >= 1"
        );
        denominators.sort_unstable();
        Self { numerator, denominators, q_shift }
    }

    pub fn from_poly(p: BiPoly) -> Self {
        Self::new(p, Vec::new(), 0)
    }

    pub fn zero() -> Self {
        Self::from_poly(BiPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(BiPoly::one())
    }

    /// `1 / ((uv)^m - 1)`
    pub fn inverse_q_pow_minus_one(m: u32) -> Self {
        Self::new(BiPoly::one(), vec![m], 0)
    }

    /// `(uv)^s` for any integer `s`.
    pub fn q_power(s: i64) -> Self {
        Self::new(BiPoly::one(), Vec::new(), s)
    }

    /// `1 / (1 - (uv)^n)`, which exists for every `n != 0`.
    pub fn inverse_one_minus_q_pow(n: i64) -> Result<Self> {
        match n {
            0 => Err(Error::VanishingFactor(0)),
            n if n > 0 => Ok(Self::new(-BiPoly::one(), vec![n as u32], 0)),
            // 1 / (1 - q^-m) = q^m / (q^m - 1)
            n => Ok(Self::new(BiPoly::one(), vec![(-n) as u32], -n)),
        }
    }

    /// Builds a value from a numerator with possibly negative exponents,
    /// moving the smallest needed power of `uv` into the shift.
    pub fn from_laurent(terms: &BTreeMap<(i64, i64), BigRational>, denominators: Vec<u32>, q_shift: i64) -> Self {
        let low = terms
            .keys()
            .flat_map(|&(i, j)| [i, j])
            .min()
            .unwrap_or(0)
            .min(0);
        let numerator = BiPoly::from_terms(
            terms.iter().map(|(&(i, j), c)| (((i - low) as u32, (j - low) as u32), c.clone())),
        );
        Self::new(numerator, denominators, q_shift + low)
    }

    pub fn numerator(&self) -> &BiPoly {
        &self.numerator
    }

    pub fn denominators(&self) -> &[u32] {
        &self.denominators
    }

    pub fn q_shift(&self) -> i64 {
        self.q_shift
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// `prod_m ((uv)^m - 1)` multiplied out.
    pub fn expanded_denominator(&self) -> BiPoly {
        self.denominators
            .iter()
            .fold(BiPoly::one(), |acc, &m| acc * BiPoly::q_pow_minus_one(m))
    }

    /// True iff both values define the same rational function.
    pub fn cross_equal(&self, other: &StringyRational) -> bool {
        let base = self.q_shift.min(other.q_shift);
        let lhs = (&self.numerator * &other.expanded_denominator()).mul_q_pow((self.q_shift - base) as u32);
        let rhs = (&other.numerator * &self.expanded_denominator()).mul_q_pow((other.q_shift - base) as u32);
        lhs == rhs
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            numerator: self.numerator.scale(c),
            denominators: self.denominators.clone(),
            q_shift: self.q_shift,
        }
    }

    pub fn mul_poly(&self, p: &BiPoly) -> Self {
        Self {
            numerator: &self.numerator * p,
            denominators: self.denominators.clone(),
            q_shift: self.q_shift,
        }
    }

    /// Value as a polynomial, if the denominator divides the numerator and
    /// no negative power of `uv` remains.
    pub fn try_into_polynomial(&self) -> Result<BiPoly> {
        let mut p = self.numerator.exact_div(&self.expanded_denominator())?;
        if self.q_shift >= 0 {
            return Ok(p.mul_q_pow(self.q_shift as u32));
        }
        let m = (-self.q_shift) as u32;
        p = p.exact_div(&BiPoly::q_pow(m))?;
        Ok(p)
    }

    /// Drops each denominator factor that divides the numerator exactly.
    pub fn cancel_factors(&self) -> Self {
        let mut numerator = self.numerator.clone();
        let mut kept = Vec::new();
        for &m in self.denominators.iter().rev() {
            match numerator.exact_div(&BiPoly::q_pow_minus_one(m)) {
                Ok(quo) => numerator = quo,
                Err(_) => kept.push(m),
            }
        }
        Self::new(numerator, kept, self.q_shift)
    }

    /// `(uv)^d * f(1/u, 1/v)`.
    pub fn dual_transform(&self, d: u32) -> Self {
        // (q^-m - 1) = -q^-m (q^m - 1): each factor contributes -q^m to the numerator.
        let sign = if self.denominators.len().is_multiple_of(2) { 1 } else { -1 };
        let total: i64 = self.denominators.iter().map(|&m| m as i64).sum();
        let inverted: BTreeMap<(i64, i64), BigRational> = self
            .numerator
            .terms()
            .map(|(&(i, j), c)| ((-(i as i64), -(j as i64)), c * rat(sign)))
            .collect();
        Self::from_laurent(&inverted, self.denominators.clone(), d as i64 - self.q_shift + total)
    }

    /// Coefficients `b_{i,j}` with `i + j <= max_total_degree` of the power
    /// series expansion around `u = v = 0`.
    pub fn series_coefficients(&self, max_total_degree: u32) -> Result<BTreeMap<(u32, u32), BigRational>> {
        // Terms of the unshifted product that land at total degree <= max.
        let reach = max_total_degree as i64 - 2 * self.q_shift;
        let mut out = BTreeMap::new();
        if reach < 0 {
            return Ok(out);
        }
        let q_limit = (reach / 2) as u32;
        // 1/(q^m - 1) = -(1 + q^m + q^2m + ...), truncated at q^q_limit.
        let mut series = vec![BigRational::zero(); q_limit as usize + 1];
        series[0] = BigRational::one();
        for &m in &self.denominators {
            let mut factor = vec![BigRational::zero(); q_limit as usize + 1];
            for e in (0..=q_limit).step_by(m as usize) {
                factor[e as usize] = -BigRational::one();
            }
            let mut next = vec![BigRational::zero(); q_limit as usize + 1];
            for (a, x) in series.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                for (b, y) in factor.iter().enumerate().take(q_limit as usize + 1 - a) {
                    if !y.is_zero() {
                        next[a + b] += x * y;
                    }
                }
            }
            series = next;
        }
        let mut raw: BTreeMap<(i64, i64), BigRational> = BTreeMap::new();
        for (&(i, j), c) in self.numerator.terms() {
            for (e, s) in series.iter().enumerate() {
                let (ii, jj) = (i as i64 + e as i64, j as i64 + e as i64);
                if ii + jj > reach || s.is_zero() {
                    continue;
                }
                let entry = raw.entry((ii + self.q_shift, jj + self.q_shift)).or_insert_with(BigRational::zero);
                *entry += c * s;
            }
        }
        for ((i, j), c) in raw {
            if c.is_zero() {
                continue;
            }
            if i < 0 || j < 0 {
                return Err(Error::NotAPowerSeries { u: i, v: j });
            }
            if i + j <= max_total_degree as i64 {
                out.insert((i as u32, j as u32), c);
            }
        }
        Ok(out)
    }

    /// `lim_{u,v -> 1}` via `u = v = t` and univariate gcd cancellation.
    pub fn limit_at_one(&self) -> Result<BigRational> {
        let mut num = self.numerator.diagonal();
        let mut den = self
            .denominators
            .iter()
            .fold(QPoly::one(), |acc, &m| &acc * &(&QPoly::power(2 * m as i64) - &QPoly::one()));
        if self.q_shift >= 0 {
            num = num.shift(2 * self.q_shift);
        } else {
            den = den.shift(-2 * self.q_shift);
        }
        if num.is_zero() {
            return Ok(BigRational::zero());
        }
        let g = num.gcd(&den)?;
        let num = num.exact_div(&g)?;
        let den = den.exact_div(&g)?;
        let one = BigRational::one();
        let d1 = den.eval(&one);
        if d1.is_zero() {
            return Err(Error::PoleAtOne);
        }
        Ok(num.eval(&one) / d1)
    }

    fn common_form(&self, other: &StringyRational) -> (BiPoly, BiPoly, Vec<u32>, i64) {
        let mut mult: BTreeMap<u32, (usize, usize)> = BTreeMap::new();
        for &m in &self.denominators {
            mult.entry(m).or_default().0 += 1;
        }
        for &m in &other.denominators {
            mult.entry(m).or_default().1 += 1;
        }
        let mut common = Vec::new();
        let mut extra_a = BiPoly::one();
        let mut extra_b = BiPoly::one();
        for (&m, &(a, b)) in &mult {
            let n = a.max(b);
            common.extend(std::iter::repeat_n(m, n));
            let f = BiPoly::q_pow_minus_one(m);
            extra_a = extra_a * f.pow((n - a) as u32);
            extra_b = extra_b * f.pow((n - b) as u32);
        }
        let base = self.q_shift.min(other.q_shift);
        let a = (&self.numerator * &extra_a).mul_q_pow((self.q_shift - base) as u32);
        let b = (&other.numerator * &extra_b).mul_q_pow((other.q_shift - base) as u32);
        (a, b, common, base)
    }
}

impl From<BiPoly> for StringyRational {
    fn from(p: BiPoly) -> Self {
        Self::from_poly(p)
    }
}

impl Add<&StringyRational> for &StringyRational {
    type Output = StringyRational;
    fn add(self, rhs: &StringyRational) -> StringyRational {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let (a, b, common, shift) = self.common_form(rhs);
        StringyRational::new(a + b, common, shift)
    }
}

impl Sub<&StringyRational> for &StringyRational {
    type Output = StringyRational;
    fn sub(self, rhs: &StringyRational) -> StringyRational {
        self + &(-rhs)
    }
}

impl Mul<&StringyRational> for &StringyRational {
    type Output = StringyRational;
    fn mul(self, rhs: &StringyRational) -> StringyRational {
        let mut denominators = self.denominators.clone();
        denominators.extend_from_slice(&rhs.denominators);
        StringyRational::new(&self.numerator * &rhs.numerator, denominators, self.q_shift + rhs.q_shift)
    }
}

impl Neg for &StringyRational {
    type Output = StringyRational;
    fn neg(self) -> StringyRational {
        StringyRational {
            numerator: -&self.numerator,
            denominators: self.denominators.clone(),
            q_shift: self.q_shift,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<StringyRational> for StringyRational {
            type Output = StringyRational;
            fn $m(self, rhs: StringyRational) -> StringyRational {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&StringyRational> for StringyRational {
            type Output = StringyRational;
            fn $m(self, rhs: &StringyRational) -> StringyRational {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for StringyRational {
    type Output = StringyRational;
    fn neg(self) -> StringyRational {
        -&self
    }
}

impl std::iter::Sum for StringyRational {
    fn sum<I: Iterator<Item = StringyRational>>(iter: I) -> Self {
        iter.fold(StringyRational::zero(), |acc, x| &acc + &x)
    }
}
