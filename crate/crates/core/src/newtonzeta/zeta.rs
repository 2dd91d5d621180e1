use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{power, rat, write_terms, BiPoly, StringyRational};
use crate::error::{Error, Result};

/// Factor `1 - (uv)^q_exp * T^t_exp` of a zeta denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZetaFactor {
    pub q_exp: i64,
    pub t_exp: u32,
}

impl ZetaFactor {
    pub fn new(q_exp: i64, t_exp: u32) -> Self {
        Self { q_exp, t_exp }
    }

    /// Exponent of `uv` after substituting `T = (uv)^s`.
    fn exponent_at(&self, s: i64) -> i64 {
        self.q_exp + s * self.t_exp as i64
    }
}

/// Monomials `c * u^i * v^j * T^t` keyed by `(i, j, t)`; exponents of `u`, `v` may be negative.
pub type ZetaNumerator = BTreeMap<(i64, i64, u32), BigRational>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaTerm {
    pub numerator: ZetaNumerator,
    pub factors: Vec<ZetaFactor>,
}

impl ZetaTerm {
    pub fn new(mut numerator: ZetaNumerator, mut factors: Vec<ZetaFactor>) -> Self {
        numerator.retain(|_, c| !c.is_zero());
        factors.sort();
        Self { numerator, factors }
    }

    /// `p * T^t / prod factors`
    pub fn from_poly(p: &BiPoly, t: u32, factors: Vec<ZetaFactor>) -> Self {
        let numerator = p.terms().map(|(&(i, j), c)| ((i as i64, j as i64, t), c.clone())).collect();
        Self::new(numerator, factors)
    }

    fn mul(&self, other: &ZetaTerm) -> ZetaTerm {
        let mut numerator = ZetaNumerator::new();
        for (&(i1, j1, t1), c1) in &self.numerator {
            for (&(i2, j2, t2), c2) in &other.numerator {
                *numerator.entry((i1 + i2, j1 + j2, t1 + t2)).or_insert_with(BigRational::zero) += c1 * c2;
            }
        }
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        ZetaTerm::new(numerator, factors)
    }

    /// Numerator with `T = (uv)^s`, as a Laurent polynomial in `u`, `v`.
    fn numerator_at(&self, s: i64) -> BTreeMap<(i64, i64), BigRational> {
        let mut out = BTreeMap::new();
        for (&(i, j, t), c) in &self.numerator {
            let shift = s * t as i64;
            *out.entry((i + shift, j + shift)).or_insert_with(BigRational::zero) += c;
        }
        out.retain(|_, c: &mut BigRational| !c.is_zero());
        out
    }

    fn numerator_value_at(&self, s: i64) -> StringyRational {
        StringyRational::from_laurent(&self.numerator_at(s), Vec::new(), 0)
    }

    fn factor_inverse_product<'a, I>(factors: I, s: i64) -> Result<StringyRational>
    where
        I: Iterator<Item = &'a ZetaFactor>,
    {
        let mut acc = StringyRational::one();
        for f in factors {
            acc = acc * StringyRational::inverse_one_minus_q_pow(f.exponent_at(s))?;
        }
        Ok(acc)
    }
}

/// Finite sum of terms `N(u, v, T) / prod (1 - (uv)^a T^b)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ZetaExpression {
    pub terms: Vec<ZetaTerm>,
}

impl ZetaExpression {
    pub fn new(terms: Vec<ZetaTerm>) -> Self {
        Self { terms }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add(&self, other: &ZetaExpression) -> ZetaExpression {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        ZetaExpression { terms }
    }

    /// Merges terms over the same denominator factors and drops zero terms.
    pub fn collected(&self) -> ZetaExpression {
        let mut by_factors: BTreeMap<Vec<ZetaFactor>, ZetaNumerator> = BTreeMap::new();
        for term in &self.terms {
            let acc = by_factors.entry(term.factors.clone()).or_default();
            for (key, c) in &term.numerator {
                let entry = acc.entry(*key).or_insert_with(BigRational::zero);
                *entry += c;
                if entry.is_zero() {
                    acc.remove(key);
                }
            }
        }
        let terms = by_factors
            .into_iter()
            .filter(|(_, n)| !n.is_empty())
            .map(|(factors, numerator)| ZetaTerm { numerator, factors })
            .collect();
        ZetaExpression { terms }
    }

    pub fn mul(&self, other: &ZetaExpression) -> ZetaExpression {
        let terms = self
            .terms
            .iter()
            .flat_map(|a| other.terms.iter().map(move |b| a.mul(b)))
            .filter(|t| !t.numerator.is_empty())
            .collect();
        ZetaExpression { terms }
    }

    /// Value at `T = (uv)^s`; fails if some factor vanishes there.
    pub fn substitute_t_power(&self, s: i64) -> Result<StringyRational> {
        let mut acc = StringyRational::zero();
        for term in &self.terms {
            let inv = ZetaTerm::factor_inverse_product(term.factors.iter(), s)?;
            acc = acc + term.numerator_value_at(s) * inv;
        }
        Ok(acc)
    }

    /// `-1 / (uv (uv - 1)) * lim_{T -> uv} (T - uv) Z(T)`.
    ///
    /// A factor `1 - (uv)^a T^b` vanishes at `T = uv` iff `a + b = 0`, and then
    /// `(T - uv) / (1 - (uv)^(-b) T^b) -> -uv / b`. Terms without a vanishing
    /// factor are regular and contribute nothing.
    pub fn residue_at_q(&self) -> Result<StringyRational> {
        let mut acc = StringyRational::zero();
        for term in &self.terms {
            if let Some(f) = term.factors.iter().find(|f| f.q_exp == 0 && f.t_exp == 0) {
                return Err(Error::VanishingFactor(f.q_exp));
            }
            let vanishing: Vec<usize> = (0..term.factors.len())
                .filter(|&i| term.factors[i].exponent_at(1) == 0)
                .collect();
            match vanishing.len() {
                0 => continue,
                1 => {}
                n => return Err(Error::HigherOrderPole(n)),
            }
            let skip = vanishing[0];
            let b = term.factors[skip].t_exp;
            let rest = term
                .factors
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, f)| f);
            let inv = ZetaTerm::factor_inverse_product(rest, 1)?;
            let scale = StringyRational::new(BiPoly::constant(BigRational::new(1.into(), b.into())), vec![1], 0);
            acc = acc + term.numerator_value_at(1) * inv * scale;
        }
        Ok(acc)
    }
}

impl fmt::Display for ZetaTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<_> = self.numerator.iter().collect();
        keys.sort_by(|a, b| {
            let (&(i1, j1, t1), &(i2, j2, t2)) = (a.0, b.0);
            (t2, i2 + j2, i2).cmp(&(t1, i1 + j1, i1))
        });
        f.write_str("(")?;
        write_terms(
            f,
            keys.into_iter().map(|(&(i, j, t), c)| {
                let mut mono = String::new();
                for (var, e) in [("u", i), ("v", j), ("T", t as i64)] {
                    if e != 0 {
                        if !mono.is_empty() {
                            mono.push('*');
                        }
                        power(&mut mono, var, e);
                    }
                }
                (mono, c)
            }),
        )?;
        f.write_str(")")?;
        if !self.factors.is_empty() {
            f.write_str(" / ")?;
            for factor in &self.factors {
                let mut mono = String::new();
                match factor.q_exp {
                    0 => {}
                    1 => mono.push_str("(uv)"),
                    a if a < 0 => mono.push_str(&format!("(uv)^({a})")),
                    a => mono.push_str(&format!("(uv)^{a}")),
                }
                if factor.t_exp > 0 {
                    if !mono.is_empty() {
                        mono.push('*');
                    }
                    power(&mut mono, "T", factor.t_exp as i64);
                }
                if mono.is_empty() {
                    mono.push('1');
                }
                write!(f, "(1 - {mono})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for ZetaExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, term) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str("\n+ ")?;
            }
            write!(f, "{term}")?;
        }
        Ok(())
    }
}

/// `1 - (uv)^a`: a factor with no `T`.
#[cfg(test)]
pub(crate) fn constant_factor(a: i64) -> ZetaFactor {
    ZetaFactor::new(a, 0)
}

pub(crate) fn integer(c: i64) -> BigRational {
    rat(c)
}
