//! Canonical text rendering.
//!
//! Polynomial terms are sorted by `(i + j, i)` descending and written as
//! `c*u^i*v^j`; rational functions as `(N) / ((uv)^m1 - 1)((uv)^m2 - 1) * (uv)^s`.
//! The output is accepted back by [`super::parse`].

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed};

use super::bipoly::BiPoly;
use super::qpoly::QPoly;
use super::stringy::StringyRational;

pub(crate) fn power(f: &mut String, var: &str, e: i64) {
    match e {
        0 => {}
        1 => f.push_str(var),
        e if e < 0 => f.push_str(&format!("{var}^({e})")),
        e => f.push_str(&format!("{var}^{e}")),
    }
}

/// Writes `sum c * mono` given terms already in display order.
pub(crate) fn write_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: Iterator<Item = (String, &'a BigRational)>,
{
    let mut first = true;
    for (mono, c) in terms {
        let negative = c.is_negative();
        let abs = c.abs();
        if first {
            if negative {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if negative { " - " } else { " + " })?;
        }
        first = false;
        if mono.is_empty() {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            f.write_str(&mono)?;
        } else {
            write!(f, "{abs}*{mono}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

pub(crate) fn uv_monomial(i: i64, j: i64) -> String {
    let mut s = String::new();
    power(&mut s, "u", i);
    if i != 0 && j != 0 {
        s.push('*');
    }
    power(&mut s, "v", j);
    s
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by(|a, b| {
            let ka = (a.0 .0 + a.0 .1, a.0 .0);
            let kb = (b.0 .0 + b.0 .1, b.0 .0);
            kb.cmp(&ka)
        });
        write_terms(f, terms.into_iter().map(|(&(i, j), c)| (uv_monomial(i as i64, j as i64), c)))
    }
}

/// Renders in the variable `(uv)`, highest power first.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.terms().rev().map(|(&e, c)| {
                let mono = match e {
                    0 => String::new(),
                    1 => "(uv)".to_string(),
                    e if e < 0 => format!("(uv)^({e})"),
                    e => format!("(uv)^{e}"),
                };
                (mono, c)
            }),
        )
    }
}

impl fmt::Display for StringyRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let plain = self.denominators().is_empty() && self.q_shift() == 0;
        if plain {
            return write!(f, "{}", self.numerator());
        }
        write!(f, "({})", self.numerator())?;
        if !self.denominators().is_empty() {
            f.write_str(" / ")?;
            for &m in self.denominators() {
                if m == 1 {
                    f.write_str("(uv - 1)")?;
                } else {
                    write!(f, "((uv)^{m} - 1)")?;
                }
            }
        }
        match self.q_shift() {
            0 => Ok(()),
            s if s < 0 => write!(f, " * (uv)^({s})"),
            s => write!(f, " * (uv)^{s}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_rendering() {
        let p = BiPoly::from_int_terms(&[(1, 1, 5), (0, 0, -4)]);
        assert_eq!(p.to_string(), "5*u*v - 4");
        let h = BiPoly::from_int_terms(&[(3, 3, 1), (3, 0, -5), (0, 3, -5), (2, 1, -255), (1, 2, -255), (0, 0, 1)]);
        assert_eq!(h.to_string(), "u^3*v^3 - 5*u^3 - 255*u^2*v - 255*u*v^2 - 5*v^3 + 1");
        assert_eq!(BiPoly::zero().to_string(), "0");
        let r = BiPoly::monomial(BigRational::new(3.into(), 2.into()), 0, 1) - BiPoly::u();
        assert_eq!(r.to_string(), "-u + 3/2*v");
    }

    #[test]
    fn rational_function_rendering() {
        let f = StringyRational::new(BiPoly::q_pow(1) + BiPoly::one(), vec![7, 5], 0);
        assert_eq!(f.to_string(), "(u*v + 1) / ((uv)^5 - 1)((uv)^7 - 1)");
        let g = StringyRational::new(BiPoly::one(), vec![1], -2);
        assert_eq!(g.to_string(), "(1) / (uv - 1) * (uv)^(-2)");
    }

    #[test]
    fn q_polynomial_rendering() {
        let p = QPoly::from_int_coeffs(&[(6, 1), (3, 1), (0, -2)]);
        assert_eq!(p.to_string(), "(uv)^6 + (uv)^3 - 2");
    }
}
