//! Hodge-Deligne polynomials of Fermat hypersurfaces, quasi-homogeneous
//! isolated hypersurface singularities (through the Milnor algebra), diagonal
//! hypersurfaces and their torus parts.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{rat, BiPoly, QPoly};
use crate::error::{Error, Result};
use crate::subset::Subset;

/// What kind of variety a Hodge-Deligne polynomial belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VarietyKind {
    Affine,
    Projective,
    Torus,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HodgePolynomial {
    pub poly: BiPoly,
    pub kind: VarietyKind,
}

impl HodgePolynomial {
    pub fn new(poly: BiPoly, kind: VarietyKind) -> Self {
        Self { poly, kind }
    }

    /// `H(X; 1, 1)`, the topological Euler characteristic.
    pub fn euler_characteristic(&self) -> BigRational {
        let one = BigRational::one();
        self.poly.eval(&one, &one)
    }
}

/// Weights `w_1, .., w_{r+1}` and weighted degree `D` of a quasi-homogeneous polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightSystem {
    weights: Vec<u64>,
    degree: u64,
}

impl WeightSystem {
    pub fn new(weights: Vec<u64>, degree: u64) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidWeightSystem("no weights given".into()));
        }
        if let Some(&w) = weights.iter().find(|&&w| w == 0 || w >= degree) {
            return Err(Error::InvalidWeightSystem(format!(
                "weight {w} must satisfy 0 < w < {degree}"
            )));
        }
        Ok(Self { weights, degree })
    }

    /// Weights `L / a_i` and degree `L = lcm(a_i)` of `x_1^a_1 + .. + x_n^a_n`.
    pub fn diagonal(exponents: &[u64]) -> Result<Self> {
        if let Some(&a) = exponents.iter().find(|&&a| a < 2) {
            return Err(Error::InvalidExponent(a));
        }
        let l = exponents.iter().fold(1u64, |acc, &a| acc.lcm(&a));
        Self::new(exponents.iter().map(|&a| l / a).collect(), l)
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }
}

/// Binomial coefficient, zero outside `0 <= m <= n`.
pub fn binomial(n: i64, m: i64) -> BigInt {
    if n < 0 || m < 0 || m > n {
        return BigInt::zero();
    }
    let m = m.min(n - m);
    let mut acc = BigInt::one();
    for i in 0..m {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `G(kappa, lambda | nu, xi) = sum_{j=0}^{lambda} (-1)^j C(kappa+1, j) C(nu (lambda-j) + xi, kappa)`.
pub fn g_number(kappa: u64, lambda: u64, nu: u64, xi: u64) -> BigInt {
    assert!(kappa >= lambda, "G(kappa, lambda | nu, xi) needs kappa >= lambda");
    let (kappa, lambda, nu, xi) = (kappa as i64, lambda as i64, nu as i64, xi as i64);
    (0..=lambda).fold(BigInt::zero(), |acc, j| {
        let term = binomial(kappa + 1, j) * binomial(nu * (lambda - j) + xi, kappa);
        if j % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    })
}

/// Hodge-Deligne polynomial of the `d`-dimensional Fermat hypersurface of degree `l`
/// in projective `(d+1)`-space.
pub fn fermat_hodge(d: u32, l: u64) -> HodgePolynomial {
    assert!(l >= 1, "degree must be positive");
    let sign = if d.is_multiple_of(2) { 1 } else { -1 };
    let mut poly = BiPoly::zero();
    for p in 0..=d {
        poly.add_term(p, p, BigRational::one());
        let g = g_number(d as u64 + 1, p as u64 + 1, l - 1, p as u64);
        poly.add_term(p, d - p, BigRational::from_integer(g) * rat(sign));
    }
    HodgePolynomial::new(poly, VarietyKind::Projective)
}

fn one_minus_t_pow(e: u64) -> QPoly {
    QPoly::from_int_coeffs(&[(0, 1), (e as i64, -1)])
}

/// Graded dimensions `dim M(f)_k`, `k = 0, 1, ..`, of the Milnor algebra, read off from
/// `prod (1 - t^{D - w_i}) / prod (1 - t^{w_i})`.
pub fn milnor_dimensions(ws: &WeightSystem) -> Result<Vec<BigInt>> {
    let mut series = ws
        .weights
        .iter()
        .fold(QPoly::one(), |acc, &w| &acc * &one_minus_t_pow(ws.degree - w));
    for &w in &ws.weights {
        series = series.exact_div(&one_minus_t_pow(w)).map_err(|_| Error::NonPolynomialPoincareSeries {
            weights: ws.weights.clone(),
            degree: ws.degree,
        })?;
    }
    let coeffs = series.dense_coefficients().unwrap_or_default();
    coeffs
        .into_iter()
        .map(|c| {
            if c.is_integer() && !c.is_negative() {
                Ok(c.to_integer())
            } else {
                Err(Error::NonPolynomialPoincareSeries { weights: ws.weights.clone(), degree: ws.degree })
            }
        })
        .collect()
}

/// Hodge-Deligne polynomial of the affine zero set of a quasi-homogeneous polynomial with
/// an isolated singularity at the origin.
pub fn quasi_hom_hodge(ws: &WeightSystem) -> Result<HodgePolynomial> {
    let dims = milnor_dimensions(ws)?;
    let r = ws.weights.len() as u32 - 1;
    let weight_sum: u64 = ws.weights.iter().sum();
    let dim_at = |k: i64| -> BigInt {
        if k < 0 {
            BigInt::zero()
        } else {
            dims.get(k as usize).cloned().unwrap_or_default()
        }
    };
    let mut link = BiPoly::zero();
    for p in 0..r {
        let index = (p as i64 + 1) * ws.degree as i64 - weight_sum as i64;
        link.add_term(p, r - 1 - p, BigRational::from_integer(dim_at(index)));
    }
    let sign = if r % 2 == 1 { 1 } else { -1 };
    let poly = BiPoly::q_pow(r) + (BiPoly::q_pow_minus_one(1) * link).scale(&rat(sign));
    Ok(HodgePolynomial::new(poly, VarietyKind::Affine))
}

/// `H` of `{x_1^a_1 + .. + x_n^a_n = 0}` in affine `n`-space.
pub fn diagonal_face_hodge(exponents: &[u64]) -> Result<HodgePolynomial> {
    match exponents {
        [] => Err(Error::EmptyExponents),
        [a] if *a < 2 => Err(Error::InvalidExponent(*a)),
        // The zero set of x^a is the origin.
        [_] => Ok(HodgePolynomial::new(BiPoly::one(), VarietyKind::Affine)),
        _ => quasi_hom_hodge(&WeightSystem::diagonal(exponents)?),
    }
}

/// `H(M_{tau_J}) - 1` for every proper subset `J`, where `M_{tau_J}` is the diagonal
/// hypersurface in the variables outside `J`. Indexed by mask.
pub(crate) fn face_hodge_table(exponents: &[u64]) -> Result<Vec<BiPoly>> {
    let d = exponents.len();
    Subset::proper_subsets_of(d)
        .map(|j| {
            let outside: Vec<u64> = (0..d).filter(|&i| !j.contains(i)).map(|i| exponents[i]).collect();
            Ok(diagonal_face_hodge(&outside)?.poly - BiPoly::one())
        })
        .collect()
}

pub(crate) fn torus_hodge_from_table(d: usize, table: &[BiPoly], j: Subset) -> BiPoly {
    let rest = Subset::full(d).minus(j);
    let mut sum = BiPoly::zero();
    for extra in rest.subsets() {
        if extra == rest {
            continue;
        }
        let face = j.union(extra);
        if extra.len() % 2 == 0 {
            sum += &table[face.0 as usize];
        } else {
            sum -= &table[face.0 as usize];
        }
    }
    BiPoly::q_pow_minus_one(1).pow(j.len() as u32) * sum
}

/// `H(N_{tau_J})`: the face hypersurface `{f_{tau_J} = 0}` inside the `d`-dimensional torus.
pub fn torus_hodge(exponents: &[u64], j: Subset) -> Result<HodgePolynomial> {
    let d = exponents.len();
    if d == 0 {
        return Err(Error::EmptyExponents);
    }
    if !j.is_subset_of(Subset::full(d)) || j == Subset::full(d) {
        return Err(Error::InvalidInput(format!("{j} is not a proper subset of the {d} variables")));
    }
    let table = face_hodge_table(exponents)?;
    Ok(HodgePolynomial::new(torus_hodge_from_table(d, &table, j), VarietyKind::Torus))
}

/// Projective cone over a projective variety: `uv * H + 1`.
pub fn projective_cone(h: &HodgePolynomial) -> HodgePolynomial {
    HodgePolynomial::new(h.poly.mul_q_pow(1) + BiPoly::one(), VarietyKind::Projective)
}
