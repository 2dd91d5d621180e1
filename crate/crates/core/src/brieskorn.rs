//! Closed-form contribution of a Brieskorn singularity
//! `x_1^a_1 + .. + x_d^a_d = 0` to the stringy E-function.
//!
//! With `k = lcm(a_i)`, `alpha = (k/a_1, .., k/a_d)` and `Sigma = sum alpha_i`,
//! the singularity is canonical iff `Sigma - k >= 1`, and its contribution is
//!
//! ```text
//!   1 / ((uv)^(Sigma-k) - 1) * sum_{J in S} (H(M_{tau_J}) - 1) p_J(uv)
//! ```
//!
//! where `S` is a family of proper index subsets determined by gcds of the
//! entries of `alpha` and `p_J` are polynomials in `uv` with nonnegative
//! coefficients built recursively from the fundamental sets of the cones
//! spanned by `alpha` and the basis vectors `e_j`, `j in J`.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::algebra::{BiPoly, QPoly, StringyRational};
use crate::error::{Error, Result};
use crate::hodge::face_hodge_table;
use crate::subset::Subset;

/// Largest number of variables accepted unless a limit is passed explicitly.
pub const DEFAULT_MAX_VARIABLES: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    /// `Sigma - k < 1`
    NotCanonical,
    /// `Sigma - k = 1`
    StrictlyCanonical,
    /// `Sigma - k >= 2`; terminality is not decided.
    CanonicalSigmaMinusKAtLeast2,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::NotCanonical => "not canonical",
            Classification::StrictlyCanonical => "strictly canonical",
            Classification::CanonicalSigmaMinusKAtLeast2 => "canonical, sigma - k >= 2",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BrieskornData {
    pub exponents: Vec<u64>,
    pub k: u64,
    pub alpha: Vec<u64>,
    pub sigma: u64,
    pub classification: Classification,
}

impl BrieskornData {
    pub fn dim(&self) -> usize {
        self.exponents.len()
    }

    pub fn sigma_minus_k(&self) -> i64 {
        self.sigma as i64 - self.k as i64
    }

    pub fn is_canonical(&self) -> bool {
        self.classification != Classification::NotCanonical
    }

    fn require_canonical(&self) -> Result<()> {
        if self.is_canonical() {
            Ok(())
        } else {
            Err(Error::NotCanonical(self.sigma_minus_k()))
        }
    }
}

pub fn analyze(exponents: &[u64]) -> Result<BrieskornData> {
    analyze_with_limit(exponents, DEFAULT_MAX_VARIABLES)
}

pub fn analyze_with_limit(exponents: &[u64], max_variables: usize) -> Result<BrieskornData> {
    if exponents.is_empty() {
        return Err(Error::EmptyExponents);
    }
    if exponents.len() > max_variables.min(63) {
        return Err(Error::TooManyVariables { count: exponents.len(), limit: max_variables.min(63) });
    }
    if let Some(&a) = exponents.iter().find(|&&a| a < 2) {
        return Err(Error::InvalidExponent(a));
    }
    let k = exponents.iter().fold(1u64, |acc, &a| acc.lcm(&a));
    let alpha: Vec<u64> = exponents.iter().map(|&a| k / a).collect();
    let sigma = alpha.iter().sum::<u64>();
    let classification = match sigma as i64 - k as i64 {
        s if s < 1 => Classification::NotCanonical,
        1 => Classification::StrictlyCanonical,
        _ => Classification::CanonicalSigmaMinusKAtLeast2,
    };
    Ok(BrieskornData { exponents: exponents.to_vec(), k, alpha, sigma, classification })
}

fn gcd_over(alpha: &[u64], set: Subset) -> u64 {
    set.indices().fold(0u64, |acc, i| acc.gcd(&alpha[i]))
}

/// `g_J = gcd { alpha_j : j not in J }`
pub fn g_value(alpha: &[u64], j: Subset) -> u64 {
    gcd_over(alpha, Subset::full(alpha.len()).minus(j))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetFamily {
    pub dim: usize,
    /// Members ordered by size, then lexicographically.
    pub members: Vec<Subset>,
    /// `g_J` for every proper subset `J`.
    pub g_values: BTreeMap<Subset, u64>,
}

impl SubsetFamily {
    pub fn contains(&self, j: Subset) -> bool {
        self.members.contains(&j)
    }
}

impl fmt::Display for SubsetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, j) in self.members.iter().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{j}")?;
        }
        f.write_str("}")
    }
}

/// The family `S`: `J` is a member iff `J` is empty or adding any `j' in J` back to the
/// complement strictly lowers the gcd.
pub fn family_s(alpha: &[u64]) -> Result<SubsetFamily> {
    let d = alpha.len();
    if d == 0 {
        return Err(Error::EmptyExponents);
    }
    if d > 63 {
        return Err(Error::TooManyVariables { count: d, limit: 63 });
    }
    if alpha.contains(&0) {
        return Err(Error::InvalidInput("alpha must have positive entries".into()));
    }
    let full = Subset::full(d);
    let mut g_values = BTreeMap::new();
    let mut members = Vec::new();
    for j in Subset::proper_subsets_of(d) {
        let complement = full.minus(j);
        let g = gcd_over(alpha, complement);
        g_values.insert(j, g);
        let member = j.is_empty() || j.indices().all(|jp| g > gcd_over(alpha, complement.with(jp)));
        if member {
            members.push(j);
        }
    }
    members.sort_by(Subset::display_cmp);
    Ok(SubsetFamily { dim: d, members, g_values })
}

/// A point `delta_J^l` of the fundamental set of the cone spanned by `alpha`
/// and `e_j`, `j in J`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FundamentalVector {
    pub subset: Subset,
    pub l: u64,
    pub vector: Vec<u64>,
    /// Coordinate sum.
    pub sigma: u64,
    /// `m_f(delta) = k l / g_J`
    pub m_value: u64,
}

/// `delta_J^l = (l / g_J) alpha + sum_{j in J} (g_J - (l alpha_j mod g_J)) / g_J e_j`
/// for `l = 1, .., g_J`.
pub fn fundamental_vectors(data: &BrieskornData, j: Subset) -> Result<Vec<FundamentalVector>> {
    let d = data.dim();
    if !j.is_subset_of(Subset::full(d)) || j == Subset::full(d) {
        return Err(Error::InvalidInput(format!("{j} is not a proper subset of the {d} variables")));
    }
    let g = g_value(&data.alpha, j);
    Ok((1..=g)
        .map(|l| {
            let vector: Vec<u64> = (0..d)
                .map(|i| {
                    let a = data.alpha[i];
                    if j.contains(i) {
                        // (l a + g - (l a mod g)) / g
                        (l * a + g - (l * a) % g) / g
                    } else {
                        l * a / g
                    }
                })
                .collect();
            let sigma = vector.iter().sum();
            FundamentalVector { subset: j, l, vector, sigma, m_value: data.k * l / g }
        })
        .collect())
}

/// `(uv)^(Sigma - k + |J|) * sum_l (uv)^(m_f(delta_J^l) - sigma(delta_J^l))`
pub fn fundamental_sum(data: &BrieskornData, j: Subset) -> Result<QPoly> {
    let base = data.sigma_minus_k() + j.len() as i64;
    let mut p = QPoly::zero();
    for fv in fundamental_vectors(data, j)? {
        p.add_term(base + fv.m_value as i64 - fv.sigma as i64, BigRational::one());
    }
    Ok(p)
}

/// The polynomials `p_J` for all proper subsets `J`, keyed by subset.
///
/// `p_J = fundamental_sum(J) - sum_{J' strictly inside J} p_J'`.
pub fn p_polynomials(data: &BrieskornData) -> Result<BTreeMap<Subset, QPoly>> {
    data.require_canonical()?;
    let d = data.dim();
    let mut table: Vec<QPoly> = Vec::with_capacity((1usize << d) - 1);
    for j in Subset::proper_subsets_of(d) {
        let mut p = fundamental_sum(data, j)?;
        for sub in j.subsets().filter(|&s| s != j) {
            p = &p - &table[sub.0 as usize];
        }
        table.push(p);
    }
    Ok(table.into_iter().enumerate().map(|(mask, p)| (Subset(mask as u64), p)).collect())
}

/// The closed-form numerator `sum_{J in S} (H(M_{tau_J}) - 1) p_J`.
fn contribution_numerator(data: &BrieskornData) -> Result<BiPoly> {
    let ps = p_polynomials(data)?;
    let faces = face_hodge_table(&data.exponents)?;
    let family = family_s(&data.alpha)?;
    let mut numerator = BiPoly::zero();
    for j in &family.members {
        let p = ps[j].to_bipoly().expect("p_J is a polynomial");
        numerator += &(&faces[j.0 as usize] * &p);
    }
    Ok(numerator)
}

/// Contribution of the singular point to the stringy E-function, as
/// `numerator / ((uv)^(Sigma - k) - 1)`.
pub fn contribution(exponents: &[u64]) -> Result<StringyRational> {
    contribution_of(&analyze(exponents)?)
}

pub fn contribution_of(data: &BrieskornData) -> Result<StringyRational> {
    data.require_canonical()?;
    let numerator = contribution_numerator(data)?;
    Ok(StringyRational::new(numerator, vec![data.sigma_minus_k() as u32], 0))
}

/// The polynomial `P` with `c = P / ((uv)^(Sigma-k-1) + .. + uv + 1)`, checked
/// against the sign pattern `(-1)^(i+j) c_{i,j} >= 0`.
pub fn normal_form_numerator(c: &StringyRational, data: &BrieskornData) -> Result<BiPoly> {
    data.require_canonical()?;
    let n = data.sigma_minus_k() as u32;
    let scaled = c.mul_poly(&BiPoly::q_pow_minus_one(n)).try_into_polynomial()?;
    let p = scaled.exact_div(&BiPoly::q_pow_minus_one(1))?;
    if let Some((i, j)) = p.alternating_sign_violation() {
        return Err(Error::SignViolation { i, j });
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn subsets(list: &[&[usize]]) -> Vec<Subset> {
        list.iter().map(|s| Subset::from_indices(s.iter().map(|i| i - 1))).collect()
    }

    #[test]
    fn analyze_examples() {
        let data = analyze(&[5, 5, 6, 6, 6, 6, 6]).unwrap();
        assert_eq!((data.k, data.sigma), (30, 37));
        assert_eq!(data.alpha, vec![6, 6, 5, 5, 5, 5, 5]);
        assert_eq!(data.classification, Classification::CanonicalSigmaMinusKAtLeast2);

        let a1 = analyze(&[2, 2, 2]).unwrap();
        assert_eq!((a1.k, a1.sigma, a1.alpha.clone()), (2, 3, vec![1, 1, 1]));
        assert_eq!(a1.classification, Classification::StrictlyCanonical);

        let cusp = analyze(&[2, 3]).unwrap();
        assert_eq!((cusp.k, cusp.sigma, cusp.sigma_minus_k()), (6, 5, -1));
        assert_eq!(cusp.classification, Classification::NotCanonical);

        assert_eq!(analyze(&[2, 1]), Err(Error::InvalidExponent(1)));
        assert_eq!(analyze(&[]), Err(Error::EmptyExponents));
        assert!(matches!(analyze(&[2; 13]), Err(Error::TooManyVariables { .. })));
        assert!(analyze_with_limit(&[2; 13], 20).is_ok());
    }

    #[test]
    fn family_examples() {
        let s = family_s(&[6, 6, 4, 3, 3]).unwrap();
        assert_eq!(s.members, subsets(&[&[], &[3], &[4, 5], &[3, 4, 5], &[1, 2, 4, 5]]));
        assert_eq!(s.to_string(), "{{}, {3}, {4,5}, {3,4,5}, {1,2,4,5}}");
        let s = family_s(&[6, 6, 5, 5, 5, 5, 5]).unwrap();
        assert_eq!(s.members, subsets(&[&[], &[1, 2], &[3, 4, 5, 6, 7]]));
        assert_eq!(family_s(&[1, 1, 1]).unwrap().members, vec![Subset::EMPTY]);
    }

    #[test]
    fn fundamental_vector_examples() {
        let data = analyze(&[5, 5, 6, 6, 6, 6, 6]).unwrap();
        let j = Subset::from_indices([0, 1]);
        let fv = fundamental_vectors(&data, j).unwrap();
        assert_eq!(fv.len(), 5);
        assert_eq!(fv[0].vector, vec![2, 2, 1, 1, 1, 1, 1]);
        assert_eq!((fv[0].sigma, fv[0].m_value), (9, 6));

        let empty = fundamental_vectors(&data, Subset::EMPTY).unwrap();
        assert_eq!(empty.len(), 1);
        assert_eq!(empty[0].vector, data.alpha);
        assert_eq!((empty[0].sigma, empty[0].m_value), (37, 30));

        let a1 = analyze(&[2, 2, 2]).unwrap();
        let fv = fundamental_vectors(&a1, Subset::from_indices([0])).unwrap();
        assert_eq!(fv.len(), 1);
        assert_eq!(fv[0].vector, vec![2, 1, 1]);
        assert_eq!((fv[0].sigma, fv[0].m_value), (4, 2));
        assert!(fundamental_vectors(&a1, Subset::full(3)).is_err());
    }

    #[test]
    fn p_polynomial_examples() {
        let data = analyze(&[5, 5, 6, 6, 6, 6, 6]).unwrap();
        let ps = p_polynomials(&data).unwrap();
        assert_eq!(ps[&Subset::EMPTY], QPoly::one());
        assert_eq!(ps[&Subset::from_indices([0, 1])], QPoly::from_int_coeffs(&[(6, 1), (5, 1), (4, 1), (3, 1)]));
        assert_eq!(
            ps[&Subset::from_indices(2..7)],
            QPoly::from_int_coeffs(&[(10, 1), (8, 1), (6, 1), (4, 1), (2, 1)])
        );
        let nonzero = ps.iter().filter(|(_, p)| !p.is_zero()).count();
        assert_eq!(nonzero, 3);

        let a1 = p_polynomials(&analyze(&[2, 2, 2]).unwrap()).unwrap();
        assert!(a1.iter().all(|(j, p)| j.is_empty() || p.is_zero()));
        assert_eq!(p_polynomials(&analyze(&[2, 3]).unwrap()), Err(Error::NotCanonical(-1)));
    }

    #[test]
    fn a1_contribution_is_projective_line() {
        let c = contribution(&[2, 2, 2]).unwrap();
        let line = StringyRational::from_poly(BiPoly::q_pow(1) + BiPoly::one());
        assert!(c.cross_equal(&line));
        assert_eq!(c.denominators(), &[1]);
        assert_eq!(c.limit_at_one().unwrap(), BigRational::from_integer(2.into()));
        assert_eq!(contribution(&[2, 3]), Err(Error::NotCanonical(-1)));
    }

    #[test]
    fn normal_forms() {
        let data = analyze(&[2, 2, 2]).unwrap();
        let c = contribution_of(&data).unwrap();
        assert_eq!(normal_form_numerator(&c, &data).unwrap(), BiPoly::q_pow(1) + BiPoly::one());

        let data = analyze(&[2, 2, 2, 2]).unwrap();
        assert_eq!(data.sigma_minus_k(), 2);
        let c = contribution_of(&data).unwrap();
        let p = normal_form_numerator(&c, &data).unwrap();
        assert!(p.alternating_sign_violation().is_none());
        let back = StringyRational::new(p, vec![2], 0).mul_poly(&BiPoly::q_pow_minus_one(1));
        assert!(back.cross_equal(&c));
    }
}
